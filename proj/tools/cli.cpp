// SPDX-License-Identifier: Apache-2.0
//
// sscm - scene-specific channel modelling toolkit
// Copyright (C) 2026 The sscm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "cli.hpp"

#include "sscm/extract.hpp"
#include "sscm/feedback.hpp"
#include "sscm/fit.hpp"
#include "sscm/gbsm.hpp"
#include "sscm/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fs = std::filesystem;

namespace sscm::cli
{
    namespace
    {
        struct GenerateArgs
        {
            std::string params;
            std::size_t count = 0;
            std::uint64_t seed = 0;
            std::size_t n_rx = 4, n_tx = 8, n_sc = 208;
            double scs = 15.0e3;
            double fc = 2.6e9;
            std::string out;
            unsigned threads = 0;
        };

        struct ExtractArgs
        {
            std::string in, out;
            double threshold_db = 25.0;
            std::size_t gap = 2;
        };

        struct FitArgs
        {
            std::string stats, baseline, out;
            std::size_t min_records = 30;
        };

        struct MatchArgs
        {
            std::string catalog, query;
            std::size_t top_k = 5;
        };

        struct EvalArgs
        {
            std::string train, test, codec = "linear", per_sample;
            std::size_t coeffs = 0;
            unsigned bits = 0;
            std::size_t subband = 16;
            std::optional<double> snr_db;
            std::uint64_t noise_seed = 0;
            unsigned threads = 0;
        };

        struct CatalogArgs
        {
            std::string baseline = "uma-los", prefix = "uma", out;
            std::vector<double> kf, as, nc;
        };

        struct ReportArgs
        {
            std::string params, hex, baseline;
        };

        // A built-in baseline name, or else a parameter file.
        LspSet resolve_baseline(const std::string &name)
        {
            const auto names = baseline_names();
            if (std::find(names.begin(), names.end(), name) != names.end())
                return baseline(name);
            if (fs::is_regular_file(name))
                return read_params(name);
            std::string list;
            for (const auto &n : names)
                list += (list.empty() ? "" : ", ") + n;
            throw std::invalid_argument("Unknown baseline '" + name + "' (built-in: " + list + ").");
        }

        std::ofstream open_output(const std::string &path)
        {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw std::runtime_error("Cannot open '" + path + "' for writing.");
            return f;
        }

        int do_generate(const GenerateArgs &a, std::ostream &out)
        {
            const LspSet params = read_params(a.params);
            if (!params.lambda_clusters)
                throw std::invalid_argument(a.params + ": generation needs lambda_clusters.");

            GenConfig cfg;
            cfg.dims = {a.n_rx, a.n_tx, a.n_sc};
            cfg.carrier = {a.fc, a.scs};
            validate(cfg);

            const auto samples = generate_dataset(params, cfg, a.count, a.seed, a.threads);
            write_dataset(fs::path(a.out), samples);
            out << "wrote " << samples.size() << " samples to " << a.out << '\n';
            return exit_ok;
        }

        int do_extract(const ExtractArgs &a, std::ostream &out)
        {
            ExtractConfig cfg{a.threshold_db, a.gap};
            validate(cfg);
            const auto samples = read_dataset(fs::path(a.in));

            std::vector<ChannelStats> stats;
            stats.reserve(samples.size());
            for (const auto &s : samples)
                stats.push_back(extract_stats(s, cfg));

            auto f = open_output(a.out);
            write_stats_csv(f, stats);
            if (!f)
                throw std::runtime_error("Failed writing '" + a.out + "'.");
            out << "wrote " << stats.size() << " rows to " << a.out << '\n';
            return exit_ok;
        }

        int do_fit(const FitArgs &a, std::ostream &out, std::ostream &err)
        {
            const LspSet base = resolve_baseline(a.baseline);
            std::ifstream in(a.stats);
            if (!in)
                throw std::runtime_error("Cannot open '" + a.stats + "'.");
            const auto stats = read_stats_csv(in);

            const auto fitted = build_sscm(stats, base, {a.min_records});
            for (const auto &w : fitted.warnings)
                err << "warning: " << w << '\n';
            write_params(a.out, fitted.params);
            out << "wrote " << a.out << '\n';
            return exit_ok;
        }

        SubScenarioCatalog load_catalog(const std::string &dir)
        {
            if (!fs::is_directory(dir))
                throw std::runtime_error("Catalog directory '" + dir + "' does not exist.");
            std::vector<fs::path> files;
            for (const auto &e : fs::directory_iterator(dir))
                if (e.is_regular_file() && e.path().extension() == ".params")
                    files.push_back(e.path());
            std::sort(files.begin(), files.end());
            if (files.empty())
                throw std::runtime_error("Catalog directory '" + dir + "' holds no .params files.");

            SubScenarioCatalog catalog;
            for (const auto &f : files)
                catalog.entries.push_back({f.stem().string(), read_params(f), std::nullopt});
            validate(catalog);
            return catalog;
        }

        int do_match(const MatchArgs &a, std::ostream &out)
        {
            const auto catalog = load_catalog(a.catalog);
            const LspSet query = read_params(a.query);
            const auto ranked = catalog_match(catalog, query, a.top_k);
            for (std::size_t i = 0; i < ranked.size(); ++i)
                out << i + 1 << ',' << ranked[i].entry->id << ',' << format_double(ranked[i].distance) << '\n';
            return exit_ok;
        }

        int do_eval(const EvalArgs &a, std::ostream &out)
        {
            const auto train = read_dataset(fs::path(a.train));
            auto test = read_dataset(fs::path(a.test));
            if (train.empty() || test.empty())
                throw std::invalid_argument("Training and test datasets must be non-empty.");
            if (train.front().dims.n_tx != test.front().dims.n_tx)
                throw std::invalid_argument("Training and test datasets have different transmit array sizes.");
            if (a.snr_db)
                test = noise_inject(test, *a.snr_db, a.noise_seed, a.threads);

            FeedbackScheme scheme;
            if (a.codec == "linear")
            {
                std::vector<CsiTarget> targets;
                targets.reserve(train.size());
                for (const auto &s : train)
                    targets.push_back(compute_csi_targets(s, a.subband));
                scheme = train_linear_codec(targets, a.coeffs, a.bits);
            }
            else
            {
                DftCodebook cb;
                cb.n_tx = test.front().dims.n_tx;
                cb.n_beams = a.coeffs;
                cb.amp_bits = a.bits;
                cb.phase_bits = a.bits;
                validate(cb);
                scheme = cb;
            }

            auto report = evaluate(scheme, test, a.subband, a.threads);
            report.train_dataset_id = fs::path(a.train).stem().string();
            report.test_dataset_id = fs::path(a.test).stem().string();
            out << format_eval_report(report);
            if (!a.per_sample.empty())
            {
                auto f = open_output(a.per_sample);
                write_per_sample_csv(f, report);
            }
            return exit_ok;
        }

        int do_catalog(const CatalogArgs &a, std::ostream &out)
        {
            const auto catalog = build_catalog(a.kf, a.as, a.nc, resolve_baseline(a.baseline), a.prefix);
            fs::create_directories(a.out);
            for (const auto &e : catalog.entries)
            {
                write_params(fs::path(a.out) / (e.id + ".params"), e.params);
                out << e.id << '\n';
            }
            return exit_ok;
        }

        int do_report_encode(const ReportArgs &a, std::ostream &out, std::ostream &err)
        {
            std::vector<std::string> warnings;
            const auto msg = encode_report(read_params(a.params), &warnings);
            for (const auto &w : warnings)
                err << "warning: " << w << '\n';
            out << to_hex(msg) << '\n';
            return exit_ok;
        }

        int do_report_decode(const ReportArgs &a, std::ostream &out)
        {
            const auto bytes = from_hex(a.hex);
            const LspSet base = a.baseline.empty() ? LspSet{} : resolve_baseline(a.baseline);
            out << format_params(decode_report(bytes).apply_to(base));
            return exit_ok;
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Scene-specific channel modelling: generate, extract, fit, match, evaluate."};
        app.name(args.empty() ? "sscm" : fs::path(args.front()).filename().string());
        app.require_subcommand(1);

        GenerateArgs gen;
        auto *generate = app.add_subcommand("generate", "Generate a channel dataset from a parameter file");
        generate->add_option("--params", gen.params, "Parameter file")->required();
        generate->add_option("--count", gen.count, "Number of samples")->required()->check(CLI::PositiveNumber);
        generate->add_option("--seed", gen.seed, "Random seed")->required();
        generate->add_option("--nrx", gen.n_rx, "Receive antennas")->check(CLI::PositiveNumber)->capture_default_str();
        generate->add_option("--ntx", gen.n_tx, "Transmit antennas")->check(CLI::PositiveNumber)->capture_default_str();
        generate->add_option("--nsc", gen.n_sc, "Subcarriers")->check(CLI::Range(2ul, 1ul << 20))->capture_default_str();
        generate->add_option("--scs", gen.scs, "Subcarrier spacing, Hz")->check(CLI::PositiveNumber)->capture_default_str();
        generate->add_option("--fc", gen.fc, "Carrier frequency, Hz")->check(CLI::PositiveNumber)->capture_default_str();
        generate->add_option("--out", gen.out, "Output dataset file")->required();
        generate->add_option("--threads", gen.threads, "Worker threads, 0 for all cores")->capture_default_str();

        ExtractArgs ext;
        auto *extract = app.add_subcommand("extract", "Extract per-sample statistics to CSV");
        extract->add_option("--in", ext.in, "Input dataset file")->required();
        extract->add_option("--out", ext.out, "Output CSV")->required();
        extract->add_option("--threshold-db", ext.threshold_db, "PDP threshold below peak, dB")
            ->check(CLI::PositiveNumber)->capture_default_str();
        extract->add_option("--gap", ext.gap, "Cluster gap in taps")->capture_default_str();

        FitArgs fit;
        auto *fitc = app.add_subcommand("fit", "Fit a scene-specific parameter file from statistics");
        fitc->add_option("--stats", fit.stats, "Statistics CSV")->required();
        fitc->add_option("--baseline", fit.baseline, "Built-in baseline name or parameter file")->required();
        fitc->add_option("--out", fit.out, "Output parameter file")->required();
        fitc->add_option("--min-records", fit.min_records, "Warn below this many records")->capture_default_str();

        MatchArgs mat;
        auto *match = app.add_subcommand("match", "Rank catalog entries against a query parameter file");
        match->add_option("--catalog", mat.catalog, "Directory of .params files")->required();
        match->add_option("--query", mat.query, "Query parameter file")->required();
        match->add_option("--top-k", mat.top_k, "Number of results")->check(CLI::PositiveNumber)->capture_default_str();

        EvalArgs ev;
        auto *eval = app.add_subcommand("eval", "Train a feedback codec and score it on a test dataset");
        eval->add_option("--train", ev.train, "Training dataset")->required();
        eval->add_option("--test", ev.test, "Test dataset")->required();
        eval->add_option("--coeffs", ev.coeffs, "Linear: coefficients kept. DFT: beams kept")
            ->required()->check(CLI::PositiveNumber);
        eval->add_option("--bits-per-comp", ev.bits, "Linear: bits per real component. DFT: amplitude and phase bits")
            ->required()->check(CLI::Range(1u, 24u));
        eval->add_option("--subband", ev.subband, "Subcarriers per subband")->check(CLI::PositiveNumber)->capture_default_str();
        eval->add_option("--codec", ev.codec, "Feedback scheme")->check(CLI::IsMember({"linear", "dft"}))->capture_default_str();
        eval->add_option("--per-sample", ev.per_sample, "Write per-sample SGCS CSV here");
        eval->add_option("--snr-db", ev.snr_db, "Add white noise to the test set at this SNR");
        eval->add_option("--noise-seed", ev.noise_seed, "Seed for --snr-db noise")->capture_default_str();
        eval->add_option("--threads", ev.threads, "Worker threads, 0 for all cores")->capture_default_str();

        CatalogArgs cat;
        auto *catalog = app.add_subcommand("catalog", "Write a grid catalog of parameter files");
        catalog->add_option("--baseline", cat.baseline, "Built-in baseline name or parameter file")->capture_default_str();
        catalog->add_option("--kf", cat.kf, "mu_KF grid, dB")->required()->delimiter(',');
        catalog->add_option("--as", cat.as, "mu_lgASD grid")->required()->delimiter(',');
        catalog->add_option("--nc", cat.nc, "lambda_clusters grid")->required()->delimiter(',');
        catalog->add_option("--prefix", cat.prefix, "Entry id prefix")->capture_default_str();
        catalog->add_option("--out", cat.out, "Output directory")->required();

        ReportArgs rep;
        auto *report = app.add_subcommand("report", "Encode or decode an 8-byte statistics report");
        report->require_subcommand(1);
        auto *encode = report->add_subcommand("encode", "Parameter file to hex report");
        encode->add_option("--params", rep.params, "Parameter file")->required();
        auto *decode = report->add_subcommand("decode", "Hex report to parameter file text");
        decode->add_option("--hex", rep.hex, "16 hex digits")->required();
        decode->add_option("--baseline", rep.baseline, "Fill unreported fields from this baseline");

        std::vector<const char *> argv;
        argv.reserve(args.size() + 1);
        for (const auto &a : args)
            argv.push_back(a.c_str());
        if (argv.empty())
            argv.push_back("sscm");

        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &)
        {
            out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
            return exit_usage;
        }

        try
        {
            if (*generate)
                return do_generate(gen, out);
            if (*extract)
                return do_extract(ext, out);
            if (*fitc)
                return do_fit(fit, out, err);
            if (*match)
                return do_match(mat, out);
            if (*eval)
                return do_eval(ev, out);
            if (*catalog)
                return do_catalog(cat, out);
            if (*encode)
                return do_report_encode(rep, out, err);
            if (*decode)
                return do_report_decode(rep, out);
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_data;
        }
        return exit_usage;
    }
}
