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


// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion with the measured values;
// exits non-zero when any criterion fails. "--only N" runs a single criterion.

#include "cli.hpp"

#include "sscm/extract.hpp"
#include "sscm/feedback.hpp"
#include "sscm/fit.hpp"
#include "sscm/gbsm.hpp"
#include "sscm/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace sscm;

namespace
{
    struct Outcome
    {
        bool pass;
        std::string detail;
    };

    class Stopwatch
    {
    public:
        double seconds() const
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    };

    std::string fmt(const char *f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof(buf), f, args...);
        return buf;
    }

    LspSet load(const std::string &name)
    {
        return read_params(fs::path(SSCM_FIXTURE_DIR) / name);
    }

    GenConfig full_config()
    {
        GenConfig cfg;
        cfg.dims = {4, 8, 208};
        return cfg;
    }

    std::vector<CsiTarget> targets(std::span<const ChannelSample> samples)
    {
        std::vector<CsiTarget> out;
        out.reserve(samples.size());
        for (const auto &s : samples)
            out.push_back(compute_csi_targets(s, 16));
        return out;
    }

    // 1. Catalog {A, B, C}, query D, top-1 must be B within a second.
    Outcome catalog_matching()
    {
        Stopwatch sw;
        SubScenarioCatalog catalog;
        for (const char *n : {"A", "B", "C"})
            catalog.entries.push_back({n, load(std::string("uma_") + n + ".params"), std::nullopt});
        const auto ranked = catalog_match(catalog, load("uma_D.params"), 3);
        const double t = sw.seconds();
        std::string order;
        for (const auto &r : ranked)
            order += fmt("%s(%.5f) ", r.entry->id.c_str(), r.distance);
        return {ranked.front().entry->id == "B" && t < 1.0, fmt("ranking %stime %.4f s", order.c_str(), t)};
    }

    // 2. Generate 2000 set-B samples, extract, fit; compare with the generating parameters.
    Outcome statistical_round_trip()
    {
        const LspSet b = load("uma_B_gen.params");
        const auto cfg = full_config();
        constexpr std::size_t count = 2000;
        constexpr std::uint64_t seed = 20240601;

        auto run_pipeline = [&](unsigned threads, std::vector<ChannelStats> &stats)
        {
            Stopwatch sw;
            const auto samples = generate_dataset(b, cfg, count, seed, threads);
            stats.assign(samples.size(), {});
            std::vector<std::jthread> pool;
            const unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
            for (unsigned w = 0; w < n; ++w)
                pool.emplace_back([&, w]
                                  {
                                      for (std::size_t i = w; i < samples.size(); i += n)
                                          stats[i] = extract_stats(samples[i]);
                                  });
            pool.clear();
            return sw.seconds();
        };

        std::vector<ChannelStats> stats, serial_stats;
        const double t_par = run_pipeline(0, stats);
        const double t_ser = run_pipeline(1, serial_stats);
        bool same = stats.size() == serial_stats.size();
        for (std::size_t i = 0; same && i < stats.size(); ++i)
            same = stats[i].ds == serial_stats[i].ds && stats[i].asd == serial_stats[i].asd &&
                   stats[i].kf_db == serial_stats[i].kf_db && stats[i].n_clusters == serial_stats[i].n_clusters;

        const auto fit = build_sscm(stats, baseline("uma-los")).params;
        const double lambda = *fit.lambda_clusters;
        const bool ds_ok = std::abs(fit.mu_lgDS - b.mu_lgDS) <= 0.15;
        const bool sds_ok = std::abs(fit.sigma_lgDS - b.sigma_lgDS) <= 0.3 * b.sigma_lgDS;
        const bool kf_ok = std::abs(fit.mu_KF - b.mu_KF) <= 1.5;
        const bool asd_ok = std::abs(fit.mu_lgASD - b.mu_lgASD) <= 0.2;
        const bool lam_ok = std::abs(lambda - *b.lambda_clusters) <= 0.1 * *b.lambda_clusters;
        const bool time_ok = t_ser < 300.0 && t_par < 60.0;
        auto mark = [](bool ok) { return ok ? "ok" : "OUT"; };
        return {ds_ok && sds_ok && kf_ok && asd_ok && lam_ok && time_ok && same,
                fmt("mu_lgDS %.3f [%s], sigma_lgDS %.3f [%s], mu_KF %.2f dB [%s], mu_lgASD %.3f [%s], lambda %.2f [%s]; "
                    "time %.1f s serial / %.1f s parallel [%s]; thread-invariant stats [%s]",
                    fit.mu_lgDS, mark(ds_ok), fit.sigma_lgDS, mark(sds_ok), fit.mu_KF, mark(kf_ok), fit.mu_lgASD,
                    mark(asd_ok), lambda, mark(lam_ok), t_ser, t_par, mark(time_ok), mark(same))};
    }

    // 3. Codecs trained on A, B, C, D and scored on D's test set.
    Outcome transfer_ordering()
    {
        Stopwatch sw;
        const auto cfg = full_config();
        const auto test_d = targets(generate_dataset(load("uma_D_gen.params"), cfg, 640, 3000));
        double score[4];
        const char *names[4] = {"A", "B", "C", "D"};
        for (int i = 0; i < 4; ++i)
        {
            const auto train = targets(
                generate_dataset(load(std::string("uma_") + names[i] + "_gen.params"), cfg, 2000, 1000 + i));
            score[i] = evaluate(train_linear_codec(train, 7, 4), test_d).mean_sgcs;
        }
        const double t = sw.seconds();
        const bool ok = score[1] >= score[0] && score[1] >= score[2] && score[3] - score[1] <= 0.02 && t < 600.0;
        return {ok, fmt("SGCS on D: A %.4f, B %.4f, C %.4f, D %.4f; D - B = %.4f; time %.1f s", score[0], score[1],
                        score[2], score[3], score[3] - score[1], t)};
    }

    // 4. Mean SGCS on set-B data never drops by more than 0.005 as the bit budget grows.
    Outcome bit_monotonicity()
    {
        const auto cfg = full_config();
        const LspSet b = load("uma_B_gen.params");
        const auto train = targets(generate_dataset(b, cfg, 2000, 4000));
        const auto test = targets(generate_dataset(b, cfg, 640, 4001));
        const std::pair<std::size_t, unsigned> configs[] = {{4, 2}, {8, 2}, {7, 4}, {8, 8}};
        std::string detail;
        bool ok = true;
        double prev = -1.0;
        for (const auto &[coeffs, bits] : configs)
        {
            const auto model = train_linear_codec(train, coeffs, bits);
            const double s = evaluate(model, test).mean_sgcs;
            detail += fmt("%zu bits %.4f; ", model.feedback_bits(), s);
            ok = ok && s >= prev - 0.005;
            prev = s;
        }
        return {ok, detail};
    }

    // 5. SGCS range, identity and invariances on random pairs.
    Outcome metric_properties()
    {
        std::mt19937_64 gen(5);
        std::normal_distribution<double> nd;
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi), scale(0.01, 100.0);
        auto rv = [&]
        {
            Eigen::VectorXcd v(8);
            for (auto &x : v)
                x = cplx(nd(gen), nd(gen));
            return v;
        };
        double worst = 0.0;
        bool in_range = true;
        for (int i = 0; i < 1000; ++i)
        {
            const auto a = rv(), b = rv();
            const double s = sgcs(a, b);
            in_range = in_range && s >= 0.0 && s <= 1.0;
            const cplx ga = std::polar(scale(gen), phase(gen)), gb = std::polar(scale(gen), phase(gen));
            worst = std::max({worst, std::abs(sgcs(a, a) - 1.0), std::abs(sgcs(a, ga * a) - 1.0),
                              std::abs(sgcs(ga * a, b) - s), std::abs(sgcs(a, gb * b) - s)});
        }
        return {in_range && worst <= 1e-12, fmt("range ok: %s, worst invariance error %.2e", in_range ? "yes" : "no", worst)};
    }

    // 6. Transform round trips and energy conservation on random tensors.
    Outcome transform_round_trips()
    {
        std::mt19937_64 gen(6);
        std::normal_distribution<double> nd;
        double worst_rt = 0.0, worst_energy = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            auto s = ChannelSample::zeros({4, 8, 208}, {});
            for (auto &v : s.h_f.data())
                v = cplx(nd(gen), nd(gen));
            const double e = s.h_f.energy();
            const auto t = to_time_domain(s);
            const auto f = to_frequency_domain(t);
            const auto a = to_angle_domain(s);
            const auto p = to_port_domain(a);
            double d_time = 0.0, d_angle = 0.0;
            for (std::size_t j = 0; j < s.h_f.size(); ++j)
            {
                d_time += std::norm(f.h_f.data()[j] - s.h_f.data()[j]);
                d_angle += std::norm(p.data()[j] - s.h_f.data()[j]);
            }
            worst_rt = std::max({worst_rt, std::sqrt(d_time / e), std::sqrt(d_angle / e)});
            worst_energy = std::max({worst_energy, std::abs(t.h_t.energy() - e) / e, std::abs(a.h_ang.energy() - e) / e});
        }
        return {worst_rt <= 1e-9 && worst_energy <= 1e-9,
                fmt("worst relative round-trip error %.2e, worst energy error %.2e", worst_rt, worst_energy)};
    }

    // 7. Spread and K-factor estimators on analytic profiles.
    Outcome analytic_oracles()
    {
        const double ds = rms_spread({{0.0, 100e-9}, {0.5, 0.5}});
        const double as = circular_spread({{-30.0, 30.0}, {1.0, 1.0}});
        const double wrap = circular_spread({{179.0, -179.0}, {1.0, 1.0}});
        const double kf = k_factor_from_profile({{0.0, 1.0}, {0.9, 0.1}}).db;
        const bool ok = ds == 50e-9 && std::abs(as - 30.0) <= 1e-9 && std::abs(wrap - 1.0) <= 1e-9 &&
                        std::abs(kf - 9.54) <= 0.01;
        return {ok, fmt("two-tap DS %.6g ns, +-30 deg AS %.9g, wrap AS %.9g, KF %.4f dB", ds * 1e9, as, wrap, kf)};
    }

    // 8. Cluster counts against the truncated-series expectation, and the Poisson fit.
    Outcome poisson_pipeline()
    {
        constexpr double lambda = 10.0;
        constexpr std::size_t draws = 100000;
        // E[max(X, 1)] for X ~ Poisson(lambda), series truncated where terms vanish
        double oracle = 0.0, pk = std::exp(-lambda);
        for (int k = 0; k < 200; ++k)
        {
            oracle += std::max(k, 1) * pk;
            pk *= lambda / (k + 1);
        }
        Rng rng(8, 0);
        double sum = 0.0;
        for (std::size_t i = 0; i < draws; ++i)
            sum += static_cast<double>(draw_cluster_count(lambda, 1, rng));
        const double mean = sum / draws;

        Rng raw(8, 1);
        std::vector<std::size_t> counts(draws);
        for (auto &c : counts)
            c = static_cast<std::size_t>(raw.poisson(lambda));
        const double fitted = fit_poisson(counts);
        return {std::abs(mean - oracle) <= 0.1 && std::abs(fitted - lambda) <= 0.05,
                fmt("mean count %.4f vs oracle %.4f; fitted lambda %.4f", mean, oracle, fitted)};
    }

    // 9. Set-B report against the frozen 8-byte vector.
    Outcome report_golden()
    {
        std::ifstream in(fs::path(SSCM_FIXTURE_DIR) / "report_set_b.hex");
        std::string golden;
        in >> golden;
        const LspSet b = load("uma_B_gen.params");
        const auto msg = encode_report(b);
        const auto back = decode_report(msg);
        const double sent[7] = {b.mu_lgDS, b.sigma_lgDS, b.mu_lgASD, b.sigma_lgASD, b.mu_KF, b.sigma_KF,
                                *b.lambda_clusters};
        const double got[7] = {back.mu_lgDS, back.sigma_lgDS, back.mu_lgASD, back.sigma_lgASD, back.mu_KF,
                               back.sigma_KF, back.lambda_clusters.value_or(-1.0)};
        bool within = true;
        for (std::size_t i = 0; i < 7; ++i)
            within = within && std::abs(got[i] - sent[i]) <= (report_fields[i].hi - report_fields[i].lo) / 510.0 + 1e-12;
        const std::string hex = to_hex(msg);
        return {hex == golden && within && msg[1] == 140,
                fmt("encoded %s, fixture %s, mu_lgDS byte %d, decode within half step: %s", hex.c_str(),
                    golden.c_str(), msg[1], within ? "yes" : "no")};
    }

    // 10. The generate command is a pure function of its inputs.
    Outcome determinism()
    {
        const fs::path dir = fs::temp_directory_path() / "sscm_acceptance_determinism";
        fs::remove_all(dir);
        fs::create_directories(dir);
        auto gen = [&](const std::string &name, const std::string &threads)
        {
            std::ostringstream out, err;
            return cli::run({"sscm", "generate", "--params", (fs::path(SSCM_FIXTURE_DIR) / "uma_B_gen.params").string(),
                             "--count", "64", "--seed", "777", "--out", (dir / name).string(), "--threads", threads},
                            out, err);
        };
        auto slurp = [&](const std::string &name)
        {
            std::ifstream in(dir / name, std::ios::binary);
            return std::string(std::istreambuf_iterator<char>(in), {});
        };
        const bool ran = gen("a", "1") == 0 && gen("b", "1") == 0 && gen("c", "4") == 0 && gen("d", "0") == 0;
        const auto a = slurp("a");
        const bool same_run = ran && a == slurp("b");
        const bool same_threads = ran && a == slurp("c") && a == slurp("d");
        fs::remove_all(dir);
        return {same_run && same_threads && !a.empty(),
                fmt("%zu-byte files; repeat identical: %s; 1/4/all threads identical: %s", a.size(),
                    same_run ? "yes" : "no", same_threads ? "yes" : "no")};
    }
}

int main(int argc, char **argv)
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"sub-scenario matching", catalog_matching},
        {"statistical round trip", statistical_round_trip},
        {"cross-dataset transfer ordering", transfer_ordering},
        {"feedback-bit monotonicity", bit_monotonicity},
        {"SGCS metric properties", metric_properties},
        {"transform round trips", transform_round_trips},
        {"analytic spread oracles", analytic_oracles},
        {"Poisson pipeline", poisson_pipeline},
        {"report golden vector", report_golden},
        {"generation determinism", determinism},
    };

    std::size_t only = 0;
    if (argc == 3 && std::string(argv[1]) == "--only")
        only = std::stoul(argv[2]);
    else if (argc != 1)
    {
        std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
        return 2;
    }

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        if (only != 0 && only != i + 1)
            continue;
        Outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
