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


#include "sscm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace sscm
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        bool parse_number(std::string_view s, double &out)
        {
            if (!s.empty() && s.front() == '+')
                s.remove_prefix(1);
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
        }

        std::vector<std::string_view> split(std::string_view line, char sep)
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = line.find(sep, start);
                parts.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return parts;
        }

        const char *const numeric_keys[] = {"mu_lgDS", "sigma_lgDS", "mu_lgASD", "sigma_lgASD", "mu_lgASA",
                                            "sigma_lgASA", "mu_KF", "sigma_KF", "lambda_clusters"};
        const char *const required_keys[] = {"mu_lgDS", "sigma_lgDS", "mu_lgASD", "sigma_lgASD", "mu_KF", "sigma_KF"};
    }

    std::string format_double(double v)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, ptr);
    }

    LspSet parse_params(std::string_view text)
    {
        std::map<std::string, double, std::less<>> values;
        std::optional<bool> los;
        std::size_t line_no = 0;

        while (!text.empty())
        {
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const std::string where = "line " + std::to_string(line_no) + ": ";
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw FormatError(where + "expected 'key = value'.");
            const std::string key(trim(line.substr(0, eq)));
            const auto value = trim(line.substr(eq + 1));

            if (key == "los")
            {
                if (los)
                    throw FormatError(where + "duplicate key 'los'.");
                if (value == "true" || value == "1")
                    los = true;
                else if (value == "false" || value == "0")
                    los = false;
                else
                    throw FormatError(where + "'los' must be true or false.");
                continue;
            }

            bool known = false;
            for (const char *k : numeric_keys)
                known = known || key == k;
            if (!known)
                throw FormatError(where + "unknown key '" + key + "'.");
            if (values.contains(key))
                throw FormatError(where + "duplicate key '" + key + "'.");
            double v = 0.0;
            if (!parse_number(value, v))
                throw FormatError(where + "value of '" + key + "' is not a finite number.");
            values.emplace(key, v);
        }

        for (const char *k : required_keys)
            if (!values.contains(k))
                throw FormatError(std::string("missing required key '") + k + "'.");

        LspSet p;
        p.mu_lgDS = values.at("mu_lgDS");
        p.sigma_lgDS = values.at("sigma_lgDS");
        p.mu_lgASD = values.at("mu_lgASD");
        p.sigma_lgASD = values.at("sigma_lgASD");
        p.mu_lgASA = values.contains("mu_lgASA") ? values.at("mu_lgASA") : p.mu_lgASD;
        p.sigma_lgASA = values.contains("sigma_lgASA") ? values.at("sigma_lgASA") : p.sigma_lgASD;
        p.mu_KF = values.at("mu_KF");
        p.sigma_KF = values.at("sigma_KF");
        if (values.contains("lambda_clusters"))
            p.lambda_clusters = values.at("lambda_clusters");
        p.los = los.value_or(false);

        if (auto err = check(p); !err.empty())
            throw FormatError("invalid parameters: " + err + ".");
        return p;
    }

    std::string format_params(const LspSet &p)
    {
        std::ostringstream out;
        out << "mu_lgDS = " << format_double(p.mu_lgDS) << '\n'
            << "sigma_lgDS = " << format_double(p.sigma_lgDS) << '\n'
            << "mu_lgASD = " << format_double(p.mu_lgASD) << '\n'
            << "sigma_lgASD = " << format_double(p.sigma_lgASD) << '\n'
            << "mu_lgASA = " << format_double(p.mu_lgASA) << '\n'
            << "sigma_lgASA = " << format_double(p.sigma_lgASA) << '\n'
            << "mu_KF = " << format_double(p.mu_KF) << '\n'
            << "sigma_KF = " << format_double(p.sigma_KF) << '\n';
        if (p.lambda_clusters)
            out << "lambda_clusters = " << format_double(*p.lambda_clusters) << '\n';
        out << "los = " << (p.los ? "true" : "false") << '\n';
        return out.str();
    }

    LspSet read_params(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("Cannot open '" + path.string() + "'.");
        std::ostringstream ss;
        ss << in.rdbuf();
        try
        {
            return parse_params(ss.str());
        }
        catch (const FormatError &e)
        {
            throw FormatError(path.string() + ": " + e.what());
        }
    }

    void write_params(const std::filesystem::path &path, const LspSet &params)
    {
        validate(params);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("Cannot open '" + path.string() + "' for writing.");
        out << format_params(params);
        if (!out)
            throw std::runtime_error("Failed writing '" + path.string() + "'.");
    }

    void write_stats_csv(std::ostream &out, std::span<const ChannelStats> stats)
    {
        out << "ds_s,asd_deg,asa_deg,kf_db,n_clusters\n";
        for (const auto &s : stats)
            out << format_double(s.ds) << ',' << format_double(s.asd) << ',' << format_double(s.asa) << ','
                << format_double(s.kf_capped ? kf_cap_db : s.kf_db) << ',' << s.n_clusters << '\n';
    }

    std::vector<ChannelStats> read_stats_csv(std::istream &in)
    {
        std::string line;
        if (!std::getline(in, line) || trim(line) != "ds_s,asd_deg,asa_deg,kf_db,n_clusters")
            throw FormatError("Statistics CSV must start with the header 'ds_s,asd_deg,asa_deg,kf_db,n_clusters'.");

        std::vector<ChannelStats> stats;
        std::size_t line_no = 1;
        while (std::getline(in, line))
        {
            ++line_no;
            if (trim(line).empty())
                continue;
            const auto cols = split(line, ',');
            const std::string where = "stats line " + std::to_string(line_no) + ": ";
            if (cols.size() != 5)
                throw FormatError(where + "expected 5 columns.");

            double v[5];
            for (std::size_t i = 0; i < 5; ++i)
                if (!parse_number(cols[i], v[i]))
                    throw FormatError(where + "column " + std::to_string(i + 1) + " is not a finite number.");
            if (v[0] < 0.0 || v[1] < 0.0 || v[2] < 0.0)
                throw FormatError(where + "spreads must be non-negative.");
            if (v[4] < 0.0 || v[4] != std::floor(v[4]))
                throw FormatError(where + "n_clusters must be a non-negative integer.");

            ChannelStats s;
            s.ds = v[0];
            s.asd = v[1];
            s.asa = v[2];
            s.kf_db = v[3];
            s.kf_capped = v[3] >= kf_cap_db;
            s.n_clusters = static_cast<std::size_t>(v[4]);
            stats.push_back(s);
        }
        return stats;
    }

    std::string format_eval_report(const EvalReport &r)
    {
        std::ostringstream out;
        out << "mean_sgcs=" << format_double(r.mean_sgcs) << '\n'
            << "feedback_bits=" << r.feedback_bits << '\n'
            << "samples=" << r.per_sample_sgcs.size() << '\n'
            << "train_dataset_id=" << r.train_dataset_id << '\n'
            << "test_dataset_id=" << r.test_dataset_id << '\n';
        return out.str();
    }

    void write_per_sample_csv(std::ostream &out, const EvalReport &r)
    {
        out << "index,sgcs\n";
        for (std::size_t i = 0; i < r.per_sample_sgcs.size(); ++i)
            out << i << ',' << format_double(r.per_sample_sgcs[i]) << '\n';
    }
}
