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


#include "sscm/fit.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sscm
{
    namespace
    {
        NormalFit mean_and_sample_std(std::span<const double> x)
        {
            const double n = static_cast<double>(x.size());
            const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
            double ss = 0.0;
            for (double v : x)
                ss += (v - mean) * (v - mean);
            return {mean, std::sqrt(ss / (n - 1.0))};
        }

        std::string count_warning(std::size_t dropped, std::size_t total, const char *what)
        {
            return std::to_string(dropped) + " of " + std::to_string(total) + " records excluded from the " + what +
                   " fit";
        }
    }

    NormalFit fit_lognormal(std::span<const double> values)
    {
        if (values.size() < 2)
            throw std::invalid_argument("Log-normal fit needs at least two values.");
        std::vector<double> lg(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            if (!(values[i] > 0.0) || !std::isfinite(values[i]))
                throw std::invalid_argument("Log-normal fit requires finite positive values (index " +
                                            std::to_string(i) + ").");
            lg[i] = std::log10(values[i]);
        }
        return mean_and_sample_std(lg);
    }

    DbFit fit_normal_db(std::span<const double> values_db)
    {
        std::vector<double> usable;
        usable.reserve(values_db.size());
        std::size_t excluded = 0;
        for (double v : values_db)
        {
            if (!std::isfinite(v))
                throw std::invalid_argument("dB fit requires finite values.");
            if (v >= kf_cap_db)
                ++excluded;
            else
                usable.push_back(v);
        }
        if (usable.size() < 2)
            throw std::invalid_argument("dB fit needs at least two uncapped values.");
        const auto fit = mean_and_sample_std(usable);
        return {fit.mu, fit.sigma, excluded};
    }

    double fit_poisson(std::span<const std::size_t> counts)
    {
        if (counts.empty())
            throw std::invalid_argument("Poisson fit needs at least one count.");
        double sum = 0.0;
        for (auto c : counts)
            sum += static_cast<double>(c);
        return sum / static_cast<double>(counts.size());
    }

    SscmFit build_sscm(std::span<const ChannelStats> stats, const LspSet &baseline, const SscmFitOptions &opts)
    {
        if (stats.empty())
            throw std::invalid_argument("Cannot build a scene-specific model from an empty statistics batch.");
        validate(baseline);

        SscmFit out{baseline, {}};
        if (stats.size() < opts.min_records)
            out.warnings.push_back("only " + std::to_string(stats.size()) + " records (recommended at least " +
                                   std::to_string(opts.min_records) + "); fitted parameters are uncertain");

        std::vector<double> ds, asd, asa, kf;
        std::vector<std::size_t> counts;
        for (const auto &s : stats)
        {
            if (s.ds > 0.0)
                ds.push_back(s.ds);
            if (s.asd > 0.0)
                asd.push_back(s.asd);
            if (s.asa > 0.0)
                asa.push_back(s.asa);
            kf.push_back(s.kf_capped ? kf_cap_db : s.kf_db);
            counts.push_back(s.n_clusters);
        }
        const std::size_t total = stats.size();
        if (ds.size() < total)
            out.warnings.push_back(count_warning(total - ds.size(), total, "delay spread (zero spread)"));
        if (asd.size() < total)
            out.warnings.push_back(count_warning(total - asd.size(), total, "ASD (zero spread)"));
        if (asa.size() < total)
            out.warnings.push_back(count_warning(total - asa.size(), total, "ASA (zero spread)"));

        const auto f_ds = fit_lognormal(ds);
        const auto f_asd = fit_lognormal(asd);
        const auto f_asa = fit_lognormal(asa);
        const auto f_kf = fit_normal_db(kf);
        if (f_kf.excluded > 0)
            out.warnings.push_back(count_warning(f_kf.excluded, total, "K-factor (capped)"));

        double lambda = fit_poisson(counts);
        if (!(lambda > 0.0))
        {
            out.warnings.push_back("fitted cluster mean is zero; clamped to 1");
            lambda = 1.0;
        }

        out.params.mu_lgDS = f_ds.mu;
        out.params.sigma_lgDS = f_ds.sigma;
        out.params.mu_lgASD = f_asd.mu;
        out.params.sigma_lgASD = f_asd.sigma;
        out.params.mu_lgASA = f_asa.mu;
        out.params.sigma_lgASA = f_asa.sigma;
        out.params.mu_KF = f_kf.mu;
        out.params.sigma_KF = f_kf.sigma;
        out.params.lambda_clusters = lambda;

        if (auto err = check(out.params); !err.empty())
            throw std::runtime_error("Fitted parameters fall outside the valid LSP range: " + err + ".");
        return out;
    }
}
