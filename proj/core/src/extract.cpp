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


#include "sscm/extract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sscm
{
    namespace
    {
        double total_power(const PowerProfile &p)
        {
            double sum = 0.0;
            for (double v : p.power)
                sum += v;
            return sum;
        }

        void check_profile(const PowerProfile &p)
        {
            if (p.abscissa.size() != p.power.size())
                throw std::invalid_argument("Power profile abscissa and power lengths differ.");
            for (double v : p.power)
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw std::invalid_argument("Power profile entries must be finite and non-negative.");
            if (!(total_power(p) > 0.0))
                throw std::invalid_argument("Power profile is all zero.");
        }

        double spread_from_pdp(const PowerProfile &pdp, double tap_spacing, const ExtractConfig &cfg)
        {
            return rms_spread(signed_delay_profile(apply_threshold(pdp, cfg.pdp_threshold_db), tap_spacing));
        }

        double spread_from_angles(const AngleDomainChannel &a, ArraySide side, const ExtractConfig &cfg)
        {
            return circular_spread(apply_threshold(power_angle_spectrum(a, side), cfg.pdp_threshold_db));
        }
    }

    void validate(const ExtractConfig &cfg)
    {
        if (!(cfg.pdp_threshold_db > 0.0))
            throw std::invalid_argument("pdp_threshold_db must be positive.");
        if (cfg.cluster_gap_taps < 1)
            throw std::invalid_argument("cluster_gap_taps must be at least 1.");
    }

    double rms_spread(const PowerProfile &profile)
    {
        check_profile(profile);
        const double sum = total_power(profile);
        double mean = 0.0;
        for (std::size_t i = 0; i < profile.power.size(); ++i)
            mean += profile.power[i] * profile.abscissa[i];
        mean /= sum;

        double var = 0.0;
        for (std::size_t i = 0; i < profile.power.size(); ++i)
        {
            const double d = profile.abscissa[i] - mean;
            var += profile.power[i] * d * d;
        }
        return std::sqrt(std::max(var / sum, 0.0));
    }

    double circular_spread(const PowerProfile &profile)
    {
        check_profile(profile);

        std::vector<double> angles, powers;
        for (std::size_t i = 0; i < profile.power.size(); ++i)
            if (profile.power[i] > 0.0)
            {
                angles.push_back(profile.abscissa[i]);
                powers.push_back(profile.power[i]);
            }
        const double sum = total_power(profile);

        auto spread_at = [&](double delta)
        {
            double mean = 0.0;
            std::vector<double> shifted(angles.size());
            for (std::size_t i = 0; i < angles.size(); ++i)
            {
                shifted[i] = wrap_degrees(angles[i] + delta);
                mean += powers[i] * shifted[i];
            }
            mean /= sum;
            double var = 0.0;
            for (std::size_t i = 0; i < angles.size(); ++i)
            {
                const double d = wrap_degrees(shifted[i] - mean);
                var += powers[i] * d * d;
            }
            return std::sqrt(std::max(var / sum, 0.0));
        };

        // rotations at which some angle crosses the wrap boundary
        std::vector<double> breaks(angles.size());
        for (std::size_t i = 0; i < angles.size(); ++i)
        {
            double b = std::fmod(180.0 - angles[i], 360.0);
            breaks[i] = b < 0.0 ? b + 360.0 : b;
        }
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < breaks.size(); ++i)
        {
            const double next = i + 1 < breaks.size() ? breaks[i + 1] : breaks.front() + 360.0;
            best = std::min(best, spread_at(0.5 * (breaks[i] + next)));
        }
        return best;
    }

    PowerProfile apply_threshold(const PowerProfile &profile, double threshold_db)
    {
        check_profile(profile);
        const double peak = *std::max_element(profile.power.begin(), profile.power.end());
        const double floor = peak * std::pow(10.0, -threshold_db / 10.0);
        PowerProfile out = profile;
        for (auto &p : out.power)
            if (p < floor)
                p = 0.0;
        return out;
    }

    PowerProfile signed_delay_profile(const PowerProfile &pdp, double tap_spacing)
    {
        const std::size_t n = pdp.power.size();
        PowerProfile out;
        out.abscissa.reserve(n);
        out.power.reserve(n);
        for (std::size_t l = n / 2 + 1; l < n; ++l)
        {
            out.abscissa.push_back((static_cast<double>(l) - static_cast<double>(n)) * tap_spacing);
            out.power.push_back(pdp.power[l]);
        }
        for (std::size_t l = 0; l <= n / 2 && l < n; ++l)
        {
            out.abscissa.push_back(static_cast<double>(l) * tap_spacing);
            out.power.push_back(pdp.power[l]);
        }
        return out;
    }

    double extract_delay_spread(const ChannelSample &sample, const ExtractConfig &cfg)
    {
        validate(cfg);
        const auto t = to_time_domain(sample);
        return spread_from_pdp(power_delay_profile(t), t.tap_spacing, cfg);
    }

    double extract_angle_spread(const ChannelSample &sample, ArraySide side, const ExtractConfig &cfg)
    {
        validate(cfg);
        return spread_from_angles(to_angle_domain(sample), side, cfg);
    }

    KFactor k_factor_from_profile(const PowerProfile &thresholded)
    {
        check_profile(thresholded);
        std::size_t surviving = 0;
        double peak = 0.0, sum = 0.0;
        for (double p : thresholded.power)
        {
            if (p > 0.0)
                ++surviving;
            peak = std::max(peak, p);
            sum += p;
        }
        if (surviving < 2)
            return {kf_cap_db, true};
        return {10.0 * std::log10(peak / (sum - peak)), false};
    }

    KFactor extract_k_factor(const ChannelSample &sample, const ExtractConfig &cfg)
    {
        validate(cfg);
        const auto t = to_time_domain(sample);
        return k_factor_from_profile(apply_threshold(power_delay_profile(t), cfg.pdp_threshold_db));
    }

    std::size_t count_groups(const PowerProfile &thresholded, double tap_spacing, std::size_t gap_taps)
    {
        std::vector<long long> taps;
        for (std::size_t i = 0; i < thresholded.power.size(); ++i)
            if (thresholded.power[i] > 0.0)
                taps.push_back(std::llround(thresholded.abscissa[i] / tap_spacing));
        if (taps.empty())
            throw std::invalid_argument("No taps survive thresholding.");
        std::sort(taps.begin(), taps.end());

        std::size_t groups = 1;
        for (std::size_t i = 1; i < taps.size(); ++i)
            if (taps[i] - taps[i - 1] > static_cast<long long>(gap_taps))
                ++groups;
        return groups;
    }

    std::size_t count_clusters(const ChannelSample &sample, const ExtractConfig &cfg)
    {
        validate(cfg);
        const auto t = to_time_domain(sample);
        const auto kept = apply_threshold(power_delay_profile(t), cfg.pdp_threshold_db);
        return count_groups(signed_delay_profile(kept, t.tap_spacing), t.tap_spacing, cfg.cluster_gap_taps);
    }

    ChannelStats extract_stats(const ChannelSample &sample, const ExtractConfig &cfg)
    {
        validate(cfg);
        const auto t = to_time_domain(sample);
        const auto kept = apply_threshold(power_delay_profile(t), cfg.pdp_threshold_db);
        const auto signed_kept = signed_delay_profile(kept, t.tap_spacing);
        const auto a = to_angle_domain(sample);

        ChannelStats s;
        s.ds = rms_spread(signed_kept);
        s.asd = spread_from_angles(a, ArraySide::tx, cfg);
        s.asa = spread_from_angles(a, ArraySide::rx, cfg);
        const auto kf = k_factor_from_profile(kept);
        s.kf_db = kf.db;
        s.kf_capped = kf.capped;
        s.n_clusters = count_groups(signed_kept, t.tap_spacing, cfg.cluster_gap_taps);
        return s;
    }
}
