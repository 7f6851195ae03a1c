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


#ifndef SSCM_EXTRACT_HPP
#define SSCM_EXTRACT_HPP

#include "sscm/channel.hpp"

#include <cstddef>

namespace sscm
{
    struct ExtractConfig
    {
        double pdp_threshold_db = 25.0; // keep taps/bins within this many dB of the peak
        std::size_t cluster_gap_taps = 2;
    };

    void validate(const ExtractConfig &cfg);

    // Reported K-factor when only one tap survives thresholding.
    inline constexpr double kf_cap_db = 40.0;

    struct ChannelStats
    {
        double ds = 0.0;  // seconds
        double asd = 0.0; // degrees
        double asa = 0.0; // degrees
        double kf_db = 0.0;
        bool kf_capped = false;
        std::size_t n_clusters = 0;
    };

    // Power-weighted rms spread of the abscissa. Throws on an all-zero profile.
    double rms_spread(const PowerProfile &profile);

    // Circular angle spread in degrees: the minimum over rotations of the power-weighted rms of the wrapped,
    // mean-centred angles. The wrapped second moment is piecewise constant in the rotation, changing only when
    // an angle crosses the +-180 boundary, so every piece is evaluated once and the minimum is exact.
    double circular_spread(const PowerProfile &profile_deg);

    // Zeroes every entry more than threshold_db below the peak. Throws on an all-zero profile.
    PowerProfile apply_threshold(const PowerProfile &profile, double threshold_db);

    // Delay profile with signed delays: taps in the upper half of the IDFT window are read as negative delays,
    // the circular image of energy leaking before tap 0. Sorted by delay.
    PowerProfile signed_delay_profile(const PowerProfile &pdp, double tap_spacing);

    double extract_delay_spread(const ChannelSample &sample, const ExtractConfig &cfg = {});
    double extract_angle_spread(const ChannelSample &sample, ArraySide side, const ExtractConfig &cfg = {});

    struct KFactor
    {
        double db;
        bool capped;
    };

    KFactor k_factor_from_profile(const PowerProfile &thresholded);
    KFactor extract_k_factor(const ChannelSample &sample, const ExtractConfig &cfg = {});

    // Groups surviving taps; a new group starts when consecutive surviving taps are more than gap_taps apart.
    std::size_t count_groups(const PowerProfile &thresholded_signed, double tap_spacing, std::size_t gap_taps);
    std::size_t count_clusters(const ChannelSample &sample, const ExtractConfig &cfg = {});

    ChannelStats extract_stats(const ChannelSample &sample, const ExtractConfig &cfg = {});
}

#endif
