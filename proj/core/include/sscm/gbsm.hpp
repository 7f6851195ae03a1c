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


#ifndef SSCM_GBSM_HPP
#define SSCM_GBSM_HPP

#include "sscm/channel.hpp"
#include "sscm/lsp.hpp"
#include "sscm/random.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sscm
{
    // Generation constants. Defaults follow the UMa rows of the 3GPP stochastic model.
    struct GenConfig
    {
        ChannelDims dims{4, 8, 208};
        CarrierConfig carrier{};
        std::size_t rays_per_cluster = 20;
        double delay_scaling_r_tau = 2.5;
        double per_cluster_shadowing_std = 3.0; // dB
        double intra_cluster_as_deg = 5.0;
        std::size_t min_clusters = 1;
    };

    void validate(const GenConfig &config);

    // One set of large-scale parameters drawn from an LspSet.
    struct LspDraw
    {
        double ds_sec;
        double asd_deg;
        double asa_deg;
        double kf_linear;
    };

    inline constexpr double max_angle_spread_deg = 104.0;

    LspDraw draw_lsp(const LspSet &params, Rng &rng);

    // Poisson(lambda) clamped below at min_clusters.
    std::size_t draw_cluster_count(double lambda, std::size_t min_clusters, Rng &rng);

    // tau_n = -r_tau * DS * ln(u_n), sorted ascending, minimum subtracted.
    std::vector<double> gen_delays(std::size_t n_clusters, double ds_sec, double r_tau, Rng &rng);

    struct ClusterPowers
    {
        std::vector<double> power;       // sums to 1; with LOS the specular part is included in power[0]
        double specular_fraction = 0.0;  // K / (K + 1) with LOS, else 0
    };

    ClusterPowers gen_powers(std::span<const double> delays, double ds_sec, double r_tau, double shadow_std_db,
                             double kf_linear, bool los, Rng &rng);

    // Scales the delays so that the power-weighted rms delay spread of the cluster set equals ds_sec.
    // A single cluster (zero spread) is left unchanged.
    void scale_delays_to_spread(std::span<double> delays, std::span<const double> powers, double ds_sec);

    struct ClusterAngles
    {
        std::vector<double> cluster;           // central angle per cluster, degrees
        std::vector<std::vector<double>> rays; // per cluster, rays_per_cluster angles, degrees
    };

    // Cluster angles are drawn N(0, as_deg) and rescaled about their power-weighted mean so that their circular
    // spread equals as_deg. Rays get zero-mean Laplacian offsets of rms intra_as_deg. With one cluster there is
    // nothing to rescale and the rays carry the whole spread (rms as_deg). All angles wrapped to (-180, 180].
    ClusterAngles gen_angles(std::span<const double> powers, double as_deg, double intra_as_deg,
                             std::size_t rays_per_cluster, Rng &rng);

    // Affine rescale of angles about their power-weighted mean hitting the target circular spread.
    // If the target exceeds what the cluster set can reach, the largest reachable spread is used.
    std::vector<double> rescale_to_spread(std::span<const double> angles_deg, std::span<const double> powers,
                                          double target_deg);

    struct ClusterRealization
    {
        double delay;   // seconds
        double power;   // linear fraction of the total
        double aod_deg;
        double aoa_deg;
        std::vector<double> ray_aods;
        std::vector<double> ray_aoas;
        std::vector<double> ray_phases; // radians
    };

    // Ground truth of one generated snapshot.
    struct ClusterSet
    {
        LspDraw lsp;
        std::vector<ClusterRealization> clusters;
        bool los = false;
        double specular_fraction = 0.0; // part of clusters[0].power carried by the specular ray
        double specular_phase = 0.0;
    };

    ClusterSet draw_clusters(const LspSet &params, const GenConfig &config, Rng &rng);
    ClusterSet draw_clusters(const LspSet &params, const GenConfig &config, std::uint64_t seed, std::uint64_t index);

    ChannelSample synthesize_from_clusters(const ClusterSet &clusters, const GenConfig &config);

    // Deterministic in (params, config, seed, index).
    ChannelSample synthesize_channel(const LspSet &params, const GenConfig &config, std::uint64_t seed,
                                     std::uint64_t index);

    // Sample i equals synthesize_channel(params, config, seed, first_index + i). threads == 0 uses all cores.
    std::vector<ChannelSample> generate_dataset(const LspSet &params, const GenConfig &config, std::size_t count,
                                                std::uint64_t seed, unsigned threads = 0,
                                                std::uint64_t first_index = 0);
}

#endif
