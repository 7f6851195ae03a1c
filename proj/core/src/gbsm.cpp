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


#include "sscm/gbsm.hpp"

#include "sscm/extract.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sscm
{
    namespace
    {
        constexpr double deg2rad = std::numbers::pi / 180.0;

        double weighted_mean(std::span<const double> x, std::span<const double> w)
        {
            double sw = 0.0, swx = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
            {
                sw += w[i];
                swx += w[i] * x[i];
            }
            return swx / sw;
        }

        double spread_of(std::span<const double> angles, std::span<const double> powers)
        {
            return circular_spread({{angles.begin(), angles.end()}, {powers.begin(), powers.end()}});
        }

        // ULA response e^{j pi u sin(theta)}; angles behind the array alias onto their mirror image
        void add_outer(std::vector<cplx> &spatial, std::size_t n_rx, std::size_t n_tx, cplx gain, double aoa_deg,
                       double aod_deg)
        {
            const double sa = std::sin(aoa_deg * deg2rad);
            const double sd = std::sin(aod_deg * deg2rad);
            for (std::size_t u = 0; u < n_rx; ++u)
            {
                const cplx g = gain * std::polar(1.0, std::numbers::pi * static_cast<double>(u) * sa);
                for (std::size_t s = 0; s < n_tx; ++s)
                    spatial[u * n_tx + s] += g * std::polar(1.0, -std::numbers::pi * static_cast<double>(s) * sd);
            }
        }
    }

    void validate(const GenConfig &config)
    {
        validate(config.dims);
        validate(config.carrier);
        if (config.rays_per_cluster < 1)
            throw std::invalid_argument("rays_per_cluster must be at least 1.");
        if (!(config.delay_scaling_r_tau > 1.0))
            throw std::invalid_argument("delay_scaling_r_tau must be greater than 1.");
        if (!(config.per_cluster_shadowing_std >= 0.0))
            throw std::invalid_argument("per_cluster_shadowing_std must be non-negative.");
        if (!(config.intra_cluster_as_deg >= 0.0))
            throw std::invalid_argument("intra_cluster_as_deg must be non-negative.");
        if (config.min_clusters < 1)
            throw std::invalid_argument("min_clusters must be at least 1.");
    }

    LspDraw draw_lsp(const LspSet &p, Rng &rng)
    {
        const double x_ds = rng.normal();
        const double x_asd = rng.normal();
        const double x_asa = rng.normal();
        const double x_kf = rng.normal();

        LspDraw d;
        d.ds_sec = std::pow(10.0, p.mu_lgDS + p.sigma_lgDS * x_ds);
        d.asd_deg = std::min(std::pow(10.0, p.mu_lgASD + p.sigma_lgASD * x_asd), max_angle_spread_deg);
        d.asa_deg = std::min(std::pow(10.0, p.mu_lgASA + p.sigma_lgASA * x_asa), max_angle_spread_deg);
        d.kf_linear = std::pow(10.0, (p.mu_KF + p.sigma_KF * x_kf) / 10.0);
        return d;
    }

    std::size_t draw_cluster_count(double lambda, std::size_t min_clusters, Rng &rng)
    {
        if (!(lambda > 0.0))
            throw std::invalid_argument("Cluster count mean must be positive.");
        return std::max<std::size_t>(static_cast<std::size_t>(rng.poisson(lambda)), min_clusters);
    }

    std::vector<double> gen_delays(std::size_t n_clusters, double ds_sec, double r_tau, Rng &rng)
    {
        if (n_clusters < 1)
            throw std::invalid_argument("At least one cluster is required.");
        if (!(ds_sec > 0.0))
            throw std::invalid_argument("Delay spread must be positive.");

        std::vector<double> tau(n_clusters);
        for (auto &t : tau)
            t = -r_tau * ds_sec * std::log(rng.uniform_open_low());
        std::sort(tau.begin(), tau.end());
        const double first = tau.front();
        for (auto &t : tau)
            t -= first;
        return tau;
    }

    ClusterPowers gen_powers(std::span<const double> delays, double ds_sec, double r_tau, double shadow_std_db,
                             double kf_linear, bool los, Rng &rng)
    {
        if (delays.empty())
            throw std::invalid_argument("At least one cluster delay is required.");
        if (los && !(kf_linear > 0.0))
            throw std::invalid_argument("K-factor must be positive for a LOS channel.");

        ClusterPowers out;
        out.power.resize(delays.size());
        for (std::size_t n = 0; n < delays.size(); ++n)
        {
            const double z = rng.normal(0.0, shadow_std_db);
            out.power[n] = std::exp(-delays[n] * (r_tau - 1.0) / (r_tau * ds_sec)) * std::pow(10.0, -z / 10.0);
        }

        const double total = std::accumulate(out.power.begin(), out.power.end(), 0.0);
        for (auto &p : out.power)
            p /= total;

        if (los)
        {
            const double diffuse = 1.0 / (kf_linear + 1.0);
            for (auto &p : out.power)
                p *= diffuse;
            out.specular_fraction = kf_linear / (kf_linear + 1.0);
            out.power[0] += out.specular_fraction;
        }
        return out;
    }

    void scale_delays_to_spread(std::span<double> delays, std::span<const double> powers, double ds_sec)
    {
        const double spread = rms_spread({{delays.begin(), delays.end()}, {powers.begin(), powers.end()}});
        if (!(spread > 0.0))
            return;
        const double scale = ds_sec / spread;
        for (auto &t : delays)
            t *= scale;
    }

    std::vector<double> rescale_to_spread(std::span<const double> angles_deg, std::span<const double> powers,
                                          double target_deg)
    {
        const double mean = weighted_mean(angles_deg, powers);
        std::vector<double> centred(angles_deg.size());
        double max_dev = 0.0;
        for (std::size_t i = 0; i < angles_deg.size(); ++i)
        {
            centred[i] = angles_deg[i] - mean;
            max_dev = std::max(max_dev, std::abs(centred[i]));
        }

        std::vector<double> out(angles_deg.size());
        auto apply = [&](double alpha)
        {
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = wrap_degrees(mean + alpha * centred[i]);
            return spread_of(out, powers);
        };

        if (max_dev == 0.0 || !(target_deg > 0.0))
        {
            apply(0.0);
            return out;
        }

        // Bracket the first crossing of the target; beyond one full turn of the widest cluster nothing new is reachable
        double lo = 0.0, hi = target_deg / max_dev;
        double best_alpha = 0.0, best_spread = 0.0;
        while (true)
        {
            const double s = apply(hi);
            if (s >= target_deg)
                break;
            if (s > best_spread)
            {
                best_spread = s;
                best_alpha = hi;
            }
            lo = hi;
            hi *= 1.25;
            if (hi * max_dev > 720.0)
            {
                apply(best_alpha);
                return out;
            }
        }

        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            (apply(mid) < target_deg ? lo : hi) = mid;
        }

        // take whichever bracket end is closer
        const double s_lo = apply(lo);
        const double s_hi = apply(hi);
        apply(std::abs(s_lo - target_deg) < std::abs(s_hi - target_deg) ? lo : hi);
        return out;
    }

    ClusterAngles gen_angles(std::span<const double> powers, double as_deg, double intra_as_deg,
                             std::size_t rays_per_cluster, Rng &rng)
    {
        if (powers.empty())
            throw std::invalid_argument("At least one cluster is required.");
        if (!(as_deg > 0.0))
            throw std::invalid_argument("Angle spread must be positive.");

        const std::size_t n = powers.size();
        ClusterAngles out;
        out.cluster.resize(n);
        for (auto &a : out.cluster)
            a = as_deg * rng.normal();

        double ray_rms = intra_as_deg;
        if (n > 1)
            out.cluster = rescale_to_spread(out.cluster, powers, as_deg);
        else
        {
            out.cluster[0] = wrap_degrees(out.cluster[0]);
            ray_rms = as_deg;
        }

        out.rays.resize(n);
        for (std::size_t c = 0; c < n; ++c)
        {
            out.rays[c].resize(rays_per_cluster);
            for (auto &r : out.rays[c])
                r = wrap_degrees(out.cluster[c] + rng.laplace(ray_rms));
        }
        return out;
    }

    ClusterSet draw_clusters(const LspSet &params, const GenConfig &config, Rng &rng)
    {
        validate(params);
        validate(config);
        if (!params.lambda_clusters)
            throw std::invalid_argument("lambda_clusters is required for channel generation.");

        ClusterSet set;
        set.los = params.los;
        set.lsp = draw_lsp(params, rng);

        const std::size_t n = draw_cluster_count(*params.lambda_clusters, config.min_clusters, rng);
        const double r_tau = config.delay_scaling_r_tau;
        auto delays = gen_delays(n, set.lsp.ds_sec, r_tau, rng);
        auto powers = gen_powers(delays, set.lsp.ds_sec, r_tau, config.per_cluster_shadowing_std, set.lsp.kf_linear,
                                 params.los, rng);
        scale_delays_to_spread(delays, powers.power, set.lsp.ds_sec);
        set.specular_fraction = powers.specular_fraction;

        auto aod = gen_angles(powers.power, set.lsp.asd_deg, config.intra_cluster_as_deg, config.rays_per_cluster, rng);
        auto aoa = gen_angles(powers.power, set.lsp.asa_deg, config.intra_cluster_as_deg, config.rays_per_cluster, rng);

        set.clusters.resize(n);
        for (std::size_t c = 0; c < n; ++c)
        {
            auto &cl = set.clusters[c];
            cl.delay = delays[c];
            cl.power = powers.power[c];
            cl.aod_deg = aod.cluster[c];
            cl.aoa_deg = aoa.cluster[c];
            cl.ray_aods = std::move(aod.rays[c]);
            cl.ray_aoas = std::move(aoa.rays[c]);
            cl.ray_phases.resize(config.rays_per_cluster);
            for (auto &phi : cl.ray_phases)
                phi = 2.0 * std::numbers::pi * rng.uniform_open_low();
        }
        if (set.los)
            set.specular_phase = 2.0 * std::numbers::pi * rng.uniform_open_low();
        return set;
    }

    ClusterSet draw_clusters(const LspSet &params, const GenConfig &config, std::uint64_t seed, std::uint64_t index)
    {
        Rng rng(seed, index);
        return draw_clusters(params, config, rng);
    }

    ChannelSample synthesize_from_clusters(const ClusterSet &set, const GenConfig &config)
    {
        validate(config);
        const auto [n_rx, n_tx, n_sc] = config.dims;
        auto sample = ChannelSample::zeros(config.dims, config.carrier);

        std::vector<cplx> spatial(n_rx * n_tx);
        std::vector<cplx> phasor(n_sc);
        for (std::size_t c = 0; c < set.clusters.size(); ++c)
        {
            const auto &cl = set.clusters[c];
            const std::size_t m = cl.ray_phases.size();
            const double diffuse = cl.power - (c == 0 ? set.specular_fraction : 0.0);

            std::fill(spatial.begin(), spatial.end(), cplx{});
            const double amp = std::sqrt(std::max(diffuse, 0.0) / static_cast<double>(m));
            for (std::size_t r = 0; r < m; ++r)
                add_outer(spatial, n_rx, n_tx, std::polar(amp, cl.ray_phases[r]), cl.ray_aoas[r], cl.ray_aods[r]);
            if (c == 0 && set.los)
                add_outer(spatial, n_rx, n_tx, std::polar(std::sqrt(set.specular_fraction), set.specular_phase),
                          cl.aoa_deg, cl.aod_deg);

            // f_k = k * subcarrier spacing
            for (std::size_t k = 0; k < n_sc; ++k)
                phasor[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) *
                                                config.carrier.subcarrier_spacing * cl.delay);

            for (std::size_t u = 0; u < n_rx; ++u)
                for (std::size_t s = 0; s < n_tx; ++s)
                {
                    const cplx g = spatial[u * n_tx + s];
                    auto row = sample.h_f.row(u, s);
                    for (std::size_t k = 0; k < n_sc; ++k)
                        row[k] += g * phasor[k];
                }
        }
        return sample;
    }

    ChannelSample synthesize_channel(const LspSet &params, const GenConfig &config, std::uint64_t seed,
                                     std::uint64_t index)
    {
        return synthesize_from_clusters(draw_clusters(params, config, seed, index), config);
    }

    std::vector<ChannelSample> generate_dataset(const LspSet &params, const GenConfig &config, std::size_t count,
                                                std::uint64_t seed, unsigned threads, std::uint64_t first_index)
    {
        if (count == 0)
            throw std::invalid_argument("Dataset sample count must be at least 1.");
        validate(params);
        validate(config);

        std::vector<ChannelSample> out(count);
        detail::parallel_for(count, threads, [&](std::size_t i)
                             { out[i] = synthesize_channel(params, config, seed, first_index + i); });
        return out;
    }
}
