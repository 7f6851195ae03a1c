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


#ifndef SSCM_FIT_HPP
#define SSCM_FIT_HPP

#include "sscm/extract.hpp"
#include "sscm/lsp.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sscm
{
    struct NormalFit
    {
        double mu;
        double sigma; // sample standard deviation (n - 1)
    };

    // log10-domain mean and sample standard deviation. Throws on non-positive values or fewer than two.
    NormalFit fit_lognormal(std::span<const double> values);

    struct DbFit
    {
        double mu;
        double sigma;
        std::size_t excluded; // capped sentinels (>= kf_cap_db) left out of the fit
    };

    DbFit fit_normal_db(std::span<const double> values_db);

    // Poisson maximum-likelihood mean. Throws on empty input.
    double fit_poisson(std::span<const std::size_t> counts);

    struct SscmFitOptions
    {
        std::size_t min_records = 30;
    };

    struct SscmFit
    {
        LspSet params;
        std::vector<std::string> warnings;
    };

    // Replaces the statistic distributions of baseline with those fitted from stats; the LOS flag is kept.
    // Non-positive spreads (unresolvable at the sample's resolution) and capped K-factors are excluded with a warning.
    SscmFit build_sscm(std::span<const ChannelStats> stats, const LspSet &baseline, const SscmFitOptions &opts = {});

    // Representative 3GPP baseline constants: uma-los, uma-nlos, umi-los, umi-nlos, inh-los, inh-nlos.
    std::vector<std::string> baseline_names();
    LspSet baseline(const std::string &name);

    // Catalog matching dimensions, in this order.
    inline constexpr std::size_t match_dims = 7;
    inline constexpr std::array<const char *, match_dims> match_dim_names = {
        "mu_lgDS", "sigma_lgDS", "mu_lgASD", "sigma_lgASD", "mu_KF", "sigma_KF", "lambda_clusters"};

    struct MatchMetric
    {
        std::array<double, match_dims> weights{1, 1, 1, 1, 1, 1, 1};
        std::array<double, match_dims> scales{4.0, 1.5, 3.5, 1.5, 30.0, 10.0, 20.0};
    };

    void validate(const MatchMetric &metric);

    struct GridIndex
    {
        std::size_t kf;
        std::size_t as;
        std::size_t cluster;

        bool operator==(const GridIndex &) const = default;
    };

    struct SubScenario
    {
        std::string id;
        LspSet params;
        std::optional<GridIndex> grid_index;
    };

    struct SubScenarioCatalog
    {
        std::vector<SubScenario> entries;
        std::size_t m = 0, n = 0, q = 0; // zero when not grid-built
        MatchMetric metric;
    };

    // Throws on duplicate ids or invalid metric.
    void validate(const SubScenarioCatalog &catalog);

    // Cartesian product over mu_KF, mu_lgASD and lambda_clusters grids with ids "<prefix>-kf{i}-as{j}-nc{k}".
    SubScenarioCatalog build_catalog(std::span<const double> kf_grid, std::span<const double> as_grid,
                                     std::span<const double> cluster_grid, const LspSet &baseline,
                                     const std::string &prefix = "uma");

    // Per-dimension standard deviation over the catalog entries; dimensions with zero spread keep the default.
    MatchMetric spread_scaled_metric(const SubScenarioCatalog &catalog);

    // Weighted normalised squared distance. The lambda dimension is skipped when either side lacks it.
    double match_distance(const LspSet &entry, const LspSet &query, const MatchMetric &metric);

    struct MatchResult
    {
        const SubScenario *entry;
        double distance;
    };

    // Ascending distance, ties broken by id.
    std::vector<MatchResult> catalog_match(const SubScenarioCatalog &catalog, const LspSet &query, std::size_t top_k);
}

#endif
