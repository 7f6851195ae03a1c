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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace sscm
{
    namespace
    {
        std::array<std::optional<double>, match_dims> vectorise(const LspSet &p)
        {
            return {p.mu_lgDS, p.sigma_lgDS, p.mu_lgASD, p.sigma_lgASD, p.mu_KF, p.sigma_KF, p.lambda_clusters};
        }
    }

    void validate(const MatchMetric &metric)
    {
        for (std::size_t i = 0; i < match_dims; ++i)
        {
            if (!(metric.weights[i] > 0.0) || !std::isfinite(metric.weights[i]))
                throw std::invalid_argument(std::string("Match weight for ") + match_dim_names[i] + " must be positive.");
            if (!(metric.scales[i] > 0.0) || !std::isfinite(metric.scales[i]))
                throw std::invalid_argument(std::string("Match scale for ") + match_dim_names[i] + " must be positive.");
        }
    }

    void validate(const SubScenarioCatalog &catalog)
    {
        validate(catalog.metric);
        std::set<std::string> ids;
        for (const auto &e : catalog.entries)
        {
            if (!ids.insert(e.id).second)
                throw std::invalid_argument("Duplicate sub-scenario id '" + e.id + "'.");
            validate(e.params);
        }
        if (catalog.m * catalog.n * catalog.q != 0 && catalog.entries.size() != catalog.m * catalog.n * catalog.q)
            throw std::invalid_argument("Grid-built catalog must have m * n * q entries.");
    }

    SubScenarioCatalog build_catalog(std::span<const double> kf_grid, std::span<const double> as_grid,
                                     std::span<const double> cluster_grid, const LspSet &base, const std::string &prefix)
    {
        if (kf_grid.empty() || as_grid.empty() || cluster_grid.empty())
            throw std::invalid_argument("Catalog grids must be non-empty.");

        SubScenarioCatalog catalog;
        catalog.m = kf_grid.size();
        catalog.n = as_grid.size();
        catalog.q = cluster_grid.size();
        catalog.entries.reserve(catalog.m * catalog.n * catalog.q);
        for (std::size_t i = 0; i < catalog.m; ++i)
            for (std::size_t j = 0; j < catalog.n; ++j)
                for (std::size_t k = 0; k < catalog.q; ++k)
                {
                    SubScenario s;
                    s.id = prefix + "-kf" + std::to_string(i) + "-as" + std::to_string(j) + "-nc" + std::to_string(k);
                    s.params = base;
                    s.params.mu_KF = kf_grid[i];
                    s.params.mu_lgASD = as_grid[j];
                    s.params.lambda_clusters = cluster_grid[k];
                    s.grid_index = GridIndex{i, j, k};
                    validate(s.params);
                    catalog.entries.push_back(std::move(s));
                }
        return catalog;
    }

    MatchMetric spread_scaled_metric(const SubScenarioCatalog &catalog)
    {
        MatchMetric metric = catalog.metric;
        for (std::size_t d = 0; d < match_dims; ++d)
        {
            std::vector<double> v;
            for (const auto &e : catalog.entries)
                if (auto x = vectorise(e.params)[d])
                    v.push_back(*x);
            if (v.size() < 2)
                continue;
            double mean = 0.0;
            for (double x : v)
                mean += x;
            mean /= static_cast<double>(v.size());
            double ss = 0.0;
            for (double x : v)
                ss += (x - mean) * (x - mean);
            const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
            if (sd > 0.0)
                metric.scales[d] = sd;
        }
        return metric;
    }

    double match_distance(const LspSet &entry, const LspSet &query, const MatchMetric &metric)
    {
        const auto a = vectorise(entry);
        const auto b = vectorise(query);
        double d = 0.0;
        for (std::size_t i = 0; i < match_dims; ++i)
        {
            if (!a[i] || !b[i])
                continue;
            const double z = (*a[i] - *b[i]) / metric.scales[i];
            d += metric.weights[i] * z * z;
        }
        return d;
    }

    std::vector<MatchResult> catalog_match(const SubScenarioCatalog &catalog, const LspSet &query, std::size_t top_k)
    {
        if (catalog.entries.empty())
            throw std::invalid_argument("Cannot match against an empty catalog.");
        if (top_k < 1)
            throw std::invalid_argument("top_k must be at least 1.");
        validate(catalog.metric);

        std::vector<MatchResult> ranked;
        ranked.reserve(catalog.entries.size());
        for (const auto &e : catalog.entries)
            ranked.push_back({&e, match_distance(e.params, query, catalog.metric)});
        std::sort(ranked.begin(), ranked.end(), [](const MatchResult &x, const MatchResult &y)
                  { return x.distance != y.distance ? x.distance < y.distance : x.entry->id < y.entry->id; });
        ranked.resize(std::min(top_k, ranked.size()));
        return ranked;
    }
}
