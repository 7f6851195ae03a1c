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
#include "sscm/io.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

using namespace sscm;

namespace
{
    SubScenarioCatalog abc()
    {
        SubScenarioCatalog c;
        for (const char *n : {"A", "B", "C"})
            c.entries.push_back({n, read_params(test::fixture(std::string("uma_") + n + ".params")), std::nullopt});
        return c;
    }

    double sq(double x) { return x * x; }
}

TEST_CASE("grid catalogs have m*n*q entries with verbatim grid values")
{
    const auto base = baseline("uma-los");
    const std::vector<double> kf{2.0, 9.0}, as{0.8, 1.3}, nc{6.0, 14.0};
    const auto c = build_catalog(kf, as, nc, base);
    CHECK(c.entries.size() == 8);
    CHECK(c.m == 2);
    CHECK(c.n == 2);
    CHECK(c.q == 2);
    std::set<std::string> ids;
    for (const auto &e : c.entries)
    {
        ids.insert(e.id);
        REQUIRE(e.grid_index);
        CHECK(e.params.mu_KF == kf[e.grid_index->kf]);
        CHECK(e.params.mu_lgASD == as[e.grid_index->as]);
        CHECK(*e.params.lambda_clusters == nc[e.grid_index->cluster]);
        CHECK(e.params.mu_lgDS == base.mu_lgDS);
    }
    CHECK(ids.size() == 8);
    CHECK(ids.contains("uma-kf1-as0-nc1"));

    const auto only_kf = build_catalog(std::vector<double>{0, 5, 10}, std::vector<double>{1.0},
                                       std::vector<double>{10.0}, base);
    CHECK(only_kf.entries.size() == 3);
    CHECK(only_kf.entries[0].params.mu_lgASD == only_kf.entries[2].params.mu_lgASD);
    CHECK(only_kf.entries[0].params.mu_KF != only_kf.entries[2].params.mu_KF);
}

TEST_CASE("catalog validation rejects duplicate ids and bad metrics")
{
    auto c = abc();
    CHECK_NOTHROW(validate(c));
    c.entries.push_back(c.entries.front());
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    MatchMetric m;
    m.scales[2] = 0.0;
    CHECK_THROWS_AS(validate(m), std::invalid_argument);
}

TEST_CASE("query D ranks set B first, matching hand-computed distances")
{
    const auto c = abc();
    const auto d = read_params(test::fixture("uma_D.params"));
    const auto ranked = catalog_match(c, d, 3);
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].entry->id == "B");

    // normalised squared differences with scales (4, 1.5, 3.5, 1.5, 30, 10); no cluster mean on either side
    const double d_a = sq(-1.0 / 4) + sq(0.04 / 1.5) + sq(0.51 / 3.5) + sq(0.06 / 1.5) + sq(1.7 / 30) + sq(1.2 / 10);
    const double d_b = sq(-0.2 / 4) + sq(0.015 / 1.5) + sq(-0.05 / 3.5) + sq(0.01 / 1.5) + sq(-0.3 / 30) + sq(0.2 / 10);
    const double d_c = sq(0.6 / 4) + sq(-0.01 / 1.5) + sq(0.85 / 3.5) + sq(0.04 / 1.5) + sq(-1.3 / 30) + sq(1.2 / 10);
    for (const auto &r : ranked)
    {
        const double expected = r.entry->id == "A" ? d_a : r.entry->id == "B" ? d_b : d_c;
        CHECK(r.distance == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("matching an entry to itself gives distance zero and full rankings ascend")
{
    const auto c = build_catalog(std::vector<double>{0, 5, 10}, std::vector<double>{0.7, 1.2},
                                 std::vector<double>{5, 15}, baseline("uma-los"));
    const auto &target = c.entries[7];
    const auto ranked = catalog_match(c, target.params, c.entries.size());
    CHECK(ranked.size() == c.entries.size());
    CHECK(ranked[0].entry->id == target.id);
    CHECK(ranked[0].distance == 0.0);
    for (std::size_t i = 1; i < ranked.size(); ++i)
        CHECK(ranked[i].distance >= ranked[i - 1].distance);
    CHECK_THROWS_AS(catalog_match(c, target.params, 0), std::invalid_argument);
}

TEST_CASE("the cluster-count dimension counts only when both sides carry it")
{
    LspSet a = baseline("uma-los");
    LspSet b = a;
    a.lambda_clusters = 5.0;
    b.lambda_clusters.reset();
    CHECK(match_distance(a, b, {}) == 0.0);
    b.lambda_clusters = 25.0;
    CHECK(match_distance(a, b, {}) == doctest::Approx(1.0));
}

TEST_CASE("ties are broken by id")
{
    SubScenarioCatalog c;
    const auto p = baseline("umi-los");
    c.entries = {{"zeta", p, std::nullopt}, {"alpha", p, std::nullopt}};
    const auto ranked = catalog_match(c, p, 2);
    CHECK(ranked[0].entry->id == "alpha");
}

TEST_CASE("spread-scaled metric uses per-dimension spread over the catalog")
{
    const auto c = build_catalog(std::vector<double>{0, 10}, std::vector<double>{1.0}, std::vector<double>{10.0},
                                 baseline("uma-los"));
    const auto m = spread_scaled_metric(c);
    CHECK(m.scales[4] == doctest::Approx(std::sqrt(50.0)).epsilon(1e-12));
    CHECK(m.scales[0] == MatchMetric{}.scales[0]);
}
