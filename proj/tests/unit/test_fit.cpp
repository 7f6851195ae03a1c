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


#include "test_support.hpp"

#include "sscm/fit.hpp"
#include "sscm/gbsm.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace sscm;

namespace
{
    // n values with mean mu and sample standard deviation sigma exactly (n even).
    std::vector<double> two_point(double mu, double sigma, std::size_t n)
    {
        const double c = sigma * std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n));
        std::vector<double> v;
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(i % 2 == 0 ? mu + c : mu - c);
        return v;
    }
}

TEST_CASE("lognormal fit of two points")
{
    const std::vector<double> v{1e-7, 1e-6};
    const auto f = fit_lognormal(v);
    CHECK(f.mu == doctest::Approx(-6.5));
    CHECK(f.sigma == doctest::Approx(std::sqrt(0.5)));
    CHECK(fit_lognormal(std::vector<double>{3.0, 3.0, 3.0}).sigma == 0.0);
    CHECK_THROWS_AS(fit_lognormal(std::vector<double>{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_lognormal(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("lognormal fit recovers Monte Carlo parameters")
{
    Rng rng(1, 0);
    std::vector<double> v;
    for (int i = 0; i < 10000; ++i)
        v.push_back(std::pow(10.0, rng.normal(-6.8, 0.675)));
    const auto f = fit_lognormal(v);
    CHECK(std::abs(f.mu + 6.8) < 0.02);
    CHECK(std::abs(f.sigma - 0.675) < 0.02);
}

TEST_CASE("dB fit excludes capped sentinels")
{
    const auto f = fit_normal_db(std::vector<double>{6.0, 10.0});
    CHECK(f.mu == doctest::Approx(8.0));
    CHECK(f.sigma == doctest::Approx(2.828).epsilon(1e-3));
    CHECK(fit_normal_db(std::vector<double>{4.0, 4.0}).sigma == 0.0);

    const auto g = fit_normal_db(std::vector<double>{6.0, kf_cap_db, 10.0});
    CHECK(g.excluded == 1);
    CHECK(g.mu == doctest::Approx(8.0));
}

TEST_CASE("Poisson fit is the sample mean")
{
    CHECK(fit_poisson(std::vector<std::size_t>{3, 5, 4, 4}) == 4.0);
    CHECK(fit_poisson(std::vector<std::size_t>{0, 0}) == 0.0);
    CHECK_THROWS_AS(fit_poisson(std::vector<std::size_t>{}), std::invalid_argument);

    Rng rng(2, 0);
    std::vector<std::size_t> counts;
    for (int i = 0; i < 100000; ++i)
        counts.push_back(static_cast<std::size_t>(rng.poisson(10.0)));
    CHECK(std::abs(fit_poisson(counts) - 10.0) < 0.05);
}

TEST_CASE("a batch matching the baseline reproduces it")
{
    LspSet base = baseline("uma-los");
    base.lambda_clusters = 12.0;
    constexpr std::size_t n = 40;
    const auto ds = two_point(base.mu_lgDS, base.sigma_lgDS, n);
    const auto asd = two_point(base.mu_lgASD, base.sigma_lgASD, n);
    const auto asa = two_point(base.mu_lgASA, base.sigma_lgASA, n);
    const auto kf = two_point(base.mu_KF, base.sigma_KF, n);

    std::vector<ChannelStats> stats(n);
    for (std::size_t i = 0; i < n; ++i)
        stats[i] = {std::pow(10.0, ds[i]), std::pow(10.0, asd[i]), std::pow(10.0, asa[i]), kf[i], false,
                    i % 2 == 0 ? 11u : 13u};

    const auto fit = build_sscm(stats, base);
    CHECK(fit.warnings.empty());
    const auto &p = fit.params;
    CHECK(p.mu_lgDS == doctest::Approx(base.mu_lgDS).epsilon(1e-12));
    CHECK(p.sigma_lgDS == doctest::Approx(base.sigma_lgDS).epsilon(1e-9));
    CHECK(p.mu_lgASD == doctest::Approx(base.mu_lgASD).epsilon(1e-12));
    CHECK(p.sigma_lgASD == doctest::Approx(base.sigma_lgASD).epsilon(1e-9));
    CHECK(p.mu_lgASA == doctest::Approx(base.mu_lgASA).epsilon(1e-12));
    CHECK(p.sigma_lgASA == doctest::Approx(base.sigma_lgASA).epsilon(1e-9));
    CHECK(p.mu_KF == doctest::Approx(base.mu_KF).epsilon(1e-12));
    CHECK(p.sigma_KF == doctest::Approx(base.sigma_KF).epsilon(1e-9));
    CHECK(*p.lambda_clusters == doctest::Approx(12.0));
    CHECK(p.los == base.los);
}

TEST_CASE("build_sscm leaves the LOS flag and replaces only the fitted fields")
{
    std::vector<ChannelStats> stats;
    for (int i = 0; i < 40; ++i)
        stats.push_back({1e-7 * (1 + i % 3), 10.0 + i % 4, 20.0 + i % 5, 5.0 + i % 2, false, 3});
    for (const auto &name : baseline_names())
    {
        const auto base = baseline(name);
        const auto fit = build_sscm(stats, base);
        CHECK(fit.params.los == base.los);
        CHECK(fit.params.mu_lgDS != base.mu_lgDS);
        CHECK(*fit.params.lambda_clusters == 3.0);
    }
}

TEST_CASE("build_sscm warns about thin batches, excluded records and empty cluster counts")
{
    std::vector<ChannelStats> stats{{1e-7, 10, 20, 5, false, 0}, {2e-7, 12, 22, kf_cap_db, true, 0},
                                    {0.0, 14, 24, 7, false, 0}, {3e-7, 11, 21, 6, false, 0}};
    const auto fit = build_sscm(stats, baseline("uma-nlos"));
    CHECK(fit.warnings.size() == 4);
    CHECK(*fit.params.lambda_clusters == 1.0);
    CHECK(fit.params.mu_KF == doctest::Approx(6.0));
    CHECK_THROWS_AS(build_sscm(std::vector<ChannelStats>{}, baseline("uma-nlos")), std::invalid_argument);
}

TEST_CASE("built-in baselines are valid and named")
{
    const auto names = baseline_names();
    CHECK(names.size() == 6);
    for (const auto &n : names)
        CHECK_NOTHROW(validate(baseline(n)));
    CHECK(baseline("uma-los").los);
    CHECK_FALSE(baseline("inh-nlos").los);
    CHECK_THROWS_AS(baseline("rural"), std::invalid_argument);
}

TEST_CASE("an 800-sample set-B batch fits close to the generating delay spread")
{
    GenConfig cfg;
    const auto samples = generate_dataset(test::set_b(), cfg, 800, 3);
    std::vector<ChannelStats> stats;
    for (const auto &s : samples)
        stats.push_back(extract_stats(s));
    const auto fit = build_sscm(stats, baseline("uma-los"));
    CHECK(std::abs(fit.params.mu_lgDS + 6.8) <= 0.15);
    CHECK(std::abs(fit.params.sigma_lgDS - 0.675) <= 0.3 * 0.675);
}
