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
#include "sscm/feedback.hpp"
#include "sscm/gbsm.hpp"

#include <benchmark/benchmark.h>

namespace
{
    sscm::LspSet bench_params()
    {
        sscm::LspSet p;
        p.mu_lgDS = -6.8;
        p.sigma_lgDS = 0.5;
        p.mu_lgASD = 1.0;
        p.sigma_lgASD = 0.3;
        p.mu_lgASA = 1.0;
        p.sigma_lgASA = 0.3;
        p.mu_KF = 8.0;
        p.sigma_KF = 4.0;
        p.lambda_clusters = 10.0;
        p.los = true;
        return p;
    }

    sscm::GenConfig bench_config()
    {
        sscm::GenConfig cfg;
        cfg.dims = {4, 8, 208};
        return cfg;
    }
}

static void BM_Synthesize(benchmark::State &state)
{
    const auto p = bench_params();
    const auto cfg = bench_config();
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sscm::synthesize_channel(p, cfg, 1, i++));
}
BENCHMARK(BM_Synthesize);

static void BM_TimeTransform(benchmark::State &state)
{
    const auto s = sscm::synthesize_channel(bench_params(), bench_config(), 2, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(sscm::to_time_domain(s));
}
BENCHMARK(BM_TimeTransform);

static void BM_AngleTransform(benchmark::State &state)
{
    const auto s = sscm::synthesize_channel(bench_params(), bench_config(), 3, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(sscm::to_angle_domain(s));
}
BENCHMARK(BM_AngleTransform);

static void BM_ExtractStats(benchmark::State &state)
{
    const auto s = sscm::synthesize_channel(bench_params(), bench_config(), 4, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(sscm::extract_stats(s));
}
BENCHMARK(BM_ExtractStats);

static void BM_CodecRoundTrip(benchmark::State &state)
{
    const auto train_samples = sscm::generate_dataset(bench_params(), bench_config(), 64, 5);
    std::vector<sscm::CsiTarget> train;
    for (const auto &s : train_samples)
        train.push_back(sscm::compute_csi_targets(s));
    const auto model = sscm::train_linear_codec(train, 7, 4);
    const Eigen::VectorXcd w = train.front().rows.front();
    for (auto _ : state)
        benchmark::DoNotOptimize(sscm::decode(model, sscm::encode(model, w)));
}
BENCHMARK(BM_CodecRoundTrip);

BENCHMARK_MAIN();
