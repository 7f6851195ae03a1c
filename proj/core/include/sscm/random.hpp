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


#ifndef SSCM_RANDOM_HPP
#define SSCM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace sscm
{
    // Independent random streams for parallel, order-independent generation.
    //
    // The stream for (seed, index, domain) is a std::mt19937_64 seeded through std::seed_seq with the words
    // {domain, seed_lo, seed_hi, index_lo, index_hi}. Both the engine and seed_seq are fully specified by the
    // standard, and all distributions below are implemented here rather than taken from <random>, whose
    // distributions are implementation-defined. A given (seed, index, domain) therefore yields the same
    // numbers on every platform and regardless of which thread draws them.
    enum class StreamDomain : std::uint32_t
    {
        channel = 0x43484e4c, // "CHNL"
        noise = 0x4e4f4953    // "NOIS"
    };

    class Rng
    {
    public:
        Rng(std::uint64_t seed, std::uint64_t index, StreamDomain domain = StreamDomain::channel);

        std::uint64_t next_u64() { return engine_(); }

        double uniform();          // [0, 1)
        double uniform_open_low(); // (0, 1]
        double normal();           // N(0, 1)
        double normal(double mean, double stddev) { return mean + stddev * normal(); }
        double laplace(double rms);              // zero-mean Laplacian with the given standard deviation
        std::uint64_t poisson(double lambda);

    private:
        std::mt19937_64 engine_;
        double spare_normal_ = 0.0;
        bool has_spare_ = false;
    };
}

#endif
