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


#include "sscm/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sscm
{
    Rng::Rng(std::uint64_t seed, std::uint64_t index, StreamDomain domain)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(domain),
                          static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        engine_.seed(seq);
    }

    double Rng::uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double Rng::uniform_open_low()
    {
        return 1.0 - uniform();
    }

    double Rng::normal()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_normal_;
        }
        // Box-Muller
        const double r = std::sqrt(-2.0 * std::log(uniform_open_low()));
        const double phi = 2.0 * std::numbers::pi * uniform();
        spare_normal_ = r * std::sin(phi);
        has_spare_ = true;
        return r * std::cos(phi);
    }

    double Rng::laplace(double rms)
    {
        // inverse CDF, scale b = rms / sqrt(2)
        const double b = rms / std::numbers::sqrt2;
        const double u = uniform() - 0.5;
        const double mag = -b * std::log(1.0 - 2.0 * std::abs(u));
        return u < 0.0 ? -mag : mag;
    }

    std::uint64_t Rng::poisson(double lambda)
    {
        if (!(lambda >= 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("Poisson mean must be finite and non-negative.");

        // Knuth's product method on chunks of at most 30; Poisson variables are additive
        std::uint64_t total = 0;
        while (lambda > 0.0)
        {
            const double chunk = std::min(lambda, 30.0);
            lambda -= chunk;
            const double limit = std::exp(-chunk);
            double prod = uniform_open_low();
            while (prod > limit)
            {
                ++total;
                prod *= uniform_open_low();
            }
        }
        return total;
    }
}
