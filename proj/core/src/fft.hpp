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


#ifndef SSCM_FFT_HPP
#define SSCM_FFT_HPP

#include "sscm/channel.hpp"

#include <span>

namespace sscm::detail
{
    enum class DftDirection
    {
        forward, // X[k] = sum_l x[l] exp(-j 2 pi k l / n) / sqrt(n)
        inverse  // x[l] = sum_k X[k] exp(+j 2 pi k l / n) / sqrt(n)
    };

    // Unitary in-place DFT of a contiguous run. Thread-safe.
    void unitary_dft(std::span<cplx> data, DftDirection dir);
}

#endif
