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


#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace sscm::detail
{
    namespace
    {
        // FFTW planning is not thread-safe, execution with the new-array interface is.
        class PlanCache
        {
        public:
            ~PlanCache()
            {
                for (auto &[key, plan] : plans_)
                    fftw_destroy_plan(plan);
            }

            fftw_plan get(std::size_t n, int sign)
            {
                std::lock_guard lock(mutex_);
                auto key = std::make_pair(n, sign);
                if (auto it = plans_.find(key); it != plans_.end())
                    return it->second;

                std::vector<fftw_complex> scratch(n);
                fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), scratch.data(), scratch.data(), sign,
                                                  FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
                return plan;
            }

        private:
            std::mutex mutex_;
            std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
        };

        PlanCache &plan_cache()
        {
            static PlanCache cache;
            return cache;
        }
    }

    void unitary_dft(std::span<cplx> data, DftDirection dir)
    {
        const std::size_t n = data.size();
        if (n == 0)
            return;

        const int sign = dir == DftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD;
        fftw_plan plan = plan_cache().get(n, sign);

        // std::complex<double> is layout-compatible with fftw_complex
        auto *buf = reinterpret_cast<fftw_complex *>(data.data());
        fftw_execute_dft(plan, buf, buf);

        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (auto &v : data)
            v *= scale;
    }
}
