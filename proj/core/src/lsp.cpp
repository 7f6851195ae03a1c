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


#include "sscm/lsp.hpp"

#include <cmath>
#include <stdexcept>

namespace sscm
{
    namespace
    {
        std::string range_error(const char *key, double value, double lo, double hi)
        {
            return std::string(key) + " = " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]";
        }
    }

    std::string check(const LspSet &p)
    {
        const struct
        {
            const char *key;
            double value;
        } finite[] = {{"mu_lgDS", p.mu_lgDS}, {"sigma_lgDS", p.sigma_lgDS}, {"mu_lgASD", p.mu_lgASD},
                      {"sigma_lgASD", p.sigma_lgASD}, {"mu_lgASA", p.mu_lgASA}, {"sigma_lgASA", p.sigma_lgASA},
                      {"mu_KF", p.mu_KF}, {"sigma_KF", p.sigma_KF}};
        for (const auto &f : finite)
            if (!std::isfinite(f.value))
                return std::string(f.key) + " is not finite";

        if (p.sigma_lgDS < 0.0)
            return "sigma_lgDS is negative";
        if (p.sigma_lgASD < 0.0)
            return "sigma_lgASD is negative";
        if (p.sigma_lgASA < 0.0)
            return "sigma_lgASA is negative";
        if (p.mu_lgDS < -9.0 || p.mu_lgDS > -5.0)
            return range_error("mu_lgDS", p.mu_lgDS, -9.0, -5.0);
        if (p.mu_lgASD < -1.0 || p.mu_lgASD > 2.5)
            return range_error("mu_lgASD", p.mu_lgASD, -1.0, 2.5);
        if (p.mu_lgASA < -1.0 || p.mu_lgASA > 2.5)
            return range_error("mu_lgASA", p.mu_lgASA, -1.0, 2.5);
        if (p.mu_KF < -10.0 || p.mu_KF > 20.0)
            return range_error("mu_KF", p.mu_KF, -10.0, 20.0);
        if (p.sigma_KF < 0.0 || p.sigma_KF > 10.0)
            return range_error("sigma_KF", p.sigma_KF, 0.0, 10.0);
        if (p.lambda_clusters && !(*p.lambda_clusters > 0.0 && std::isfinite(*p.lambda_clusters)))
            return "lambda_clusters must be positive";
        return {};
    }

    void validate(const LspSet &params)
    {
        if (auto err = check(params); !err.empty())
            throw std::invalid_argument("Invalid LSP set: " + err + ".");
    }
}
