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

#include <stdexcept>
#include <string_view>

namespace sscm
{
    namespace
    {
        // Representative values of the 3GPP large-scale parameter tables evaluated at 2.6 GHz (UMa and UMi
        // clamp the frequency at 6 GHz and 2 GHz respectively). NLOS tables carry no K-factor; 0 dB is a neutral
        // placeholder that build_sscm overwrites.
        struct Entry
        {
            std::string_view name;
            std::string_view text;
        };

        constexpr Entry table[] = {
            {"uma-los", R"(mu_lgDS = -7.03
sigma_lgDS = 0.66
mu_lgASD = 1.147
sigma_lgASD = 0.28
mu_lgASA = 1.81
sigma_lgASA = 0.20
mu_KF = 9
sigma_KF = 3.5
lambda_clusters = 12
los = true
)"},
            {"uma-nlos", R"(mu_lgDS = -6.44
sigma_lgDS = 0.39
mu_lgASD = 1.41
sigma_lgASD = 0.28
mu_lgASA = 1.87
sigma_lgASA = 0.11
mu_KF = 0
sigma_KF = 0
lambda_clusters = 20
los = false
)"},
            {"umi-los", R"(mu_lgDS = -7.25
sigma_lgDS = 0.38
mu_lgASD = 1.186
sigma_lgASD = 0.41
mu_lgASA = 1.692
sigma_lgASA = 0.287
mu_KF = 9
sigma_KF = 5
lambda_clusters = 12
los = true
)"},
            {"umi-nlos", R"(mu_lgDS = -6.94
sigma_lgDS = 0.356
mu_lgASD = 1.42
sigma_lgASD = 0.383
mu_lgASA = 1.772
sigma_lgASA = 0.324
mu_KF = 0
sigma_KF = 0
lambda_clusters = 19
los = false
)"},
            {"inh-los", R"(mu_lgDS = -7.698
sigma_lgDS = 0.18
mu_lgASD = 1.60
sigma_lgASD = 0.18
mu_lgASA = 1.675
sigma_lgASA = 0.186
mu_KF = 7
sigma_KF = 4
lambda_clusters = 15
los = true
)"},
            {"inh-nlos", R"(mu_lgDS = -7.329
sigma_lgDS = 0.111
mu_lgASD = 1.62
sigma_lgASD = 0.25
mu_lgASA = 1.802
sigma_lgASA = 0.126
mu_KF = 0
sigma_KF = 0
lambda_clusters = 19
los = false
)"},
        };
    }

    std::vector<std::string> baseline_names()
    {
        std::vector<std::string> names;
        for (const auto &e : table)
            names.emplace_back(e.name);
        return names;
    }

    LspSet baseline(const std::string &name)
    {
        for (const auto &e : table)
            if (e.name == name)
                return parse_params(e.text);
        throw std::invalid_argument("Unknown baseline '" + name + "'.");
    }
}
