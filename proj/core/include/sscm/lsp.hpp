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


#ifndef SSCM_LSP_HPP
#define SSCM_LSP_HPP

#include <optional>
#include <string>

namespace sscm
{
    // Distribution parameters of the large-scale channel statistics.
    //
    // Delay spread is log10(seconds), angle spreads are log10(degrees), K-factor is in dB. The mean cluster count is
    // optional because published parameter tables do not always carry it; generation requires it.
    struct LspSet
    {
        double mu_lgDS = -7.0;
        double sigma_lgDS = 0.0;
        double mu_lgASD = 1.0;
        double sigma_lgASD = 0.0;
        double mu_lgASA = 1.0;
        double sigma_lgASA = 0.0;
        double mu_KF = 0.0;
        double sigma_KF = 0.0;
        std::optional<double> lambda_clusters;
        bool los = false;

        bool operator==(const LspSet &) const = default;
    };

    // Throws std::invalid_argument naming the offending field.
    void validate(const LspSet &params);

    // Returns an empty string if valid, otherwise a description of the first violated constraint.
    std::string check(const LspSet &params);
}

#endif
