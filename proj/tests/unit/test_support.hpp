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


// Shared helpers for the unit tests.

#ifndef SSCM_TEST_SUPPORT_HPP
#define SSCM_TEST_SUPPORT_HPP

#include "sscm/channel.hpp"
#include "sscm/lsp.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <random>
#include <string>

namespace sscm::test
{
    inline std::filesystem::path fixture(const std::string &name)
    {
        return std::filesystem::path(SSCM_FIXTURE_DIR) / name;
    }

    inline Tensor3 random_tensor(std::size_t a, std::size_t b, std::size_t c, std::mt19937_64 &gen)
    {
        std::normal_distribution<double> nd;
        Tensor3 t(a, b, c);
        for (auto &v : t.data())
            v = cplx(nd(gen), nd(gen));
        return t;
    }

    inline ChannelSample random_sample(const ChannelDims &dims, std::mt19937_64 &gen)
    {
        ChannelSample s;
        s.dims = dims;
        s.h_f = random_tensor(dims.n_rx, dims.n_tx, dims.n_sc, gen);
        return s;
    }

    inline Eigen::VectorXcd random_vector(Eigen::Index n, std::mt19937_64 &gen)
    {
        std::normal_distribution<double> nd;
        Eigen::VectorXcd v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v[i] = cplx(nd(gen), nd(gen));
        return v;
    }

    inline LspSet set_b()
    {
        LspSet p;
        p.mu_lgDS = -6.8;
        p.sigma_lgDS = 0.675;
        p.mu_lgASD = p.mu_lgASA = 0.7;
        p.sigma_lgASD = p.sigma_lgASA = 0.25;
        p.mu_KF = 8.0;
        p.sigma_KF = 3.0;
        p.lambda_clusters = 10.0;
        p.los = true;
        return p;
    }
}

#endif
