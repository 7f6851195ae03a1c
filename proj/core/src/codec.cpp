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


#include "sscm/feedback.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sscm
{
    namespace
    {
        constexpr unsigned max_component_bits = 24;

        void push_bits(BitString &out, std::uint64_t value, unsigned bits)
        {
            for (unsigned b = bits; b-- > 0;)
                out.push_back(((value >> b) & 1u) != 0);
        }

        std::uint64_t pop_bits(const BitString &in, std::size_t &pos, unsigned bits)
        {
            std::uint64_t v = 0;
            for (unsigned b = 0; b < bits; ++b)
                v = (v << 1) | (in[pos++] ? 1u : 0u);
            return v;
        }

        void check_unit_norm(const Eigen::VectorXcd &w, Eigen::Index n)
        {
            if (w.size() != n)
                throw std::invalid_argument("CSI vector has length " + std::to_string(w.size()) + ", expected " +
                                            std::to_string(n) + ".");
            if (std::abs(w.norm() - 1.0) > 1e-6)
                throw std::invalid_argument("CSI vector must be unit-norm.");
        }

        Eigen::MatrixXcd dft_beams(std::size_t n)
        {
            const auto f = angle_dft_matrix(n);
            Eigen::MatrixXcd m(n, n);
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t i = 0; i < n; ++i)
                    m(u, i) = f[u * n + i];
            return m;
        }
    }

    std::int64_t quantize_component(double x, unsigned bits)
    {
        if (bits < 1 || bits > max_component_bits)
            throw std::invalid_argument("Quantiser width must be between 1 and 24 bits.");
        const double levels = std::ldexp(1.0, static_cast<int>(bits) - 1);
        const double q = std::clamp(std::round(x * levels), -levels, levels - 1.0);
        return static_cast<std::int64_t>(q);
    }

    double dequantize_component(std::int64_t q, unsigned bits)
    {
        return std::ldexp(static_cast<double>(q), 1 - static_cast<int>(bits));
    }

    CodecModel train_linear_codec(std::span<const CsiTarget> train, std::size_t n_coeff, unsigned bits_per_component)
    {
        if (bits_per_component < 1 || bits_per_component > max_component_bits)
            throw std::invalid_argument("bits_per_component must be between 1 and 24.");

        Eigen::Index n_tx = -1;
        std::size_t rows = 0;
        for (const auto &t : train)
            for (const auto &w : t.rows)
            {
                if (n_tx < 0)
                    n_tx = w.size();
                else if (w.size() != n_tx)
                    throw std::invalid_argument("Training vectors have inconsistent lengths.");
                ++rows;
            }
        if (n_tx <= 0 || rows < static_cast<std::size_t>(n_tx))
            throw std::invalid_argument("Linear codec training needs at least n_tx training vectors.");
        if (n_coeff < 1 || n_coeff > static_cast<std::size_t>(n_tx))
            throw std::invalid_argument("n_coeff must lie in [1, n_tx].");

        Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(n_tx, n_tx);
        for (const auto &t : train)
            for (const auto &w : t.rows)
                cov.noalias() += w * w.adjoint();
        cov /= static_cast<double>(rows);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(cov);
        if (eig.info() != Eigen::Success)
            throw std::runtime_error("Eigen-decomposition of the training covariance failed.");

        // eigenvalues ascend; stable sort keeps the solver order for exact ties
        std::vector<Eigen::Index> order(static_cast<std::size_t>(n_tx));
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b)
                         { return eig.eigenvalues()[a] > eig.eigenvalues()[b]; });

        CodecModel model;
        model.n_coeff = n_coeff;
        model.bits_per_component = bits_per_component;
        model.basis.resize(n_tx, static_cast<Eigen::Index>(n_coeff));
        for (std::size_t c = 0; c < n_coeff; ++c)
        {
            Eigen::VectorXcd v = eig.eigenvectors().col(order[c]);
            canonicalize_phase(v);
            model.basis.col(static_cast<Eigen::Index>(c)) = v;
        }
        return model;
    }

    BitString encode(const CodecModel &model, const Eigen::VectorXcd &w)
    {
        check_unit_norm(w, model.basis.rows());
        const Eigen::VectorXcd c = model.basis.adjoint() * w;
        const unsigned b = model.bits_per_component;
        const std::uint64_t mask = (std::uint64_t{1} << b) - 1;

        BitString bits;
        bits.reserve(model.feedback_bits());
        for (Eigen::Index i = 0; i < c.size(); ++i)
        {
            push_bits(bits, static_cast<std::uint64_t>(quantize_component(c[i].real(), b)) & mask, b);
            push_bits(bits, static_cast<std::uint64_t>(quantize_component(c[i].imag(), b)) & mask, b);
        }
        return bits;
    }

    Eigen::VectorXcd decode(const CodecModel &model, const BitString &bits)
    {
        if (bits.size() != model.feedback_bits())
            throw std::invalid_argument("Bitstring has " + std::to_string(bits.size()) + " bits, expected " +
                                        std::to_string(model.feedback_bits()) + ".");
        const unsigned b = model.bits_per_component;
        auto to_signed = [b](std::uint64_t raw)
        {
            // sign-extend b-bit two's complement
            const std::uint64_t sign = std::uint64_t{1} << (b - 1);
            return static_cast<std::int64_t>(raw ^ sign) - static_cast<std::int64_t>(sign);
        };

        Eigen::VectorXcd c(static_cast<Eigen::Index>(model.n_coeff));
        std::size_t pos = 0;
        for (Eigen::Index i = 0; i < c.size(); ++i)
        {
            const double re = dequantize_component(to_signed(pop_bits(bits, pos, b)), b);
            const double im = dequantize_component(to_signed(pop_bits(bits, pos, b)), b);
            c[i] = cplx(re, im);
        }
        Eigen::VectorXcd w = model.basis * c;
        const double norm = w.norm();
        if (norm > 0.0)
            w /= norm;
        return w;
    }

    Eigen::VectorXcd project(const CodecModel &model, const Eigen::VectorXcd &w)
    {
        check_unit_norm(w, model.basis.rows());
        Eigen::VectorXcd out = model.basis * (model.basis.adjoint() * w);
        const double norm = out.norm();
        if (norm > 0.0)
            out /= norm;
        return out;
    }

    std::size_t DftCodebook::index_bits() const
    {
        return n_tx <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n_tx - 1));
    }

    void validate(const DftCodebook &cb)
    {
        if (cb.n_tx < 1)
            throw std::invalid_argument("DFT codebook needs at least one antenna.");
        if (cb.n_beams < 1 || cb.n_beams > cb.n_tx)
            throw std::invalid_argument("n_beams must lie in [1, n_tx].");
        if (cb.amp_bits > 16 || cb.phase_bits > 16)
            throw std::invalid_argument("Amplitude and phase widths are limited to 16 bits.");
    }

    BitString dft_codebook_encode(const DftCodebook &cb, const Eigen::VectorXcd &w)
    {
        validate(cb);
        check_unit_norm(w, static_cast<Eigen::Index>(cb.n_tx));

        const Eigen::VectorXcd c = dft_beams(cb.n_tx).adjoint() * w;
        std::vector<std::size_t> order(cb.n_tx);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                         { return std::abs(c[static_cast<Eigen::Index>(a)]) > std::abs(c[static_cast<Eigen::Index>(b)]); });

        const double strongest = std::abs(c[static_cast<Eigen::Index>(order[0])]);
        const double amp_levels = std::ldexp(1.0, static_cast<int>(cb.amp_bits)) - 1.0;
        const double phase_levels = std::ldexp(1.0, static_cast<int>(cb.phase_bits));

        BitString bits;
        bits.reserve(cb.feedback_bits());
        for (std::size_t k = 0; k < cb.n_beams; ++k)
        {
            const cplx coef = c[static_cast<Eigen::Index>(order[k])];
            push_bits(bits, order[k], static_cast<unsigned>(cb.index_bits()));

            const double rel = strongest > 0.0 ? std::abs(coef) / strongest : 0.0;
            push_bits(bits, static_cast<std::uint64_t>(std::round(rel * amp_levels)), cb.amp_bits);

            double phase = std::arg(coef);
            if (phase < 0.0)
                phase += 2.0 * std::numbers::pi;
            const auto pq = static_cast<std::uint64_t>(std::round(phase / (2.0 * std::numbers::pi) * phase_levels)) %
                            static_cast<std::uint64_t>(phase_levels);
            push_bits(bits, pq, cb.phase_bits);
        }
        return bits;
    }

    Eigen::VectorXcd dft_codebook_decode(const DftCodebook &cb, const BitString &bits)
    {
        validate(cb);
        if (bits.size() != cb.feedback_bits())
            throw std::invalid_argument("Bitstring has " + std::to_string(bits.size()) + " bits, expected " +
                                        std::to_string(cb.feedback_bits()) + ".");

        const auto beams = dft_beams(cb.n_tx);
        const double amp_levels = std::ldexp(1.0, static_cast<int>(cb.amp_bits)) - 1.0;
        const double phase_levels = std::ldexp(1.0, static_cast<int>(cb.phase_bits));

        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cb.n_tx));
        std::size_t pos = 0;
        for (std::size_t k = 0; k < cb.n_beams; ++k)
        {
            const auto index = pop_bits(bits, pos, static_cast<unsigned>(cb.index_bits()));
            if (index >= cb.n_tx)
                throw std::invalid_argument("Beam index out of range in bitstring.");
            const auto aq = pop_bits(bits, pos, cb.amp_bits);
            const auto pq = pop_bits(bits, pos, cb.phase_bits);
            const double amp = cb.amp_bits == 0 ? 1.0 : static_cast<double>(aq) / amp_levels;
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(pq) / phase_levels;
            w += std::polar(amp, phase) * beams.col(static_cast<Eigen::Index>(index));
        }
        const double norm = w.norm();
        if (norm > 0.0)
            w /= norm;
        return w;
    }
}
