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

#include "sscm/random.hpp"

#include "parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace sscm
{
    void canonicalize_phase(Eigen::VectorXcd &v)
    {
        const double tol = 1e-12 * v.norm();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (std::abs(v[i]) > tol)
            {
                v *= std::abs(v[i]) / v[i];
                v[i] = std::abs(v[i]);
                return;
            }
    }

    Eigen::VectorXcd dominant_eigenvector(const Eigen::MatrixXcd &r)
    {
        const Eigen::Index n = r.rows();
        if (n == 0 || r.cols() != n)
            throw std::invalid_argument("Power iteration needs a non-empty square matrix.");
        const double scale = r.cwiseAbs().maxCoeff();
        if (!(scale > 0.0))
            throw std::invalid_argument("Power iteration on a zero matrix.");

        Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n) / std::sqrt(static_cast<double>(n));
        Eigen::VectorXcd rv = r * v;
        if (rv.norm() < 1e-12 * scale)
        {
            Eigen::Index col = 0;
            r.colwise().norm().maxCoeff(&col);
            v = r.col(col).normalized();
            rv = r * v;
        }

        // Stop on the eigenpair residual rather than on successive eigenvalue estimates: with a small eigengap the
        // estimates stall long before the vector has converged, while ||Rv - rho v|| bounds the angle error by
        // residual / gap.
        for (int it = 0; it < 500; ++it)
        {
            const double rho = v.dot(rv).real();
            if ((rv - rho * v).norm() <= 1e-9 * std::abs(rho))
                break;
            v = rv.normalized();
            rv = r * v;
        }
        v.normalize();
        canonicalize_phase(v);
        return v;
    }

    CsiTarget compute_csi_targets(const ChannelSample &sample, std::size_t subband_size)
    {
        validate(sample);
        const auto [n_rx, n_tx, n_sc] = sample.dims;
        if (subband_size == 0 || n_sc % subband_size != 0)
            throw std::invalid_argument("Subband size " + std::to_string(subband_size) + " does not divide " +
                                        std::to_string(n_sc) + " subcarriers.");

        CsiTarget target;
        target.subband_size = subband_size;
        const std::size_t n_sub = n_sc / subband_size;
        target.rows.reserve(n_sub);

        Eigen::MatrixXcd h(n_rx, n_tx);
        for (std::size_t b = 0; b < n_sub; ++b)
        {
            Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n_tx, n_tx);
            for (std::size_t k = b * subband_size; k < (b + 1) * subband_size; ++k)
            {
                for (std::size_t u = 0; u < n_rx; ++u)
                    for (std::size_t s = 0; s < n_tx; ++s)
                        h(u, s) = sample.h_f(u, s, k);
                r.noalias() += h.adjoint() * h;
            }
            if (!(r.cwiseAbs().maxCoeff() > 0.0))
                throw std::invalid_argument("Subband " + std::to_string(b) + " has zero channel energy.");
            target.rows.push_back(dominant_eigenvector(r));
        }
        return target;
    }

    double sgcs(const Eigen::VectorXcd &w_true, const Eigen::VectorXcd &w_hat)
    {
        if (w_true.size() != w_hat.size())
            throw std::invalid_argument("SGCS needs vectors of equal length.");
        const double n1 = w_true.squaredNorm();
        const double n2 = w_hat.squaredNorm();
        if (!(n1 > 0.0) || !(n2 > 0.0))
            throw std::invalid_argument("SGCS is undefined for a zero vector.");
        const double v = std::norm(w_true.dot(w_hat)) / (n1 * n2);
        return std::min(v, 1.0);
    }

    std::vector<ChannelSample> noise_inject(std::span<const ChannelSample> samples, double snr_db, std::uint64_t seed,
                                            unsigned threads)
    {
        if (!std::isfinite(snr_db))
            throw std::invalid_argument("SNR must be finite.");

        std::vector<ChannelSample> out(samples.begin(), samples.end());
        detail::parallel_for(out.size(), threads, [&](std::size_t i)
                             {
                                 auto &x = out[i];
                                 validate(x);
                                 Rng rng(seed, i, StreamDomain::noise);
                                 const double noise_energy = x.h_f.energy() / std::pow(10.0, snr_db / 10.0);
                                 const double per_component =
                                     std::sqrt(noise_energy / (2.0 * static_cast<double>(x.h_f.size())));
                                 for (auto &v : x.h_f.data())
                                 {
                                     const double re = rng.normal();
                                     const double im = rng.normal();
                                     v += per_component * cplx(re, im);
                                 } });
        return out;
    }

    std::size_t feedback_bits(const FeedbackScheme &scheme)
    {
        return std::visit([](const auto &s) { return s.feedback_bits(); }, scheme);
    }

    Eigen::VectorXcd reconstruct(const FeedbackScheme &scheme, const Eigen::VectorXcd &w)
    {
        if (const auto *codec = std::get_if<CodecModel>(&scheme))
            return decode(*codec, encode(*codec, w));
        const auto &cb = std::get<DftCodebook>(scheme);
        return dft_codebook_decode(cb, dft_codebook_encode(cb, w));
    }

    EvalReport evaluate(const FeedbackScheme &scheme, std::span<const CsiTarget> test, unsigned threads)
    {
        if (test.empty())
            throw std::invalid_argument("Evaluation needs a non-empty test set.");

        EvalReport report;
        report.feedback_bits = feedback_bits(scheme);
        report.per_sample_sgcs.resize(test.size());
        detail::parallel_for(test.size(), threads, [&](std::size_t i)
                             {
                                 double sum = 0.0;
                                 for (const auto &w : test[i].rows)
                                 {
                                     const auto w_hat = reconstruct(scheme, w);
                                     sum += w_hat.squaredNorm() > 0.0 ? sgcs(w, w_hat) : 0.0;
                                 }
                                 report.per_sample_sgcs[i] = sum / static_cast<double>(test[i].rows.size()); });

        double total = 0.0;
        for (double v : report.per_sample_sgcs)
            total += v;
        report.mean_sgcs = total / static_cast<double>(test.size());
        return report;
    }

    EvalReport evaluate(const FeedbackScheme &scheme, std::span<const ChannelSample> test, std::size_t subband_size,
                        unsigned threads)
    {
        if (test.empty())
            throw std::invalid_argument("Evaluation needs a non-empty test set.");
        std::vector<CsiTarget> targets(test.size());
        detail::parallel_for(test.size(), threads,
                             [&](std::size_t i) { targets[i] = compute_csi_targets(test[i], subband_size); });
        return evaluate(scheme, targets, threads);
    }
}
