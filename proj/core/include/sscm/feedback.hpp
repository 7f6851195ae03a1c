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


#ifndef SSCM_FEEDBACK_HPP
#define SSCM_FEEDBACK_HPP

#include "sscm/channel.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sscm
{
    // Rank-1 CSI: one unit-norm, phase-canonical dominant eigenvector of sum_k H_k^H H_k per subband.
    struct CsiTarget
    {
        std::vector<Eigen::VectorXcd> rows; // [subband], each length n_tx
        std::size_t subband_size = 16;
    };

    // Scales v so that its first nonzero entry is real and positive.
    void canonicalize_phase(Eigen::VectorXcd &v);

    // Power iteration from the all-ones vector (falling back to the strongest column of R when the start is in its
    // null space); stops once the eigenpair residual falls to 1e-9 of the eigenvalue or after 500 iterations.
    Eigen::VectorXcd dominant_eigenvector(const Eigen::MatrixXcd &r);

    CsiTarget compute_csi_targets(const ChannelSample &sample, std::size_t subband_size = 16);

    // |a^H b|^2 / (|a|^2 |b|^2). Throws on length mismatch or a zero vector.
    double sgcs(const Eigen::VectorXcd &w_true, const Eigen::VectorXcd &w_hat);

    using BitString = std::vector<bool>;

    // Signed fixed-point quantiser over [-1, 1): q = clamp(round(x * 2^(b-1)), -2^(b-1), 2^(b-1) - 1), value q / 2^(b-1).
    std::int64_t quantize_component(double x, unsigned bits);
    double dequantize_component(std::int64_t q, unsigned bits);

    // Linear transform codec standing in for a learned autoencoder: project onto the leading eigenvectors of the
    // training covariance and quantise the real and imaginary part of every coefficient.
    struct CodecModel
    {
        Eigen::MatrixXcd basis; // n_tx x n_coeff, orthonormal columns
        std::size_t n_coeff = 0;
        unsigned bits_per_component = 0;

        std::size_t feedback_bits() const { return 2 * n_coeff * bits_per_component; }
    };

    CodecModel train_linear_codec(std::span<const CsiTarget> train, std::size_t n_coeff, unsigned bits_per_component);

    BitString encode(const CodecModel &model, const Eigen::VectorXcd &w);
    Eigen::VectorXcd decode(const CodecModel &model, const BitString &bits);

    // Unquantised projection and reconstruction, renormalised.
    Eigen::VectorXcd project(const CodecModel &model, const Eigen::VectorXcd &w);

    // Beam-selection codebook: the strongest DFT beams, each fed back as index, amplitude relative to the strongest
    // beam and absolute phase.
    struct DftCodebook
    {
        std::size_t n_tx = 8;
        std::size_t n_beams = 2;
        unsigned amp_bits = 3;
        unsigned phase_bits = 3;

        std::size_t index_bits() const;
        std::size_t feedback_bits() const { return n_beams * (index_bits() + amp_bits + phase_bits); }
    };

    void validate(const DftCodebook &cb);

    BitString dft_codebook_encode(const DftCodebook &cb, const Eigen::VectorXcd &w);
    Eigen::VectorXcd dft_codebook_decode(const DftCodebook &cb, const BitString &bits);

    // x' = x + n with circular Gaussian n of total energy energy(x) / 10^(snr/10) per sample.
    std::vector<ChannelSample> noise_inject(std::span<const ChannelSample> samples, double snr_db, std::uint64_t seed,
                                            unsigned threads = 0);

    using FeedbackScheme = std::variant<CodecModel, DftCodebook>;

    std::size_t feedback_bits(const FeedbackScheme &scheme);

    // Reconstructed CSI for one target vector; a zero vector when everything quantises to zero.
    Eigen::VectorXcd reconstruct(const FeedbackScheme &scheme, const Eigen::VectorXcd &w);

    struct EvalReport
    {
        double mean_sgcs = 0.0;
        std::vector<double> per_sample_sgcs; // mean over subbands
        std::size_t feedback_bits = 0;
        std::string train_dataset_id;
        std::string test_dataset_id;
    };

    // Zero reconstructions score 0.
    EvalReport evaluate(const FeedbackScheme &scheme, std::span<const ChannelSample> test, std::size_t subband_size = 16,
                        unsigned threads = 0);
    EvalReport evaluate(const FeedbackScheme &scheme, std::span<const CsiTarget> test, unsigned threads = 0);
}

#endif
