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

#ifndef SSCM_CHANNEL_HPP
#define SSCM_CHANNEL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sscm
{
    using cplx = std::complex<double>;

    struct ChannelDims
    {
        std::size_t n_rx = 1;
        std::size_t n_tx = 1;
        std::size_t n_sc = 1;

        std::size_t size() const { return n_rx * n_tx * n_sc; }
        bool operator==(const ChannelDims &) const = default;
    };

    // Throws std::invalid_argument if any dimension is zero.
    void validate(const ChannelDims &dims);

    struct CarrierConfig
    {
        double carrier_freq = 2.6e9;        // Hz
        double subcarrier_spacing = 15.0e3; // Hz

        bool operator==(const CarrierConfig &) const = default;
    };

    void validate(const CarrierConfig &carrier);

    // Dense complex tensor indexed [a][b][c], c fastest. Used for the port, delay and angle domains alike.
    class Tensor3
    {
    public:
        Tensor3() = default;
        Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
            : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

        std::size_t dim0() const { return d0_; }
        std::size_t dim1() const { return d1_; }
        std::size_t dim2() const { return d2_; }
        std::size_t size() const { return data_.size(); }

        cplx &operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * d1_ + b) * d2_ + c]; }
        const cplx &operator()(std::size_t a, std::size_t b, std::size_t c) const { return data_[(a * d1_ + b) * d2_ + c]; }

        // Contiguous run along the last axis
        std::span<cplx> row(std::size_t a, std::size_t b) { return {data_.data() + (a * d1_ + b) * d2_, d2_}; }
        std::span<const cplx> row(std::size_t a, std::size_t b) const { return {data_.data() + (a * d1_ + b) * d2_, d2_}; }

        std::span<cplx> data() { return data_; }
        std::span<const cplx> data() const { return data_; }

        double energy() const;
        bool all_finite() const;

        bool operator==(const Tensor3 &) const = default;

    private:
        std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
        std::vector<cplx> data_;
    };

    // Frequency-domain MIMO channel snapshot, H_f[rx][tx][subcarrier].
    struct ChannelSample
    {
        ChannelDims dims;
        CarrierConfig carrier;
        Tensor3 h_f;

        static ChannelSample zeros(const ChannelDims &dims, const CarrierConfig &carrier);
    };

    // Checks shape against dims and that all entries are finite.
    void validate(const ChannelSample &sample);

    struct TimeDomainChannel
    {
        ChannelDims dims;
        CarrierConfig carrier;
        Tensor3 h_t;        // [rx][tx][delay tap]
        double tap_spacing; // seconds, 1 / (n_sc * subcarrier_spacing)
    };

    struct AngleDomainChannel
    {
        ChannelDims dims;
        Tensor3 h_ang; // [rx angle bin][tx angle bin][subcarrier]
        std::vector<double> bin_angles_rx;
        std::vector<double> bin_angles_tx;
    };

    // Per-tap or per-bin power with its abscissa (seconds or degrees).
    struct PowerProfile
    {
        std::vector<double> abscissa;
        std::vector<double> power;
    };

    enum class ArraySide
    {
        tx,
        rx
    };

    // ULA steering vector with half-wavelength spacing: element u has phase pi * u * sin(angle).
    std::vector<cplx> steering_vector(std::size_t n_elems, double angle_deg);

    // Spatial frequency and angle of angle-domain bin i for an n-element array.
    // Bins are ordered by ascending spatial frequency 2 * (i - floor((n - 1) / 2)) / n, so bin angles lie in (-90, 90].
    double bin_spatial_frequency(std::size_t n, std::size_t i);
    std::vector<double> bin_angles(std::size_t n);

    // Unitary n x n matrix whose column i is steering_vector(n, bin angle i) / sqrt(n), row-major.
    std::vector<cplx> angle_dft_matrix(std::size_t n);

    TimeDomainChannel to_time_domain(const ChannelSample &sample);
    ChannelSample to_frequency_domain(const TimeDomainChannel &t);

    AngleDomainChannel to_angle_domain(const ChannelSample &sample);
    Tensor3 to_port_domain(const AngleDomainChannel &a);

    PowerProfile power_delay_profile(const TimeDomainChannel &t);
    PowerProfile power_angle_spectrum(const AngleDomainChannel &a, ArraySide side);

    double wrap_degrees(double angle_deg); // to (-180, 180]
}

#endif
