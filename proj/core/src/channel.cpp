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


#include "sscm/channel.hpp"

#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sscm
{
    void validate(const ChannelDims &dims)
    {
        if (dims.n_rx == 0 || dims.n_tx == 0 || dims.n_sc == 0)
            throw std::invalid_argument("Channel dimensions must all be at least 1.");
    }

    void validate(const CarrierConfig &carrier)
    {
        if (!(carrier.carrier_freq > 0.0) || !std::isfinite(carrier.carrier_freq))
            throw std::invalid_argument("Carrier frequency must be positive.");
        if (!(carrier.subcarrier_spacing > 0.0) || !std::isfinite(carrier.subcarrier_spacing))
            throw std::invalid_argument("Subcarrier spacing must be positive.");
    }

    double Tensor3::energy() const
    {
        double e = 0.0;
        for (const auto &v : data_)
            e += std::norm(v);
        return e;
    }

    bool Tensor3::all_finite() const
    {
        for (const auto &v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                return false;
        return true;
    }

    ChannelSample ChannelSample::zeros(const ChannelDims &dims, const CarrierConfig &carrier)
    {
        validate(dims);
        validate(carrier);
        return {dims, carrier, Tensor3(dims.n_rx, dims.n_tx, dims.n_sc)};
    }

    void validate(const ChannelSample &sample)
    {
        validate(sample.dims);
        validate(sample.carrier);
        const auto &h = sample.h_f;
        if (h.dim0() != sample.dims.n_rx || h.dim1() != sample.dims.n_tx || h.dim2() != sample.dims.n_sc)
            throw std::invalid_argument("Channel tensor shape does not match its dimensions.");
        if (!h.all_finite())
            throw std::invalid_argument("Channel tensor contains non-finite entries.");
    }

    double wrap_degrees(double angle_deg)
    {
        double a = std::fmod(angle_deg + 180.0, 360.0);
        if (a <= 0.0)
            a += 360.0;
        return a - 180.0;
    }

    std::vector<cplx> steering_vector(std::size_t n_elems, double angle_deg)
    {
        if (!(std::abs(angle_deg) <= 90.0))
            throw std::invalid_argument("Steering angle must lie in [-90, 90] degrees, got " + std::to_string(angle_deg) + ".");

        const double s = std::sin(angle_deg * std::numbers::pi / 180.0);
        std::vector<cplx> a(n_elems);
        for (std::size_t u = 0; u < n_elems; ++u)
            a[u] = std::polar(1.0, std::numbers::pi * static_cast<double>(u) * s);
        return a;
    }

    double bin_spatial_frequency(std::size_t n, std::size_t i)
    {
        const auto centre = static_cast<double>((n - 1) / 2);
        return 2.0 * (static_cast<double>(i) - centre) / static_cast<double>(n);
    }

    std::vector<double> bin_angles(std::size_t n)
    {
        std::vector<double> angles(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double psi = bin_spatial_frequency(n, i);
            angles[i] = psi >= 1.0 ? 90.0 : std::asin(psi) * 180.0 / std::numbers::pi;
        }
        return angles;
    }

    std::vector<cplx> angle_dft_matrix(std::size_t n)
    {
        std::vector<cplx> f(n * n);
        const double norm = 1.0 / std::sqrt(static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i)
        {
            // phase from the spatial frequency directly, keeps the matrix exactly unitary
            const double psi = bin_spatial_frequency(n, i);
            for (std::size_t u = 0; u < n; ++u)
                f[u * n + i] = std::polar(norm, std::numbers::pi * static_cast<double>(u) * psi);
        }
        return f;
    }

    TimeDomainChannel to_time_domain(const ChannelSample &sample)
    {
        validate(sample);
        if (sample.dims.n_sc < 2)
            throw std::invalid_argument("At least two subcarriers are required for a delay-domain transform.");

        TimeDomainChannel t{sample.dims, sample.carrier, sample.h_f,
                            1.0 / (static_cast<double>(sample.dims.n_sc) * sample.carrier.subcarrier_spacing)};
        for (std::size_t r = 0; r < sample.dims.n_rx; ++r)
            for (std::size_t s = 0; s < sample.dims.n_tx; ++s)
                detail::unitary_dft(t.h_t.row(r, s), detail::DftDirection::inverse);
        return t;
    }

    ChannelSample to_frequency_domain(const TimeDomainChannel &t)
    {
        if (!t.h_t.all_finite())
            throw std::invalid_argument("Delay-domain tensor contains non-finite entries.");

        ChannelSample sample{t.dims, t.carrier, t.h_t};
        for (std::size_t r = 0; r < t.dims.n_rx; ++r)
            for (std::size_t s = 0; s < t.dims.n_tx; ++s)
                detail::unitary_dft(sample.h_f.row(r, s), detail::DftDirection::forward);
        return sample;
    }

    AngleDomainChannel to_angle_domain(const ChannelSample &sample)
    {
        validate(sample);
        const auto [n_rx, n_tx, n_sc] = sample.dims;
        const auto f_rx = angle_dft_matrix(n_rx);
        const auto f_tx = angle_dft_matrix(n_tx);

        // H_ang[:, :, k] = F_rx^H H[:, :, k] F_tx
        Tensor3 tmp(n_rx, n_tx, n_sc);
        for (std::size_t r = 0; r < n_rx; ++r)
            for (std::size_t j = 0; j < n_tx; ++j)
            {
                auto out = tmp.row(r, j);
                for (std::size_t s = 0; s < n_tx; ++s)
                {
                    const cplx w = f_tx[s * n_tx + j];
                    const auto in = sample.h_f.row(r, s);
                    for (std::size_t k = 0; k < n_sc; ++k)
                        out[k] += in[k] * w;
                }
            }

        AngleDomainChannel a{sample.dims, Tensor3(n_rx, n_tx, n_sc), bin_angles(n_rx), bin_angles(n_tx)};
        for (std::size_t i = 0; i < n_rx; ++i)
            for (std::size_t u = 0; u < n_rx; ++u)
            {
                const cplx w = std::conj(f_rx[u * n_rx + i]);
                for (std::size_t j = 0; j < n_tx; ++j)
                {
                    auto out = a.h_ang.row(i, j);
                    const auto in = tmp.row(u, j);
                    for (std::size_t k = 0; k < n_sc; ++k)
                        out[k] += w * in[k];
                }
            }
        return a;
    }

    Tensor3 to_port_domain(const AngleDomainChannel &a)
    {
        const auto [n_rx, n_tx, n_sc] = a.dims;
        const auto f_rx = angle_dft_matrix(n_rx);
        const auto f_tx = angle_dft_matrix(n_tx);

        // H[:, :, k] = F_rx H_ang[:, :, k] F_tx^H
        Tensor3 tmp(n_rx, n_tx, n_sc);
        for (std::size_t u = 0; u < n_rx; ++u)
            for (std::size_t i = 0; i < n_rx; ++i)
            {
                const cplx w = f_rx[u * n_rx + i];
                for (std::size_t j = 0; j < n_tx; ++j)
                {
                    auto out = tmp.row(u, j);
                    const auto in = a.h_ang.row(i, j);
                    for (std::size_t k = 0; k < n_sc; ++k)
                        out[k] += w * in[k];
                }
            }

        Tensor3 h(n_rx, n_tx, n_sc);
        for (std::size_t u = 0; u < n_rx; ++u)
            for (std::size_t s = 0; s < n_tx; ++s)
            {
                auto out = h.row(u, s);
                for (std::size_t j = 0; j < n_tx; ++j)
                {
                    const cplx w = std::conj(f_tx[s * n_tx + j]);
                    const auto in = tmp.row(u, j);
                    for (std::size_t k = 0; k < n_sc; ++k)
                        out[k] += in[k] * w;
                }
            }
        return h;
    }

    PowerProfile power_delay_profile(const TimeDomainChannel &t)
    {
        const auto [n_rx, n_tx, n_taps] = t.dims;
        PowerProfile p{std::vector<double>(n_taps), std::vector<double>(n_taps, 0.0)};
        for (std::size_t l = 0; l < n_taps; ++l)
            p.abscissa[l] = static_cast<double>(l) * t.tap_spacing;

        for (std::size_t r = 0; r < n_rx; ++r)
            for (std::size_t s = 0; s < n_tx; ++s)
            {
                const auto taps = t.h_t.row(r, s);
                for (std::size_t l = 0; l < n_taps; ++l)
                    p.power[l] += std::norm(taps[l]);
            }

        const double pairs = static_cast<double>(n_rx * n_tx);
        for (auto &v : p.power)
            v /= pairs;
        return p;
    }

    PowerProfile power_angle_spectrum(const AngleDomainChannel &a, ArraySide side)
    {
        const auto [n_rx, n_tx, n_sc] = a.dims;
        const bool tx = side == ArraySide::tx;
        PowerProfile p{tx ? a.bin_angles_tx : a.bin_angles_rx, std::vector<double>(tx ? n_tx : n_rx, 0.0)};

        for (std::size_t i = 0; i < n_rx; ++i)
            for (std::size_t j = 0; j < n_tx; ++j)
            {
                double e = 0.0;
                for (const auto &v : a.h_ang.row(i, j))
                    e += std::norm(v);
                p.power[tx ? j : i] += e;
            }
        return p;
    }
}
