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


#include "sscm/io.hpp"

#include <algorithm>
#include <cmath>

namespace sscm
{
    LspSet ReportedParams::apply_to(const LspSet &baseline) const
    {
        LspSet p = baseline;
        p.mu_lgDS = mu_lgDS;
        p.sigma_lgDS = sigma_lgDS;
        p.mu_lgASD = mu_lgASD;
        p.sigma_lgASD = sigma_lgASD;
        p.mu_lgASA = mu_lgASD;
        p.sigma_lgASA = sigma_lgASD;
        p.mu_KF = mu_KF;
        p.sigma_KF = sigma_KF;
        if (lambda_clusters)
            p.lambda_clusters = lambda_clusters;
        return p;
    }

    ReportMessage encode_report(const LspSet &p, std::vector<std::string> *warnings)
    {
        const double values[7] = {p.mu_lgDS, p.sigma_lgDS, p.mu_lgASD, p.sigma_lgASD,
                                  p.mu_KF, p.sigma_KF, p.lambda_clusters.value_or(0.0)};
        ReportMessage msg{};
        msg[0] = report_version;
        for (std::size_t i = 0; i < report_fields.size(); ++i)
        {
            const auto &f = report_fields[i];
            const double q = std::round((values[i] - f.lo) / (f.hi - f.lo) * 255.0);
            if ((q < 0.0 || q > 255.0) && warnings)
                warnings->push_back(std::string(f.key) + " = " + format_double(values[i]) + " clamped to [" +
                                    format_double(f.lo) + ", " + format_double(f.hi) + "]");
            msg[i + 1] = static_cast<std::uint8_t>(std::clamp(q, 0.0, 255.0));
        }
        return msg;
    }

    ReportedParams decode_report(std::span<const std::uint8_t> bytes)
    {
        if (bytes.size() != report_bytes)
            throw FormatError("Report must be exactly 8 bytes, got " + std::to_string(bytes.size()) + ".");
        if (bytes[0] != report_version)
            throw FormatError("Unsupported report version " + std::to_string(bytes[0]) + ".");

        double v[7];
        for (std::size_t i = 0; i < report_fields.size(); ++i)
        {
            const auto &f = report_fields[i];
            v[i] = f.lo + static_cast<double>(bytes[i + 1]) / 255.0 * (f.hi - f.lo);
        }
        ReportedParams r{v[0], v[1], v[2], v[3], v[4], v[5], std::nullopt};
        if (bytes[7] != 0)
            r.lambda_clusters = v[6];
        return r;
    }

    std::string to_hex(std::span<const std::uint8_t> bytes)
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(bytes.size() * 2);
        for (auto b : bytes)
        {
            out.push_back(digits[b >> 4]);
            out.push_back(digits[b & 0xf]);
        }
        return out;
    }

    std::vector<std::uint8_t> from_hex(std::string_view hex)
    {
        if (hex.size() % 2 != 0)
            throw FormatError("Hex string must have an even number of digits.");
        auto nibble = [](char c) -> int
        {
            if (c >= '0' && c <= '9')
                return c - '0';
            if (c >= 'a' && c <= 'f')
                return c - 'a' + 10;
            if (c >= 'A' && c <= 'F')
                return c - 'A' + 10;
            throw FormatError(std::string("Invalid hex digit '") + c + "'.");
        };
        std::vector<std::uint8_t> out(hex.size() / 2);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]));
        return out;
    }
}
