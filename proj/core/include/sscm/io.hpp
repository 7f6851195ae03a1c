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


#ifndef SSCM_IO_HPP
#define SSCM_IO_HPP

#include "sscm/channel.hpp"
#include "sscm/extract.hpp"
#include "sscm/feedback.hpp"
#include "sscm/lsp.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sscm
{
    // Malformed or inconsistent file contents.
    class FormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // ---------- Dataset file ----------
    //
    // Little-endian layout:
    //   "CSDS" | u16 version = 1 | u32 count | u32 n_rx | u32 n_tx | u32 n_sc | f64 carrier_freq | f64 subcarrier_spacing
    //   then count * n_rx * n_tx * n_sc (re, im) f32 pairs, subcarrier fastest, then tx, then rx.

    inline constexpr std::size_t dataset_header_bytes = 38;
    inline constexpr std::uint16_t dataset_version = 1;

    std::uint64_t dataset_file_size(std::size_t count, const ChannelDims &dims);

    void write_dataset(std::ostream &out, std::span<const ChannelSample> samples);
    void write_dataset(const std::filesystem::path &path, std::span<const ChannelSample> samples);
    std::vector<ChannelSample> read_dataset(std::istream &in);
    std::vector<ChannelSample> read_dataset(const std::filesystem::path &path);

    // ---------- Parameter file ----------
    //
    // UTF-8 "key = value" lines, '#' starts a comment. Required keys: mu_lgDS, sigma_lgDS, mu_lgASD, sigma_lgASD,
    // mu_KF, sigma_KF. Optional: mu_lgASA and sigma_lgASA (default to the ASD values), lambda_clusters, los
    // (true/false, default false). Unknown and duplicate keys are rejected.

    LspSet parse_params(std::string_view text);
    std::string format_params(const LspSet &params);
    LspSet read_params(const std::filesystem::path &path);
    void write_params(const std::filesystem::path &path, const LspSet &params);

    // ---------- Statistics report ----------
    //
    // 8 bytes: version, then mu_lgDS, sigma_lgDS, mu_lgASD, sigma_lgASD, mu_KF, sigma_KF, lambda_clusters, each
    // q = clamp(round((x - lo) / (hi - lo) * 255), 0, 255). lambda byte 0 means "not reported".

    inline constexpr std::uint8_t report_version = 1;
    inline constexpr std::size_t report_bytes = 8;

    struct ReportField
    {
        const char *key;
        double lo;
        double hi;
    };

    inline constexpr std::array<ReportField, 7> report_fields = {{{"mu_lgDS", -9.0, -5.0},
                                                                  {"sigma_lgDS", 0.0, 1.5},
                                                                  {"mu_lgASD", -1.0, 2.5},
                                                                  {"sigma_lgASD", 0.0, 1.5},
                                                                  {"mu_KF", -10.0, 20.0},
                                                                  {"sigma_KF", 0.0, 10.0},
                                                                  {"lambda_clusters", 0.0, 50.0}}};

    using ReportMessage = std::array<std::uint8_t, report_bytes>;

    // The statistics carried by a report. Arrival-angle spreads and the LOS flag are not reported.
    struct ReportedParams
    {
        double mu_lgDS;
        double sigma_lgDS;
        double mu_lgASD;
        double sigma_lgASD;
        double mu_KF;
        double sigma_KF;
        std::optional<double> lambda_clusters;

        // Reported values on top of a baseline; ASA mirrors ASD.
        LspSet apply_to(const LspSet &baseline) const;
    };

    // Out-of-range fields are clamped; a message per clamped field is appended to warnings when given.
    ReportMessage encode_report(const LspSet &params, std::vector<std::string> *warnings = nullptr);
    ReportedParams decode_report(std::span<const std::uint8_t> bytes);

    std::string to_hex(std::span<const std::uint8_t> bytes);
    std::vector<std::uint8_t> from_hex(std::string_view hex);

    // ---------- Statistics CSV ----------
    //
    // Header "ds_s,asd_deg,asa_deg,kf_db,n_clusters"; capped K-factors are written as the cap value.

    void write_stats_csv(std::ostream &out, std::span<const ChannelStats> stats);
    std::vector<ChannelStats> read_stats_csv(std::istream &in);

    // ---------- Evaluation report ----------

    // key=value block: mean_sgcs, feedback_bits, samples, train_dataset_id, test_dataset_id
    std::string format_eval_report(const EvalReport &report);
    // "index,sgcs" rows
    void write_per_sample_csv(std::ostream &out, const EvalReport &report);

    // Shortest decimal that round-trips the double exactly.
    std::string format_double(double v);
}

#endif
