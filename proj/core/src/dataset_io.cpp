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

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace sscm
{
    namespace
    {
        // Byte-level little-endian encoding, independent of host order
        template <typename U>
        void put_le(std::vector<char> &buf, U v)
        {
            for (std::size_t i = 0; i < sizeof(U); ++i)
                buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
        }

        template <typename U>
        U get_le(const unsigned char *p)
        {
            U v = 0;
            for (std::size_t i = 0; i < sizeof(U); ++i)
                v |= static_cast<U>(p[i]) << (8 * i);
            return v;
        }

        std::uint32_t checked_u32(std::size_t v, const char *what)
        {
            if (v > std::numeric_limits<std::uint32_t>::max())
                throw std::invalid_argument(std::string(what) + " does not fit the dataset header.");
            return static_cast<std::uint32_t>(v);
        }
    }

    std::uint64_t dataset_file_size(std::size_t count, const ChannelDims &dims)
    {
        return dataset_header_bytes + static_cast<std::uint64_t>(count) * dims.size() * 8;
    }

    void write_dataset(std::ostream &out, std::span<const ChannelSample> samples)
    {
        if (samples.empty())
            throw std::invalid_argument("Cannot write an empty dataset.");
        const auto &dims = samples.front().dims;
        const auto &carrier = samples.front().carrier;
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            validate(samples[i]);
            if (samples[i].dims != dims || samples[i].carrier != carrier)
                throw std::invalid_argument("Sample " + std::to_string(i) + " has different dimensions or carrier.");
        }

        std::vector<char> buf;
        buf.reserve(dataset_header_bytes);
        buf.insert(buf.end(), {'C', 'S', 'D', 'S'});
        put_le<std::uint16_t>(buf, dataset_version);
        put_le<std::uint32_t>(buf, checked_u32(samples.size(), "Sample count"));
        put_le<std::uint32_t>(buf, checked_u32(dims.n_rx, "n_rx"));
        put_le<std::uint32_t>(buf, checked_u32(dims.n_tx, "n_tx"));
        put_le<std::uint32_t>(buf, checked_u32(dims.n_sc, "n_sc"));
        put_le<std::uint64_t>(buf, std::bit_cast<std::uint64_t>(carrier.carrier_freq));
        put_le<std::uint64_t>(buf, std::bit_cast<std::uint64_t>(carrier.subcarrier_spacing));
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));

        for (const auto &s : samples)
        {
            buf.clear();
            buf.reserve(s.h_f.size() * 8);
            // tensor storage order is already rx, tx, subcarrier (fastest)
            for (const auto &v : s.h_f.data())
            {
                put_le<std::uint32_t>(buf, std::bit_cast<std::uint32_t>(static_cast<float>(v.real())));
                put_le<std::uint32_t>(buf, std::bit_cast<std::uint32_t>(static_cast<float>(v.imag())));
            }
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        }
        if (!out)
            throw std::runtime_error("Failed writing dataset.");
    }

    void write_dataset(const std::filesystem::path &path, std::span<const ChannelSample> samples)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("Cannot open '" + path.string() + "' for writing.");
        write_dataset(out, samples);
    }

    std::vector<ChannelSample> read_dataset(std::istream &in)
    {
        std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (bytes.size() < dataset_header_bytes)
            throw FormatError("Dataset too short for its header: expected at least " +
                              std::to_string(dataset_header_bytes) + " bytes, got " + std::to_string(bytes.size()) + ".");
        if (std::memcmp(bytes.data(), "CSDS", 4) != 0)
            throw FormatError("Bad dataset magic, expected 'CSDS'.");
        const auto version = get_le<std::uint16_t>(bytes.data() + 4);
        if (version != dataset_version)
            throw FormatError("Unsupported dataset version " + std::to_string(version) + ".");

        const auto count = get_le<std::uint32_t>(bytes.data() + 6);
        ChannelDims dims{get_le<std::uint32_t>(bytes.data() + 10), get_le<std::uint32_t>(bytes.data() + 14),
                         get_le<std::uint32_t>(bytes.data() + 18)};
        CarrierConfig carrier{std::bit_cast<double>(get_le<std::uint64_t>(bytes.data() + 22)),
                              std::bit_cast<double>(get_le<std::uint64_t>(bytes.data() + 30))};
        try
        {
            validate(dims);
            validate(carrier);
        }
        catch (const std::invalid_argument &e)
        {
            throw FormatError(std::string("Invalid dataset header: ") + e.what());
        }

        const auto expected = dataset_file_size(count, dims);
        if (bytes.size() != expected)
            throw FormatError("Dataset size mismatch: expected " + std::to_string(expected) + " bytes, got " +
                              std::to_string(bytes.size()) + ".");

        std::vector<ChannelSample> samples;
        samples.reserve(count);
        const unsigned char *p = bytes.data() + dataset_header_bytes;
        for (std::uint32_t i = 0; i < count; ++i)
        {
            auto s = ChannelSample::zeros(dims, carrier);
            for (auto &v : s.h_f.data())
            {
                const float re = std::bit_cast<float>(get_le<std::uint32_t>(p));
                const float im = std::bit_cast<float>(get_le<std::uint32_t>(p + 4));
                v = cplx(re, im);
                p += 8;
            }
            if (!s.h_f.all_finite())
                throw FormatError("Sample " + std::to_string(i) + " contains non-finite values.");
            samples.push_back(std::move(s));
        }
        return samples;
    }

    std::vector<ChannelSample> read_dataset(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("Cannot open '" + path.string() + "'.");
        return read_dataset(in);
    }
}
