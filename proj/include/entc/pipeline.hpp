// Copyright 2026 the entc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "entc/container.hpp"
#include "entc/error.hpp"
#include "entc/symbol_model.hpp"

namespace entc {

struct ImagePlane {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> samples;  // row-major

  std::uint8_t at(std::uint32_t row, std::uint32_t col) const {
    return samples[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(std::uint32_t row, std::uint32_t col) {
    return samples[static_cast<std::size_t>(row) * width + col];
  }

  bool operator==(const ImagePlane&) const = default;
};

// One 8x8 block of real-valued coefficients (sample or frequency domain).
struct Block {
  std::array<double, 64> v{};

  double at(int row, int col) const { return v[static_cast<std::size_t>(row) * 8 + col]; }
  double& at(int row, int col) { return v[static_cast<std::size_t>(row) * 8 + col]; }
};

using QuantizedBlock = std::array<std::int32_t, 64>;
using ZigzagVector = std::array<std::int32_t, 64>;

struct QuantTable {
  std::array<std::int32_t, 64> step{};
};

// One (zero run, nonzero value) pair of the AC run-length code. The end of
// a block's run list stands for the EOB marker.
struct RunValue {
  std::uint8_t zero_run = 0;
  std::int32_t value = 0;

  bool operator==(const RunValue&) const = default;
};

struct CoefficientStream {
  std::vector<std::int32_t> dc_diffs;            // one per block
  std::vector<std::vector<RunValue>> ac_runs;    // one run list per block
};

// Scan position -> block index of the standard zigzag traversal.
extern const std::array<std::uint8_t, 64> kZigzagIndex;

// BT.601 full-range conversion, rounded to nearest and clamped to [0,255].
std::array<ImagePlane, 3> rgb_to_ycbcr(const ImagePlane& r, const ImagePlane& g,
                                       const ImagePlane& b);
std::array<ImagePlane, 3> ycbcr_to_rgb(const ImagePlane& y, const ImagePlane& cb,
                                       const ImagePlane& cr);

// Row-major 8x8 blocks; right/bottom edges are padded by replicating the
// last column/row. merge_blocks discards the padding again.
std::vector<Block> split_blocks(const ImagePlane& plane);
ImagePlane merge_blocks(std::span<const Block> blocks, std::uint32_t width,
                        std::uint32_t height);

// Orthonormal 2-D DCT-II: F(u,v) = 1/4 C(u)C(v) sum f(x,y) cos((2x+1)u pi/16)
// cos((2y+1)v pi/16), C(0) = 1/sqrt(2). Input blocks are expected to be
// level-shifted by -128 beforehand.
Block fdct(const Block& block);
Block idct(const Block& block);

// q = round-half-away-from-zero(F / step); dequantize multiplies back.
QuantizedBlock quantize(const Block& coeffs, const QuantTable& table);
Block dequantize(const QuantizedBlock& coeffs, const QuantTable& table);

ZigzagVector zigzag(const QuantizedBlock& block);
QuantizedBlock inverse_zigzag(const ZigzagVector& vec);

// out[0] = in[0], out[i] = in[i] - in[i-1]; decode is the prefix sum.
std::vector<std::int32_t> dpcm_encode(std::span<const std::int32_t> dc_values);
std::vector<std::int32_t> dpcm_decode(std::span<const std::int32_t> diffs);

// Run-length code of the 63 AC entries in scan order; trailing zeros are
// dropped (the implicit EOB). rlc_decode reconstructs all 63 entries.
std::vector<RunValue> rlc_encode(std::span<const std::int32_t> ac_values);
std::vector<std::int32_t> rlc_decode(std::span<const RunValue> runs);

// Conventional luminance table scaled linearly by quality in [1,100]
// (50 = unscaled), steps clamped to [1,255].
QuantTable default_quant_table(int quality);

// Symbol mapping shared by both entropy backends: signed values map through
// n >= 0 -> 2n, n < 0 -> 2|n|-1; run lengths and the end-of-block marker
// occupy a reserved range at the top of the alphabet.
inline constexpr Symbol kRunSymbolBase = 0xFF00;
inline constexpr Symbol kEndOfBlockSymbol = 0xFFFF;

Symbol signed_to_symbol(std::int32_t value);
std::int32_t symbol_to_signed(Symbol symbol);

std::vector<Symbol> coefficients_to_symbols(const CoefficientStream& stream);
CoefficientStream symbols_to_coefficients(std::span<const Symbol> symbols,
                                          std::size_t block_count);

// Full transform chain down to the flat symbol stream (level shift, blocks,
// DCT, quantization, zigzag, DPCM/RLC, symbol mapping).
std::vector<Symbol> pipeline_symbols(const ImagePlane& plane,
                                     const QuantTable& table);

// Assembles a pipeline-source container: payload = 64 quantizer-step bytes
// followed by the entropy-coded bits.
std::vector<std::uint8_t> encode_pipeline_container(std::span<const Symbol> symbols,
                                                    const QuantTable& table,
                                                    Codec codec,
                                                    std::uint32_t width,
                                                    std::uint32_t height);

std::vector<std::uint8_t> compress_plane(const ImagePlane& plane,
                                         const QuantTable& table, Codec codec);
ImagePlane decompress_plane(std::span<const std::uint8_t> bytes);

// Peak signal-to-noise ratio in dB against a 255 peak; infinity for
// identical planes.
double psnr(const ImagePlane& a, const ImagePlane& b);

}  // namespace entc
