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

#include "entc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "entc/codec.hpp"

namespace entc {

const std::array<std::uint8_t, 64> kZigzagIndex = {
    0,  1,  8,  16, 9,  2,  3,  10,  //
    17, 24, 32, 25, 18, 11, 4,  5,   //
    12, 19, 26, 33, 40, 48, 41, 34,  //
    27, 20, 13, 6,  7,  14, 21, 28,  //
    35, 42, 49, 56, 57, 50, 43, 36,  //
    29, 22, 15, 23, 30, 37, 44, 51,  //
    58, 59, 52, 45, 38, 31, 39, 46,  //
    53, 60, 61, 54, 47, 55, 62, 63};

namespace {

std::uint8_t clamp_to_byte(double v) {
  const long r = std::lround(v);
  if (r < 0) return 0;
  if (r > 255) return 255;
  return static_cast<std::uint8_t>(r);
}

void require_same_shape(const ImagePlane& a, const ImagePlane& b) {
  if (a.width != b.width || a.height != b.height)
    throw Error(Errc::shape_error, "image planes differ in size");
}

// 1-D DCT-II basis: row u holds 1/2 C(u) cos((2x+1) u pi / 16).
const std::array<double, 64>& dct_basis() {
  static const std::array<double, 64> basis = [] {
    std::array<double, 64> a{};
    for (int u = 0; u < 8; ++u) {
      const double cu = (u == 0) ? 1.0 / std::numbers::sqrt2 : 1.0;
      for (int x = 0; x < 8; ++x)
        a[static_cast<std::size_t>(u) * 8 + x] =
            0.5 * cu * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
    }
    return a;
  }();
  return basis;
}

constexpr std::array<std::int32_t, 64> kBaseLuminanceTable = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99};

void validate_quant_table(const QuantTable& table) {
  for (std::int32_t step : table.step)
    if (step < 1 || step > 255)
      throw Error(Errc::bad_config, "quantizer steps must lie in [1,255]");
}

}  // namespace

std::array<ImagePlane, 3> rgb_to_ycbcr(const ImagePlane& r, const ImagePlane& g,
                                       const ImagePlane& b) {
  require_same_shape(r, g);
  require_same_shape(r, b);
  ImagePlane y{r.width, r.height, std::vector<std::uint8_t>(r.samples.size())};
  ImagePlane cb = y;
  ImagePlane cr = y;
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const double R = r.samples[i], G = g.samples[i], B = b.samples[i];
    y.samples[i] = clamp_to_byte(0.299 * R + 0.587 * G + 0.114 * B);
    cb.samples[i] = clamp_to_byte(128.0 - 0.168736 * R - 0.331264 * G + 0.5 * B);
    cr.samples[i] = clamp_to_byte(128.0 + 0.5 * R - 0.418688 * G - 0.081312 * B);
  }
  return {std::move(y), std::move(cb), std::move(cr)};
}

std::array<ImagePlane, 3> ycbcr_to_rgb(const ImagePlane& y, const ImagePlane& cb,
                                       const ImagePlane& cr) {
  require_same_shape(y, cb);
  require_same_shape(y, cr);
  ImagePlane r{y.width, y.height, std::vector<std::uint8_t>(y.samples.size())};
  ImagePlane g = r;
  ImagePlane b = r;
  for (std::size_t i = 0; i < y.samples.size(); ++i) {
    const double Y = y.samples[i];
    const double Cb = cb.samples[i] - 128.0;
    const double Cr = cr.samples[i] - 128.0;
    r.samples[i] = clamp_to_byte(Y + 1.402 * Cr);
    g.samples[i] = clamp_to_byte(Y - 0.344136 * Cb - 0.714136 * Cr);
    b.samples[i] = clamp_to_byte(Y + 1.772 * Cb);
  }
  return {std::move(r), std::move(g), std::move(b)};
}

std::vector<Block> split_blocks(const ImagePlane& plane) {
  const std::uint32_t block_cols = (plane.width + 7) / 8;
  const std::uint32_t block_rows = (plane.height + 7) / 8;
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(block_cols) * block_rows);
  for (std::uint32_t br = 0; br < block_rows; ++br) {
    for (std::uint32_t bc = 0; bc < block_cols; ++bc) {
      Block block;
      for (int y = 0; y < 8; ++y) {
        const std::uint32_t sy = std::min(br * 8 + y, plane.height - 1);
        for (int x = 0; x < 8; ++x) {
          const std::uint32_t sx = std::min(bc * 8 + x, plane.width - 1);
          block.at(y, x) = plane.at(sy, sx);
        }
      }
      blocks.push_back(block);
    }
  }
  return blocks;
}

ImagePlane merge_blocks(std::span<const Block> blocks, std::uint32_t width,
                        std::uint32_t height) {
  const std::uint32_t block_cols = (width + 7) / 8;
  const std::uint32_t block_rows = (height + 7) / 8;
  if (blocks.size() != static_cast<std::size_t>(block_cols) * block_rows)
    throw Error(Errc::shape_error, "block count does not match plane size");
  ImagePlane plane{width, height,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height)};
  for (std::uint32_t br = 0; br < block_rows; ++br) {
    for (std::uint32_t bc = 0; bc < block_cols; ++bc) {
      const Block& block = blocks[static_cast<std::size_t>(br) * block_cols + bc];
      for (int y = 0; y < 8 && br * 8 + y < height; ++y)
        for (int x = 0; x < 8 && bc * 8 + x < width; ++x)
          plane.at(br * 8 + y, bc * 8 + x) = clamp_to_byte(block.at(y, x));
    }
  }
  return plane;
}

Block fdct(const Block& block) {
  const auto& A = dct_basis();
  std::array<double, 64> tmp{};
  // tmp = A * f
  for (int u = 0; u < 8; ++u)
    for (int y = 0; y < 8; ++y) {
      double sum = 0;
      for (int x = 0; x < 8; ++x)
        sum += A[static_cast<std::size_t>(u) * 8 + x] * block.at(x, y);
      tmp[static_cast<std::size_t>(u) * 8 + y] = sum;
    }
  // F = tmp * A^T
  Block out;
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      double sum = 0;
      for (int y = 0; y < 8; ++y)
        sum += tmp[static_cast<std::size_t>(u) * 8 + y] *
               A[static_cast<std::size_t>(v) * 8 + y];
      out.at(u, v) = sum;
    }
  return out;
}

Block idct(const Block& block) {
  const auto& A = dct_basis();
  std::array<double, 64> tmp{};
  // tmp = A^T * F
  for (int x = 0; x < 8; ++x)
    for (int v = 0; v < 8; ++v) {
      double sum = 0;
      for (int u = 0; u < 8; ++u)
        sum += A[static_cast<std::size_t>(u) * 8 + x] * block.at(u, v);
      tmp[static_cast<std::size_t>(x) * 8 + v] = sum;
    }
  // f = tmp * A
  Block out;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      double sum = 0;
      for (int v = 0; v < 8; ++v)
        sum += tmp[static_cast<std::size_t>(x) * 8 + v] *
               A[static_cast<std::size_t>(v) * 8 + y];
      out.at(x, y) = sum;
    }
  return out;
}

QuantizedBlock quantize(const Block& coeffs, const QuantTable& table) {
  QuantizedBlock out{};
  for (std::size_t i = 0; i < 64; ++i) {
    if (table.step[i] < 1)
      throw Error(Errc::bad_config, "quantizer steps must be positive");
    out[i] = static_cast<std::int32_t>(std::lround(coeffs.v[i] / table.step[i]));
  }
  return out;
}

Block dequantize(const QuantizedBlock& coeffs, const QuantTable& table) {
  Block out;
  for (std::size_t i = 0; i < 64; ++i)
    out.v[i] = static_cast<double>(coeffs[i]) * table.step[i];
  return out;
}

ZigzagVector zigzag(const QuantizedBlock& block) {
  ZigzagVector out{};
  for (std::size_t i = 0; i < 64; ++i) out[i] = block[kZigzagIndex[i]];
  return out;
}

QuantizedBlock inverse_zigzag(const ZigzagVector& vec) {
  QuantizedBlock out{};
  for (std::size_t i = 0; i < 64; ++i) out[kZigzagIndex[i]] = vec[i];
  return out;
}

std::vector<std::int32_t> dpcm_encode(std::span<const std::int32_t> dc_values) {
  std::vector<std::int32_t> out;
  out.reserve(dc_values.size());
  std::int32_t previous = 0;
  for (std::size_t i = 0; i < dc_values.size(); ++i) {
    out.push_back(i == 0 ? dc_values[0] : dc_values[i] - previous);
    previous = dc_values[i];
  }
  return out;
}

std::vector<std::int32_t> dpcm_decode(std::span<const std::int32_t> diffs) {
  std::vector<std::int32_t> out;
  out.reserve(diffs.size());
  std::int32_t acc = 0;
  for (std::int32_t d : diffs) {
    acc += d;
    out.push_back(acc);
  }
  return out;
}

std::vector<RunValue> rlc_encode(std::span<const std::int32_t> ac_values) {
  if (ac_values.size() != 63)
    throw Error(Errc::shape_error, "run-length input must hold 63 AC entries");
  std::vector<RunValue> out;
  std::uint32_t run = 0;
  for (std::int32_t v : ac_values) {
    if (v == 0) {
      ++run;
      continue;
    }
    out.push_back(RunValue{static_cast<std::uint8_t>(run), v});
    run = 0;
  }
  return out;  // trailing zeros collapse into the implicit EOB
}

std::vector<std::int32_t> rlc_decode(std::span<const RunValue> runs) {
  std::vector<std::int32_t> out(63, 0);
  std::size_t pos = 0;
  for (const RunValue& rv : runs) {
    pos += rv.zero_run;
    if (pos >= 63)
      throw Error(Errc::shape_error, "run-length data overflows the 63 AC entries");
    if (rv.value == 0)
      throw Error(Errc::shape_error, "run-length values must be nonzero");
    out[pos++] = rv.value;
  }
  return out;
}

QuantTable default_quant_table(int quality) {
  if (quality < 1 || quality > 100)
    throw Error(Errc::bad_config, "quality must lie in [1,100]");
  const double scale = (100 - quality) / 50.0;
  QuantTable table;
  for (std::size_t i = 0; i < 64; ++i) {
    const long step = std::lround(kBaseLuminanceTable[i] * scale);
    table.step[i] = static_cast<std::int32_t>(std::clamp(step, 1L, 255L));
  }
  return table;
}

Symbol signed_to_symbol(std::int32_t value) {
  const std::int64_t mapped =
      value >= 0 ? 2 * static_cast<std::int64_t>(value)
                 : 2 * -static_cast<std::int64_t>(value) - 1;
  if (mapped >= kRunSymbolBase)
    throw Error(Errc::bad_config, "coefficient magnitude out of symbol range");
  return static_cast<Symbol>(mapped);
}

std::int32_t symbol_to_signed(Symbol symbol) {
  if (symbol >= kRunSymbolBase)
    throw Error(Errc::bad_container, "reserved symbol where a value was expected");
  if ((symbol & 1) == 0) return static_cast<std::int32_t>(symbol / 2);
  return -static_cast<std::int32_t>((symbol + 1) / 2);
}

std::vector<Symbol> coefficients_to_symbols(const CoefficientStream& stream) {
  if (stream.dc_diffs.size() != stream.ac_runs.size())
    throw Error(Errc::shape_error, "DC and AC streams disagree on block count");
  std::vector<Symbol> out;
  for (std::size_t b = 0; b < stream.dc_diffs.size(); ++b) {
    out.push_back(signed_to_symbol(stream.dc_diffs[b]));
    for (const RunValue& rv : stream.ac_runs[b]) {
      out.push_back(static_cast<Symbol>(kRunSymbolBase + rv.zero_run));
      out.push_back(signed_to_symbol(rv.value));
    }
    out.push_back(kEndOfBlockSymbol);
  }
  return out;
}

CoefficientStream symbols_to_coefficients(std::span<const Symbol> symbols,
                                          std::size_t block_count) {
  CoefficientStream stream;
  stream.dc_diffs.reserve(block_count);
  stream.ac_runs.reserve(block_count);
  std::size_t pos = 0;
  auto next = [&]() -> Symbol {
    if (pos >= symbols.size())
      throw Error(Errc::bad_container, "coefficient stream ended early");
    return symbols[pos++];
  };
  for (std::size_t b = 0; b < block_count; ++b) {
    stream.dc_diffs.push_back(symbol_to_signed(next()));
    std::vector<RunValue> runs;
    for (;;) {
      const Symbol s = next();
      if (s == kEndOfBlockSymbol) break;
      if (s < kRunSymbolBase)
        throw Error(Errc::bad_container, "value symbol where a run was expected");
      const std::uint32_t run = s - kRunSymbolBase;
      if (run > 62)
        throw Error(Errc::bad_container, "zero run too long for an 8x8 block");
      const std::int32_t value = symbol_to_signed(next());
      if (value == 0)
        throw Error(Errc::bad_container, "zero value in run-length data");
      runs.push_back(RunValue{static_cast<std::uint8_t>(run), value});
    }
    stream.ac_runs.push_back(std::move(runs));
  }
  if (pos != symbols.size())
    throw Error(Errc::bad_container, "trailing symbols after the last block");
  return stream;
}

std::vector<Symbol> pipeline_symbols(const ImagePlane& plane,
                                     const QuantTable& table) {
  if (plane.width == 0 || plane.height == 0)
    throw Error(Errc::shape_error, "plane must be non-empty");
  validate_quant_table(table);

  const std::vector<Block> blocks = split_blocks(plane);
  std::vector<std::int32_t> dc_values;
  dc_values.reserve(blocks.size());
  CoefficientStream stream;
  stream.ac_runs.reserve(blocks.size());

  for (const Block& sample_block : blocks) {
    Block shifted = sample_block;
    for (double& v : shifted.v) v -= 128.0;
    const ZigzagVector scan = zigzag(quantize(fdct(shifted), table));
    dc_values.push_back(scan[0]);
    stream.ac_runs.push_back(
        rlc_encode(std::span<const std::int32_t>(scan).subspan(1)));
  }
  stream.dc_diffs = dpcm_encode(dc_values);
  return coefficients_to_symbols(stream);
}

std::vector<std::uint8_t> encode_pipeline_container(std::span<const Symbol> symbols,
                                                    const QuantTable& table,
                                                    Codec codec,
                                                    std::uint32_t width,
                                                    std::uint32_t height) {
  validate_quant_table(table);
  EncodedStream encoded = entropy_encode(symbols, codec);

  BitSequence steps;
  steps.payload.reserve(64);
  for (std::int32_t step : table.step)
    steps.payload.push_back(static_cast<std::uint8_t>(step));
  steps.bit_length = 64 * 8;

  BitWriter payload;
  payload.append(steps);
  payload.append(encoded.bits);

  Container container;
  container.codec = codec;
  container.source = Source::pipeline;
  container.width = width;
  container.height = height;
  container.symbol_count = symbols.size();
  container.table = std::move(encoded.table);
  container.payload = payload.finish();
  return write_container(container);
}

std::vector<std::uint8_t> compress_plane(const ImagePlane& plane,
                                         const QuantTable& table, Codec codec) {
  const std::vector<Symbol> symbols = pipeline_symbols(plane, table);
  return encode_pipeline_container(symbols, table, codec, plane.width,
                                   plane.height);
}

ImagePlane decompress_plane(std::span<const std::uint8_t> bytes) {
  const Container container = read_container(bytes);
  if (container.source != Source::pipeline)
    throw Error(Errc::bad_container, "not a pipeline-source container");
  if (container.width == 0 || container.height == 0)
    throw Error(Errc::bad_container, "empty plane dimensions");
  if (container.payload.bit_length < 64 * 8)
    throw Error(Errc::bad_container, "payload too short for the quantizer table");

  QuantTable table;
  for (std::size_t i = 0; i < 64; ++i) {
    table.step[i] = container.payload.payload[i];
    if (table.step[i] < 1)
      throw Error(Errc::bad_container, "zero quantizer step");
  }

  BitSequence entropy_bits;
  entropy_bits.payload.assign(container.payload.payload.begin() + 64,
                              container.payload.payload.end());
  entropy_bits.bit_length = container.payload.bit_length - 64 * 8;

  const std::vector<Symbol> symbols = entropy_decode(
      entropy_bits, container.table, container.codec, container.symbol_count);

  const std::size_t block_count =
      static_cast<std::size_t>((container.width + 7) / 8) *
      ((container.height + 7) / 8);
  const CoefficientStream stream = symbols_to_coefficients(symbols, block_count);

  const std::vector<std::int32_t> dc_values = dpcm_decode(stream.dc_diffs);
  std::vector<Block> blocks;
  blocks.reserve(block_count);
  for (std::size_t b = 0; b < block_count; ++b) {
    ZigzagVector scan{};
    scan[0] = dc_values[b];
    const std::vector<std::int32_t> ac = rlc_decode(stream.ac_runs[b]);
    std::copy(ac.begin(), ac.end(), scan.begin() + 1);
    Block sample = idct(dequantize(inverse_zigzag(scan), table));
    for (double& v : sample.v) v += 128.0;
    blocks.push_back(sample);
  }
  return merge_blocks(blocks, container.width, container.height);
}

double psnr(const ImagePlane& a, const ImagePlane& b) {
  require_same_shape(a, b);
  if (a.samples.empty())
    throw Error(Errc::shape_error, "cannot compare empty planes");
  double sum_sq = 0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const double d = static_cast<double>(a.samples[i]) - b.samples[i];
    sum_sq += d * d;
  }
  const double mse = sum_sq / static_cast<double>(a.samples.size());
  if (mse == 0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace entc
