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

#include "entc/codec.hpp"

#include "entc/arith.hpp"
#include "entc/huffman.hpp"

namespace entc {

EncodedStream entropy_encode(std::span<const Symbol> symbols, Codec codec) {
  EncodedStream out;
  out.table = build_frequency_table(symbols);
  if (codec == Codec::huffman) {
    const HuffmanTree tree = build_tree(out.table);
    const HuffmanCodebook codebook = derive_codebook(tree);
    out.bits = huffman_encode(symbols, codebook);
  } else {
    const ProbabilityModel model(out.table);
    out.bits = arith_encode(symbols, model);
  }
  return out;
}

std::vector<Symbol> entropy_decode(const BitSequence& bits,
                                   const FrequencyTable& table, Codec codec,
                                   std::uint64_t symbol_count) {
  if (codec == Codec::huffman)
    return huffman_decode(bits, build_tree(table), symbol_count);
  return arith_decode(bits, ProbabilityModel(table), symbol_count);
}

std::vector<std::uint8_t> encode_raw_container(std::span<const Symbol> symbols,
                                               Codec codec, std::uint32_t width,
                                               std::uint32_t height) {
  EncodedStream encoded = entropy_encode(symbols, codec);
  Container container;
  container.codec = codec;
  container.source = Source::raw;
  container.width = width;
  container.height = height;
  container.symbol_count = symbols.size();
  container.table = std::move(encoded.table);
  container.payload = std::move(encoded.bits);
  return write_container(container);
}

std::vector<std::uint8_t> compress_raw(const ImagePlane& plane, Codec codec) {
  if (plane.width == 0 || plane.height == 0)
    throw Error(Errc::shape_error, "plane must be non-empty");
  std::vector<Symbol> symbols(plane.samples.begin(), plane.samples.end());
  return encode_raw_container(symbols, codec, plane.width, plane.height);
}

std::vector<std::uint8_t> compress_image(const ImagePlane& plane, Codec codec,
                                         Source source, int quality) {
  if (source == Source::raw) return compress_raw(plane, codec);
  return compress_plane(plane, default_quant_table(quality), codec);
}

ImagePlane decompress_image(std::span<const std::uint8_t> bytes) {
  const Container container = read_container(bytes);
  if (container.source == Source::pipeline) return decompress_plane(bytes);

  const std::uint64_t pixels =
      static_cast<std::uint64_t>(container.width) * container.height;
  if (container.symbol_count != pixels)
    throw Error(Errc::bad_container, "symbol count does not match plane size");

  const std::vector<Symbol> symbols = entropy_decode(
      container.payload, container.table, container.codec, container.symbol_count);

  ImagePlane plane{container.width, container.height, {}};
  plane.samples.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (s > 255)
      throw Error(Errc::bad_container, "raw sample out of 8-bit range");
    plane.samples.push_back(static_cast<std::uint8_t>(s));
  }
  return plane;
}

}  // namespace entc
