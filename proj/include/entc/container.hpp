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

#include <cstdint>
#include <span>
#include <vector>

#include "entc/bitio.hpp"
#include "entc/symbol_model.hpp"

namespace entc {

enum class Codec : std::uint8_t { huffman = 0, arithmetic = 1 };
enum class Source : std::uint8_t { raw = 0, pipeline = 1 };

const char* to_string(Codec codec);
const char* to_string(Source source);

// Compressed stream container. Serialized layout, all integers big-endian:
//
//   magic "ENTC" (4 bytes)
//   version       u8  (= 1)
//   codec         u8  (0 = huffman, 1 = arithmetic)
//   source        u8  (0 = raw, 1 = pipeline)
//   width         u32
//   height        u32
//   symbol_count  u64
//   model_entry_count u16
//   entries       (symbol u16, count u32) x entry_count, ascending symbol
//   payload_bit_length u64
//   payload bytes, zero-padded to the byte boundary
//
// Pipeline-source payloads start with the 64 quantizer steps (one byte
// each) followed by the entropy-coded bits; raw payloads are entropy bits
// only.
struct Container {
  std::uint8_t version = 1;
  Codec codec = Codec::huffman;
  Source source = Source::raw;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint64_t symbol_count = 0;
  FrequencyTable table;
  BitSequence payload;
};

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr char kContainerMagic[4] = {'E', 'N', 'T', 'C'};

std::vector<std::uint8_t> write_container(const Container& container);
Container read_container(std::span<const std::uint8_t> bytes);

}  // namespace entc
