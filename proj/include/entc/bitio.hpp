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
#include <string>
#include <string_view>
#include <vector>

#include "entc/error.hpp"

namespace entc {

// A bit string packed MSB-first: bit i of the sequence lives in
// payload[i / 8] at position 7 - (i % 8). The final byte is zero-padded.
struct BitSequence {
  std::vector<std::uint8_t> payload;
  std::uint64_t bit_length = 0;

  bool operator==(const BitSequence&) const = default;
};

// True when payload size and padding satisfy the BitSequence contract.
bool bit_sequence_valid(const BitSequence& seq);

// "1011" -> the corresponding 4-bit sequence. Characters other than 0/1
// are rejected with bad_config.
BitSequence bits_from_string(std::string_view bits);
std::string to_string(const BitSequence& seq);

class BitWriter {
 public:
  void write_bit(unsigned bit) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (nbits_ & 7));
    ++nbits_;
  }

  // Appends bits MSB-first; values must be 0 or 1.
  void write_bits(std::span<const std::uint8_t> bits);

  // Appends a whole packed fragment (used for Huffman codewords).
  void append(const BitSequence& fragment);

  std::uint64_t bit_count() const { return nbits_; }

  // Moves out the accumulated sequence; the writer is empty afterwards.
  BitSequence finish();

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t nbits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(const BitSequence& seq) : seq_(&seq) {}

  unsigned read_bit() {
    if (pos_ >= seq_->bit_length)
      throw Error(Errc::out_of_bits, "read past end of bit sequence");
    unsigned bit = (seq_->payload[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
    ++pos_;
    return bit;
  }

  // Next n bits in write order.
  std::vector<std::uint8_t> read_bits(std::uint64_t n);

  void skip(std::uint64_t n);

  std::uint64_t position() const { return pos_; }
  std::uint64_t remaining() const { return seq_->bit_length - pos_; }

 private:
  const BitSequence* seq_;
  std::uint64_t pos_ = 0;
};

}  // namespace entc
