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

#include "entc/bitio.hpp"

namespace entc {

bool bit_sequence_valid(const BitSequence& seq) {
  const std::uint64_t bytes = (seq.bit_length + 7) / 8;
  if (seq.payload.size() != bytes) return false;
  const unsigned tail = seq.bit_length & 7;
  if (tail != 0) {
    const std::uint8_t mask = static_cast<std::uint8_t>(0xFFu >> tail);
    if ((seq.payload.back() & mask) != 0) return false;
  }
  return true;
}

BitSequence bits_from_string(std::string_view bits) {
  BitWriter w;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw Error(Errc::bad_config, "bit string may contain only 0 and 1");
    w.write_bit(c == '1');
  }
  return w.finish();
}

std::string to_string(const BitSequence& seq) {
  std::string out;
  out.reserve(seq.bit_length);
  for (std::uint64_t i = 0; i < seq.bit_length; ++i)
    out.push_back(((seq.payload[i >> 3] >> (7 - (i & 7))) & 1u) ? '1' : '0');
  return out;
}

void BitWriter::write_bits(std::span<const std::uint8_t> bits) {
  for (std::uint8_t b : bits) write_bit(b != 0);
}

void BitWriter::append(const BitSequence& fragment) {
  const unsigned shift = nbits_ & 7;
  if (shift == 0) {
    bytes_.insert(bytes_.end(), fragment.payload.begin(), fragment.payload.end());
    nbits_ += fragment.bit_length;
    return;
  }
  // Source bytes straddle the partial tail byte.
  for (std::uint8_t b : fragment.payload) {
    bytes_.back() |= static_cast<std::uint8_t>(b >> shift);
    bytes_.push_back(static_cast<std::uint8_t>(b << (8 - shift)));
  }
  nbits_ += fragment.bit_length;
  // Drop bytes the fragment's own padding could not have reached.
  bytes_.resize((nbits_ + 7) / 8);
  const unsigned tail = nbits_ & 7;
  if (tail != 0)
    bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - tail));
}

BitSequence BitWriter::finish() {
  BitSequence out{std::move(bytes_), nbits_};
  bytes_.clear();
  nbits_ = 0;
  return out;
}

std::vector<std::uint8_t> BitReader::read_bits(std::uint64_t n) {
  if (n > remaining())
    throw Error(Errc::out_of_bits, "read past end of bit sequence");
  std::vector<std::uint8_t> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i)
    out.push_back(static_cast<std::uint8_t>(read_bit()));
  return out;
}

void BitReader::skip(std::uint64_t n) {
  if (n > remaining())
    throw Error(Errc::out_of_bits, "skip past end of bit sequence");
  pos_ += n;
}

}  // namespace entc
