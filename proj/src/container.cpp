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

#include "entc/container.hpp"

#include <limits>

namespace entc {

const char* to_string(Codec codec) {
  return codec == Codec::huffman ? "huffman" : "arithmetic";
}

const char* to_string(Source source) {
  return source == Source::raw ? "raw" : "pipeline";
}

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>(v >> shift));
}

class ByteParser {
 public:
  explicit ByteParser(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8() { return take(1)[0]; }
  std::uint16_t u16() {
    auto b = take(2);
    return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
  }
  std::uint32_t u32() {
    auto b = take(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | b[i];
    return v;
  }
  std::uint64_t u64() {
    auto b = take(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
    return v;
  }
  std::span<const std::uint8_t> take(std::size_t n) {
    if (n > bytes_.size() - pos_)
      throw Error(Errc::bad_container, "container truncated");
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> write_container(const Container& container) {
  if (container.version != kContainerVersion)
    throw Error(Errc::bad_container, "unsupported container version");
  if (container.codec != Codec::huffman && container.codec != Codec::arithmetic)
    throw Error(Errc::bad_container, "bad codec id");
  if (container.source != Source::raw && container.source != Source::pipeline)
    throw Error(Errc::bad_container, "bad source id");
  if (container.table.size() == 0)
    throw Error(Errc::bad_container, "frequency table must be non-empty");
  if (container.table.size() > std::numeric_limits<std::uint16_t>::max())
    throw Error(Errc::bad_container, "too many model entries for the container");
  if (!bit_sequence_valid(container.payload))
    throw Error(Errc::bad_container, "payload bytes inconsistent with bit length");

  std::vector<std::uint8_t> out;
  out.insert(out.end(), kContainerMagic, kContainerMagic + 4);
  out.push_back(container.version);
  out.push_back(static_cast<std::uint8_t>(container.codec));
  out.push_back(static_cast<std::uint8_t>(container.source));
  put_u32(out, container.width);
  put_u32(out, container.height);
  put_u64(out, container.symbol_count);
  put_u16(out, static_cast<std::uint16_t>(container.table.size()));
  for (const auto& [symbol, count] : container.table.entries()) {
    if (count > std::numeric_limits<std::uint32_t>::max())
      throw Error(Errc::bad_container, "count too large for the container");
    put_u16(out, symbol);
    put_u32(out, static_cast<std::uint32_t>(count));
  }
  put_u64(out, container.payload.bit_length);
  out.insert(out.end(), container.payload.payload.begin(),
             container.payload.payload.end());
  return out;
}

Container read_container(std::span<const std::uint8_t> bytes) {
  ByteParser p(bytes);
  auto magic = p.take(4);
  for (int i = 0; i < 4; ++i)
    if (magic[i] != static_cast<std::uint8_t>(kContainerMagic[i]))
      throw Error(Errc::bad_container, "bad magic");

  Container c;
  c.version = p.u8();
  if (c.version != kContainerVersion)
    throw Error(Errc::bad_container, "unsupported container version");
  const std::uint8_t codec = p.u8();
  if (codec > 1) throw Error(Errc::bad_container, "bad codec id");
  c.codec = static_cast<Codec>(codec);
  const std::uint8_t source = p.u8();
  if (source > 1) throw Error(Errc::bad_container, "bad source id");
  c.source = static_cast<Source>(source);
  c.width = p.u32();
  c.height = p.u32();
  c.symbol_count = p.u64();

  const std::uint16_t entry_count = p.u16();
  if (entry_count == 0)
    throw Error(Errc::bad_container, "frequency table must be non-empty");
  std::vector<FrequencyTable::Entry> entries;
  entries.reserve(entry_count);
  for (std::uint16_t i = 0; i < entry_count; ++i) {
    const Symbol symbol = p.u16();
    const std::uint32_t count = p.u32();
    if (count == 0)
      throw Error(Errc::bad_container, "zero count in frequency table");
    if (!entries.empty() && symbol <= entries.back().first)
      throw Error(Errc::bad_container, "table entries not in ascending symbol order");
    entries.emplace_back(symbol, count);
  }
  c.table = FrequencyTable::from_counts(std::move(entries));

  c.payload.bit_length = p.u64();
  const std::uint64_t payload_bytes = (c.payload.bit_length + 7) / 8;
  if (payload_bytes != p.remaining())
    throw Error(Errc::bad_container, "payload length inconsistent with bit length");
  auto raw = p.take(static_cast<std::size_t>(payload_bytes));
  c.payload.payload.assign(raw.begin(), raw.end());
  if (!bit_sequence_valid(c.payload))
    throw Error(Errc::bad_container, "nonzero padding bits in payload");
  return c;
}

}  // namespace entc
