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

#include "entc/arith.hpp"

namespace entc {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::uint64_t kTopValue = (1ull << kArithPrecisionBits) - 1;
constexpr std::uint64_t kHalf = 1ull << (kArithPrecisionBits - 1);
constexpr std::uint64_t kFirstQuarter = 1ull << (kArithPrecisionBits - 2);
constexpr std::uint64_t kThirdQuarter = kHalf + kFirstQuarter;

constexpr std::size_t kExactCoderLimit = 64;

void check_total(const ProbabilityModel& model) {
  if (model.total() > kArithMaxTotal)
    throw Error(Errc::bad_config,
                "model total " + std::to_string(model.total()) +
                    " exceeds the coder limit " + std::to_string(kArithMaxTotal));
}

}  // namespace

CoderInterval arith_encode_exact(std::span<const Symbol> symbols,
                                 const ProbabilityModel& model) {
  if (symbols.size() > kExactCoderLimit)
    throw Error(Errc::bad_config,
                "exact reference coder is capped at " +
                    std::to_string(kExactCoderLimit) + " symbols");
  Rational low = 0;
  Rational range = 1;
  for (Symbol s : symbols) {
    const auto [range_low, range_high] = model.range(model.index_of(s));
    const Rational new_low = low + range * range_low;
    const Rational new_high = low + range * range_high;
    low = new_low;
    range = new_high - new_low;
  }
  return CoderInterval{low, low + range};
}

BitSequence select_codeword(const CoderInterval& interval) {
  const cpp_int low_num = numerator(interval.low);
  const cpp_int low_den = denominator(interval.low);
  for (unsigned len = 0;; ++len) {
    // Smallest k with k / 2^len >= low.
    const cpp_int scaled = low_num << len;
    cpp_int k = scaled / low_den;
    if (k * low_den < scaled) ++k;
    const Rational upper(k + 1, cpp_int(1) << len);
    if (upper <= interval.high) {
      BitWriter out;
      for (unsigned i = len; i-- > 0;)
        out.write_bit(bit_test(k, i));
      return out.finish();
    }
  }
}

BitSequence arith_encode(std::span<const Symbol> symbols,
                         const ProbabilityModel& model) {
  check_total(model);
  const std::uint64_t total = model.total();
  BitWriter out;
  std::uint64_t low = 0;
  std::uint64_t high = kTopValue;
  std::uint64_t pending = 0;

  auto emit = [&](unsigned bit) {
    out.write_bit(bit);
    for (; pending > 0; --pending) out.write_bit(!bit);
  };

  for (Symbol s : symbols) {
    const ModelEntry& e = model.entries()[model.index_of(s)];
    const std::uint64_t range = high - low + 1;
    high = low + range * e.cum_high / total - 1;
    low = low + range * e.cum_low / total;
    for (;;) {
      if (high < kHalf) {
        emit(0);
      } else if (low >= kHalf) {
        emit(1);
        low -= kHalf;
        high -= kHalf;
      } else if (low >= kFirstQuarter && high < kThirdQuarter) {
        ++pending;
        low -= kFirstQuarter;
        high -= kFirstQuarter;
      } else {
        break;
      }
      low <<= 1;
      high = (high << 1) | 1;
    }
  }

  // Two bits pin the final interval; pending underflow bits ride along.
  ++pending;
  emit(low < kFirstQuarter ? 0 : 1);
  return out.finish();
}

std::vector<Symbol> arith_decode(const BitSequence& bits,
                                 const ProbabilityModel& model,
                                 std::uint64_t symbol_count) {
  check_total(model);
  std::vector<Symbol> out;
  out.reserve(symbol_count);
  if (symbol_count == 0) return out;

  const std::uint64_t total = model.total();
  BitReader reader(bits);
  std::uint64_t zero_fill = 0;
  auto next_bit = [&]() -> std::uint64_t {
    if (reader.remaining() > 0) return reader.read_bit();
    if (++zero_fill > kArithPrecisionBits)
      throw Error(Errc::truncated_stream, "arithmetic bit stream ended early");
    return 0;
  };

  std::uint64_t value = 0;
  for (unsigned i = 0; i < kArithPrecisionBits; ++i)
    value = (value << 1) | next_bit();

  std::uint64_t low = 0;
  std::uint64_t high = kTopValue;
  for (std::uint64_t n = 0; n < symbol_count; ++n) {
    const std::uint64_t range = high - low + 1;
    const std::uint64_t target = ((value - low + 1) * total - 1) / range;
    const std::size_t idx = model.find_by_cum(target);
    const ModelEntry& e = model.entries()[idx];
    out.push_back(e.symbol);
    high = low + range * e.cum_high / total - 1;
    low = low + range * e.cum_low / total;
    for (;;) {
      if (high < kHalf) {
        // nothing to subtract
      } else if (low >= kHalf) {
        value -= kHalf;
        low -= kHalf;
        high -= kHalf;
      } else if (low >= kFirstQuarter && high < kThirdQuarter) {
        value -= kFirstQuarter;
        low -= kFirstQuarter;
        high -= kFirstQuarter;
      } else {
        break;
      }
      low <<= 1;
      high = (high << 1) | 1;
      value = (value << 1) | next_bit();
    }
  }
  return out;
}

}  // namespace entc
