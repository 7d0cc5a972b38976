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

// Half-open coding interval [low, high) over exact rationals.
struct CoderInterval {
  Rational low = 0;
  Rational high = 1;

  Rational range() const { return high - low; }
  bool operator==(const CoderInterval&) const = default;
};

// Exact-rational reference coder. Each symbol narrows the interval by
//   low'  = low + range * range_low(symbol)
//   high' = low + range * range_high(symbol)
// both against the interval state from before the symbol, so the final
// width equals the product of the symbol probabilities. Capped at 64
// symbols: the rationals grow exponentially and this coder exists for
// oracle checks, not production use.
CoderInterval arith_encode_exact(std::span<const Symbol> symbols,
                                 const ProbabilityModel& model);

// Shortest bit string b such that the dyadic interval
// [0.b, 0.b + 2^-|b|) is contained in [low, high); ties broken toward the
// smallest value. The empty string encodes [0, 1).
BitSequence select_codeword(const CoderInterval& interval);

// Number of window bits in the integer coder (and the zero-fill slack the
// decoder accepts past the end of a stream).
inline constexpr unsigned kArithPrecisionBits = 31;

// Largest model total the integer coder accepts: the post-renormalization
// window always exceeds a quarter, so totals up to a quarter keep every
// symbol a nonzero slice.
inline constexpr std::uint64_t kArithMaxTotal = 1ull << (kArithPrecisionBits - 2);

// Production integer coder: 31-bit window, underflow handled by
// pending-bit counting, flush emits two disambiguating bits plus any
// pending bits. An empty message therefore encodes to at most 2 bits.
BitSequence arith_encode(std::span<const Symbol> symbols,
                         const ProbabilityModel& model);

// Decodes exactly symbol_count symbols. Reads past the payload are served
// as zero bits up to kArithPrecisionBits (the legitimate flush slack);
// needing more raises truncated_stream.
std::vector<Symbol> arith_decode(const BitSequence& bits,
                                 const ProbabilityModel& model,
                                 std::uint64_t symbol_count);

}  // namespace entc
