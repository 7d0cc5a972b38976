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
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "entc/error.hpp"

namespace entc {

// 16-bit alphabet: wide enough for raw 8-bit samples and for the transform
// pipeline's mapped coefficient symbols.
using Symbol = std::uint16_t;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kAlphabetSize = 1u << 16;

// Exact occurrence counts of the symbols in a stream. Entries are kept in
// ascending symbol order; symbols that never occur are absent, so every
// stored count is at least 1.
class FrequencyTable {
 public:
  using Entry = std::pair<Symbol, std::uint64_t>;

  static FrequencyTable from_symbols(std::span<const Symbol> symbols);
  static FrequencyTable from_counts(std::vector<Entry> counts);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(Symbol symbol) const;  // 0 when absent
  bool contains(Symbol symbol) const { return count(symbol) != 0; }

  bool operator==(const FrequencyTable&) const = default;

 private:
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
};

struct ModelEntry {
  Symbol symbol;
  std::uint64_t count;
  std::uint64_t cum_low;   // cumulative count of all earlier entries
  std::uint64_t cum_high;  // cum_low + count
};

// Probabilities and cumulative ranges derived from a FrequencyTable.
// Entries are ordered by descending probability, ties by ascending symbol
// value; the half-open ranges [cum_low/total, cum_high/total) partition
// [0, 1) in that order. Probabilities are exact rationals count/total.
class ProbabilityModel {
 public:
  explicit ProbabilityModel(const FrequencyTable& table);

  std::span<const ModelEntry> entries() const { return entries_; }
  std::uint64_t total() const { return total_; }

  Rational probability(std::size_t index) const;
  std::pair<Rational, Rational> range(std::size_t index) const;
  std::pair<Rational, Rational> lookup_range(Symbol symbol) const;

  bool contains(Symbol symbol) const {
    return index_[symbol] >= 0;
  }
  std::size_t index_of(Symbol symbol) const;  // unknown_symbol when absent

  // Entry whose [cum_low, cum_high) contains target; target must be < total.
  std::size_t find_by_cum(std::uint64_t target) const;

 private:
  std::vector<ModelEntry> entries_;
  std::vector<std::int32_t> index_;  // symbol -> entry index, -1 when absent
  std::uint64_t total_ = 0;
};

FrequencyTable build_frequency_table(std::span<const Symbol> symbols);
ProbabilityModel to_probability_model(const FrequencyTable& table);

// Table entries in model order (descending count, ties ascending symbol).
// Shared by ProbabilityModel and the Huffman tree builder so both consume
// the same deterministic ordering.
std::vector<FrequencyTable::Entry> model_order(const FrequencyTable& table);

}  // namespace entc
