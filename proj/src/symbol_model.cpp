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

#include "entc/symbol_model.hpp"

#include <algorithm>

namespace entc {

FrequencyTable FrequencyTable::from_symbols(std::span<const Symbol> symbols) {
  if (symbols.empty())
    throw Error(Errc::empty_input, "cannot build a frequency table from an empty stream");
  std::vector<std::uint64_t> counts(kAlphabetSize, 0);
  for (Symbol s : symbols) ++counts[s];
  FrequencyTable table;
  for (std::size_t s = 0; s < kAlphabetSize; ++s)
    if (counts[s] != 0)
      table.entries_.emplace_back(static_cast<Symbol>(s), counts[s]);
  table.total_ = symbols.size();
  return table;
}

FrequencyTable FrequencyTable::from_counts(std::vector<Entry> counts) {
  if (counts.empty())
    throw Error(Errc::empty_input, "frequency table needs at least one entry");
  std::sort(counts.begin(), counts.end());
  FrequencyTable table;
  table.entries_ = std::move(counts);
  for (std::size_t i = 0; i < table.entries_.size(); ++i) {
    if (table.entries_[i].second == 0)
      throw Error(Errc::bad_config, "frequency counts must be positive");
    if (i > 0 && table.entries_[i].first == table.entries_[i - 1].first)
      throw Error(Errc::bad_config, "duplicate symbol in frequency table");
    table.total_ += table.entries_[i].second;
  }
  return table;
}

std::uint64_t FrequencyTable::count(Symbol symbol) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             Entry{symbol, 0});
  if (it == entries_.end() || it->first != symbol) return 0;
  return it->second;
}

std::vector<FrequencyTable::Entry> model_order(const FrequencyTable& table) {
  std::vector<FrequencyTable::Entry> ordered(table.entries().begin(),
                                             table.entries().end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  return ordered;
}

ProbabilityModel::ProbabilityModel(const FrequencyTable& table)
    : index_(kAlphabetSize, -1), total_(table.total()) {
  auto ordered = model_order(table);
  entries_.reserve(ordered.size());
  std::uint64_t cum = 0;
  for (const auto& [symbol, count] : ordered) {
    entries_.push_back(ModelEntry{symbol, count, cum, cum + count});
    index_[symbol] = static_cast<std::int32_t>(entries_.size() - 1);
    cum += count;
  }
}

Rational ProbabilityModel::probability(std::size_t index) const {
  const ModelEntry& e = entries_.at(index);
  return Rational(e.count, total_);
}

std::pair<Rational, Rational> ProbabilityModel::range(std::size_t index) const {
  const ModelEntry& e = entries_.at(index);
  return {Rational(e.cum_low, total_), Rational(e.cum_high, total_)};
}

std::pair<Rational, Rational> ProbabilityModel::lookup_range(Symbol symbol) const {
  return range(index_of(symbol));
}

std::size_t ProbabilityModel::index_of(Symbol symbol) const {
  std::int32_t idx = index_[symbol];
  if (idx < 0)
    throw Error(Errc::unknown_symbol,
                "symbol " + std::to_string(symbol) + " not in model");
  return static_cast<std::size_t>(idx);
}

std::size_t ProbabilityModel::find_by_cum(std::uint64_t target) const {
  // First entry with cum_high > target.
  auto it = std::upper_bound(entries_.begin(), entries_.end(), target,
                             [](std::uint64_t t, const ModelEntry& e) {
                               return t < e.cum_high;
                             });
  return static_cast<std::size_t>(it - entries_.begin());
}

FrequencyTable build_frequency_table(std::span<const Symbol> symbols) {
  return FrequencyTable::from_symbols(symbols);
}

ProbabilityModel to_probability_model(const FrequencyTable& table) {
  return ProbabilityModel(table);
}

}  // namespace entc
