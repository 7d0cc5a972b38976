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

// Code tree built by repeatedly merging the two minimum-weight nodes.
//
// Determinism: leaves are created in model order (descending count, ties by
// ascending symbol), merged nodes in creation order, and the merge queue is
// ordered by (weight, creation index). Within a merge the heavier child
// takes the 1 branch; on equal weights the earlier-created child does.
class HuffmanTree {
 public:
  struct Node {
    std::uint64_t weight = 0;
    std::int32_t zero_child = -1;  // branch taken on bit 0; -1 marks a leaf
    std::int32_t one_child = -1;
    Symbol symbol = 0;  // meaningful for leaves only
  };

  std::span<const Node> nodes() const { return nodes_; }
  std::int32_t root() const { return root_; }
  bool is_leaf(std::int32_t index) const {
    return nodes_[static_cast<std::size_t>(index)].zero_child < 0;
  }
  std::size_t leaf_count() const { return leaf_count_; }

 private:
  friend HuffmanTree build_tree(const FrequencyTable& table);

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  std::size_t leaf_count_ = 0;
};

// Symbol -> prefix-free codeword. A single-symbol alphabet gets the 1-bit
// code "0" so the decoder stays uniform.
class HuffmanCodebook {
 public:
  struct Entry {
    Symbol symbol;
    BitSequence code;
  };

  std::span<const Entry> entries() const { return entries_; }  // ascending symbol
  bool contains(Symbol symbol) const { return index_[symbol] >= 0; }
  const BitSequence& code(Symbol symbol) const;

 private:
  friend HuffmanCodebook derive_codebook(const HuffmanTree& tree);

  std::vector<Entry> entries_;
  std::vector<std::int32_t> index_ = std::vector<std::int32_t>(kAlphabetSize, -1);
};

HuffmanTree build_tree(const FrequencyTable& table);
HuffmanCodebook derive_codebook(const HuffmanTree& tree);

BitSequence huffman_encode(std::span<const Symbol> symbols,
                           const HuffmanCodebook& codebook);

// Decodes exactly symbol_count symbols. Running out of bits mid-codeword
// raises truncated_stream; bits left over afterwards raise trailing_garbage.
std::vector<Symbol> huffman_decode(const BitSequence& bits,
                                   const HuffmanTree& tree,
                                   std::uint64_t symbol_count);

}  // namespace entc
