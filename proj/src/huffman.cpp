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

#include "entc/huffman.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace entc {

namespace {

struct QueueItem {
  std::uint64_t weight;
  std::uint32_t creation;
  std::int32_t node;

  bool operator>(const QueueItem& other) const {
    if (weight != other.weight) return weight > other.weight;
    return creation > other.creation;
  }
};

}  // namespace

HuffmanTree build_tree(const FrequencyTable& table) {
  HuffmanTree tree;
  const auto ordered = model_order(table);
  tree.leaf_count_ = ordered.size();
  tree.nodes_.reserve(2 * ordered.size() - 1);

  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>> queue;
  std::uint32_t creation = 0;
  for (const auto& [symbol, count] : ordered) {
    tree.nodes_.push_back(HuffmanTree::Node{count, -1, -1, symbol});
    queue.push(QueueItem{count, creation++,
                         static_cast<std::int32_t>(tree.nodes_.size() - 1)});
  }

  while (queue.size() > 1) {
    const QueueItem a = queue.top();  // minimum (weight, creation)
    queue.pop();
    const QueueItem b = queue.top();
    queue.pop();
    // Heavier child takes the 1 branch; on a weight tie a was created
    // earlier and takes it.
    const std::int32_t one = (b.weight > a.weight) ? b.node : a.node;
    const std::int32_t zero = (one == a.node) ? b.node : a.node;
    tree.nodes_.push_back(HuffmanTree::Node{a.weight + b.weight, zero, one, 0});
    queue.push(QueueItem{a.weight + b.weight, creation++,
                         static_cast<std::int32_t>(tree.nodes_.size() - 1)});
  }

  tree.root_ = queue.top().node;
  return tree;
}

HuffmanCodebook derive_codebook(const HuffmanTree& tree) {
  HuffmanCodebook book;

  if (tree.is_leaf(tree.root())) {
    const Symbol s = tree.nodes()[static_cast<std::size_t>(tree.root())].symbol;
    book.entries_.push_back({s, bits_from_string("0")});
    book.index_[s] = 0;
    return book;
  }

  // Iterative depth-first walk; `path` holds the branch bits of the node
  // being visited, ancestors' bits stay valid across pops.
  struct Frame {
    std::int32_t node;
    std::uint32_t depth;
    std::uint8_t branch_bit;
  };
  std::vector<Frame> stack{{tree.root(), 0, 0}};
  std::vector<std::uint8_t> path;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    path.resize(f.depth);
    if (f.depth > 0) path[f.depth - 1] = f.branch_bit;
    const auto& n = tree.nodes()[static_cast<std::size_t>(f.node)];
    if (n.zero_child < 0) {
      BitWriter w;
      w.write_bits(path);
      book.entries_.push_back({n.symbol, w.finish()});
      continue;
    }
    stack.push_back({n.one_child, f.depth + 1, 1});
    stack.push_back({n.zero_child, f.depth + 1, 0});
  }

  std::sort(book.entries_.begin(), book.entries_.end(),
            [](const auto& a, const auto& b) { return a.symbol < b.symbol; });
  for (std::size_t i = 0; i < book.entries_.size(); ++i)
    book.index_[book.entries_[i].symbol] = static_cast<std::int32_t>(i);
  return book;
}

const BitSequence& HuffmanCodebook::code(Symbol symbol) const {
  std::int32_t idx = index_[symbol];
  if (idx < 0)
    throw Error(Errc::unknown_symbol,
                "symbol " + std::to_string(symbol) + " not in codebook");
  return entries_[static_cast<std::size_t>(idx)].code;
}

BitSequence huffman_encode(std::span<const Symbol> symbols,
                           const HuffmanCodebook& codebook) {
  BitWriter out;
  for (Symbol s : symbols) out.append(codebook.code(s));
  return out.finish();
}

std::vector<Symbol> huffman_decode(const BitSequence& bits,
                                   const HuffmanTree& tree,
                                   std::uint64_t symbol_count) {
  std::vector<Symbol> out;
  out.reserve(symbol_count);
  BitReader reader(bits);
  const auto nodes = tree.nodes();
  const bool degenerate = tree.is_leaf(tree.root());

  for (std::uint64_t i = 0; i < symbol_count; ++i) {
    if (degenerate) {
      if (reader.remaining() == 0)
        throw Error(Errc::truncated_stream, "bit stream ended early");
      reader.read_bit();
      out.push_back(nodes[static_cast<std::size_t>(tree.root())].symbol);
      continue;
    }
    std::int32_t node = tree.root();
    while (!tree.is_leaf(node)) {
      if (reader.remaining() == 0)
        throw Error(Errc::truncated_stream, "bit stream ended early");
      const auto& n = nodes[static_cast<std::size_t>(node)];
      node = reader.read_bit() ? n.one_child : n.zero_child;
    }
    out.push_back(nodes[static_cast<std::size_t>(node)].symbol);
  }

  if (reader.remaining() != 0)
    throw Error(Errc::trailing_garbage,
                std::to_string(reader.remaining()) + " bits left after decoding");
  return out;
}

}  // namespace entc
