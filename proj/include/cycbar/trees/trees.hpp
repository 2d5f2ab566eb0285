#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cycbar::trees {

// A set of consecutive leaves {start, start+1, ..., start+size-1}, read
// modulo the leaf count for cyclic trees. Every internal edge of a tree is
// named by the leaves above it.
struct Block {
  std::uint32_t start = 0;
  std::uint32_t size = 0;

  friend auto operator<=>(const Block&, const Block&) = default;
};

// Leaf position p lies in b (cyclic reading; linear blocks never wrap).
bool block_has(const Block& b, std::uint32_t p, std::uint32_t n);
// inner ⊆ outer as ordered runs: inner does not straddle outer's cut.
bool block_within(const Block& outer, const Block& inner, std::uint32_t n);
bool blocks_disjoint(const Block& a, const Block& b, std::uint32_t n);

struct Linear {
  static constexpr bool cyclic = false;
};
struct Cyclic {
  static constexpr bool cyclic = true;
};

// Reduced tree with n leaves stored as its set of internal edges.
//
// Linear: leaves 0..n-1 in order, blocks are intervals of size 2..n-1 (the
// root edge is implicit). These are the faces of K_n.
// Cyclic: leaves 0..n-1 in cyclic order, blocks are arcs of size 2..n; an arc
// of size n is a single root edge whose linear order starts at `start`.
// These are the faces of W_n.
template <class Shape>
class BlockTree {
 public:
  BlockTree() = default;
  // Throws ValidationError for out-of-range or crossing blocks.
  BlockTree(std::uint32_t leaves, std::vector<Block> blocks);

  static BlockTree corolla(std::uint32_t leaves) { return BlockTree(leaves, {}); }
  // Inverse of to_string().
  static BlockTree parse(std::string_view text);

  std::uint32_t leaves() const { return n_; }
  // Sorted by (start, descending size).
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t internal_edges() const { return blocks_.size(); }
  static std::size_t max_internal_edges(std::uint32_t n);
  int dimension() const;
  bool is_binary() const { return blocks_.size() == max_internal_edges(n_); }
  // Block can be added without crossing.
  bool compatible(const Block& b) const;
  // Is this a face of other, i.e. obtained by inserting blocks?
  bool is_face_of(const BlockTree& other) const;
  BlockTree with_block(const Block& b) const;
  BlockTree without_block(std::size_t index) const;

  // Nested node structure; node 0 is the root.
  struct Node {
    int block = -1;  // index into blocks(), -1 for the root
    // Children in order; leaves encoded as -1-leaf, nodes as their index.
    std::vector<int> children;
  };
  std::vector<Node> structure() const;

  // Planar: "((xx)x)"; n=1 is "x" and n=0 is "()".
  // Cyclic: "[(2,0),1]", children of the root listed from the one holding
  // leaf 0, every block listed from its start; n=0 is "[]".
  std::string to_string() const;

  friend bool operator==(const BlockTree&, const BlockTree&) = default;
  friend auto operator<=>(const BlockTree& a, const BlockTree& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Block> blocks_;
};

using PlanarTree = BlockTree<Linear>;
using CyclicTree = BlockTree<Cyclic>;

// All valid blocks on n leaves in canonical order.
template <class Shape>
std::vector<Block> candidate_blocks(std::uint32_t n);

// Complete enumeration, grouped by the number of internal edges.
std::vector<std::vector<PlanarTree>> enumerate_planar_trees(std::uint32_t n);
std::vector<std::vector<CyclicTree>> enumerate_cyclic_trees(std::uint32_t n);
std::vector<PlanarTree> binary_planar_trees(std::uint32_t n);
// Binary cyclic trees with a single root edge (vertices of W_n).
std::vector<CyclicTree> binary_cyclic_trees(std::uint32_t n);

// Substitute guest for leaf `slot` of host. The guest's leaves take the
// slot's place in the order and the guest's root edge becomes a new internal
// edge. A one-leaf guest is the unit; a zero-leaf guest deletes the leaf.
PlanarTree graft(const PlanarTree& host, std::uint32_t slot, const PlanarTree& guest);
CyclicTree graft(const CyclicTree& host, std::uint32_t slot, const PlanarTree& guest);

// Blocks given in any order, possibly degenerate after a substitution: blocks
// of size < 2, linear blocks covering everything, and duplicates are removed.
template <class Shape>
BlockTree<Shape> reduce_blocks(std::uint32_t leaves, std::vector<Block> blocks);

// A tree with a length in [0,1] on every internal edge, kept in normal form:
// zero-length edges contracted and coinciding edges merged with the maximum
// length.
template <class Shape>
class MetricTree {
 public:
  MetricTree() = default;
  // Lengths align with blocks as given; throws RangeError outside [0,1].
  MetricTree(std::uint32_t leaves, std::vector<Block> blocks, std::vector<double> lengths);
  explicit MetricTree(const BlockTree<Shape>& t, double length = 1.0);

  const BlockTree<Shape>& tree() const { return tree_; }
  // Aligned with tree().blocks().
  const std::vector<double>& lengths() const { return lengths_; }

  friend bool operator==(const MetricTree&, const MetricTree&) = default;

 private:
  BlockTree<Shape> tree_;
  std::vector<double> lengths_;
};

using PlanarMetricTree = MetricTree<Linear>;
using CyclicMetricTree = MetricTree<Cyclic>;

// Remove internal edge `edge` (an index into tree().blocks()); throws
// RangeError for anything that is not an internal edge.
template <class Shape>
MetricTree<Shape> contract_edge(const MetricTree<Shape>& t, std::size_t edge);

// Grafting with the new internal edge at length 1.
PlanarMetricTree graft(const PlanarMetricTree& host, std::uint32_t slot, const PlanarMetricTree& guest);

template <class Shape>
nlohmann::json to_json_value(const BlockTree<Shape>& t, const std::vector<double>* lengths = nullptr);
void to_json(nlohmann::json& j, const PlanarTree& t);
void to_json(nlohmann::json& j, const CyclicTree& t);
void to_json(nlohmann::json& j, const PlanarMetricTree& t);
void to_json(nlohmann::json& j, const CyclicMetricTree& t);

}  // namespace cycbar::trees
