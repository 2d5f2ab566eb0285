#include "cycbar/trees/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cycbar/errors.hpp"

namespace cycbar::trees {
namespace {

std::uint32_t mod(std::int64_t a, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(((a % m) + m) % m);
}

bool canonical_less(const Block& a, const Block& b) {
  if (a.start != b.start) return a.start < b.start;
  return a.size > b.size;
}

template <class Shape>
bool valid_block(const Block& b, std::uint32_t n) {
  if (b.size < 2 || b.start >= n) return false;
  if constexpr (Shape::cyclic) return b.size <= n;
  return b.size <= n - 1 && b.start + b.size <= n;
}

// Host blocks after substituting an m-leaf guest at slot i, then the guest's
// blocks, then the new edge (i, m). Order is relied on by the metric graft.
std::vector<Block> graft_blocks(const std::vector<Block>& host, std::uint32_t n, std::uint32_t slot,
                                const std::vector<Block>& guest, std::uint32_t m, bool cyclic) {
  const std::int64_t delta = static_cast<std::int64_t>(m) - 1;
  const std::uint32_t total = static_cast<std::uint32_t>(n + m - 1);
  std::vector<Block> out;
  for (const Block& b : host) {
    std::int64_t start = b.start, size = b.size;
    if (block_has(b, slot, n)) size += delta;
    if (b.start > slot) start += delta;
    if (size < 0) size = 0;
    out.push_back({total == 0 ? 0 : (cyclic ? mod(start, total) : static_cast<std::uint32_t>(start)),
                   static_cast<std::uint32_t>(size)});
  }
  for (const Block& g : guest) out.push_back({g.start + slot, g.size});
  out.push_back({slot, m});
  return out;
}

template <class Shape>
bool degenerate(const Block& b, std::uint32_t n) {
  if (b.size < 2) return true;
  if constexpr (!Shape::cyclic) return b.size >= n;
  return false;
}

}  // namespace

bool block_has(const Block& b, std::uint32_t p, std::uint32_t n) {
  return n > 0 && mod(static_cast<std::int64_t>(p) - b.start, n) < b.size;
}

bool block_within(const Block& outer, const Block& inner, std::uint32_t n) {
  if (n == 0) return false;
  return mod(static_cast<std::int64_t>(inner.start) - outer.start, n) + inner.size <= outer.size;
}

bool blocks_disjoint(const Block& a, const Block& b, std::uint32_t n) {
  if (n == 0) return true;
  return mod(static_cast<std::int64_t>(b.start) - a.start, n) >= a.size &&
         mod(static_cast<std::int64_t>(a.start) - b.start, n) >= b.size;
}

template <class Shape>
BlockTree<Shape>::BlockTree(std::uint32_t leaves, std::vector<Block> blocks) : n_(leaves), blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end(), canonical_less);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    if (!valid_block<Shape>(b, n_))
      throw ValidationError("block (" + std::to_string(b.start) + "," + std::to_string(b.size) + ") is not valid on " +
                            std::to_string(n_) + " leaves");
    for (std::size_t j = 0; j < i; ++j) {
      const Block& c = blocks_[j];
      if (b == c) throw ValidationError("repeated block");
      if (!block_within(b, c, n_) && !block_within(c, b, n_) && !blocks_disjoint(b, c, n_))
        throw ValidationError("crossing blocks (" + std::to_string(c.start) + "," + std::to_string(c.size) + ") and (" +
                              std::to_string(b.start) + "," + std::to_string(b.size) + ")");
    }
  }
}

template <class Shape>
std::size_t BlockTree<Shape>::max_internal_edges(std::uint32_t n) {
  if constexpr (Shape::cyclic) return n >= 1 ? n - 1 : 0;
  return n >= 2 ? n - 2 : 0;
}

template <class Shape>
int BlockTree<Shape>::dimension() const {
  return static_cast<int>(max_internal_edges(n_)) - static_cast<int>(blocks_.size());
}

template <class Shape>
bool BlockTree<Shape>::compatible(const Block& b) const {
  if (!valid_block<Shape>(b, n_)) return false;
  for (const Block& c : blocks_) {
    if (b == c) return false;
    if (!block_within(b, c, n_) && !block_within(c, b, n_) && !blocks_disjoint(b, c, n_)) return false;
  }
  return true;
}

template <class Shape>
bool BlockTree<Shape>::is_face_of(const BlockTree& other) const {
  if (n_ != other.n_) return false;
  return std::includes(blocks_.begin(), blocks_.end(), other.blocks_.begin(), other.blocks_.end(), canonical_less);
}

template <class Shape>
BlockTree<Shape> BlockTree<Shape>::with_block(const Block& b) const {
  auto blocks = blocks_;
  blocks.push_back(b);
  return BlockTree(n_, std::move(blocks));
}

template <class Shape>
BlockTree<Shape> BlockTree<Shape>::without_block(std::size_t index) const {
  if (index >= blocks_.size()) throw RangeError("no internal edge " + std::to_string(index));
  auto blocks = blocks_;
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(index));
  return BlockTree(n_, std::move(blocks));
}

template <class Shape>
std::vector<typename BlockTree<Shape>::Node> BlockTree<Shape>::structure() const {
  const std::size_t k = blocks_.size();
  // Node i+1 is block i.
  std::vector<int> parent(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t best = UINT32_MAX;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && blocks_[j].size > blocks_[i].size && block_within(blocks_[j], blocks_[i], n_) &&
          blocks_[j].size < best) {
        best = blocks_[j].size;
        parent[i] = static_cast<int>(j) + 1;
      }
  }
  std::vector<int> leaf_parent(n_, 0);
  for (std::uint32_t p = 0; p < n_; ++p) {
    std::uint32_t best = UINT32_MAX;
    for (std::size_t j = 0; j < k; ++j)
      if (block_has(blocks_[j], p, n_) && blocks_[j].size < best) {
        best = blocks_[j].size;
        leaf_parent[p] = static_cast<int>(j) + 1;
      }
  }
  std::vector<Node> nodes(k + 1);
  for (std::size_t i = 0; i < k; ++i) nodes[i + 1].block = static_cast<int>(i);
  std::vector<std::vector<std::pair<std::uint32_t, int>>> kids(k + 1);  // (first leaf, child code)
  for (std::size_t i = 0; i < k; ++i) kids[parent[i]].push_back({blocks_[i].start, static_cast<int>(i) + 1});
  for (std::uint32_t p = 0; p < n_; ++p) kids[leaf_parent[p]].push_back({p, -1 - static_cast<int>(p)});
  for (std::size_t v = 0; v <= k; ++v) {
    std::uint32_t frame = 0;
    if (v > 0) {
      frame = blocks_[v - 1].start;
    } else if (Shape::cyclic && n_ > 0) {
      // Root children are read from the one holding leaf 0.
      const int holder = leaf_parent[0];
      int top = holder;
      while (top != 0 && parent[top - 1] != 0) top = parent[top - 1];
      frame = top == 0 ? 0 : blocks_[top - 1].start;
    }
    auto& list = kids[v];
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      return mod(static_cast<std::int64_t>(a.first) - frame, n_ == 0 ? 1 : n_) <
             mod(static_cast<std::int64_t>(b.first) - frame, n_ == 0 ? 1 : n_);
    });
    for (const auto& [first, code] : list) nodes[v].children.push_back(code);
  }
  return nodes;
}

template <class Shape>
std::string BlockTree<Shape>::to_string() const {
  if constexpr (!Shape::cyclic) {
    if (n_ == 0) return "()";
    if (n_ == 1) return "x";
  } else {
    if (n_ == 0) return "[]";
  }
  const auto nodes = structure();
  std::string out;
  std::function<void(int)> emit = [&](int v) {
    const bool root = v == 0;
    out += Shape::cyclic && root ? '[' : '(';
    bool first = true;
    for (int c : nodes[v].children) {
      if (Shape::cyclic && !first) out += ',';
      first = false;
      if (c < 0)
        out += Shape::cyclic ? std::to_string(-1 - c) : std::string("x");
      else
        emit(c);
    }
    out += Shape::cyclic && root ? ']' : ')';
  };
  emit(0);
  return out;
}

template <class Shape>
BlockTree<Shape> BlockTree<Shape>::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> BlockTree {
    throw ValidationError("cannot parse tree '" + std::string(text) + "': " + why);
  };
  if constexpr (!Shape::cyclic) {
    if (s == "()") return BlockTree(0, {});
    if (s == "x") return BlockTree(1, {});
    std::uint32_t next_leaf = 0;
    std::vector<Block> blocks;
    std::function<void(bool)> group = [&](bool outer) {
      if (pos >= s.size() || s[pos] != '(') fail("expected '('");
      ++pos;
      const std::uint32_t start = next_leaf;
      std::size_t children = 0;
      while (pos < s.size() && s[pos] != ')') {
        if (s[pos] == 'x') {
          ++next_leaf;
          ++pos;
        } else {
          group(false);
        }
        ++children;
      }
      if (pos >= s.size()) fail("unbalanced parentheses");
      ++pos;
      if (children < 2) fail("a vertex needs at least two inputs");
      if (!outer) blocks.push_back({start, next_leaf - start});
    };
    group(true);
    if (pos != s.size()) fail("trailing characters");
    return BlockTree(next_leaf, std::move(blocks));
  } else {
    if (s == "[]") return BlockTree(0, {});
    std::vector<std::uint32_t> order;
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // ranges into order
    std::function<void(char, char)> group = [&](char open, char close) {
      if (pos >= s.size() || s[pos] != open) fail(std::string("expected '") + open + "'");
      ++pos;
      const std::size_t begin = order.size();
      std::size_t children = 0;
      while (pos < s.size() && s[pos] != close) {
        if (children > 0) {
          if (s[pos] != ',') fail("expected ','");
          ++pos;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          std::uint32_t v = 0;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
          order.push_back(v);
        } else {
          group('(', ')');
        }
        ++children;
      }
      if (pos >= s.size()) fail("unbalanced brackets");
      ++pos;
      if (open == '(') {
        if (children < 2) fail("a vertex needs at least two inputs");
        groups.push_back({begin, order.size()});
      }
    };
    group('[', ']');
    if (pos != s.size()) fail("trailing characters");
    const auto n = static_cast<std::uint32_t>(order.size());
    std::vector<bool> seen(n, false);
    for (auto v : order) {
      if (v >= n || seen[v]) fail("leaves must be 0..n-1 each once");
      seen[v] = true;
    }
    for (std::uint32_t k = 0; k < n; ++k)
      if (order[k] != (order[0] + k) % n) fail("leaves are not in cyclic order");
    std::vector<Block> blocks;
    for (const auto& [b, e] : groups) blocks.push_back({order[b], static_cast<std::uint32_t>(e - b)});
    return BlockTree(n, std::move(blocks));
  }
}

template <class Shape>
std::vector<Block> candidate_blocks(std::uint32_t n) {
  std::vector<Block> out;
  for (std::uint32_t start = 0; start < n; ++start)
    for (std::uint32_t size = n; size >= 2; --size)
      if (valid_block<Shape>({start, size}, n)) out.push_back({start, size});
  return out;
}

template std::vector<Block> candidate_blocks<Linear>(std::uint32_t);
template std::vector<Block> candidate_blocks<Cyclic>(std::uint32_t);

namespace {

template <class Shape>
std::vector<std::vector<BlockTree<Shape>>> enumerate(std::uint32_t n) {
  const auto cands = candidate_blocks<Shape>(n);
  std::vector<std::vector<BlockTree<Shape>>> groups(BlockTree<Shape>::max_internal_edges(n) + 1);
  std::vector<Block> chosen;
  auto fits = [&](const Block& b) {
    for (const Block& c : chosen)
      if (!block_within(b, c, n) && !block_within(c, b, n) && !blocks_disjoint(b, c, n)) return false;
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    groups[chosen.size()].emplace_back(n, chosen);
    for (std::size_t i = from; i < cands.size(); ++i)
      if (fits(cands[i])) {
        chosen.push_back(cands[i]);
        dfs(i + 1);
        chosen.pop_back();
      }
  };
  dfs(0);
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

}  // namespace

std::vector<std::vector<PlanarTree>> enumerate_planar_trees(std::uint32_t n) { return enumerate<Linear>(n); }
std::vector<std::vector<CyclicTree>> enumerate_cyclic_trees(std::uint32_t n) { return enumerate<Cyclic>(n); }
std::vector<PlanarTree> binary_planar_trees(std::uint32_t n) { return enumerate<Linear>(n).back(); }
std::vector<CyclicTree> binary_cyclic_trees(std::uint32_t n) { return enumerate<Cyclic>(n).back(); }

template <class Shape>
BlockTree<Shape> reduce_blocks(std::uint32_t leaves, std::vector<Block> blocks) {
  std::erase_if(blocks, [&](const Block& b) { return degenerate<Shape>(b, leaves); });
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return BlockTree<Shape>(leaves, std::move(blocks));
}

template PlanarTree reduce_blocks<Linear>(std::uint32_t, std::vector<Block>);
template CyclicTree reduce_blocks<Cyclic>(std::uint32_t, std::vector<Block>);

PlanarTree graft(const PlanarTree& host, std::uint32_t slot, const PlanarTree& guest) {
  if (slot >= host.leaves()) throw RangeError("slot " + std::to_string(slot) + " is not a leaf of the host");
  const std::uint32_t total = host.leaves() + guest.leaves() - 1;
  return reduce_blocks<Linear>(total, graft_blocks(host.blocks(), host.leaves(), slot, guest.blocks(), guest.leaves(), false));
}

CyclicTree graft(const CyclicTree& host, std::uint32_t slot, const PlanarTree& guest) {
  if (slot >= host.leaves()) throw RangeError("slot " + std::to_string(slot) + " is not a leaf of the host");
  const std::uint32_t total = host.leaves() + guest.leaves() - 1;
  return reduce_blocks<Cyclic>(total, graft_blocks(host.blocks(), host.leaves(), slot, guest.blocks(), guest.leaves(), true));
}

template <class Shape>
MetricTree<Shape>::MetricTree(std::uint32_t leaves, std::vector<Block> blocks, std::vector<double> lengths) {
  if (blocks.size() != lengths.size()) throw ValidationError("need one length per internal edge");
  std::vector<std::pair<Block, double>> kept;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!(lengths[i] >= 0.0 && lengths[i] <= 1.0)) throw RangeError("edge lengths must lie in [0,1]");
    if (lengths[i] == 0.0 || degenerate<Shape>(blocks[i], leaves)) continue;
    kept.push_back({blocks[i], lengths[i]});
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  std::vector<Block> merged;
  for (const auto& [b, w] : kept) {
    if (!merged.empty() && merged.back() == b) {
      lengths_.back() = std::max(lengths_.back(), w);
      continue;
    }
    merged.push_back(b);
    lengths_.push_back(w);
  }
  tree_ = BlockTree<Shape>(leaves, std::move(merged));
}

template <class Shape>
MetricTree<Shape>::MetricTree(const BlockTree<Shape>& t, double length)
    : MetricTree(t.leaves(), t.blocks(), std::vector<double>(t.blocks().size(), length)) {}

template class MetricTree<Linear>;
template class MetricTree<Cyclic>;

template <class Shape>
MetricTree<Shape> contract_edge(const MetricTree<Shape>& t, std::size_t edge) {
  if (edge >= t.tree().blocks().size()) throw RangeError("edge " + std::to_string(edge) + " is not an internal edge");
  auto blocks = t.tree().blocks();
  auto lengths = t.lengths();
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(edge));
  lengths.erase(lengths.begin() + static_cast<std::ptrdiff_t>(edge));
  return MetricTree<Shape>(t.tree().leaves(), std::move(blocks), std::move(lengths));
}

template PlanarMetricTree contract_edge<Linear>(const PlanarMetricTree&, std::size_t);
template CyclicMetricTree contract_edge<Cyclic>(const CyclicMetricTree&, std::size_t);

PlanarMetricTree graft(const PlanarMetricTree& host, std::uint32_t slot, const PlanarMetricTree& guest) {
  const auto& h = host.tree();
  const auto& g = guest.tree();
  if (slot >= h.leaves()) throw RangeError("slot " + std::to_string(slot) + " is not a leaf of the host");
  auto blocks = graft_blocks(h.blocks(), h.leaves(), slot, g.blocks(), g.leaves(), false);
  std::vector<double> lengths = host.lengths();
  lengths.insert(lengths.end(), guest.lengths().begin(), guest.lengths().end());
  lengths.push_back(1.0);
  return PlanarMetricTree(h.leaves() + g.leaves() - 1, std::move(blocks), std::move(lengths));
}

template class BlockTree<Linear>;
template class BlockTree<Cyclic>;

template <class Shape>
nlohmann::json to_json_value(const BlockTree<Shape>& t, const std::vector<double>* lengths) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const Block& b : t.blocks()) blocks.push_back({b.start, b.size});
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : t.structure()) {
    nlohmann::json children = nlohmann::json::array();
    for (int c : node.children) {
      if (c < 0)
        children.push_back({{"leaf", -1 - c}});
      else
        children.push_back({{"node", c}});
    }
    nodes.push_back({{"block", node.block < 0 ? nlohmann::json(nullptr) : nlohmann::json(node.block)},
                     {"children", std::move(children)}});
  }
  nlohmann::json j{{"kind", Shape::cyclic ? "cyclic" : "planar"},
                   {"leaves", t.leaves()},
                   {"encoding", t.to_string()},
                   {"blocks", std::move(blocks)},
                   {"nodes", std::move(nodes)}};
  if (lengths) j["lengths"] = *lengths;
  return j;
}

template nlohmann::json to_json_value<Linear>(const PlanarTree&, const std::vector<double>*);
template nlohmann::json to_json_value<Cyclic>(const CyclicTree&, const std::vector<double>*);

void to_json(nlohmann::json& j, const PlanarTree& t) { j = to_json_value(t); }
void to_json(nlohmann::json& j, const CyclicTree& t) { j = to_json_value(t); }
void to_json(nlohmann::json& j, const PlanarMetricTree& t) { j = to_json_value(t.tree(), &t.lengths()); }
void to_json(nlohmann::json& j, const CyclicMetricTree& t) { j = to_json_value(t.tree(), &t.lengths()); }

}  // namespace cycbar::trees
