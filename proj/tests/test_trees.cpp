#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "cycbar/errors.hpp"
#include "cycbar/trees/trees.hpp"

using namespace cycbar;
using namespace cycbar::trees;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::uint64_t> catalan_dp(std::size_t upto) {
  std::vector<std::uint64_t> c(upto + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= upto; ++n)
    for (std::size_t i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
  return c;
}

// Faces of K_n by number of internal edges: a root vertex with r >= 2 inputs,
// each input a bare leaf or a subtree contributing one more internal edge.
std::vector<std::uint64_t> planar_face_polynomial(std::uint32_t n) {
  using Poly = std::vector<std::uint64_t>;
  auto add = [](Poly& a, const Poly& b, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  };
  auto mul = [](const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<Poly> tree(n + 1), input(n + 1);
  // seq[k][r] = inputs sequences covering k leaves with r parts (r capped at 2)
  for (std::uint32_t m = 1; m <= n; ++m) {
    if (m == 1) {
      tree[1] = {1};
      input[1] = {1};
      continue;
    }
    // sequences of >= 2 inputs covering m leaves
    std::vector<std::array<Poly, 3>> seq(m + 1);
    seq[0][0] = {1};
    for (std::uint32_t k = 1; k <= m; ++k)
      for (std::uint32_t last = 1; last <= k; ++last) {
        if (last == m) continue;  // the whole set is not an input
        for (int r = 0; r < 3; ++r) {
          if (seq[k - last][r].empty()) continue;
          add(seq[k][std::min(r + 1, 2)], mul(seq[k - last][r], input[last]), 0);
        }
      }
    tree[m] = seq[m][2];
    input[m].clear();
    add(input[m], tree[m], 1);
  }
  return tree[n];
}

// Planar string substitution: replace the slot-th 'x' with the guest string.
std::string substitute(const std::string& host, std::uint32_t slot, const std::string& guest) {
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < host.size(); ++i)
    if (host[i] == 'x' && seen++ == slot) return host.substr(0, i) + guest + host.substr(i + 1);
  return host;
}

std::string strip_outer(const std::string& s) { return s.size() >= 2 && s.front() == '(' ? s.substr(1, s.size() - 2) : s; }

PlanarTree random_planar(std::mt19937_64& rng, std::uint32_t n) {
  const auto groups = enumerate_planar_trees(n);
  std::vector<PlanarTree> all;
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

// Cyclic faces by brute force over subsets of arcs, with compatibility
// decided on leaf sets: nested or disjoint for proper arcs; a full arc cut
// before leaf s admits any proper arc not holding both s-1 and s.
std::vector<std::uint64_t> brute_cyclic_fvector(std::uint32_t n) {
  struct Arc {
    std::uint32_t mask;
    int cut;  // -1 unless full
  };
  std::vector<Arc> arcs;
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t len = 2; len < n; ++len) {
      std::uint32_t m = 0;
      for (std::uint32_t k = 0; k < len; ++k) m |= 1u << ((s + k) % n);
      arcs.push_back({m, -1});
    }
  for (std::uint32_t s = 0; s < n && n >= 2; ++s) arcs.push_back({all, static_cast<int>(s)});
  auto ok = [&](const Arc& a, const Arc& b) {
    if (a.cut >= 0 && b.cut >= 0) return false;
    if (a.cut >= 0 || b.cut >= 0) {
      const Arc& f = a.cut >= 0 ? a : b;
      const Arc& c = a.cut >= 0 ? b : a;
      const std::uint32_t before = (f.cut + n - 1) % n;
      return !((c.mask >> before & 1u) && (c.mask >> f.cut & 1u));
    }
    const std::uint32_t i = a.mask & b.mask;
    return i == 0 || i == a.mask || i == b.mask;
  };
  std::vector<std::uint64_t> counts(n, 0);
  const std::size_t k = arcs.size();
  for (std::uint64_t subset = 0; subset < (1ull << k); ++subset) {
    bool good = true;
    int size = 0;
    for (std::size_t i = 0; i < k && good; ++i) {
      if (!(subset >> i & 1u)) continue;
      ++size;
      for (std::size_t j = 0; j < i && good; ++j)
        if ((subset >> j & 1u) && !ok(arcs[i], arcs[j])) good = false;
    }
    if (good) ++counts[size];
  }
  return counts;
}

template <class T>
std::vector<std::size_t> sizes(const std::vector<std::vector<T>>& groups) {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.size());
  return out;
}

}  // namespace

TEST_CASE("small associahedra by number of internal edges") {
  CHECK(sizes(enumerate_planar_trees(3)) == std::vector<std::size_t>{1, 2});
  CHECK(sizes(enumerate_planar_trees(4)) == std::vector<std::size_t>{1, 5, 5});
  CHECK(sizes(enumerate_planar_trees(0)) == std::vector<std::size_t>{1});
  CHECK(sizes(enumerate_planar_trees(1)) == std::vector<std::size_t>{1});
  CHECK(sizes(enumerate_planar_trees(2)) == std::vector<std::size_t>{1});
}

TEST_CASE("complete parenthesizations of five letters") {
  // Independent count: all bracketings of a word, built recursively as strings.
  std::function<std::set<std::string>(int)> bracket = [&](int n) {
    if (n == 1) return std::set<std::string>{"x"};
    std::set<std::string> out;
    for (int k = 1; k < n; ++k)
      for (const auto& l : bracket(k))
        for (const auto& r : bracket(n - k)) out.insert("(" + l + r + ")");
    return out;
  };
  const auto strings = bracket(5);
  CHECK(strings.size() == 14);
  std::set<std::string> ours;
  for (const auto& t : binary_planar_trees(5)) ours.insert(t.to_string());
  CHECK(ours == strings);
}

TEST_CASE("binary trees are counted by Catalan numbers") {
  const auto c = catalan_dp(10);
  for (std::uint32_t n = 1; n <= 10; ++n) CHECK(binary_planar_trees(n).size() == c[n - 1]);
}

TEST_CASE("associahedron face counts agree with two oracles") {
  for (std::uint32_t n = 2; n <= 9; ++n) {
    const auto groups = enumerate_planar_trees(n);
    const auto poly = planar_face_polynomial(n);
    REQUIRE(poly.size() == groups.size());
    for (std::size_t k = 0; k < groups.size(); ++k) {
      CHECK(groups[k].size() == poly[k]);
      CHECK(groups[k].size() == binom(n - 2, k) * binom(n + k, k) / (k + 1));
    }
  }
}

TEST_CASE("cyclohedron face counts") {
  CHECK(sizes(enumerate_cyclic_trees(1)) == std::vector<std::size_t>{1});
  CHECK(sizes(enumerate_cyclic_trees(2)) == std::vector<std::size_t>{1, 2});
  CHECK(binary_cyclic_trees(3).size() == 6);
  for (std::uint32_t n = 2; n <= 5; ++n) {
    const auto brute = brute_cyclic_fvector(n);
    CHECK(sizes(enumerate_cyclic_trees(n)) == std::vector<std::size_t>(brute.begin(), brute.end()));
  }
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const auto groups = enumerate_cyclic_trees(n);
    const std::uint32_t m = n - 1;
    for (std::size_t k = 0; k < groups.size(); ++k) CHECK(groups[k].size() == binom(m, k) * binom(m + k, k));
  }
}

TEST_CASE("single-root-edge cyclic trees are rotations of planar trees") {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    std::size_t rooted = 0;
    for (const auto& g : enumerate_cyclic_trees(n))
      for (const auto& t : g)
        for (const auto& b : t.blocks())
          if (b.size == n) ++rooted;
    std::size_t planar = 0;
    for (const auto& g : enumerate_planar_trees(n)) planar += g.size();
    CHECK(rooted == n * planar);
    CHECK(binary_cyclic_trees(n).size() == n * binary_planar_trees(n).size());
  }
}

TEST_CASE("string encodings") {
  CHECK(PlanarTree(3, {{0, 2}}).to_string() == "((xx)x)");
  CHECK(PlanarTree::corolla(3).to_string() == "(xxx)");
  CHECK(PlanarTree::corolla(1).to_string() == "x");
  CHECK(PlanarTree::corolla(0).to_string() == "()");
  CHECK(CyclicTree(3, {{2, 2}}).to_string() == "[(2,0),1]");
  CHECK(CyclicTree(2, {{1, 2}}).to_string() == "[(1,0)]");
  CHECK(CyclicTree(4, {{3, 4}, {0, 2}}).to_string() == "[(3,(0,1),2)]");
  for (std::uint32_t n = 0; n <= 6; ++n) {
    for (const auto& g : enumerate_planar_trees(n))
      for (const auto& t : g) CHECK(PlanarTree::parse(t.to_string()) == t);
    for (const auto& g : enumerate_cyclic_trees(n))
      for (const auto& t : g) CHECK(CyclicTree::parse(t.to_string()) == t);
  }
  CHECK_THROWS_AS(PlanarTree::parse("((x)x)"), ValidationError);
  CHECK_THROWS_AS(CyclicTree::parse("[(0,2),1]"), ValidationError);
  CHECK_THROWS_AS(PlanarTree(4, {{0, 2}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(CyclicTree(3, {{0, 3}, {1, 3}}), ValidationError);
}

TEST_CASE("grafting units and the smallest composite") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_planar(rng, 1 + trial % 6);
    for (std::uint32_t s = 0; s < t.leaves(); ++s) CHECK(graft(t, s, PlanarTree::corolla(1)) == t);
    CHECK(graft(PlanarTree::corolla(1), 0, t) == t);
  }
  CHECK(graft(PlanarTree::corolla(2), 0, PlanarTree::corolla(2)).to_string() == "((xx)x)");
  CHECK(graft(CyclicTree::corolla(1), 0, PlanarTree::corolla(2)).to_string() == "[(0,1)]");
  CHECK_THROWS_AS(graft(PlanarTree::corolla(2), 2, PlanarTree::corolla(2)), RangeError);
}

TEST_CASE("grafting is string substitution") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto host = random_planar(rng, 1 + trial % 5);
    const auto guest = random_planar(rng, 1 + (trial / 5) % 5);
    const auto slot = std::uniform_int_distribution<std::uint32_t>(0, host.leaves() - 1)(rng);
    const auto g = graft(host, slot, guest);
    CHECK(g.to_string() == substitute(host.to_string(), slot, guest.to_string()));
    // Contracting the new edge leaves the guest's inputs on the host vertex.
    if (guest.leaves() >= 2 && host.leaves() >= 2) {
      const Block fresh{slot, guest.leaves()};
      const auto& bl = g.blocks();
      const auto it = std::find(bl.begin(), bl.end(), fresh);
      REQUIRE(it != bl.end());
      const PlanarMetricTree m(g);
      const auto c = contract_edge(m, static_cast<std::size_t>(it - bl.begin()));
      CHECK(c.tree().to_string() == substitute(host.to_string(), slot, strip_outer(guest.to_string())));
    }
  }
}

TEST_CASE("grafting satisfies the operad relations") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_planar(rng, 1 + trial % 5);
    const auto b = random_planar(rng, (trial / 5) % 5);
    const auto c = random_planar(rng, (trial / 25) % 4);
    const auto i = std::uniform_int_distribution<std::uint32_t>(0, a.leaves() - 1)(rng);
    if (b.leaves() > 0) {
      const auto j = std::uniform_int_distribution<std::uint32_t>(0, b.leaves() - 1)(rng);
      CHECK(graft(graft(a, i, b), i + j, c) == graft(a, i, graft(b, j, c)));
    }
    if (a.leaves() >= 2) {
      auto lo = i, hi = std::uniform_int_distribution<std::uint32_t>(0, a.leaves() - 1)(rng);
      if (lo == hi) continue;
      if (lo > hi) std::swap(lo, hi);
      const auto shifted = static_cast<std::uint32_t>(static_cast<int>(hi) + static_cast<int>(b.leaves()) - 1);
      CHECK(graft(graft(a, hi, c), lo, b) == graft(graft(a, lo, b), shifted, c));
    }
  }
}

TEST_CASE("cyclic grafting commutes for distinct slots") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 2 + trial % 4;
    const auto groups = enumerate_cyclic_trees(n);
    std::vector<CyclicTree> all;
    for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
    const auto w = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const auto b = random_planar(rng, trial % 4);
    const auto c = random_planar(rng, (trial / 4) % 4);
    std::uint32_t lo = std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
    std::uint32_t hi = std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
    if (lo == hi) continue;
    if (lo > hi) std::swap(lo, hi);
    const auto shifted = static_cast<std::uint32_t>(static_cast<int>(hi) + static_cast<int>(b.leaves()) - 1);
    CHECK(graft(graft(w, hi, c), lo, b) == graft(graft(w, lo, b), shifted, c));
    if (b.leaves() > 0) {
      const auto j = std::uniform_int_distribution<std::uint32_t>(0, b.leaves() - 1)(rng);
      CHECK(graft(graft(w, lo, b), lo + j, c) == graft(w, lo, graft(b, j, c)));
    }
  }
}

TEST_CASE("edge contraction") {
  const PlanarMetricTree t(PlanarTree::parse("((xx)x)"));
  CHECK(contract_edge(t, 0).tree() == PlanarTree::corolla(3));
  CHECK_THROWS_AS(contract_edge(t, 1), RangeError);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_planar(rng, 3 + trial % 5);
    PlanarMetricTree m(p);
    while (!m.tree().blocks().empty()) m = contract_edge(m, 0);
    CHECK(m.tree() == PlanarTree::corolla(p.leaves()));
    if (p.blocks().size() >= 2) {
      const PlanarMetricTree full(p);
      const Block e = p.blocks()[0], f = p.blocks().back();
      auto drop = [](const PlanarMetricTree& x, const Block& b) {
        const auto& bl = x.tree().blocks();
        return contract_edge(x, static_cast<std::size_t>(std::find(bl.begin(), bl.end(), b) - bl.begin()));
      };
      CHECK(drop(drop(full, e), f) == drop(drop(full, f), e));
    }
  }
}

TEST_CASE("metric normal form") {
  // A zero-length edge is contracted.
  const PlanarMetricTree z(4, {{0, 2}, {0, 3}}, {0.0, 0.5});
  CHECK(z.tree().blocks() == std::vector<Block>{{0, 3}});
  // Coinciding edges merge with the larger length.
  const PlanarMetricTree d(4, {{1, 2}, {1, 2}}, {0.25, 0.75});
  CHECK(d.lengths() == std::vector<double>{0.75});
  CHECK_THROWS_AS(PlanarMetricTree(3, {{0, 2}}, {1.5}), RangeError);
  // Grafting gives the new edge length 1.
  const auto g = graft(PlanarMetricTree(PlanarTree::corolla(2)), 1, PlanarMetricTree(PlanarTree::parse("((xx)x)"), 0.5));
  CHECK(g.tree().to_string() == "(x((xx)x))");
  CHECK(g.lengths() == std::vector<double>{1.0, 0.5});
}

TEST_CASE("tree json") {
  const nlohmann::json j = CyclicTree::parse("[(2,0),1]");
  CHECK(j["encoding"] == "[(2,0),1]");
  CHECK(j["kind"] == "cyclic");
  CHECK(j["nodes"].size() == 2);
  const nlohmann::json m = PlanarMetricTree(PlanarTree::parse("((xx)x)"), 0.5);
  CHECK(m["lengths"] == nlohmann::json::array({0.5}));
}
