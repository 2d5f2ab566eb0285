#include <map>
#include <random>
#include <set>
#include <tuple>
#include <variant>

#include "doctest.h"

#include "cycbar/errors.hpp"
#include "cycbar/polyhedra/polyhedra.hpp"

using namespace cycbar;
using namespace cycbar::polyhedra;
using finord::Category;
using finord::FinOrdSet;
using finord::NCMorphism;
using finord::OrderKind;

namespace {

std::uint64_t catalan(std::uint32_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::uint32_t k = 1; k <= n; ++k)
    for (std::uint32_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

bool is_point(const exactalg::ChainComplex& c) {
  const auto h = c.homology();
  if (h.empty() || !(h[0] == exactalg::HomologyGroup{1, {}})) return false;
  for (std::size_t d = 1; d < h.size(); ++d)
    if (!h[d].is_zero()) return false;
  return true;
}

template <class Poset>
std::vector<typename Poset::Tree> all_faces(const Poset& p) {
  std::vector<typename Poset::Tree> out;
  for (int d = 0; d <= p.dimension(); ++d) out.insert(out.end(), p.faces(d).begin(), p.faces(d).end());
  return out;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

template <class Shape>
CubeCell<Shape> random_cell(std::mt19937_64& rng, const FacePoset<Shape>& p) {
  const auto faces = all_faces(p);
  const auto& t = pick(rng, faces);
  const std::uint32_t mask =
      std::uniform_int_distribution<std::uint32_t>(0, (1u << t.blocks().size()) - 1)(rng);
  return {t, mask};
}

template <class Cell>
using Chain = std::map<Cell, long>;

template <class Cell>
void add_to(Chain<Cell>& c, const Cell& x, long coeff) {
  if ((c[x] += coeff) == 0) c.erase(x);
}

template <class Cell>
Chain<Cell> boundary_of(const Cell& c) {
  using Model = CubicalModel<std::conditional_t<std::is_same_v<Cell, PlanarCell>, trees::Linear, trees::Cyclic>>;
  Chain<Cell> out;
  for (const auto& [f, s] : Model::boundary(c)) add_to(out, f, s);
  return out;
}

// The boundary of a product cell as a list of (factor index, face, sign).
template <class Host>
std::vector<std::tuple<std::size_t, std::variant<Host, PlanarCell>, long>> product_boundary(
    const Host& host, const std::vector<PlanarCell>& guests) {
  std::vector<std::tuple<std::size_t, std::variant<Host, PlanarCell>, long>> out;
  for (const auto& [f, s] : boundary_of(host)) out.push_back({0, f, s});
  long sign = host.dimension() % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < guests.size(); ++i) {
    for (const auto& [f, s] : boundary_of(guests[i])) out.push_back({i + 1, f, sign * s});
    if (guests[i].dimension() % 2 != 0) sign = -sign;
  }
  return out;
}

FinOrdSet cyc(std::size_t n) { return FinOrdSet::standard(OrderKind::cyclic, n); }
FinOrdSet mm(std::size_t n) { return FinOrdSet::standard(OrderKind::linear_min_max, n); }

std::vector<PlanarTree> corolla_fibers(const NCMorphism& f) {
  std::vector<PlanarTree> out;
  for (const auto& fib : f.fibers()) out.push_back(PlanarTree::corolla(static_cast<std::uint32_t>(fib.size())));
  return out;
}

std::vector<PlanarTree> random_fiber_faces(std::mt19937_64& rng, const NCMorphism& f) {
  std::vector<PlanarTree> out;
  for (const auto& fib : f.fibers()) out.push_back(pick(rng, all_faces(KPoset(static_cast<std::uint32_t>(fib.size())))));
  return out;
}

std::vector<PlanarCell> random_fiber_cells(std::mt19937_64& rng, const NCMorphism& f) {
  std::vector<PlanarCell> out;
  for (const auto& fib : f.fibers()) out.push_back(random_cell(rng, KPoset(static_cast<std::uint32_t>(fib.size()))));
  return out;
}

}  // namespace

TEST_CASE("face vectors of small polytopes") {
  CHECK(KPoset(0).f_vector() == std::vector<std::size_t>{1});
  CHECK(KPoset(1).f_vector() == std::vector<std::size_t>{1});
  CHECK(KPoset(2).f_vector() == std::vector<std::size_t>{1});
  CHECK(KPoset(3).f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(KPoset(4).f_vector() == std::vector<std::size_t>{5, 5, 1});
  CHECK(KPoset(5).f_vector() == std::vector<std::size_t>{14, 21, 9, 1});
  CHECK(WPoset(1).f_vector() == std::vector<std::size_t>{1});
  CHECK(WPoset(2).f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(WPoset(3).f_vector() == std::vector<std::size_t>{6, 6, 1});
  CHECK(WPoset(4).f_vector() == std::vector<std::size_t>{20, 30, 12, 1});
  CHECK_THROWS_AS(WPoset(0), RangeError);
}

TEST_CASE("face posets are thin") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    CHECK(KPoset(n).is_thin());
    CHECK(WPoset(n).is_thin());
  }
}

TEST_CASE("cubical models") {
  SUBCASE("cube counts") {
    for (std::uint32_t n = 2; n <= 8; ++n) {
      const KCubical k(n);
      CHECK(k.top_cubes().size() == catalan(n - 1));
      CHECK(k.vertex_count() == KPoset(n).size());
    }
    for (std::uint32_t n = 1; n <= 6; ++n) CHECK(WCubical(n).top_cubes().size() == n * catalan(n - 1));
    CHECK(KCubical(4).top_cubes().size() == 5);
    CHECK(KCubical(4).cell_counts() == std::vector<std::size_t>{11, 15, 5});
  }
  SUBCASE("two intervals glued at one end") {
    const WCubical w(2);
    CHECK(w.cell_counts() == std::vector<std::size_t>{3, 2});
    const auto j = w.to_json();
    REQUIRE(j["identifications"].size() == 1);
    CHECK(j["identifications"][0]["cell"]["tree"] == "[0,1]");
  }
  SUBCASE("homology of a point") {
    for (std::uint32_t n = 0; n <= 6; ++n) CHECK(is_point(KCubical(n).chain_complex()));
    for (std::uint32_t n = 1; n <= 5; ++n) CHECK(is_point(WCubical(n).chain_complex()));
    CHECK(is_point(KCubical(5).chain_complex(exactalg::GroundRing::prime_field(2))));
  }
  SUBCASE("associahedron and cyclohedron bundles") {
    const auto k = associahedron(4);
    CHECK(k.poset.f_vector() == std::vector<std::size_t>{5, 5, 1});
    CHECK(k.cubes.top_cubes().size() == 5);
    const auto w = cyclohedron(3);
    CHECK(w.poset.f_vector() == std::vector<std::size_t>{6, 6, 1});
  }
}

TEST_CASE("cell normal form") {
  // Free axes listed against the canonical order flip the orientation.
  const auto a = normalize_cell<trees::Linear>(4, {{{1, 2}, true}, {{0, 3}, true}});
  REQUIRE(a);
  CHECK(a->sign == -1);
  CHECK(a->cell.free == 3u);
  CHECK_FALSE(normalize_cell<trees::Linear>(3, {{{0, 3}, true}}));
  CHECK(normalize_cell<trees::Linear>(3, {{{0, 3}, false}})->cell.tree == PlanarTree::corolla(3));
  CHECK_FALSE(normalize_cell<trees::Linear>(4, {{{0, 2}, true}, {{0, 2}, false}}));
  CHECK(normalize_cell<trees::Linear>(4, {{{0, 2}, false}, {{0, 2}, false}})->cell.tree.blocks().size() == 1);
}

TEST_CASE("operad composition") {
  CHECK(operad_compose(0, PlanarTree::corolla(2), PlanarTree::corolla(2)).to_string() == "((xx)x)");
  CHECK_THROWS_AS(operad_compose(3, PlanarTree::corolla(3), PlanarTree::corolla(2)), RangeError);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const KPoset pa(1 + trial % 5), pb(trial % 4), pc((trial / 4) % 4);
    const auto a = pick(rng, all_faces(pa));
    const auto b = pick(rng, all_faces(pb));
    const auto c = pick(rng, all_faces(pc));
    const auto s = std::uniform_int_distribution<std::uint32_t>(0, a.leaves() - 1)(rng);
    CHECK(operad_compose(s, a, PlanarTree::corolla(1)) == a);
    const auto ab = operad_compose(s, a, b);
    if (a.leaves() >= 2 && b.leaves() >= 2) CHECK(ab.dimension() == a.dimension() + b.dimension());
    if (b.leaves() > 0) {
      const auto t = std::uniform_int_distribution<std::uint32_t>(0, b.leaves() - 1)(rng);
      CHECK(operad_compose(s + t, ab, c) == operad_compose(s, a, operad_compose(t, b, c)));
    }
  }
}

TEST_CASE("cell-level composition is a chain map") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_cell(rng, KPoset(2 + trial % 4));
    const auto b = random_cell(rng, KPoset((trial / 4) % 5));
    const auto s = std::uniform_int_distribution<std::uint32_t>(0, a.tree.leaves() - 1)(rng);
    Chain<PlanarCell> lhs, rhs;
    if (auto m = operad_compose(s, a, b))
      for (const auto& [f, sg] : boundary_of(m->cell)) add_to(lhs, f, sg * m->sign);
    for (const auto& [f, sg] : boundary_of(a))
      if (auto m = operad_compose(s, f, b)) add_to(rhs, m->cell, sg * m->sign);
    const long sa = a.dimension() % 2 == 0 ? 1 : -1;
    for (const auto& [f, sg] : boundary_of(b))
      if (auto m = operad_compose(s, a, f)) add_to(rhs, m->cell, sa * sg * m->sign);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cyclic module action") {
  SUBCASE("identity") {
    for (std::uint32_t n = 1; n <= 5; ++n) {
      const auto id = NCMorphism::identity(cyc(n));
      for (const auto& w : all_faces(WPoset(n))) CHECK(module_action(id, w, corolla_fibers(id)) == w);
    }
  }
  SUBCASE("collapsing everything to the basepoint") {
    const auto f = NCMorphism::from_map(cyc(3), cyc(1), {0, 0, 0});
    const auto x = module_action(f, CyclicTree::corolla(1), {PlanarTree::corolla(3)});
    CHECK(x.to_string() == "[(0,1,2)]");
    CHECK(x.dimension() == 1);
  }
  SUBCASE("not a morphism of the cyclic category") {
    const NCMorphism f(cyc(3), cyc(2), {0, 1, 0}, {{0, 2}, {1}});
    CHECK_THROWS_AS(module_action(f, CyclicTree::corolla(2), {PlanarTree::corolla(2), PlanarTree::corolla(1)}),
                    CategoryError);
  }
  SUBCASE("module law") {
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t s = 1 + trial % 5, t = 1 + (trial / 5) % 4, u = 1 + (trial / 20) % 3;
      const auto fs = finord::hom_set(cyc(s), cyc(t), Category::delta_c);
      const auto gs = finord::hom_set(cyc(t), cyc(u), Category::delta_c);
      if (fs.empty() || gs.empty()) continue;
      const auto& f = pick(rng, fs);
      const auto& g = pick(rng, gs);
      const auto w = pick(rng, all_faces(WPoset(static_cast<std::uint32_t>(u))));
      const auto kg = random_fiber_faces(rng, g);
      const auto kf = random_fiber_faces(rng, f);
      const auto once = module_action(finord::compose(g, f), w, compose_fiber_faces(g, kg, f, kf));
      const auto twice = module_action(f, module_action(g, w, kg), kf);
      CHECK(once == twice);
      ++checked;
    }
    CHECK(checked > 300);
  }
  SUBCASE("chain map") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t s = 1 + trial % 5, t = 1 + (trial / 5) % 4;
      const auto fs = finord::hom_set(cyc(s), cyc(t), Category::delta_c);
      if (fs.empty()) continue;
      const auto& f = pick(rng, fs);
      const auto w = random_cell(rng, WPoset(static_cast<std::uint32_t>(t)));
      const auto ks = random_fiber_cells(rng, f);
      Chain<CyclicCell> lhs, rhs;
      if (auto m = module_action(f, w, ks))
        for (const auto& [x, sg] : boundary_of(m->cell)) add_to(lhs, x, sg * m->sign);
      for (const auto& [slot, face, sg] : product_boundary(w, ks)) {
        std::optional<Signed<CyclicCell>> m;
        if (slot == 0) {
          m = module_action(f, std::get<CyclicCell>(face), ks);
        } else {
          auto k2 = ks;
          k2[slot - 1] = std::get<PlanarCell>(face);
          m = module_action(f, w, k2);
        }
        if (m) add_to(rhs, m->cell, sg * m->sign);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("linear module action over min-max sets") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t s = 2 + trial % 4, t = 2 + (trial / 4) % 4, u = 2 + (trial / 16) % 3;
    const auto fs = finord::hom_set(mm(s), mm(t), Category::zero_one_delta);
    const auto gs = finord::hom_set(mm(t), mm(u), Category::zero_one_delta);
    const auto& f = pick(rng, fs);
    const auto& g = pick(rng, gs);
    const auto w = pick(rng, all_faces(KPoset(static_cast<std::uint32_t>(u))));
    const auto kg = random_fiber_faces(rng, g);
    const auto kf = random_fiber_faces(rng, f);
    CHECK(module_action(finord::compose(g, f), w, compose_fiber_faces(g, kg, f, kf)) ==
          module_action(f, module_action(g, w, kg), kf));
  }
}

TEST_CASE("facet census follows the cone recursion") {
  for (std::uint32_t n = 3; n <= 7; ++n) {
    const KPoset p(n);
    const auto census = facet_census(p);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> expected;
    for (std::uint32_t r = 2; r <= n - 1; ++r) expected[{n - r + 1, r}] = n - r + 1;
    CHECK(census == expected);
    // Each facet K_{n-r+1} ∘_s K_r is the image of a bijective grafting map.
    for (const auto& t : p.faces(p.dimension() - 1)) {
      const Block b = t.blocks().front();
      std::set<PlanarTree> image;
      std::size_t pairs = 0;
      for (const auto& outer : all_faces(KPoset(n - b.size + 1)))
        for (const auto& inner : all_faces(KPoset(b.size))) {
          const auto x = operad_compose(b.start, outer, inner);
          CHECK(x.dimension() == outer.dimension() + inner.dimension());
          image.insert(x);
          ++pairs;
        }
      std::size_t below = 0;
      for (const auto& x : all_faces(p))
        if (x == t || x.is_face_of(t)) ++below;
      CHECK(image.size() == pairs);
      CHECK(image.size() == below);
    }
  }
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const WPoset p(n);
    const auto census = facet_census(p);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> expected;
    for (std::uint32_t s = 1; s <= n - 1; ++s) expected[{s, n - s + 1}] = n;
    CHECK(census == expected);
    for (const auto& t : p.faces(p.dimension() - 1)) {
      const Block b = t.blocks().front();
      // Collapse the arc b to one point of a smaller cyclic set.
      const std::uint32_t m = n - b.size + 1;
      std::vector<std::uint32_t> map(n);
      std::vector<std::vector<std::uint32_t>> fibers(m);
      const bool wraps = b.start + b.size > n || b.start == 0;
      const std::uint32_t target_of_arc = wraps ? 0 : b.start;
      for (std::uint32_t k = 0; k < b.size; ++k) fibers[target_of_arc].push_back((b.start + k) % n);
      std::uint32_t next = 0;
      for (std::uint32_t p0 = 0; p0 < n; ++p0) {
        if (trees::block_has(b, p0, n)) {
          map[p0] = target_of_arc;
          continue;
        }
        if (next == target_of_arc) ++next;
        map[p0] = next;
        fibers[next].push_back(p0);
        ++next;
      }
      const NCMorphism f(cyc(n), cyc(m), map, fibers);
      REQUIRE(f.belongs_to(Category::delta_c));
      std::set<CyclicTree> image;
      std::size_t pairs = 0;
      for (const auto& outer : all_faces(WPoset(m)))
        for (const auto& inner : all_faces(KPoset(b.size))) {
          std::vector<PlanarTree> ks(m, PlanarTree::corolla(1));
          ks[target_of_arc] = inner;
          const auto x = module_action(f, outer, ks);
          CHECK(x.dimension() == outer.dimension() + inner.dimension());
          image.insert(x);
          ++pairs;
        }
      std::size_t below = 0;
      for (const auto& x : all_faces(p))
        if (x == t || x.is_face_of(t)) ++below;
      CHECK(image.size() == pairs);
      CHECK(image.size() == below);
    }
  }
}

TEST_CASE("structure maps on small cases") {
  const KPoset k3(3);
  for (const auto& v : k3.faces(0)) CHECK(codegeneracy(v, 0) == PlanarTree::corolla(2));
  const auto edge = coface(PlanarTree::corolla(3), 1);
  CHECK(edge.dimension() == 1);
  CHECK(KPoset(4).contains(edge));
  CHECK(edge.to_string() == "(x(xx)x)");
  const auto w0 = coface(CyclicTree::corolla(2), 0), w2 = coface(CyclicTree::corolla(2), 2);
  CHECK(w0 != w2);
  CHECK(w0.blocks() == std::vector<Block>{{0, 2}});
  CHECK(w2.blocks() == std::vector<Block>{{2, 2}});
  CHECK_THROWS_AS(codegeneracy(PlanarTree::corolla(3), 1), RangeError);
  CHECK_THROWS_AS(coface(PlanarTree::corolla(3), 3), RangeError);
  CHECK_THROWS_AS(codegeneracy(CyclicTree::corolla(1), 0), RangeError);
  CHECK_THROWS_AS(coface(CyclicTree::corolla(2), 3), RangeError);
}

TEST_CASE("collapse to simplices") {
  CHECK(collapse_to_simplex(PlanarTree::corolla(5)) == SimplexFace{3, {0, 1, 2, 3}});
  CHECK(collapse_to_simplex(CyclicTree::corolla(4)) == SimplexFace{3, {0, 1, 2, 3}});
  const KPoset p3(3);
  std::set<SimplexFace> k3;
  for (const auto& v : p3.faces(0)) k3.insert(collapse_to_simplex(v));
  CHECK(k3 == std::set<SimplexFace>{{1, {0}}, {1, {1}}});

  for (std::uint32_t n = 0; n <= 4; ++n) {
    const KPoset k(n + 2);
    const WPoset w(n + 1);
    std::set<SimplexFace> kimg, wimg;
    for (const auto& x : all_faces(k)) {
      const auto c = collapse_to_simplex(x);
      kimg.insert(c);
      for (const auto& y : k.cofacets_of(x)) CHECK(c.is_face_of(collapse_to_simplex(y)));
      // Naturality squares.
      for (std::uint32_t i = 0; i + 1 <= n; ++i)
        CHECK(collapse_to_simplex(codegeneracy(x, i)) == simplex_codegeneracy(c, i));
      for (std::uint32_t j = 0; j <= n + 1; ++j) CHECK(collapse_to_simplex(coface(x, j)) == simplex_coface(c, j));
    }
    for (const auto& x : all_faces(w)) {
      const auto c = collapse_to_simplex(x);
      wimg.insert(c);
      for (const auto& y : w.cofacets_of(x)) CHECK(c.is_face_of(collapse_to_simplex(y)));
      for (std::uint32_t i = 0; i + 1 <= n; ++i)
        CHECK(collapse_to_simplex(codegeneracy(x, i)) == simplex_codegeneracy(c, i));
      for (std::uint32_t j = 0; j <= n + 1; ++j) CHECK(collapse_to_simplex(coface(x, j)) == simplex_coface(c, j));
    }
    const auto faces = simplex_faces(n);
    CHECK(kimg == std::set<SimplexFace>(faces.begin(), faces.end()));
    CHECK(wimg == std::set<SimplexFace>(faces.begin(), faces.end()));
  }
}

TEST_CASE("the facets next to the endpoints are crushed") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const PlanarTree left(n + 2, {{0, n + 1}}), right(n + 2, {{1, n + 1}});
    CHECK(left.dimension() == static_cast<int>(n) - 1);
    CHECK(collapse_to_simplex(left) == SimplexFace{n, {n}});
    CHECK(collapse_to_simplex(right) == SimplexFace{n, {0}});
  }
}

TEST_CASE("simplicial identities on simplex faces") {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (const auto& x : simplex_faces(n)) {
      for (std::uint32_t i = 0; i <= n + 1; ++i)
        for (std::uint32_t j = i + 1; j <= n + 2; ++j)
          CHECK(simplex_coface(simplex_coface(x, i), j) == simplex_coface(simplex_coface(x, j - 1), i));
      for (std::uint32_t i = 0; i < n; ++i) {
        CHECK(simplex_codegeneracy(simplex_coface(x, i), i) == x);
        CHECK(simplex_codegeneracy(simplex_coface(x, i + 1), i) == x);
      }
    }
}

TEST_CASE("dot and json export") {
  const auto dot = KPoset(3).to_dot();
  CHECK(dot.find("digraph K3") != std::string::npos);
  CHECK(dot.find("\"((xx)x)\" -> \"(xxx)\"") != std::string::npos);
  const auto j = KCubical(4).to_json();
  CHECK(j["cubes"].size() == 5);
  CHECK(j["cell_counts"] == nlohmann::json::array({11, 15, 5}));
}
