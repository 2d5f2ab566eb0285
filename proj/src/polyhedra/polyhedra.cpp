#include "cycbar/polyhedra/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "cycbar/errors.hpp"

namespace cycbar::polyhedra {

using trees::Cyclic;
using trees::Linear;

namespace {

std::uint32_t mod(std::int64_t a, std::uint32_t n) {
  const std::int64_t r = a % static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

template <class Shape>
bool degenerate(const Block& b, std::uint32_t n) {
  if (b.size < 2) return true;
  if constexpr (!Shape::cyclic) return b.size >= n;
  return false;
}

// A block carried through a sequence of grafts. `key` orders the free axes
// of the product cell: host axes first, then fiber 0, fiber 1, ...
struct Entry {
  Block b;
  bool free;
  std::size_t key;
};

template <class Cell>
void push_cell(std::vector<Entry>& out, const Cell& c, std::uint32_t offset, std::size_t key_base) {
  const auto& bl = c.tree.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i)
    out.push_back({{bl[i].start + offset, bl[i].size}, ((c.free >> i) & 1u) != 0, key_base + i});
}

// Substitutes guests[t] for every leaf t of a host with n leaves, in
// descending order so the remaining slots keep their positions. Returns the
// new leaf count.
template <bool cyclic>
std::uint32_t graft_all(std::uint32_t n, std::vector<Entry>& entries, const std::vector<PlanarCell>& guests) {
  std::uint32_t cur = n;
  for (std::uint32_t t = n; t-- > 0;) {
    const PlanarCell& g = guests[t];
    const std::uint32_t m = g.tree.leaves();
    if (m == 1) continue;
    const std::int64_t delta = static_cast<std::int64_t>(m) - 1;
    const std::uint32_t total = cur + m - 1;
    for (Entry& e : entries) {
      std::int64_t start = e.b.start, size = e.b.size;
      if (trees::block_has(e.b, t, cur)) size += delta;
      if (e.b.start > t) start += delta;
      if (size < 0) size = 0;
      if (total == 0)
        start = 0;
      else if (cyclic)
        start = mod(start, total);
      else if (start >= total)
        start = total - 1;
      e.b = {static_cast<std::uint32_t>(start), static_cast<std::uint32_t>(size)};
    }
    push_cell(entries, g, t, (static_cast<std::size_t>(t) + 1) << 32);
    entries.push_back({{t, m}, false, 0});
    cur = total;
  }
  return cur;
}

template <class Shape>
std::optional<Signed<CubeCell<Shape>>> finish(std::uint32_t leaves, std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::vector<std::pair<Block, bool>> flat;
  flat.reserve(entries.size());
  for (const Entry& e : entries) flat.push_back({e.b, e.free});
  return normalize_cell<Shape>(leaves, flat);
}

void check_fibers(const finord::NCMorphism& f, std::size_t given, std::size_t host_leaves) {
  if (host_leaves != f.target().size())
    throw ValidationError("tree has " + std::to_string(host_leaves) + " leaves but the target has " +
                          std::to_string(f.target().size()) + " elements");
  if (given != f.target().size()) throw ValidationError("need one fiber face per target element");
}

template <class Cells>
void check_fiber_sizes(const finord::NCMorphism& f, const Cells& fibers) {
  for (std::size_t t = 0; t < fibers.size(); ++t)
    if (fibers[t].tree.leaves() != f.fiber(static_cast<std::uint32_t>(t)).size())
      throw ValidationError("fiber face over target element " + std::to_string(t) + " has the wrong number of leaves");
}

std::vector<PlanarCell> as_cells(const std::vector<PlanarTree>& faces) {
  std::vector<PlanarCell> out;
  out.reserve(faces.size());
  for (const auto& t : faces) out.push_back({t, 0});
  return out;
}

}  // namespace

template <class Shape>
int CubeCell<Shape>::dimension() const {
  return std::popcount(free);
}

template <class Shape>
std::vector<Block> CubeCell<Shape>::axes() const {
  std::vector<Block> out;
  for (std::size_t i = 0; i < tree.blocks().size(); ++i)
    if ((free >> i) & 1u) out.push_back(tree.blocks()[i]);
  return out;
}

template struct CubeCell<Linear>;
template struct CubeCell<Cyclic>;

template <class Shape>
std::optional<Signed<CubeCell<Shape>>> normalize_cell(std::uint32_t leaves,
                                                      const std::vector<std::pair<Block, bool>>& blocks) {
  std::map<Block, std::pair<int, bool>> seen;  // multiplicity, any free
  std::vector<Block> free_order;
  for (const auto& [b, is_free] : blocks) {
    if (degenerate<Shape>(b, leaves)) {
      if (is_free) return std::nullopt;
      continue;
    }
    auto& s = seen[b];
    ++s.first;
    s.second = s.second || is_free;
    if (is_free) free_order.push_back(b);
  }
  std::vector<Block> kept;
  for (const auto& [b, s] : seen) {
    if (s.first > 1 && s.second) return std::nullopt;
    kept.push_back(b);
  }
  BlockTree<Shape> tree(leaves, std::move(kept));
  const auto& bl = tree.blocks();
  std::uint32_t mask = 0;
  std::vector<std::size_t> pos;
  for (const Block& b : free_order) {
    const auto i = static_cast<std::size_t>(std::find(bl.begin(), bl.end(), b) - bl.begin());
    mask |= 1u << i;
    pos.push_back(i);
  }
  int sign = 1;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (pos[i] > pos[j]) sign = -sign;
  return Signed<CubeCell<Shape>>{{std::move(tree), mask}, sign};
}

template std::optional<Signed<PlanarCell>> normalize_cell<Linear>(std::uint32_t,
                                                                  const std::vector<std::pair<Block, bool>>&);
template std::optional<Signed<CyclicCell>> normalize_cell<Cyclic>(std::uint32_t,
                                                                  const std::vector<std::pair<Block, bool>>&);

// ---- face posets ----

template <class Shape>
FacePoset<Shape>::FacePoset(std::uint32_t n) : n_(n) {
  std::vector<std::vector<Tree>> groups;
  if constexpr (Shape::cyclic) {
    if (n < 1) throw RangeError("the cyclohedron W_n needs n >= 1");
    groups = trees::enumerate_cyclic_trees(n);
  } else {
    groups = trees::enumerate_planar_trees(n);
  }
  by_dim_.assign(groups.rbegin(), groups.rend());
  for (auto& g : by_dim_) std::sort(g.begin(), g.end());
}

template <class Shape>
std::vector<std::size_t> FacePoset<Shape>::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& g : by_dim_) out.push_back(g.size());
  return out;
}

template <class Shape>
std::size_t FacePoset<Shape>::size() const {
  std::size_t s = 0;
  for (const auto& g : by_dim_) s += g.size();
  return s;
}

template <class Shape>
bool FacePoset<Shape>::contains(const Tree& t) const {
  if (t.leaves() != n_) return false;
  const int d = t.dimension();
  if (d < 0 || d > dimension()) return false;
  const auto& g = by_dim_[static_cast<std::size_t>(d)];
  return std::binary_search(g.begin(), g.end(), t);
}

template <class Shape>
std::vector<typename FacePoset<Shape>::Tree> FacePoset<Shape>::facets_of(const Tree& t) const {
  std::vector<Tree> out;
  for (const Block& b : trees::candidate_blocks<Shape>(n_)) {
    const auto& bl = t.blocks();
    if (std::find(bl.begin(), bl.end(), b) == bl.end() && t.compatible(b)) out.push_back(t.with_block(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Shape>
std::vector<typename FacePoset<Shape>::Tree> FacePoset<Shape>::cofacets_of(const Tree& t) const {
  std::vector<Tree> out;
  for (std::size_t i = 0; i < t.blocks().size(); ++i) out.push_back(t.without_block(i));
  std::sort(out.begin(), out.end());
  return out;
}

template <class Shape>
bool FacePoset<Shape>::is_thin() const {
  for (int d = 2; d <= dimension(); ++d)
    for (const Tree& g : faces(d))
      for (const Tree& h : facets_of(g))
        for (const Tree& f : facets_of(h)) {
          std::size_t middle = 0;
          for (const Tree& m : facets_of(g))
            if (f.is_face_of(m)) ++middle;
          if (middle != 2) return false;
        }
  if (dimension() >= 1)
    for (const Tree& e : faces(1))
      if (facets_of(e).size() != 2) return false;
  return true;
}

template <class Shape>
std::string FacePoset<Shape>::to_dot() const {
  std::ostringstream out;
  out << "digraph " << (Shape::cyclic ? "W" : "K") << n_ << " {\n  rankdir=BT;\n";
  for (int d = dimension(); d >= 0; --d)
    for (const Tree& t : faces(d)) out << "  \"" << t.to_string() << "\" [dim=" << d << "];\n";
  for (int d = dimension(); d >= 1; --d)
    for (const Tree& t : faces(d))
      for (const Tree& f : facets_of(t)) out << "  \"" << f.to_string() << "\" -> \"" << t.to_string() << "\";\n";
  out << "}\n";
  return out.str();
}

template class FacePoset<Linear>;
template class FacePoset<Cyclic>;

// ---- cubical models ----

template <class Shape>
CubicalModel<Shape>::CubicalModel(std::uint32_t n) : n_(n) {
  FacePoset<Shape> poset(n);
  const int top = poset.dimension();
  cells_.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d)
    for (const auto& t : poset.faces(d)) {
      const std::size_t e = t.blocks().size();
      for (std::uint32_t mask = 0; mask < (1u << e); ++mask)
        cells_[static_cast<std::size_t>(std::popcount(mask))].push_back({t, mask});
    }
  index_.resize(cells_.size());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    std::sort(cells_[d].begin(), cells_[d].end());
    for (std::size_t i = 0; i < cells_[d].size(); ++i) index_[d].emplace(cells_[d][i], i);
  }
}

template <class Shape>
std::vector<std::size_t> CubicalModel<Shape>::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells_) out.push_back(c.size());
  return out;
}

template <class Shape>
std::size_t CubicalModel<Shape>::index_of(const Cell& c) const {
  const auto d = static_cast<std::size_t>(c.dimension());
  if (d >= index_.size()) throw RangeError("cell is not in the model");
  const auto it = index_[d].find(c);
  if (it == index_[d].end()) throw RangeError("cell is not in the model");
  return it->second;
}

template <class Shape>
std::vector<std::pair<typename CubicalModel<Shape>::Cell, int>> CubicalModel<Shape>::boundary(const Cell& c) {
  std::vector<std::pair<Cell, int>> out;
  int k = 0;
  for (std::size_t i = 0; i < c.tree.blocks().size(); ++i) {
    if (!((c.free >> i) & 1u)) continue;
    const int sign = k % 2 == 0 ? 1 : -1;
    out.push_back({{c.tree, c.free & ~(1u << i)}, sign});
    // Contracting block i shifts the bits of the later blocks down by one.
    const std::uint32_t low = c.free & ((1u << i) - 1), high = c.free >> (i + 1);
    out.push_back({{c.tree.without_block(i), low | (high << i)}, -sign});
    ++k;
  }
  return out;
}

template <class Shape>
exactalg::ChainComplex CubicalModel<Shape>::chain_complex(const exactalg::GroundRing& ring) const {
  std::vector<std::size_t> ranks = cell_counts();
  std::vector<exactalg::SparseMatrix> boundaries;
  for (std::size_t d = 1; d < cells_.size(); ++d) {
    exactalg::SparseMatrix m(ranks[d - 1], ranks[d]);
    for (std::size_t j = 0; j < cells_[d].size(); ++j)
      for (const auto& [face, sign] : boundary(cells_[d][j])) m.add(index_[d - 1].at(face), j, sign);
    m.normalize(ring);
    boundaries.push_back(std::move(m));
  }
  return exactalg::ChainComplex::homological(ring, std::move(ranks), std::move(boundaries));
}

template <class Shape>
nlohmann::json CubicalModel<Shape>::to_json() const {
  nlohmann::json cubes = nlohmann::json::array();
  for (const Cell& c : top_cubes()) {
    nlohmann::json axes = nlohmann::json::array();
    for (const Block& b : c.axes()) axes.push_back({b.start, b.size});
    cubes.push_back({{"tree", c.tree.to_string()}, {"axes", std::move(axes)}});
  }
  nlohmann::json ident = nlohmann::json::array();
  for (std::size_t d = 0; d + 1 < cells_.size(); ++d)
    for (const Cell& c : cells_[d]) {
      nlohmann::json where = nlohmann::json::array();
      for (std::size_t q = 0; q < top_cubes().size(); ++q) {
        const auto& cube = top_cubes()[q].tree;
        if (!cube.is_face_of(c.tree) && !(c.tree == cube)) continue;
        nlohmann::json coords = nlohmann::json::array();
        for (const Block& b : cube.blocks()) {
          const auto& bl = c.tree.blocks();
          const auto it = std::find(bl.begin(), bl.end(), b);
          if (it == bl.end())
            coords.push_back(0);
          else if ((c.free >> (it - bl.begin())) & 1u)
            coords.push_back(nullptr);
          else
            coords.push_back(1);
        }
        where.push_back({{"cube", q}, {"coordinates", std::move(coords)}});
      }
      if (where.size() < 2) continue;
      ident.push_back({{"cell", c}, {"in", std::move(where)}});
    }
  return {{"family", Shape::cyclic ? "W" : "K"},
          {"n", n_},
          {"dimension", dimension()},
          {"cell_counts", cell_counts()},
          {"cubes", std::move(cubes)},
          {"identifications", std::move(ident)}};
}

template class CubicalModel<Linear>;
template class CubicalModel<Cyclic>;

Associahedron associahedron(std::uint32_t n) { return {KPoset(n), KCubical(n)}; }
Cyclohedron cyclohedron(std::uint32_t n) { return {WPoset(n), WCubical(n)}; }

// ---- structure maps ----

std::optional<Signed<PlanarCell>> operad_compose(std::uint32_t slot, const PlanarCell& a, const PlanarCell& b) {
  const std::uint32_t n = a.tree.leaves();
  if (slot >= n) throw RangeError("slot " + std::to_string(slot) + " is not a leaf of the host");
  std::vector<Entry> entries;
  push_cell(entries, a, 0, 0);
  std::vector<PlanarCell> guests(n, PlanarCell{PlanarTree::corolla(1), 0});
  guests[slot] = b;
  const std::uint32_t total = graft_all<false>(n, entries, guests);
  return finish<Linear>(total, std::move(entries));
}

PlanarTree operad_compose(std::uint32_t slot, const PlanarTree& a, const PlanarTree& b) {
  return operad_compose(slot, PlanarCell{a, 0}, PlanarCell{b, 0})->cell.tree;
}

std::optional<Signed<PlanarCell>> module_action(const finord::NCMorphism& f, const PlanarCell& w,
                                                const std::vector<PlanarCell>& fibers) {
  check_fibers(f, fibers.size(), w.tree.leaves());
  check_fiber_sizes(f, fibers);
  const auto concat = f.concatenated_fibers();
  for (std::uint32_t i = 0; i < concat.size(); ++i)
    if (concat[i] != i) throw CategoryError("fibers of a linear action must list the source in order");
  std::vector<Entry> entries;
  push_cell(entries, w, 0, 0);
  const std::uint32_t total = graft_all<false>(w.tree.leaves(), entries, fibers);
  return finish<Linear>(total, std::move(entries));
}

PlanarTree module_action(const finord::NCMorphism& f, const PlanarTree& w, const std::vector<PlanarTree>& fibers) {
  return module_action(f, PlanarCell{w, 0}, as_cells(fibers))->cell.tree;
}

std::optional<Signed<CyclicCell>> module_action(const finord::NCMorphism& f, const CyclicCell& w,
                                                const std::vector<PlanarCell>& fibers) {
  f.check_morphism(finord::Category::delta_c_plus);
  check_fibers(f, fibers.size(), w.tree.leaves());
  check_fiber_sizes(f, fibers);
  std::vector<Entry> entries;
  push_cell(entries, w, 0, 0);
  const std::uint32_t total = graft_all<true>(w.tree.leaves(), entries, fibers);
  // Leaves now sit in the order of the concatenated fibers, a rotation of S.
  const auto concat = f.concatenated_fibers();
  if (total > 0) {
    const std::uint32_t r = concat.front();
    for (Entry& e : entries) e.b.start = (e.b.start + r) % total;
  }
  return finish<Cyclic>(total, std::move(entries));
}

CyclicTree module_action(const finord::NCMorphism& f, const CyclicTree& w, const std::vector<PlanarTree>& fibers) {
  return module_action(f, CyclicCell{w, 0}, as_cells(fibers))->cell.tree;
}

std::vector<PlanarTree> compose_fiber_faces(const finord::NCMorphism& g, const std::vector<PlanarTree>& g_faces,
                                            const finord::NCMorphism& f, const std::vector<PlanarTree>& f_faces) {
  if (!(f.target() == g.source())) throw CompositionError("fiber faces of non-composable morphisms");
  std::vector<PlanarTree> out;
  for (std::uint32_t u = 0; u < g.target().size(); ++u) {
    const auto& fib = g.fiber(u);
    if (g_faces.at(u).leaves() != fib.size()) throw ValidationError("fiber face has the wrong number of leaves");
    PlanarTree t = g_faces[u];
    for (std::size_t k = fib.size(); k-- > 0;) t = trees::graft(t, static_cast<std::uint32_t>(k), f_faces.at(fib[k]));
    out.push_back(std::move(t));
  }
  return out;
}

PlanarTree codegeneracy(const PlanarTree& x, std::uint32_t i) {
  const std::uint32_t size = x.leaves();
  if (size < 3 || i + 3 > size)
    throw RangeError("s^" + std::to_string(i) + " is not defined on K_" + std::to_string(size));
  return trees::graft(x, i + 1, PlanarTree::corolla(0));
}

PlanarTree coface(const PlanarTree& x, std::uint32_t j) {
  const std::uint32_t size = x.leaves();
  if (size < 2 || j >= size) throw RangeError("d^" + std::to_string(j) + " is not defined on K_" + std::to_string(size));
  return trees::graft(x, j, PlanarTree::corolla(2));
}

CyclicTree codegeneracy(const CyclicTree& x, std::uint32_t i) {
  const std::uint32_t size = x.leaves();
  if (size < 2 || i + 2 > size)
    throw RangeError("s^" + std::to_string(i) + " is not defined on W_" + std::to_string(size));
  return trees::graft(x, i + 1, PlanarTree::corolla(0));
}

CyclicTree coface(const CyclicTree& x, std::uint32_t j) {
  const std::uint32_t size = x.leaves();
  if (size < 1 || j > size) throw RangeError("d^" + std::to_string(j) + " is not defined on W_" + std::to_string(size));
  if (j < size) return trees::graft(x, j, PlanarTree::corolla(2));
  // The doubled basepoint: the first copy becomes the new last point.
  const CyclicTree g = trees::graft(x, 0, PlanarTree::corolla(2));
  const std::uint32_t total = g.leaves();
  std::vector<Block> blocks;
  for (const Block& b : g.blocks()) blocks.push_back({(b.start + total - 1) % total, b.size});
  return CyclicTree(total, std::move(blocks));
}

// ---- collapse to simplices ----

bool SimplexFace::is_face_of(const SimplexFace& other) const {
  return n == other.n && std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(), vertices.end());
}

namespace {

template <class Shape>
SimplexFace collapse(const BlockTree<Shape>& x, std::uint32_t n, std::uint32_t gaps) {
  SimplexFace out{n, {}};
  const std::uint32_t leaves = x.leaves();
  for (std::uint32_t i = 0; i < gaps; ++i) {
    const std::uint32_t a = i, b = (i + 1) % leaves;
    bool collapsed = false;
    for (const Block& blk : x.blocks()) {
      if (!trees::block_has(blk, a, leaves) || !trees::block_has(blk, b, leaves)) continue;
      // A root edge holds every pair except the one across its cut.
      if (blk.size == leaves && Shape::cyclic && b == blk.start) continue;
      collapsed = true;
      break;
    }
    if (!collapsed) out.vertices.push_back(i);
  }
  return out;
}

}  // namespace

SimplexFace collapse_to_simplex(const PlanarTree& x) {
  if (x.leaves() < 2) throw RangeError("collapse needs K_{n+2} with n >= 0");
  const std::uint32_t n = x.leaves() - 2;
  return collapse(x, n, n + 1);
}

SimplexFace collapse_to_simplex(const CyclicTree& x) {
  if (x.leaves() < 1) throw RangeError("collapse needs W_{n+1} with n >= 0");
  const std::uint32_t n = x.leaves() - 1;
  return collapse(x, n, n + 1);
}

SimplexFace simplex_codegeneracy(const SimplexFace& x, std::uint32_t i) {
  if (x.n == 0 || i >= x.n) throw RangeError("s^" + std::to_string(i) + " is not defined on Δ^" + std::to_string(x.n));
  std::set<std::uint32_t> v;
  for (std::uint32_t k : x.vertices) v.insert(k <= i ? k : k - 1);
  return {x.n - 1, {v.begin(), v.end()}};
}

SimplexFace simplex_coface(const SimplexFace& x, std::uint32_t j) {
  if (j > x.n + 1) throw RangeError("d^" + std::to_string(j) + " is not defined on Δ^" + std::to_string(x.n));
  SimplexFace out{x.n + 1, {}};
  for (std::uint32_t k : x.vertices) out.vertices.push_back(k < j ? k : k + 1);
  return out;
}

SimplexFace simplex_map(const finord::DeltaMap& g, const SimplexFace& x) {
  if (g.source_n != x.n) throw CompositionError("simplex map applied to a face of the wrong simplex");
  std::set<std::uint32_t> v;
  for (std::uint32_t k : x.vertices) v.insert(g.table.at(k));
  return {g.target_n, {v.begin(), v.end()}};
}

std::vector<SimplexFace> simplex_faces(std::uint32_t n) {
  std::vector<SimplexFace> out;
  for (std::uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
    SimplexFace f{n, {}};
    for (std::uint32_t i = 0; i <= n; ++i)
      if ((mask >> i) & 1u) f.vertices.push_back(i);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const SimplexFace& a, const SimplexFace& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

// ---- facets ----

std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> facet_census(const KPoset& p) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> out;
  if (p.dimension() < 1) return out;
  const std::uint32_t n = p.leaves();
  for (const auto& t : p.faces(p.dimension() - 1)) {
    const std::uint32_t r = t.blocks().front().size;
    ++out[{n - r + 1, r}];
  }
  return out;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> facet_census(const WPoset& p) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> out;
  if (p.dimension() < 1) return out;
  const std::uint32_t n = p.leaves();
  for (const auto& t : p.faces(p.dimension() - 1)) {
    const std::uint32_t r = t.blocks().front().size;
    ++out[{n - r + 1, r}];
  }
  return out;
}

namespace {

template <class Cell>
nlohmann::json cell_json(const Cell& c) {
  nlohmann::json axes = nlohmann::json::array();
  for (const Block& b : c.axes()) axes.push_back({b.start, b.size});
  return {{"tree", c.tree.to_string()}, {"free", std::move(axes)}};
}

}  // namespace

void to_json(nlohmann::json& j, const PlanarCell& c) { j = cell_json(c); }
void to_json(nlohmann::json& j, const CyclicCell& c) { j = cell_json(c); }
void to_json(nlohmann::json& j, const SimplexFace& f) { j = {{"n", f.n}, {"vertices", f.vertices}}; }

}  // namespace cycbar::polyhedra
