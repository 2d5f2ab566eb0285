#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycbar/exactalg/chain_complex.hpp"
#include "cycbar/finord/finord.hpp"
#include "cycbar/trees/trees.hpp"

namespace cycbar::polyhedra {

using trees::Block;
using trees::BlockTree;
using trees::CyclicTree;
using trees::PlanarTree;

// Face lattice of K_n (Linear) or W_n (Cyclic). A face is a tree; its
// facets insert one block.
template <class Shape>
class FacePoset {
 public:
  using Tree = BlockTree<Shape>;

  // K_n for n >= 0; W_n for n >= 1 (RangeError otherwise).
  explicit FacePoset(std::uint32_t n);

  std::uint32_t leaves() const { return n_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Tree>& faces(int dim) const { return by_dim_.at(static_cast<std::size_t>(dim)); }
  // Entry d counts the faces of dimension d.
  std::vector<std::size_t> f_vector() const;
  std::size_t size() const;
  bool contains(const Tree& t) const;

  // Codimension-one faces of t.
  std::vector<Tree> facets_of(const Tree& t) const;
  // Faces having t as a facet.
  std::vector<Tree> cofacets_of(const Tree& t) const;
  // Every interval of length two has exactly two middle elements, and every
  // edge has two vertices.
  bool is_thin() const;

  // Hasse diagram, face -> facet.
  std::string to_dot() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::vector<Tree>> by_dim_;
};

using KPoset = FacePoset<trees::Linear>;
using WPoset = FacePoset<trees::Cyclic>;

// A cube of the W-construction model: the tree `tree` with its edges of
// length 1 except the ones marked free (bit i refers to tree.blocks()[i]).
// Edges of length 0 are contracted, so they are absent from the tree.
template <class Shape>
struct CubeCell {
  BlockTree<Shape> tree;
  std::uint32_t free = 0;

  int dimension() const;
  // Free blocks in axis order.
  std::vector<Block> axes() const;
  friend bool operator==(const CubeCell&, const CubeCell&) = default;
  friend auto operator<=>(const CubeCell& a, const CubeCell& b) {
    if (auto c = a.tree <=> b.tree; c != 0) return c;
    return a.free <=> b.free;
  }
};

using PlanarCell = CubeCell<trees::Linear>;
using CyclicCell = CubeCell<trees::Cyclic>;

template <class Cell>
struct Signed {
  Cell cell;
  int sign = 1;
};

// Normal form of a cell given as blocks with free flags in axis order:
// degenerate blocks and duplicates are removed. Empty when a free
// coordinate is lost, since the cell then maps to a lower-dimensional one.
// The sign compares the given axis order with the canonical one.
template <class Shape>
std::optional<Signed<CubeCell<Shape>>> normalize_cell(std::uint32_t leaves,
                                                      const std::vector<std::pair<Block, bool>>& blocks);

// Cubical model of K_n or W_n: one top cube per binary tree (for W_n, the
// binary trees all have a single root edge).
template <class Shape>
class CubicalModel {
 public:
  using Cell = CubeCell<Shape>;

  explicit CubicalModel(std::uint32_t n);

  std::uint32_t leaves() const { return n_; }
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<Cell>& cells(int dim) const { return cells_.at(static_cast<std::size_t>(dim)); }
  std::vector<std::size_t> cell_counts() const;
  std::size_t index_of(const Cell& c) const;
  const std::vector<Cell>& top_cubes() const { return cells_.back(); }
  // Vertices of the model are the metric trees with lengths in {0,1}.
  std::size_t vertex_count() const { return cells_.front().size(); }

  // Sum over axes k of (-1)^k (face at 1 - face at 0).
  static std::vector<std::pair<Cell, int>> boundary(const Cell& c);
  exactalg::ChainComplex chain_complex(const exactalg::GroundRing& ring = exactalg::GroundRing::integers()) const;

  // Top cubes with their axes, and for every lower cell shared by several
  // cubes the coordinates (0, 1 or null for free) at which it sits in each.
  nlohmann::json to_json() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::map<Cell, std::size_t>> index_;
};

using KCubical = CubicalModel<trees::Linear>;
using WCubical = CubicalModel<trees::Cyclic>;

struct Associahedron {
  KPoset poset;
  KCubical cubes;
};
struct Cyclohedron {
  WPoset poset;
  WCubical cubes;
};
Associahedron associahedron(std::uint32_t n);
Cyclohedron cyclohedron(std::uint32_t n);

// ∘_s on faces and on cells; RangeError when the slot is not a leaf of a.
PlanarTree operad_compose(std::uint32_t slot, const PlanarTree& a, const PlanarTree& b);
std::optional<Signed<PlanarCell>> operad_compose(std::uint32_t slot, const PlanarCell& a, const PlanarCell& b);

// K(T) × K[f] → K(S) for f: S → T whose fibers, concatenated, list S in
// order (e.g. a morphism of ⁰¹Δ). `fibers[t]` is a face of K(f⁻¹(t)).
PlanarTree module_action(const finord::NCMorphism& f, const PlanarTree& w, const std::vector<PlanarTree>& fibers);
std::optional<Signed<PlanarCell>> module_action(const finord::NCMorphism& f, const PlanarCell& w,
                                                const std::vector<PlanarCell>& fibers);
// W(T) × K[f] → W(S) for f: S → T in ΔC₊.
CyclicTree module_action(const finord::NCMorphism& f, const CyclicTree& w, const std::vector<PlanarTree>& fibers);
std::optional<Signed<CyclicCell>> module_action(const finord::NCMorphism& f, const CyclicCell& w,
                                                const std::vector<PlanarCell>& fibers);

// The face K[f₂∘f₁] component obtained by composing fiber trees: for each
// u, the tree over g⁻¹(u) with the f-fiber trees grafted in.
std::vector<PlanarTree> compose_fiber_faces(const finord::NCMorphism& g, const std::vector<PlanarTree>& g_faces,
                                            const finord::NCMorphism& f, const std::vector<PlanarTree>& f_faces);

// s^i : K_{n+2} → K_{n+1} (0 <= i <= n-1) removes x_{i+1};
// d^j : K_{n+2} → K_{n+3} (0 <= j <= n+1) doubles x_j.
PlanarTree codegeneracy(const PlanarTree& x, std::uint32_t i);
PlanarTree coface(const PlanarTree& x, std::uint32_t j);
// s^i : W_{n+1} → W_n (0 <= i <= n-1); d^j : W_{n+1} → W_{n+2} (0 <= j <= n+1),
// where d^0 and d^{n+1} double the basepoint on either side.
CyclicTree codegeneracy(const CyclicTree& x, std::uint32_t i);
CyclicTree coface(const CyclicTree& x, std::uint32_t j);

// A face of Δⁿ, named by the coordinates t_i allowed to be nonzero.
struct SimplexFace {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> vertices;  // sorted, nonempty

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  bool is_face_of(const SimplexFace& other) const;
  friend bool operator==(const SimplexFace&, const SimplexFace&) = default;
  friend auto operator<=>(const SimplexFace&, const SimplexFace&) = default;
};

// Collapse K_{n+2} → Δⁿ and W_{n+1} → Δⁿ: gap i (between positions i and
// i+1, cyclically for W) is forced to zero iff some block holds both ends.
SimplexFace collapse_to_simplex(const PlanarTree& x);
SimplexFace collapse_to_simplex(const CyclicTree& x);
SimplexFace simplex_codegeneracy(const SimplexFace& x, std::uint32_t i);
SimplexFace simplex_coface(const SimplexFace& x, std::uint32_t j);
// Image under the cosimplicial map of a monotone g: [n] → [m].
SimplexFace simplex_map(const finord::DeltaMap& g, const SimplexFace& x);
// All faces of Δⁿ, ordered by dimension then vertices.
std::vector<SimplexFace> simplex_faces(std::uint32_t n);

// Facets of K_n grouped by shape K_r × K_{n-r+1} (key {n-r+1, r}) and of W_n
// by shape W_s × K_{n-s+1} (key {s, n-s+1}); values count copies.
std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> facet_census(const KPoset& p);
std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> facet_census(const WPoset& p);

void to_json(nlohmann::json& j, const PlanarCell& c);
void to_json(nlohmann::json& j, const CyclicCell& c);
void to_json(nlohmann::json& j, const SimplexFace& f);

}  // namespace cycbar::polyhedra
