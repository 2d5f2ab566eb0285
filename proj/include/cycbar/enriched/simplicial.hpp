#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycbar/exactalg/chain_complex.hpp"
#include "cycbar/finord/finord.hpp"

namespace cycbar::enriched {

// An n-simplex in Eilenberg–Zilber form: the degeneracy s: [n] ↠ [k] applied
// to the nondegenerate k-simplex number `index`.
struct Simplex {
  std::vector<std::uint32_t> degeneracy;
  std::uint32_t k = 0;
  std::uint32_t index = 0;

  std::uint32_t dimension() const { return static_cast<std::uint32_t>(degeneracy.size()) - 1; }
  bool is_degenerate() const { return k != dimension(); }
  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

// A finite simplicial set given by its nondegenerate simplices and their
// faces. Degenerate simplices are generated on demand.
class SimplicialSet {
 public:
  SimplicialSet() = default;
  // names[k] lists the nondegenerate k-simplices; faces[k][y][i] = d_i y for
  // k >= 1 (faces[0] is empty). Throws ValidationError naming the failing
  // identity d_i d_j = d_{j-1} d_i and the simplex.
  SimplicialSet(std::vector<std::vector<std::string>> names, std::vector<std::vector<std::vector<Simplex>>> faces);

  static SimplicialSet point();
  // One vertex and one edge.
  static SimplicialSet circle();
  static SimplicialSet standard_simplex(std::uint32_t n);
  // ∂Δ[n+1], an n-sphere.
  static SimplicialSet boundary_sphere(std::uint32_t n);
  // Δ[n]/∂Δ[n]: a vertex and one nondegenerate n-simplex.
  static SimplicialSet collapsed_simplex(std::uint32_t n);

  // Largest dimension with a nondegenerate simplex.
  std::uint32_t dimension() const { return static_cast<std::uint32_t>(names_.size()) - 1; }
  std::size_t nondegenerate(std::uint32_t k) const { return k < names_.size() ? names_[k].size() : 0; }
  const std::string& name(std::uint32_t k, std::uint32_t index) const { return names_.at(k).at(index); }
  std::string describe(const Simplex& x) const;

  static Simplex nondegenerate_simplex(std::uint32_t k, std::uint32_t index);
  // All of X_n in a fixed order.
  std::vector<Simplex> simplices(std::uint32_t n) const;
  // X(g): X_{g.target_n} → X_{g.source_n}.
  Simplex apply(const finord::DeltaMap& g, const Simplex& x) const;
  Simplex face(std::uint32_t i, const Simplex& x) const;
  Simplex degeneracy(std::uint32_t i, const Simplex& x) const;

  // Normalized chains: nondegenerate simplices, degenerate faces dropped.
  exactalg::ChainComplex normalized_chains(const exactalg::GroundRing& ring = exactalg::GroundRing::integers()) const;
  // All simplices in degrees 0..top.
  exactalg::ChainComplex moore_complex(std::uint32_t top,
                                       const exactalg::GroundRing& ring = exactalg::GroundRing::integers()) const;

 private:
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;
};

// {"simplices":[["v"],["e"]],"faces":{"e":["v","v"]}}; a face is a name or
// {"simplex":name,"degeneracy":[...]}.
SimplicialSet simplicial_set_from_json(const nlohmann::json& j);
nlohmann::json simplicial_set_to_json(const SimplicialSet& x);

}  // namespace cycbar::enriched
