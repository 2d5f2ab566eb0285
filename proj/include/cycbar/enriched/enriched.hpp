#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycbar/enriched/simplicial.hpp"
#include "cycbar/exactalg/chain_complex.hpp"
#include "cycbar/finord/finord.hpp"
#include "cycbar/polyhedra/polyhedra.hpp"

namespace cycbar::enriched {

using exactalg::ChainComplex;
using exactalg::HomologyGroup;
using finord::Category;
using finord::FinOrdSet;
using finord::NCMorphism;
using polyhedra::PlanarTree;

// The two indexing categories with associahedra-enriched homs.
enum class Indexing { zero_one_delta, zero_delta_c };
// Right modules used as realization coefficients.
enum class Coefficients { associahedra, cyclohedra, simplices };

Category category_of(Indexing i);
Indexing parse_indexing(const std::string& s);     // "01delta" | "0deltaC"
Coefficients parse_coefficients(const std::string& s);  // "K" | "W" | "simplex"
// Standard object with Δ-dimension n: size n+2 for ⁰¹Δ, n+1 for ⁰ΔC.
FinOrdSet standard_object(Indexing i, std::uint32_t n);

// One component of Hom(S,T): the polytope Π_t K(f⁻¹(t)).
struct HomComponent {
  NCMorphism f;
  std::vector<std::uint32_t> fiber_sizes;
  int dimension = 0;       // Σ_t (|f⁻¹(t)| - 2)⁺
  std::size_t faces = 0;   // Π_t #faces of K(|f⁻¹(t)|)
  std::size_t vertices = 0;
};
std::vector<HomComponent> enriched_hom(const FinOrdSet& s, const FinOrdSet& t, Category c);

// Composite of (g, faces of P[g]) and (f, faces of P[f]) in P[g∘f].
struct ComposedFace {
  NCMorphism h;
  std::vector<PlanarTree> faces;
};
ComposedFace enriched_compose(const NCMorphism& g, const std::vector<PlanarTree>& g_faces, const NCMorphism& f,
                              const std::vector<PlanarTree>& f_faces);

// Chain-level coequalizer R ⊗_𝒜 X of a coefficient module R with a
// simplicial set pulled back along 𝒜 ≅ Δᵒᵖ. Objects up to Δ-dimension
// max_degree+1 are used, so homology is exact through max_degree.
struct Realization {
  std::size_t max_degree = 0;
  std::size_t generators = 0;  // before the quotient
  std::size_t relations = 0;
  ChainComplex complex;

  // H_0..H_max_degree.
  std::vector<HomologyGroup> homology() const;
};
// RangeError for 𝒦 over ⁰ΔC or 𝒲 over ⁰¹Δ.
Realization realize(const SimplicialSet& x, Indexing indexing, Coefficients coefficients, std::size_t max_degree,
                    const exactalg::GroundRing& ring = exactalg::GroundRing::integers());
// H_0..H_max_degree of the normalized chains of x.
std::vector<HomologyGroup> ordinary_homology(const SimplicialSet& x, std::size_t max_degree,
                                             const exactalg::GroundRing& ring = exactalg::GroundRing::integers());

// Hom(S, T_k) for the representable functor of S (Δ-dimension n), where T_k
// has Δ-dimension k. A component is nondegenerate when the corresponding Δ
// map is injective.
struct CensusRow {
  std::uint32_t degree = 0;
  std::size_t components = 0;
  std::size_t nondegenerate = 0;
  std::size_t faces = 0;
  std::size_t vertices = 0;
  // Fiber-size multisets of the components, with multiplicity.
  std::map<std::vector<std::uint32_t>, std::size_t> shapes;
};
std::vector<CensusRow> representable_census(Indexing indexing, std::uint32_t n, std::uint32_t max_degree);

nlohmann::json to_json(const CensusRow& r);

}  // namespace cycbar::enriched
