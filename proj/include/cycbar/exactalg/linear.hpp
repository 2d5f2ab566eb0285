#pragma once

#include <optional>
#include <vector>

#include "cycbar/exactalg/matrix.hpp"
#include "cycbar/exactalg/smith.hpp"

namespace cycbar::exactalg {

// Smith form over the ring: over F_p the diagonal is (1,...,1,0,...) and all
// entries are canonical residues.
SmithForm smith_normal_form(const IntMatrix& m, const GroundRing& ring);

// Inverse of a matrix invertible over the ring; throws ComputationError
// otherwise.
IntMatrix inverse(const IntMatrix& m, const GroundRing& ring);

// Columns spanning {x : m x = 0}; a basis of that free module.
IntMatrix kernel_basis(const IntMatrix& m, const GroundRing& ring);

// coker(m) = Z^free ⊕ torsion (F_p^free over a field), with the projection
// onto the free part.
struct Cokernel {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  IntMatrix projection;  // free_rank × m.rows()
  IntMatrix lift;        // m.rows() × free_rank; projection * lift = 1
  IntMatrix relations;   // the matrix whose column span is divided out
};
Cokernel cokernel(const IntMatrix& m, const GroundRing& ring);

// ψ with φ = ψ ∘ projection, when the functional φ (one coefficient per row
// of the relation matrix) vanishes on the relations.
std::optional<std::vector<Integer>> factor_functional(const Cokernel& c, const std::vector<Integer>& phi,
                                                      const GroundRing& ring);

IntMatrix reduce(const IntMatrix& m, const GroundRing& ring);

}  // namespace cycbar::exactalg
