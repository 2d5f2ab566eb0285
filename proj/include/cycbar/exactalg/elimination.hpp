#pragma once

#include <vector>

#include "cycbar/exactalg/matrix.hpp"

namespace cycbar::exactalg {

// Rank and the invariant factors greater than one (over Z; empty over F_p).
struct MatrixInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

// Sparse elimination on unit pivots with a Markowitz-style row choice,
// finishing any non-unit remainder with a dense Smith reduction. Entries are
// kept in machine words and the computation restarts with arbitrary
// precision if an intermediate value overflows.
MatrixInvariants matrix_invariants(const SparseMatrix& m, const GroundRing& ring);

// Rank over F_p by plain dense Gaussian elimination. Deliberately naive:
// tests use it as an independent check on the sparse path.
std::size_t dense_rank_mod_p(const IntMatrix& m, std::uint32_t p);

}  // namespace cycbar::exactalg
