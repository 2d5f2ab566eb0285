#pragma once

#include <vector>

#include "cycbar/exactalg/matrix.hpp"

namespace cycbar::exactalg {

// diagonal == left * input * right, with left and right unimodular and the
// nonzero diagonal entries d_1 | d_2 | ... positive.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;

  // Nonzero diagonal entries in order.
  std::vector<Integer> invariant_factors() const;
};

// Smallest-absolute-value pivoting; deterministic for a given input.
SmithForm smith_normal_form(const IntMatrix& m);

// Same diagonal without accumulating transforms.
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace cycbar::exactalg
