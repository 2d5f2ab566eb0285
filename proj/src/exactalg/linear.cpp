#include "cycbar/exactalg/linear.hpp"

#include <gmpxx.h>

#include "cycbar/errors.hpp"

namespace cycbar::exactalg {

IntMatrix reduce(const IntMatrix& m, const GroundRing& ring) {
  IntMatrix out(m.rows(), m.cols(), ring.is_field() ? std::optional<std::uint32_t>(ring.modulus()) : std::nullopt);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = ring.reduce(m.at(i, j));
  return out;
}

namespace {

SmithForm field_smith(const IntMatrix& m, const GroundRing& ring) {
  SmithForm s{reduce(m, ring), reduce(IntMatrix::identity(m.rows()), ring), reduce(IntMatrix::identity(m.cols()), ring)};
  IntMatrix& a = s.diagonal;
  const Integer p = ring.modulus();
  auto fix_row = [&](IntMatrix& x, std::size_t r) {
    for (std::size_t j = 0; j < x.cols(); ++j) x.at(r, j) = ring.reduce(x.at(r, j));
  };
  auto fix_col = [&](IntMatrix& x, std::size_t c) {
    for (std::size_t i = 0; i < x.rows(); ++i) x.at(i, c) = ring.reduce(x.at(i, c));
  };
  auto scale_row = [&](IntMatrix& x, std::size_t r, const Integer& f) {
    for (std::size_t j = 0; j < x.cols(); ++j) x.at(r, j) = ring.reduce(Integer(x.at(r, j) * f));
  };
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = a.rows(), pj = 0;
    for (std::size_t j = t; j < a.cols() && pi == a.rows(); ++j)
      for (std::size_t i = t; i < a.rows(); ++i)
        if (a.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == a.rows()) break;
    a.swap_rows(t, pi);
    s.left.swap_rows(t, pi);
    a.swap_cols(t, pj);
    s.right.swap_cols(t, pj);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.at(t, t).get_mpz_t(), p.get_mpz_t());
    scale_row(a, t, inv);
    scale_row(s.left, t, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == t || a.at(i, t) == 0) continue;
      const Integer f = -a.at(i, t);
      a.add_row_multiple(i, t, f);
      s.left.add_row_multiple(i, t, f);
      fix_row(a, i);
      fix_row(s.left, i);
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a.at(t, j) == 0) continue;
      const Integer f = -a.at(t, j);
      a.add_col_multiple(j, t, f);
      s.right.add_col_multiple(j, t, f);
      fix_col(a, j);
      fix_col(s.right, j);
    }
  }
  return s;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, const GroundRing& ring) {
  if (ring.is_field()) return field_smith(m, ring);
  return smith_normal_form(m);
}

IntMatrix inverse(const IntMatrix& m, const GroundRing& ring) {
  if (m.rows() != m.cols()) throw ComputationError("only square matrices have inverses");
  const SmithForm s = smith_normal_form(m, ring);
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (s.diagonal.at(i, i) != 1) throw ComputationError("matrix is not invertible over " + ring.name());
  // D = L M R = 1, so M⁻¹ = R L.
  return reduce(s.right * s.left, ring);
}

IntMatrix kernel_basis(const IntMatrix& m, const GroundRing& ring) {
  const SmithForm s = smith_normal_form(m, ring);
  const std::size_t r = s.invariant_factors().size();
  IntMatrix out(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out.at(i, j - r) = s.right.at(i, j);
  return reduce(out, ring);
}

Cokernel cokernel(const IntMatrix& m, const GroundRing& ring) {
  const SmithForm s = smith_normal_form(m, ring);
  const auto factors = s.invariant_factors();
  const std::size_t r = factors.size(), rows = m.rows();
  Cokernel out;
  out.free_rank = rows - r;
  for (const Integer& d : factors)
    if (d != 1) out.torsion.push_back(d);
  const IntMatrix left_inv = inverse(s.left, ring);
  out.projection = IntMatrix(out.free_rank, rows);
  out.lift = IntMatrix(rows, out.free_rank);
  for (std::size_t k = 0; k < out.free_rank; ++k)
    for (std::size_t j = 0; j < rows; ++j) {
      out.projection.at(k, j) = s.left.at(r + k, j);
      out.lift.at(j, k) = left_inv.at(j, r + k);
    }
  out.relations = reduce(m, ring);
  out.lift = reduce(out.lift, ring);
  out.projection = reduce(out.projection, ring);
  return out;
}

std::optional<std::vector<Integer>> factor_functional(const Cokernel& c, const std::vector<Integer>& phi,
                                                      const GroundRing& ring) {
  const IntMatrix& rel = c.relations;
  if (phi.size() != rel.rows()) throw ValidationError("functional has the wrong length");
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    Integer v = 0;
    for (std::size_t i = 0; i < rel.rows(); ++i) v += phi[i] * rel.at(i, j);
    if (ring.reduce(v) != 0) return std::nullopt;
  }
  std::vector<Integer> psi(c.free_rank);
  for (std::size_t k = 0; k < c.free_rank; ++k) {
    Integer v = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) v += phi[i] * c.lift.at(i, k);
    psi[k] = ring.reduce(v);
  }
  return psi;
}

}  // namespace cycbar::exactalg
