#include "cycbar/exactalg/smith.hpp"

#include <algorithm>

namespace cycbar::exactalg {
namespace {

// Row/column operations mirrored onto the transform matrices when present.
struct Reducer {
  IntMatrix& a;
  IntMatrix* left;
  IntMatrix* right;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (left) left->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (right) right->swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    if (left) left->add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    if (right) right->add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    if (left) left->negate_row(r);
  }

  void run() {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      const Integer* best = nullptr;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& v = a.at(i, j);
          if (sgn(v) == 0) continue;
          if (!best || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
            best = &v;
            pi = i;
            pj = j;
          }
        }
      const bool found = best != nullptr;
      if (!found) return;
      swap_rows(t, pi);
      swap_cols(t, pj);

      for (;;) {
        // Bring the smallest entry of row t / column t to the pivot.
        std::size_t bi = t, bj = t;
        auto smaller = [&](std::size_t i, std::size_t j) {
          return sgn(a.at(i, j)) != 0 && mpz_cmpabs(a.at(i, j).get_mpz_t(), a.at(bi, bj).get_mpz_t()) < 0;
        };
        for (std::size_t i = t + 1; i < rows; ++i)
          if (smaller(i, t)) bi = i;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (smaller(t, j)) {
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);

        bool clean = true;
        const Integer p = a.at(t, t);
        Integer q;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a.at(i, t) == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), p.get_mpz_t());
          add_row(i, t, -q);
          if (a.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a.at(t, j) == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), p.get_mpz_t());
          add_col(j, t, -q);
          if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // Divisibility: fold a row with a non-multiple into the pivot row.
        std::size_t offender = rows;
        for (std::size_t i = t + 1; i < rows && offender == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a.at(i, j) != 0 && !mpz_divisible_p(a.at(i, j).get_mpz_t(), p.get_mpz_t())) {
              offender = i;
              break;
            }
        if (offender == rows) break;
        add_row(t, offender, 1);
      }
      if (a.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n && diagonal.at(i, i) != 0; ++i) out.push_back(diagonal.at(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  Reducer{out.diagonal, &out.left, &out.right}.run();
  return out;
}

std::vector<Integer> smith_invariants(IntMatrix m) {
  Reducer{m, nullptr, nullptr}.run();
  std::vector<Integer> out;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n && m.at(i, i) != 0; ++i) out.push_back(m.at(i, i));
  return out;
}

}  // namespace cycbar::exactalg
