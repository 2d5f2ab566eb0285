#include "cycbar/hochschild/complexes.hpp"

#include <functional>

#include "cycbar/errors.hpp"

namespace cycbar::hochschild {

namespace {

using exactalg::Grading;
using exactalg::IntMatrix;
using exactalg::Integer;

// Algebra basis elements allowed in tensor slots and their positions.
struct Digits {
  std::vector<std::size_t> basis;  // digit -> basis index
  std::vector<long> position;      // basis index -> digit or -1

  std::size_t size() const { return basis.size(); }
};

Digits all_digits(std::size_t d) {
  Digits g;
  for (std::size_t i = 0; i < d; ++i) {
    g.basis.push_back(i);
    g.position.push_back(static_cast<long>(i));
  }
  return g;
}

Digits non_unit_digits(std::size_t d) {
  Digits g;
  g.position.push_back(-1);
  for (std::size_t i = 1; i < d; ++i) {
    g.basis.push_back(i);
    g.position.push_back(static_cast<long>(i - 1));
  }
  return g;
}

std::size_t power(std::size_t r, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= r;
  return out;
}

std::vector<std::size_t> decode(std::size_t index, std::size_t r, std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = n; i-- > 0;) {
    t[i] = index % r;
    index /= r;
  }
  return t;
}

std::size_t encode(const std::vector<std::size_t>& t, std::size_t r) {
  std::size_t out = 0;
  for (auto x : t) out = out * r + x;
  return out;
}

Vec basis_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

void check_pair(const Algebra& a, const Module& m, bool need_left, bool need_right) {
  if (!(m.ring() == a.ring()) || m.algebra_dim() != a.dim())
    throw ValidationError("module and algebra have different ground rings or dimensions");
  if (need_left && !m.has_left()) throw ValidationError("module has no left action");
  if (need_right && !m.has_right()) throw ValidationError("module has no right action");
}

// ∂ from degree n >= 1 to n-1.
SparseMatrix bar_boundary(const Algebra& a, const Module& m, const Digits& g, std::size_t n) {
  const std::size_t r = g.size(), rank = m.rank();
  const std::size_t src = power(r, n), dst = power(r, n - 1);
  SparseMatrix out(rank * dst, rank * src);
  for (std::size_t col = 0; col < rank * src; ++col) {
    const std::size_t m0 = col / src;
    const auto t = decode(col % src, r, n);
    auto add_module = [&](const Vec& v, const std::vector<std::size_t>& rest, std::int64_t sign) {
      const std::size_t tail = encode(rest, r);
      for (std::size_t k = 0; k < rank; ++k)
        if (v[k] != 0) out.add(k * dst + tail, col, sign * v[k]);
    };
    std::vector<std::size_t> rest(t.begin() + 1, t.end());
    add_module(m.right(m0, g.basis[t[0]]), rest, 1);
    for (std::size_t i = 1; i < n; ++i) {
      const Vec& p = a.product(g.basis[t[i - 1]], g.basis[t[i]]);
      std::vector<std::size_t> merged(t.begin(), t.end() - 1);
      for (std::size_t j = i; j + 1 < n; ++j) merged[j] = t[j + 1];
      const std::int64_t sign = i % 2 == 0 ? 1 : -1;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0 || g.position[k] < 0) continue;
        merged[i - 1] = static_cast<std::size_t>(g.position[k]);
        out.add(m0 * dst + encode(merged, r), col, sign * p[k]);
      }
    }
    rest.assign(t.begin(), t.end() - 1);
    add_module(m.left(g.basis[t[n - 1]], m0), rest, n % 2 == 0 ? 1 : -1);
  }
  out.normalize(a.ring());
  return out;
}

// δ from degree n to n+1.
SparseMatrix cobar_coboundary(const Algebra& a, const Module& m, const Digits& g, std::size_t n) {
  const std::size_t r = g.size(), rank = m.rank(), d = a.dim();
  const std::size_t src = power(r, n), dst = power(r, n + 1);
  // factors[k]: digit pairs (x, y) with e_x e_y having a k-component.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>> factors(d);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) {
      const Vec& p = a.product(g.basis[x], g.basis[y]);
      for (std::size_t k = 0; k < d; ++k)
        if (p[k] != 0) factors[k].emplace_back(x, y, p[k]);
    }
  SparseMatrix out(rank * dst, rank * src);
  for (std::size_t col = 0; col < rank * src; ++col) {
    const std::size_t m0 = col / src;
    const auto t = decode(col % src, r, n);
    std::vector<std::size_t> b(n + 1);
    for (std::size_t x = 0; x < r; ++x) {
      b[0] = x;
      std::copy(t.begin(), t.end(), b.begin() + 1);
      const std::size_t idx = encode(b, r);
      const Vec& v = m.left(g.basis[x], m0);
      for (std::size_t k = 0; k < rank; ++k)
        if (v[k] != 0) out.add(k * dst + idx, col, v[k]);
    }
    for (std::size_t i = 1; i <= n; ++i) {
      const std::int64_t sign = i % 2 == 0 ? 1 : -1;
      std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1), b.begin());
      std::copy(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(), b.begin() + static_cast<std::ptrdiff_t>(i + 1));
      for (const auto& [x, y, c] : factors[g.basis[t[i - 1]]]) {
        b[i - 1] = x;
        b[i] = y;
        out.add(m0 * dst + encode(b, r), col, sign * c);
      }
    }
    std::copy(t.begin(), t.end(), b.begin());
    for (std::size_t y = 0; y < r; ++y) {
      b[n] = y;
      const std::size_t idx = encode(b, r);
      const Vec& v = m.right(m0, g.basis[y]);
      for (std::size_t k = 0; k < rank; ++k)
        if (v[k] != 0) out.add(k * dst + idx, col, (n % 2 == 0 ? -1 : 1) * v[k]);
    }
  }
  out.normalize(a.ring());
  return out;
}

HochschildComplex build_bar(const Algebra& a, const Module& m, const Digits& g, std::size_t max_degree,
                            bool normalized) {
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundaries;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    ranks.push_back(m.rank() * power(g.size(), n));
    if (n > 0) boundaries.push_back(bar_boundary(a, m, g, n));
  }
  HochschildComplex c;
  c.direction = Grading::homological;
  c.max_degree = max_degree;
  c.normalized = normalized;
  c.complex = ChainComplex::homological(a.ring(), std::move(ranks), std::move(boundaries));
  return c;
}

HochschildComplex build_cobar(const Algebra& a, const Module& m, const Digits& g, std::size_t max_degree,
                              bool normalized) {
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    ranks.push_back(m.rank() * power(g.size(), n));
    if (n < max_degree)
      diffs.push_back(cobar_coboundary(a, m, g, n));
    else
      diffs.emplace_back(0, ranks.back());
  }
  HochschildComplex c;
  c.direction = Grading::cohomological;
  c.max_degree = max_degree;
  c.normalized = normalized;
  c.complex = ChainComplex(a.ring(), Grading::cohomological, std::move(ranks), std::move(diffs));
  return c;
}

std::pair<Algebra, Module> unit_first(const Algebra& a, const Module& m) {
  const UnitBasis u = unit_first_basis(a);
  const IntMatrix id = IntMatrix::identity(m.rank());
  return {change_basis(a, u.p, u.p_inv), change_basis(m, a, u.p, id, id)};
}

// Product of the basis elements a[x] over positions x, in order.
Vec product_of(const Algebra& a, const std::vector<std::size_t>& tuple, const std::vector<std::uint32_t>& positions) {
  Vec out = a.unit();
  for (auto x : positions) out = a.multiply(out, basis_vector(a.dim(), tuple[x - 1]));
  return out;
}

// Splits the basepoint fiber into the elements before and after 0.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> split_basepoint(const finord::NCMorphism& f) {
  const auto& fib = f.fiber(0);
  std::vector<std::uint32_t> before, after;
  bool seen = false;
  for (auto x : fib) {
    if (x == 0)
      seen = true;
    else
      (seen ? after : before).push_back(x);
  }
  return {before, after};
}

// Calls visit(index, coefficient) for each basis tensor of Π slots[u].
void expand(const std::vector<Vec>& slots, std::size_t r, const std::function<void(std::size_t, std::int64_t)>& visit,
            const exactalg::GroundRing& ring) {
  std::function<void(std::size_t, std::size_t, std::int64_t)> rec = [&](std::size_t u, std::size_t idx,
                                                                         std::int64_t c) {
    if (u == slots.size()) {
      visit(idx, c);
      return;
    }
    for (std::size_t k = 0; k < r; ++k)
      if (slots[u][k] != 0) rec(u + 1, idx * r + k, ring.reduce(c * slots[u][k]));
  };
  rec(0, 0, 1);
}

void check_zero_delta_c(const finord::NCMorphism& f) {
  f.check_morphism(finord::Category::zero_delta_c);
  if (f.source().size() == 0 || f.target().size() == 0) throw CategoryError("objects of 0deltaC are nonempty");
}

Vec row_times(const std::vector<std::int64_t>& row, const SparseMatrix& mat, const exactalg::GroundRing& ring) {
  Vec out(mat.cols(), 0);
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    std::int64_t s = 0;
    for (const auto& e : mat.column(j)) s = ring.reduce(s + row[e.row] * e.value);
    out[j] = s;
  }
  return out;
}

Vec times_col(const SparseMatrix& mat, const Vec& v, const exactalg::GroundRing& ring) {
  Vec out(mat.rows(), 0);
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& e : mat.column(j)) out[e.row] = ring.reduce(out[e.row] + e.value * v[j]);
  }
  return out;
}

Vec reduced(Vec v, const exactalg::GroundRing& ring) {
  for (auto& x : v) x = ring.reduce(x);
  return v;
}

// τ_S(m⊗a) = τ(m a_1..a_n) on M ⊗ A^{n}.
Vec trace_on(const Algebra& a, const Module& m, const std::vector<std::int64_t>& tau, std::size_t n) {
  const std::size_t d = a.dim(), src = power(d, n);
  Vec out(m.rank() * src, 0);
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i + 1;
  for (std::size_t idx = 0; idx < src; ++idx) {
    const Vec p = product_of(a, decode(idx, d, n), all);
    for (std::size_t m0 = 0; m0 < m.rank(); ++m0) {
      const Vec v = m.act_right(basis_vector(m.rank(), m0), p);
      std::int64_t s = 0;
      for (std::size_t k = 0; k < v.size(); ++k) s = a.reduce(s + tau[k] * v[k]);
      out[m0 * src + idx] = s;
    }
  }
  return out;
}

// φ_S(a) = v a_1..a_n in Hom(A^{n}, M).
Vec cotrace_on(const Algebra& a, const Module& m, const Vec& v, std::size_t n) {
  const std::size_t d = a.dim(), src = power(d, n);
  Vec out(m.rank() * src, 0);
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i + 1;
  for (std::size_t idx = 0; idx < src; ++idx) {
    const Vec w = m.act_right(v, product_of(a, decode(idx, d, n), all));
    for (std::size_t k = 0; k < m.rank(); ++k) out[k * src + idx] = w[k];
  }
  return out;
}

// S = {0..n-1} → {0} with basepoint fiber (start.., n-1, 0, 1, .., start-1).
finord::NCMorphism collapse_from(std::uint32_t n, std::uint32_t start) {
  std::vector<std::uint32_t> fiber;
  for (std::uint32_t k = 0; k < n; ++k) fiber.push_back((start + k) % n);
  const auto cyc = finord::OrderKind::cyclic;
  return finord::NCMorphism(finord::FinOrdSet::standard(cyc, n), finord::FinOrdSet::standard(cyc, 1),
                            std::vector<std::uint32_t>(n, 0), {fiber});
}

}  // namespace

HochschildComplex cyclic_bar_complex(const Algebra& a, const Module& m, std::size_t max_degree) {
  check_pair(a, m, true, true);
  return build_bar(a, m, all_digits(a.dim()), max_degree, false);
}

HochschildComplex cyclic_cobar_complex(const Algebra& a, const Module& m, std::size_t max_degree) {
  check_pair(a, m, true, true);
  return build_cobar(a, m, all_digits(a.dim()), max_degree, false);
}

HochschildComplex normalized_cyclic_bar_complex(const Algebra& a, const Module& m, std::size_t max_degree) {
  check_pair(a, m, true, true);
  const auto [a2, m2] = unit_first(a, m);
  return build_bar(a2, m2, non_unit_digits(a.dim()), max_degree, true);
}

HochschildComplex normalized_cyclic_cobar_complex(const Algebra& a, const Module& m, std::size_t max_degree) {
  check_pair(a, m, true, true);
  const auto [a2, m2] = unit_first(a, m);
  return build_cobar(a2, m2, non_unit_digits(a.dim()), max_degree, true);
}

HochschildComplex truncate(const HochschildComplex& c, std::size_t n) {
  if (n > c.max_degree + 1)
    throw RangeError("truncation degree " + std::to_string(n) + " exceeds " + std::to_string(c.max_degree + 1));
  HochschildComplex out = c;
  out.complex = c.complex.truncate(n);
  out.max_degree = n == 0 ? 0 : n - 1;
  return out;
}

std::vector<HomologyGroup> hochschild_homology(const Algebra& a, const Module& m, std::size_t max_degree) {
  auto h = cyclic_bar_complex(a, m, max_degree + 1).homology();
  h.resize(max_degree + 1);
  return h;
}

std::vector<HomologyGroup> hochschild_cohomology(const Algebra& a, const Module& m, std::size_t max_degree) {
  auto h = cyclic_cobar_complex(a, m, max_degree + 1).homology();
  h.resize(max_degree + 1);
  return h;
}

TwoSidedBarComplex two_sided_bar_complex(const Algebra& a, const Module& right, const Module& left,
                                         std::size_t max_degree) {
  check_pair(a, right, false, true);
  check_pair(a, left, true, false);
  const std::size_t d = a.dim(), rm = right.rank(), rn = left.rank();
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundaries;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t src = power(d, n);
    ranks.push_back(rm * src * rn);
    if (n == 0) continue;
    const std::size_t dst = power(d, n - 1);
    auto row = [&](std::size_t m0, const std::vector<std::size_t>& t, std::size_t n0) {
      return (m0 * dst + encode(t, d)) * rn + n0;
    };
    SparseMatrix b(rm * dst * rn, rm * src * rn);
    for (std::size_t col = 0; col < rm * src * rn; ++col) {
      const std::size_t n0 = col % rn, m0 = col / rn / src;
      const auto t = decode(col / rn % src, d, n);
      std::vector<std::size_t> rest(t.begin() + 1, t.end());
      const Vec& v = right.right(m0, t[0]);
      for (std::size_t k = 0; k < rm; ++k)
        if (v[k] != 0) b.add(row(k, rest, n0), col, v[k]);
      for (std::size_t i = 1; i < n; ++i) {
        const Vec& p = a.product(t[i - 1], t[i]);
        std::vector<std::size_t> merged(t.begin(), t.end() - 1);
        for (std::size_t j = i; j + 1 < n; ++j) merged[j] = t[j + 1];
        for (std::size_t k = 0; k < d; ++k) {
          if (p[k] == 0) continue;
          merged[i - 1] = k;
          b.add(row(m0, merged, n0), col, (i % 2 == 0 ? 1 : -1) * p[k]);
        }
      }
      rest.assign(t.begin(), t.end() - 1);
      const Vec& w = left.left(t[n - 1], n0);
      for (std::size_t k = 0; k < rn; ++k)
        if (w[k] != 0) b.add(row(m0, rest, k), col, (n % 2 == 0 ? 1 : -1) * w[k]);
    }
    b.normalize(a.ring());
    boundaries.push_back(std::move(b));
  }
  TwoSidedBarComplex out;
  out.max_degree = max_degree;
  out.complex = ChainComplex::homological(a.ring(), std::move(ranks), std::move(boundaries));
  return out;
}

exactalg::Cokernel balanced_tensor(const Algebra& a, const Module& right, const Module& left) {
  check_pair(a, right, false, true);
  check_pair(a, left, true, false);
  const std::size_t d = a.dim(), rm = right.rank(), rn = left.rank();
  IntMatrix rel(rm * rn, rm * d * rn);
  std::size_t col = 0;
  for (std::size_t m0 = 0; m0 < rm; ++m0)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t n0 = 0; n0 < rn; ++n0, ++col) {
        const Vec ea = basis_vector(d, i);
        const Vec ma = right.act_right(basis_vector(rm, m0), ea);
        const Vec an = left.act_left(ea, basis_vector(rn, n0));
        for (std::size_t k = 0; k < rm; ++k) rel.at(k * rn + n0, col) += ma[k];
        for (std::size_t k = 0; k < rn; ++k) rel.at(m0 * rn + k, col) -= an[k];
      }
  return exactalg::cokernel(exactalg::reduce(rel, a.ring()), a.ring());
}

SparseMatrix cyclic_bar_map(const Algebra& a, const Module& m, const finord::NCMorphism& f) {
  check_pair(a, m, true, true);
  check_zero_delta_c(f);
  const std::size_t d = a.dim(), rank = m.rank();
  const std::size_t s = f.source().size() - 1, t = f.target().size() - 1;
  const std::size_t src = power(d, s), dst = power(d, t);
  const auto [before, after] = split_basepoint(f);
  SparseMatrix out(rank * dst, rank * src);
  for (std::size_t idx = 0; idx < src; ++idx) {
    const auto tuple = decode(idx, d, s);
    std::vector<Vec> slots;
    for (std::uint32_t u = 1; u <= t; ++u) slots.push_back(product_of(a, tuple, f.fiber(u)));
    const Vec left = product_of(a, tuple, before), right = product_of(a, tuple, after);
    for (std::size_t m0 = 0; m0 < rank; ++m0) {
      const Vec v = m.act_right(m.act_left(left, basis_vector(rank, m0)), right);
      const std::size_t col = m0 * src + idx;
      expand(
          slots, d,
          [&](std::size_t tail, std::int64_t c) {
            for (std::size_t k = 0; k < rank; ++k)
              if (v[k] != 0) out.add(k * dst + tail, col, c * v[k]);
          },
          a.ring());
    }
  }
  out.normalize(a.ring());
  return out;
}

SparseMatrix cyclic_cobar_map(const Algebra& a, const Module& m, const finord::NCMorphism& f) {
  check_pair(a, m, true, true);
  check_zero_delta_c(f);
  const std::size_t d = a.dim(), rank = m.rank();
  const std::size_t s = f.source().size() - 1, t = f.target().size() - 1;
  const std::size_t src = power(d, s), dst = power(d, t);
  const auto [before, after] = split_basepoint(f);
  SparseMatrix out(rank * src, rank * dst);
  for (std::size_t idx = 0; idx < src; ++idx) {
    const auto tuple = decode(idx, d, s);
    std::vector<Vec> slots;
    for (std::uint32_t u = 1; u <= t; ++u) slots.push_back(product_of(a, tuple, f.fiber(u)));
    const Vec left = product_of(a, tuple, after), right = product_of(a, tuple, before);
    for (std::size_t m0 = 0; m0 < rank; ++m0) {
      const Vec v = m.act_right(m.act_left(left, basis_vector(rank, m0)), right);
      expand(
          slots, d,
          [&](std::size_t tail, std::int64_t c) {
            for (std::size_t k = 0; k < rank; ++k)
              if (v[k] != 0) out.add(k * src + idx, m0 * dst + tail, c * v[k]);
          },
          a.ring());
    }
  }
  out.normalize(a.ring());
  return out;
}

finord::NCMorphism cyclic_face(std::uint32_t n, std::uint32_t i) {
  if (n == 0 || i > n) throw RangeError("face index out of range");
  const auto cyc = finord::OrderKind::cyclic;
  std::vector<std::uint32_t> map(n + 1);
  std::vector<std::vector<std::uint32_t>> fibers(n);
  if (i < n) {
    for (std::uint32_t x = 0; x <= n; ++x) map[x] = x <= i ? x : x - 1;
  } else {
    for (std::uint32_t x = 0; x < n; ++x) map[x] = x;
    map[n] = 0;
  }
  for (std::uint32_t x = 0; x <= n; ++x) fibers[map[x]].push_back(x);
  if (i == n) fibers[0] = {n, 0};
  return finord::NCMorphism(finord::FinOrdSet::standard(cyc, n + 1), finord::FinOrdSet::standard(cyc, n),
                            std::move(map), std::move(fibers));
}

std::vector<finord::NCMorphism> zero_delta_c_morphisms(std::uint32_t max_size) {
  std::vector<finord::NCMorphism> out;
  const auto cyc = finord::OrderKind::cyclic;
  for (std::uint32_t s = 1; s <= max_size; ++s)
    for (std::uint32_t t = 1; t <= max_size; ++t) {
      auto hom = finord::hom_set(finord::FinOrdSet::standard(cyc, s), finord::FinOrdSet::standard(cyc, t),
                                 finord::Category::zero_delta_c);
      out.insert(out.end(), hom.begin(), hom.end());
    }
  return out;
}

exactalg::Cokernel trace_universal(const Algebra& a, const Module& m) {
  check_pair(a, m, true, true);
  const std::size_t d = a.dim(), r = m.rank();
  IntMatrix comm(r, d * r);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vec& am = m.left(i, j);
      const Vec& ma = m.right(j, i);
      for (std::size_t k = 0; k < r; ++k) comm.at(k, i * r + j) = a.reduce(am[k] - ma[k]);
    }
  return exactalg::cokernel(comm, a.ring());
}

IntMatrix cotrace_universal(const Algebra& a, const Module& m) {
  check_pair(a, m, true, true);
  const std::size_t d = a.dim(), r = m.rank();
  IntMatrix stacked(d * r, r);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vec& am = m.left(i, j);
      const Vec& ma = m.right(j, i);
      for (std::size_t k = 0; k < r; ++k) stacked.at(i * r + k, j) = a.reduce(am[k] - ma[k]);
    }
  return exactalg::kernel_basis(stacked, a.ring());
}

bool trace_extends(const Algebra& a, const Module& m, const std::vector<std::int64_t>& tau, std::uint32_t max_size) {
  check_pair(a, m, true, true);
  if (tau.size() != m.rank()) throw ValidationError("functional needs one value per module basis element");
  const Vec t = reduced(tau, a.ring());
  for (const auto& f : zero_delta_c_morphisms(max_size)) {
    const SparseMatrix map = cyclic_bar_map(a, m, f);
    const Vec lhs = row_times(trace_on(a, m, t, f.target().size() - 1), map, a.ring());
    if (lhs != trace_on(a, m, t, f.source().size() - 1)) return false;
  }
  return true;
}

bool cotrace_extends(const Algebra& a, const Module& m, const Vec& v, std::uint32_t max_size) {
  check_pair(a, m, true, true);
  if (v.size() != m.rank()) throw ValidationError("element needs one coordinate per module basis element");
  const Vec w = reduced(v, a.ring());
  for (const auto& f : zero_delta_c_morphisms(max_size)) {
    const SparseMatrix map = cyclic_cobar_map(a, m, f);
    const Vec lhs = times_col(map, cotrace_on(a, m, w, f.target().size() - 1), a.ring());
    if (lhs != cotrace_on(a, m, w, f.source().size() - 1)) return false;
  }
  return true;
}

RestrictionResult restriction_formulas_check(const Algebra& a, const Module& m, const std::vector<std::int64_t>& tau,
                                             std::uint32_t n, const FaceProvider& faces) {
  check_pair(a, m, true, true);
  if (n == 0 || n > 4) throw RangeError("restriction check needs 1 <= n <= 4");
  if (tau.size() != m.rank()) throw ValidationError("functional needs one value per module basis element");
  RestrictionResult res;
  if (n == 1) return res;
  const std::size_t d = a.dim(), rank = m.rank(), src = power(d, n - 1);
  const Vec t = reduced(tau, a.ring());
  Vec first;
  for (std::uint32_t i = 1; i <= n; ++i) {
    const SparseMatrix face = faces ? faces(i) : cyclic_bar_map(a, m, collapse_from(n, n - i + 1));
    if (face.rows() != rank || face.cols() != rank * src) throw ValidationError("face map has the wrong shape");
    const Vec via_face = row_times(t, face, a.ring());
    Vec formula(rank * src, 0);
    std::vector<std::uint32_t> prefix, suffix;
    for (std::uint32_t x = n - i + 1; x < n; ++x) prefix.push_back(x);
    for (std::uint32_t x = 1; x <= n - i; ++x) suffix.push_back(x);
    for (std::size_t idx = 0; idx < src; ++idx) {
      const auto tuple = decode(idx, d, n - 1);
      const Vec l = product_of(a, tuple, prefix), r = product_of(a, tuple, suffix);
      for (std::size_t m0 = 0; m0 < rank; ++m0) {
        const Vec v = m.act_right(m.act_left(l, basis_vector(rank, m0)), r);
        std::int64_t s = 0;
        for (std::size_t k = 0; k < rank; ++k) s = a.reduce(s + t[k] * v[k]);
        formula[m0 * src + idx] = s;
      }
    }
    if (via_face != formula) {
      res = {false, i, "face " + std::to_string(i) + " disagrees with the rotated product"};
      return res;
    }
    if (i == 1)
      first = via_face;
    else if (via_face != first) {
      res = {false, i, "face " + std::to_string(i) + " differs from face 1"};
      return res;
    }
  }
  return res;
}

RestrictionResult cotrace_restriction_check(const Algebra& a, const Module& m, const Vec& v, std::uint32_t n,
                                            const FaceProvider& faces) {
  check_pair(a, m, true, true);
  if (n == 0 || n > 4) throw RangeError("restriction check needs 1 <= n <= 4");
  if (v.size() != m.rank()) throw ValidationError("element needs one coordinate per module basis element");
  RestrictionResult res;
  if (n == 1) return res;
  const std::size_t d = a.dim(), rank = m.rank(), src = power(d, n - 1);
  const Vec w = reduced(v, a.ring());
  Vec first;
  for (std::uint32_t i = 1; i <= n; ++i) {
    const SparseMatrix face = faces ? faces(i) : cyclic_cobar_map(a, m, collapse_from(n, i % n));
    if (face.rows() != rank * src || face.cols() != rank) throw ValidationError("face map has the wrong shape");
    const Vec via_face = times_col(face, w, a.ring());
    Vec formula(rank * src, 0);
    std::vector<std::uint32_t> prefix, suffix;
    for (std::uint32_t x = 1; x < i; ++x) prefix.push_back(x);
    for (std::uint32_t x = i; x < n; ++x) suffix.push_back(x);
    for (std::size_t idx = 0; idx < src; ++idx) {
      const auto tuple = decode(idx, d, n - 1);
      const Vec u = m.act_right(m.act_left(product_of(a, tuple, prefix), w), product_of(a, tuple, suffix));
      for (std::size_t k = 0; k < rank; ++k) formula[k * src + idx] = u[k];
    }
    if (via_face != formula) {
      res = {false, i, "face " + std::to_string(i) + " disagrees with the inserted product"};
      return res;
    }
    if (i == 1)
      first = via_face;
    else if (via_face != first) {
      res = {false, i, "face " + std::to_string(i) + " differs from face 1"};
      return res;
    }
  }
  return res;
}

nlohmann::json to_json(const HochschildComplex& c) {
  return {{"direction", c.direction == Grading::homological ? "homological" : "cohomological"},
          {"max_degree", c.max_degree},
          {"normalized", c.normalized},
          {"ranks", c.complex.ranks()}};
}

}  // namespace cycbar::hochschild
