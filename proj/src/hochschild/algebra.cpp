#include "cycbar/hochschild/algebra.hpp"

#include <functional>

#include "cycbar/errors.hpp"
#include "cycbar/exactalg/linear.hpp"

namespace cycbar::hochschild {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Vec zero(std::size_t n) { return Vec(n, 0); }

void axpy(Vec& y, std::int64_t a, const Vec& x, const GroundRing& ring) {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = ring.reduce(y[i] + a * x[i]);
}

Vec column(const IntMatrix& m, std::size_t j, const GroundRing& ring) {
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = ring.reduce(m.at(i, j).get_si());
  return out;
}

Vec apply(const IntMatrix& m, const Vec& v, const GroundRing& ring) {
  Vec out(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (v[j] != 0)
      for (std::size_t i = 0; i < m.rows(); ++i) out[i] = ring.reduce(out[i] + m.at(i, j).get_si() * v[j]);
  return out;
}

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Algebra::Algebra(GroundRing ring, std::vector<std::string> basis, std::vector<std::vector<Vec>> constants, Vec unit)
    : ring_(ring), basis_(std::move(basis)), c_(std::move(constants)), unit_(std::move(unit)) {
  const std::size_t d = basis_.size();
  if (d == 0) throw ValidationError("an algebra needs a nonempty basis");
  if (c_.size() != d || unit_.size() != d) throw ValidationError("structure constants do not match the basis size");
  for (auto& row : c_) {
    if (row.size() != d) throw ValidationError("structure constants do not match the basis size");
    for (auto& v : row) {
      if (v.size() != d) throw ValidationError("structure constants do not match the basis size");
      for (auto& x : v) x = ring_.reduce(x);
    }
  }
  for (auto& x : unit_) x = ring_.reduce(x);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = zero(d), rhs = zero(d);
        for (std::size_t x = 0; x < d; ++x) {
          axpy(lhs, c_[i][j][x], c_[x][k], ring_);
          axpy(rhs, c_[j][k][x], c_[i][x], ring_);
        }
        if (lhs != rhs) throw ValidationError("associativity fails on basis triple " + triple(i, j, k));
      }
  Vec e(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw ValidationError("unit law fails on basis element " + std::to_string(i));
  }
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  Vec out = zero(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (y[j] != 0) axpy(out, ring_.reduce(x[i] * y[j]), c_[i][j], ring_);
  }
  return out;
}

Module::Module(const Algebra& a, std::size_t rank, std::vector<std::vector<Vec>> left,
               std::vector<std::vector<Vec>> right, std::vector<std::string> basis)
    : ring_(a.ring()), dim_(a.dim()), rank_(rank), left_(std::move(left)), right_(std::move(right)),
      basis_(std::move(basis)) {
  if (basis_.empty()) basis_ = default_labels("m", rank_);
  if (basis_.size() != rank_) throw ValidationError("module basis labels do not match the rank");
  const std::size_t d = dim_;
  auto check_shape = [&](std::vector<std::vector<Vec>>& t, std::size_t outer, std::size_t inner, const char* what) {
    if (t.empty()) return;
    if (t.size() != outer) throw ValidationError(std::string(what) + " action table has the wrong shape");
    for (auto& row : t) {
      if (row.size() != inner) throw ValidationError(std::string(what) + " action table has the wrong shape");
      for (auto& v : row) {
        if (v.size() != rank_) throw ValidationError(std::string(what) + " action table has the wrong shape");
        for (auto& x : v) x = ring_.reduce(x);
      }
    }
  };
  check_shape(left_, d, rank_, "left");
  check_shape(right_, rank_, d, "right");
  Vec ea(d), em(rank_);
  auto basis_vec = [](Vec& v, std::size_t i) {
    std::fill(v.begin(), v.end(), 0);
    v[i] = 1;
  };
  for (std::size_t m = 0; m < rank_; ++m) {
    basis_vec(em, m);
    if (has_left() && act_left(a.unit(), em) != em)
      throw ValidationError("unit does not act as the identity on the left of module element " + std::to_string(m));
    if (has_right() && act_right(em, a.unit()) != em)
      throw ValidationError("unit does not act as the identity on the right of module element " + std::to_string(m));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec ei(d), ej(d);
        ei[i] = 1;
        ej[j] = 1;
        const Vec ij = a.multiply(ei, ej);
        if (has_left() && act_left(ij, em) != act_left(ei, act_left(ej, em)))
          throw ValidationError("left action is not associative on " + triple(i, j, m));
        if (has_right() && act_right(em, ij) != act_right(act_right(em, ei), ej))
          throw ValidationError("right action is not associative on " + triple(m, i, j));
        if (has_left() && has_right() && act_right(act_left(ei, em), ej) != act_left(ei, act_right(em, ej)))
          throw ValidationError("left and right actions do not commute on " + triple(i, m, j));
      }
  }
}

Vec Module::act_left(const Vec& a, const Vec& m) const {
  Vec out = zero(rank_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      if (m[j] != 0) axpy(out, ring_.reduce(a[i] * m[j]), left_[i][j], ring_);
  }
  return out;
}

Vec Module::act_right(const Vec& m, const Vec& a) const {
  Vec out = zero(rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    if (m[j] == 0) continue;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) axpy(out, ring_.reduce(a[i] * m[j]), right_[j][i], ring_);
  }
  return out;
}

Module Module::regular(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<std::vector<Vec>> left(d, std::vector<Vec>(d)), right(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      left[i][j] = a.product(i, j);
      right[j][i] = a.product(j, i);
    }
  return Module(a, d, std::move(left), std::move(right), a.basis());
}

Module Module::augmentation(const Algebra& a, const Vec& epsilon, bool left, bool right) {
  const std::size_t d = a.dim();
  if (epsilon.size() != d) throw ValidationError("augmentation needs one value per basis element");
  std::vector<std::vector<Vec>> l, r;
  if (left) l.assign(d, std::vector<Vec>(1));
  if (right) r.assign(1, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (left) l[i][0] = Vec{epsilon[i]};
    if (right) r[0][i] = Vec{epsilon[i]};
  }
  return Module(a, 1, std::move(l), std::move(r), {"k"});
}

Algebra change_basis(const Algebra& a, const IntMatrix& p, const IntMatrix& p_inv) {
  const std::size_t d = a.dim();
  const GroundRing& ring = a.ring();
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      c[i][j] = apply(p_inv, a.multiply(column(p, i, ring), column(p, j, ring)), ring);
  return Algebra(ring, default_labels("b", d), std::move(c), apply(p_inv, a.unit(), ring));
}

Module change_basis(const Module& m, const Algebra& a, const IntMatrix& p, const IntMatrix& q, const IntMatrix& q_inv) {
  const GroundRing& ring = a.ring();
  const std::size_t d = a.dim(), r = m.rank();
  std::vector<std::vector<Vec>> left, right;
  if (m.has_left()) left.assign(d, std::vector<Vec>(r));
  if (m.has_right()) right.assign(r, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vec ai = column(p, i, ring), mj = column(q, j, ring);
      if (m.has_left()) left[i][j] = apply(q_inv, m.act_left(ai, mj), ring);
      if (m.has_right()) right[j][i] = apply(q_inv, m.act_right(mj, ai), ring);
    }
  return Module(change_basis(a, p, exactalg::inverse(p, ring)), r, std::move(left), std::move(right));
}

UnitBasis unit_first_basis(const Algebra& a) {
  const GroundRing& ring = a.ring();
  const std::size_t d = a.dim();
  IntMatrix u(d, 1);
  for (std::size_t i = 0; i < d; ++i) u.at(i, 0) = a.unit()[i];
  // L u R = (±1, 0, ...)ᵀ, so the columns of L⁻¹ form a basis starting at ±u.
  const auto s = exactalg::smith_normal_form(u, ring);
  if (s.diagonal.at(0, 0) != 1) throw ComputationError("the unit is not part of a basis over " + ring.name());
  IntMatrix l = s.left;
  const exactalg::Integer sign = s.right.at(0, 0);
  for (std::size_t j = 0; j < d; ++j) l.at(0, j) *= sign;
  UnitBasis out{exactalg::inverse(l, ring), exactalg::reduce(l, ring)};
  return out;
}

namespace {

Algebra from_table(const GroundRing& ring, std::vector<std::string> basis,
                   const std::function<Vec(std::size_t, std::size_t)>& mul, Vec unit) {
  const std::size_t d = basis.size();
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i][j] = mul(i, j);
  return Algebra(ring, std::move(basis), std::move(c), std::move(unit));
}

Vec unit_vec(std::size_t d, std::size_t i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

}  // namespace

Algebra ground_algebra(const GroundRing& ring) { return truncated_polynomial(ring, 1); }

Algebra truncated_polynomial(const GroundRing& ring, std::size_t degree) {
  std::vector<std::string> basis{"1"};
  for (std::size_t i = 1; i < degree; ++i) basis.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  return from_table(
      ring, basis,
      [&](std::size_t i, std::size_t j) { return i + j < degree ? unit_vec(degree, i + j) : Vec(degree, 0); },
      unit_vec(degree, 0));
}

Algebra dual_numbers(const GroundRing& ring) { return truncated_polynomial(ring, 2); }

Algebra matrix_algebra(const GroundRing& ring, std::size_t n) {
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  const std::size_t d = n * n;
  Vec unit(d, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return from_table(
      ring, basis,
      [&](std::size_t a, std::size_t b) {
        // E_ij E_kl = δ_jk E_il
        const std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
        return j == k ? unit_vec(d, i * n + l) : Vec(d, 0);
      },
      unit);
}

Algebra upper_triangular(const GroundRing& ring) {
  // basis E11, E12, E22
  const std::size_t idx[2][2] = {{0, 1}, {3, 2}};
  return from_table(
      ring, {"E11", "E12", "E22"},
      [&](std::size_t a, std::size_t b) {
        const std::size_t pos[3][2] = {{0, 0}, {0, 1}, {1, 1}};
        if (pos[a][1] != pos[b][0]) return Vec(3, 0);
        return unit_vec(3, idx[pos[a][0]][pos[b][1]]);
      },
      {1, 0, 1});
}

Algebra cyclic_group_algebra(const GroundRing& ring, std::size_t order) {
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < order; ++i) basis.push_back("g" + std::to_string(i));
  return from_table(
      ring, basis, [&](std::size_t i, std::size_t j) { return unit_vec(order, (i + j) % order); },
      unit_vec(order, 0));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> basis;
  for (const auto& s : a.basis()) basis.push_back("(" + s + ",0)");
  for (const auto& s : b.basis()) basis.push_back("(0," + s + ")");
  Vec unit(d, 0);
  for (std::size_t i = 0; i < da; ++i) unit[i] = a.unit()[i];
  for (std::size_t i = 0; i < db; ++i) unit[da + i] = b.unit()[i];
  return from_table(
      a.ring(), basis,
      [&](std::size_t i, std::size_t j) {
        Vec out(d, 0);
        if (i < da && j < da)
          for (std::size_t k = 0; k < da; ++k) out[k] = a.product(i, j)[k];
        if (i >= da && j >= da)
          for (std::size_t k = 0; k < db; ++k) out[da + k] = b.product(i - da, j - da)[k];
        return out;
      },
      unit);
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<std::string> basis;
  for (const auto& s : a.basis())
    for (const auto& t : b.basis()) basis.push_back(s + "⊗" + t);
  Vec unit(d, 0);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = a.ring().reduce(a.unit()[i] * b.unit()[j]);
  return from_table(
      a.ring(), basis,
      [&](std::size_t x, std::size_t y) {
        Vec out(d, 0);
        const Vec& p = a.product(x / db, y / db);
        const Vec& q = b.product(x % db, y % db);
        for (std::size_t i = 0; i < da; ++i)
          for (std::size_t j = 0; j < db; ++j) out[i * db + j] = a.ring().reduce(p[i] * q[j]);
        return out;
      },
      unit);
}

Algebra exterior_algebra(const GroundRing& ring, std::size_t generators) {
  // Basis: subsets of the generators as bitmasks; e_S e_T = ±e_{S∪T}.
  const std::size_t d = std::size_t{1} << generators;
  std::vector<std::string> basis;
  for (std::size_t s = 0; s < d; ++s) {
    std::string name;
    for (std::size_t g = 0; g < generators; ++g)
      if ((s >> g) & 1u) name += "e" + std::to_string(g + 1);
    basis.push_back(name.empty() ? "1" : name);
  }
  return from_table(
      ring, basis,
      [&](std::size_t s, std::size_t t) {
        if (s & t) return Vec(d, 0);
        int sign = 1;
        for (std::size_t g = 0; g < generators; ++g)
          if ((t >> g) & 1u)
            for (std::size_t h = g + 1; h < generators; ++h)
              if ((s >> h) & 1u) sign = -sign;
        Vec v = unit_vec(d, s | t);
        v[s | t] = sign;
        return v;
      },
      unit_vec(d, 0));
}

BasisChange random_basis_change(std::mt19937_64& rng, std::size_t n, const GroundRing& ring) {
  IntMatrix p = IntMatrix::identity(n), q = IntMatrix::identity(n);
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
      const std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const int c = coeff(rng);
      // P ← P·(1 + c e_ij) and P⁻¹ ← (1 - c e_ij)·P⁻¹
      p.add_col_multiple(j, i, c);
      q.add_row_multiple(i, j, -c);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 2) {
        for (std::size_t r = 0; r < n; ++r) p.at(r, i) = -p.at(r, i);
        q.negate_row(i);
      }
  }
  return {exactalg::reduce(p, ring), exactalg::reduce(q, ring)};
}

Algebra random_algebra(std::mt19937_64& rng, const GroundRing& ring, std::size_t max_dim) {
  std::vector<Algebra> pool;
  auto add = [&](Algebra a) {
    if (a.dim() <= max_dim) pool.push_back(std::move(a));
  };
  const Algebra k = ground_algebra(ring);
  add(k);
  add(direct_product(k, k));
  add(dual_numbers(ring));
  add(truncated_polynomial(ring, 3));
  add(truncated_polynomial(ring, 4));
  add(upper_triangular(ring));
  add(cyclic_group_algebra(ring, 2));
  add(cyclic_group_algebra(ring, 3));
  add(direct_product(direct_product(k, k), k));
  add(direct_product(dual_numbers(ring), k));
  add(direct_product(upper_triangular(ring), k));
  add(tensor_product(dual_numbers(ring), dual_numbers(ring)));
  add(exterior_algebra(ring, 2));
  add(matrix_algebra(ring, 2));
  if (pool.empty()) throw RangeError("no sample algebra of dimension <= " + std::to_string(max_dim));
  const Algebra& a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  const auto change = random_basis_change(rng, a.dim(), ring);
  return change_basis(a, change.p, change.p_inv);
}

namespace {

GroundRing ring_from_json(const nlohmann::json& j) {
  const std::string kind = j.value("ring", std::string("Z"));
  if (kind == "Z") return GroundRing::integers();
  if (kind == "F_p") {
    if (!j.contains("modulus")) throw ValidationError("ring F_p needs a modulus");
    return GroundRing::prime_field(j.at("modulus").get<std::uint32_t>());
  }
  throw ValidationError("unknown ring '" + kind + "' (expected Z or F_p)");
}

std::vector<std::vector<Vec>> table_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be a nested array");
  try {
    return j.get<std::vector<std::vector<Vec>>>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string(what) + " must be a nested array of integers");
  }
}

}  // namespace

Algebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("algebra JSON must be an object");
  const GroundRing ring = ring_from_json(j);
  if (!j.contains("products") || !j.contains("unit")) throw ValidationError("algebra JSON needs products and unit");
  auto c = table_from_json(j.at("products"), "products");
  std::vector<std::string> basis = j.contains("basis") ? j.at("basis").get<std::vector<std::string>>()
                                                       : default_labels("e", c.size());
  Vec unit;
  try {
    unit = j.at("unit").get<Vec>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("unit must be an array of integers");
  }
  return Algebra(ring, std::move(basis), std::move(c), std::move(unit));
}

nlohmann::json algebra_to_json(const Algebra& a) {
  nlohmann::json j{{"ring", a.ring().is_field() ? "F_p" : "Z"},
                   {"basis", a.basis()},
                   {"products", a.constants()},
                   {"unit", a.unit()}};
  if (a.ring().is_field()) j["modulus"] = a.ring().modulus();
  return j;
}

Module module_from_json(const nlohmann::json& j, const Algebra& a) {
  if (!j.is_object() || !j.contains("rank")) throw ValidationError("module JSON must be an object with a rank");
  const auto rank = j.at("rank").get<std::size_t>();
  std::vector<std::vector<Vec>> left, right;
  if (j.contains("left")) left = table_from_json(j.at("left"), "left");
  if (j.contains("right")) right = table_from_json(j.at("right"), "right");
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = j.at("basis").get<std::vector<std::string>>();
  return Module(a, rank, std::move(left), std::move(right), std::move(basis));
}

nlohmann::json module_to_json(const Module& m) {
  nlohmann::json j{{"rank", m.rank()}, {"basis", m.basis()}};
  if (m.has_left()) j["left"] = m.left_table();
  if (m.has_right()) j["right"] = m.right_table();
  return j;
}

}  // namespace cycbar::hochschild
