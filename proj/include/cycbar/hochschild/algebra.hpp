#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycbar/exactalg/matrix.hpp"
#include "cycbar/exactalg/ring.hpp"

namespace cycbar::hochschild {

using exactalg::GroundRing;
using exactalg::IntMatrix;
using Vec = std::vector<std::int64_t>;

// Associative unital algebra, free of rank d over Z or F_p, given by
// structure constants: e_i e_j = Σ_k c[i][j][k] e_k.
class Algebra {
 public:
  Algebra() = default;
  // Validates associativity and the unit law; ValidationError names the
  // offending basis triple (i,j,k) or pair.
  Algebra(GroundRing ring, std::vector<std::string> basis, std::vector<std::vector<Vec>> constants, Vec unit);

  const GroundRing& ring() const { return ring_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Vec& product(std::size_t i, std::size_t j) const { return c_[i][j]; }
  const std::vector<std::vector<Vec>>& constants() const { return c_; }
  const Vec& unit() const { return unit_; }
  Vec multiply(const Vec& x, const Vec& y) const;
  std::int64_t reduce(std::int64_t v) const { return ring_.reduce(v); }

 private:
  GroundRing ring_ = GroundRing::integers();
  std::vector<std::string> basis_;
  std::vector<std::vector<Vec>> c_;
  Vec unit_;
};

// A free module of finite rank with a left and/or right action of an
// algebra: left[a][m] = e_a·m, right[m][a] = m·e_a (coordinates in M).
class Module {
 public:
  Module() = default;
  // Validates the action axioms present: associativity of each action, the
  // unit acting as identity, and commutation of the two actions.
  Module(const Algebra& a, std::size_t rank, std::vector<std::vector<Vec>> left, std::vector<std::vector<Vec>> right,
         std::vector<std::string> basis = {});

  // A as a bimodule over itself.
  static Module regular(const Algebra& a);
  // The ground ring with both actions through an augmentation A → k given by
  // the value of each basis element.
  static Module augmentation(const Algebra& a, const Vec& epsilon, bool left, bool right);

  const GroundRing& ring() const { return ring_; }
  // Dimension of the acting algebra.
  std::size_t algebra_dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  bool has_left() const { return !left_.empty(); }
  bool has_right() const { return !right_.empty(); }
  const Vec& left(std::size_t a, std::size_t m) const { return left_[a][m]; }
  const Vec& right(std::size_t m, std::size_t a) const { return right_[m][a]; }
  const std::vector<std::vector<Vec>>& left_table() const { return left_; }
  const std::vector<std::vector<Vec>>& right_table() const { return right_; }
  const std::vector<std::string>& basis() const { return basis_; }
  Vec act_left(const Vec& a, const Vec& m) const;
  Vec act_right(const Vec& m, const Vec& a) const;

 private:
  GroundRing ring_ = GroundRing::integers();
  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::vector<Vec>> left_;
  std::vector<std::vector<Vec>> right_;
  std::vector<std::string> basis_;
};

// Columns of p are the new basis vectors in old coordinates; p_inv is its
// inverse over the ring.
Algebra change_basis(const Algebra& a, const IntMatrix& p, const IntMatrix& p_inv);
// Re-expresses a module over change_basis(a, p, p_inv) with module basis q.
Module change_basis(const Module& m, const Algebra& a, const IntMatrix& p, const IntMatrix& q,
                    const IntMatrix& q_inv);

// A basis whose first vector is the unit.
struct UnitBasis {
  IntMatrix p;
  IntMatrix p_inv;
};
UnitBasis unit_first_basis(const Algebra& a);

// Sample algebras.
Algebra ground_algebra(const GroundRing& ring);
Algebra truncated_polynomial(const GroundRing& ring, std::size_t degree);  // k[x]/(x^degree)
Algebra dual_numbers(const GroundRing& ring);                               // k[x]/(x²)
Algebra matrix_algebra(const GroundRing& ring, std::size_t n);              // matrix units E_ij
Algebra upper_triangular(const GroundRing& ring);                           // 2×2 upper triangular
Algebra cyclic_group_algebra(const GroundRing& ring, std::size_t order);
Algebra direct_product(const Algebra& a, const Algebra& b);
Algebra tensor_product(const Algebra& a, const Algebra& b);
Algebra exterior_algebra(const GroundRing& ring, std::size_t generators);

// A random invertible change of basis: product of elementary matrices.
struct BasisChange {
  IntMatrix p;
  IntMatrix p_inv;
};
BasisChange random_basis_change(std::mt19937_64& rng, std::size_t n, const GroundRing& ring);
// A sample algebra of dimension <= max_dim in a random basis.
Algebra random_algebra(std::mt19937_64& rng, const GroundRing& ring, std::size_t max_dim);

// {"ring":"Z"|"F_p","modulus":p,"basis":[...],"products":[[[...]]],"unit":[...]}
Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);
// {"rank":r,"basis":[...],"left":[[[...]]],"right":[[[...]]]}; missing
// actions are absent.
Module module_from_json(const nlohmann::json& j, const Algebra& a);
nlohmann::json module_to_json(const Module& m);

}  // namespace cycbar::hochschild
