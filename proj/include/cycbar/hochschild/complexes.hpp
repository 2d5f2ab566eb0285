#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cycbar/exactalg/chain_complex.hpp"
#include "cycbar/exactalg/linear.hpp"
#include "cycbar/finord/finord.hpp"
#include "cycbar/hochschild/algebra.hpp"

namespace cycbar::hochschild {

using exactalg::ChainComplex;
using exactalg::HomologyGroup;
using exactalg::SparseMatrix;

// Hochschild chains C_n = M ⊗ A^{⊗n} (homological) or cochains
// Cⁿ = Hom(A^{⊗n}, M) (cohomological) in degrees 0..max_degree. The basis
// element (m; a_1..a_n) has index m·r^n + Σ a_i r^{n-i}, where r is the
// number of algebra basis elements used (d, or d-1 when normalized).
struct HochschildComplex {
  exactalg::Grading direction = exactalg::Grading::homological;
  std::size_t max_degree = 0;
  bool normalized = false;
  ChainComplex complex;

  std::vector<HomologyGroup> homology() const { return complex.homology(); }
};

// b = Σ_{i<n} (-1)^i d_i + (-1)^n d_n with d_0(m⊗a_1..) = m a_1 ⊗ ..,
// d_i multiplying a_i a_{i+1}, and the wrap-around face d_n(..⊗a_n) = a_n m ⊗ ...
HochschildComplex cyclic_bar_complex(const Algebra& a, const Module& m, std::size_t max_degree);
// (δφ)(b_1..b_{n+1}) = b_1 φ(b_2..) + Σ (-1)^i φ(..b_i b_{i+1}..) + (-1)^{n+1} φ(b_1..b_n) b_{n+1}.
HochschildComplex cyclic_cobar_complex(const Algebra& a, const Module& m, std::size_t max_degree);
// Same complexes with the unit moved to the first basis vector and tensors
// containing it divided out (chains) or cochains vanishing on it (cochains).
HochschildComplex normalized_cyclic_bar_complex(const Algebra& a, const Module& m, std::size_t max_degree);
HochschildComplex normalized_cyclic_cobar_complex(const Algebra& a, const Module& m, std::size_t max_degree);

// Keeps degrees < n, for 0 <= n <= max_degree + 1 (n = max_degree + 1 is the
// identity). RangeError otherwise.
HochschildComplex truncate(const HochschildComplex& c, std::size_t n);

// HH_0..HH_N (resp. HH⁰..HHᴺ), exact: the complex is built one degree higher.
std::vector<HomologyGroup> hochschild_homology(const Algebra& a, const Module& m, std::size_t max_degree);
std::vector<HomologyGroup> hochschild_cohomology(const Algebra& a, const Module& m, std::size_t max_degree);

// B_n = M ⊗ A^{⊗n} ⊗ N for a right module M and a left module N, with basis
// index (m·d^n + tuple)·rank(N) + n.
struct TwoSidedBarComplex {
  std::size_t max_degree = 0;
  ChainComplex complex;

  std::vector<HomologyGroup> homology() const { return complex.homology(); }
};
TwoSidedBarComplex two_sided_bar_complex(const Algebra& a, const Module& right, const Module& left,
                                         std::size_t max_degree);
// M ⊗_A N as the cokernel of m a ⊗ n - m ⊗ a n.
exactalg::Cokernel balanced_tensor(const Algebra& a, const Module& right, const Module& left);

// The map M ⊗ A^{S-0} → M ⊗ A^{T-0} induced by f in ⁰ΔC: each fiber is
// multiplied out in its order, with M in the fiber of the basepoint; empty
// fibers give the unit.
SparseMatrix cyclic_bar_map(const Algebra& a, const Module& m, const finord::NCMorphism& f);
// The map Hom(A^{T-0}, M) → Hom(A^{S-0}, M) induced by f: when the
// basepoint fiber reads (x.., 0, y..), the result is a_y.. ψ(..) a_x...
SparseMatrix cyclic_cobar_map(const Algebra& a, const Module& m, const finord::NCMorphism& f);

// Face maps of the cyclic bar construction as morphisms S → T of ⁰ΔC with
// |S| = n+1: d_i merges i and i+1 for i < n, d_n merges n and 0 with n first.
finord::NCMorphism cyclic_face(std::uint32_t n, std::uint32_t i);
// All morphisms of ⁰ΔC between standard objects of size 1..max_size.
std::vector<finord::NCMorphism> zero_delta_c_morphisms(std::uint32_t max_size);

// HH_0(A; M) = M/[A, M].
exactalg::Cokernel trace_universal(const Algebra& a, const Module& m);
// HH⁰(A; M) = {m : am = ma}; columns are a basis.
exactalg::IntMatrix cotrace_universal(const Algebra& a, const Module& m);

// Whether τ: M → k, extended by τ_S(m⊗a) = τ(m a_1..a_n), is natural along
// every ⁰ΔC morphism with |S| <= max_size.
bool trace_extends(const Algebra& a, const Module& m, const std::vector<std::int64_t>& tau, std::uint32_t max_size = 3);
// Whether v ∈ M, extended by φ_S(a) = v a_1..a_n, is natural along every ⁰ΔC
// morphism with |S| <= max_size.
bool cotrace_extends(const Algebra& a, const Module& m, const Vec& v, std::uint32_t max_size = 3);

// Source of the face maps M ⊗ A^{n-1} → M (or k → Hom(A^{n-1}, M)) for
// face i = 1..n. The default uses cyclic_bar_map / cyclic_cobar_map.
using FaceProvider = std::function<SparseMatrix(std::uint32_t i)>;

struct RestrictionResult {
  bool ok = true;
  std::optional<std::uint32_t> failing_face;
  std::string detail;
};

// Face i of the trace on K_n × M × A^{n-1}: rotate cyclically i-1 times, then
// multiply, i.e. τ(a_{n-i+1}..a_{n-1} m a_1..a_{n-i}). Compares the provider
// against this formula and all faces against face 1. n <= 4; n = 1 is
// vacuous.
RestrictionResult restriction_formulas_check(const Algebra& a, const Module& m, const std::vector<std::int64_t>& tau,
                                             std::uint32_t n, const FaceProvider& faces = {});
// Cotrace version: face i places v in position i, a_1..a_{i-1} v a_i..a_{n-1}.
RestrictionResult cotrace_restriction_check(const Algebra& a, const Module& m, const Vec& v, std::uint32_t n,
                                            const FaceProvider& faces = {});

nlohmann::json to_json(const HochschildComplex& c);

}  // namespace cycbar::hochschild
