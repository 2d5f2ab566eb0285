// Acceptance suite: one PASS/FAIL line per criterion, with pinned limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cycbar/enriched/enriched.hpp"
#include "cycbar/exactalg/elimination.hpp"
#include "cycbar/exactalg/linear.hpp"
#include "cycbar/hochschild/complexes.hpp"
#include "cycbar/polyhedra/polyhedra.hpp"

using namespace cycbar;
using exactalg::GroundRing;
using exactalg::HomologyGroup;
using exactalg::IntMatrix;
using exactalg::Integer;
using polyhedra::KCubical;
using polyhedra::KPoset;
using polyhedra::WCubical;
using polyhedra::WPoset;

namespace {

// Time limits in seconds; 0 means none.
constexpr double kFVectorLimit = 1.0;
constexpr double kContractibleLimit = 60.0;
constexpr double kCollapseLimit = 10.0;
constexpr double kHochschildLimit = 120.0;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ - failed_ << "/" << total_ << " checks";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

std::vector<std::size_t> bettis(const std::vector<HomologyGroup>& h) {
  std::vector<std::size_t> out;
  for (const auto& g : h) out.push_back(g.betti);
  return out;
}

bool is_point(const std::vector<HomologyGroup>& h) {
  if (h.empty() || !(h[0] == HomologyGroup{1, {}})) return false;
  for (std::size_t d = 1; d < h.size(); ++d)
    if (!h[d].is_zero()) return false;
  return true;
}

std::uint64_t catalan(std::uint32_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::uint32_t k = 1; k <= n; ++k)
    for (std::uint32_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

// Maximal compatible arc systems on n cyclically ordered leaves, found by
// backtracking over arcs; returns (all, containing a full arc).
std::pair<std::size_t, std::size_t> brute_cyclic_binary(std::uint32_t n) {
  struct Arc {
    std::uint32_t mask;
    int cut;  // -1 unless the arc holds every leaf
  };
  std::vector<Arc> arcs;
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t len = 2; len < n; ++len) {
      std::uint32_t m = 0;
      for (std::uint32_t k = 0; k < len; ++k) m |= 1u << ((s + k) % n);
      arcs.push_back({m, -1});
    }
  for (std::uint32_t s = 0; s < n; ++s) arcs.push_back({all, static_cast<int>(s)});
  auto ok = [&](const Arc& a, const Arc& b) {
    if (a.cut >= 0 && b.cut >= 0) return false;
    if (a.cut >= 0 || b.cut >= 0) {
      const Arc& f = a.cut >= 0 ? a : b;
      const Arc& c = a.cut >= 0 ? b : a;
      const std::uint32_t before = (f.cut + n - 1) % n;
      return !((c.mask >> before & 1u) && (c.mask >> f.cut & 1u));
    }
    const std::uint32_t i = a.mask & b.mask;
    return i == 0 || i == a.mask || i == b.mask;
  };
  std::size_t maximal = 0, rooted = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == n - 1) {
      ++maximal;
      for (auto i : chosen)
        if (arcs[i].cut >= 0) {
          ++rooted;
          break;
        }
      return;
    }
    for (std::size_t i = from; i < arcs.size(); ++i) {
      bool good = true;
      for (auto j : chosen) good = good && ok(arcs[i], arcs[j]);
      if (!good) continue;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return {maximal, rooted};
}

template <class Poset>
std::vector<typename Poset::Tree> all_faces(const Poset& p) {
  std::vector<typename Poset::Tree> out;
  for (int d = 0; d <= p.dimension(); ++d) out.insert(out.end(), p.faces(d).begin(), p.faces(d).end());
  return out;
}

// Criteria

bool fvectors(Check& c) {
  const auto k3 = KPoset(3).f_vector(), k4 = KPoset(4).f_vector();
  const auto w2 = WPoset(2).f_vector(), w3 = WPoset(3).f_vector();
  c.expect(k3 == std::vector<std::size_t>{2, 1}, "K_3 = " + show(k3));
  c.expect(k4 == std::vector<std::size_t>{5, 5, 1}, "K_4 = " + show(k4));
  c.expect(w2 == std::vector<std::size_t>{2, 1}, "W_2 = " + show(w2));
  c.expect(w3 == std::vector<std::size_t>{6, 6, 1}, "W_3 = " + show(w3));
  return c.ok();
}

bool contractible(Check& c) {
  for (std::uint32_t n = 2; n <= 8; ++n)
    c.expect(is_point(KCubical(n).chain_complex().homology()), "K_" + std::to_string(n));
  for (std::uint32_t n = 1; n <= 7; ++n)
    c.expect(is_point(WCubical(n).chain_complex().homology()), "W_" + std::to_string(n));
  return c.ok();
}

bool vertex_counts(Check& c) {
  for (std::uint32_t n = 2; n <= 10; ++n) {
    c.expect(KPoset(n).faces(0).size() == catalan(n - 1), "vertices of K_" + std::to_string(n));
    c.expect(KCubical(n).top_cubes().size() == catalan(n - 1), "top cubes of K_" + std::to_string(n));
  }
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const auto [vertices, rooted] = brute_cyclic_binary(n);
    c.expect(WPoset(n).faces(0).size() == vertices, "vertices of W_" + std::to_string(n));
    c.expect(WCubical(n).top_cubes().size() == rooted, "top cubes of W_" + std::to_string(n));
    c.expect(rooted == n * catalan(n - 1), "rooted binary cyclic trees for n = " + std::to_string(n));
  }
  return c.ok();
}

bool boundary_decompositions(Check& c) {
  for (std::uint32_t n = 3; n <= 7; ++n) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> expected;
    for (std::uint32_t r = 2; r <= n - 1; ++r) expected[{n - r + 1, r}] = n - r + 1;
    c.expect(polyhedra::facet_census(KPoset(n)) == expected, "facets of K_" + std::to_string(n));
  }
  for (std::uint32_t n = 2; n <= 6; ++n) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> expected;
    for (std::uint32_t s = 1; s <= n - 1; ++s) expected[{s, n - s + 1}] = n;
    c.expect(polyhedra::facet_census(WPoset(n)) == expected, "facets of W_" + std::to_string(n));
  }
  return c.ok();
}

template <class Poset>
void collapse_squares(Check& c, const Poset& p, std::uint32_t n, const char* name) {
  for (const auto& x : all_faces(p)) {
    const auto cx = polyhedra::collapse_to_simplex(x);
    for (std::uint32_t i = 0; i + 1 <= n; ++i)
      c.expect(polyhedra::collapse_to_simplex(polyhedra::codegeneracy(x, i)) == polyhedra::simplex_codegeneracy(cx, i),
               std::string("s^") + std::to_string(i) + " square for " + name + " " + x.to_string());
    for (std::uint32_t j = 0; j <= n + 1; ++j)
      c.expect(polyhedra::collapse_to_simplex(polyhedra::coface(x, j)) == polyhedra::simplex_coface(cx, j),
               std::string("d^") + std::to_string(j) + " square for " + name + " " + x.to_string());
  }
}

bool collapse_naturality(Check& c) {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    collapse_squares(c, KPoset(n + 2), n, "K");
    collapse_squares(c, WPoset(n + 1), n, "W");
  }
  return c.ok();
}

bool realization(Check& c) {
  using enriched::SimplicialSet;
  const std::vector<std::pair<std::string, SimplicialSet>> spaces = {
      {"point", SimplicialSet::point()},
      {"circle", SimplicialSet::circle()},
      {"sphere", SimplicialSet::boundary_sphere(2)},
      {"collapsed triangle", SimplicialSet::collapsed_simplex(2)}};
  for (const auto& [name, x] : spaces) {
    const auto ordinary = enriched::ordinary_homology(x, 2);
    const auto k = enriched::realize(x, enriched::Indexing::zero_one_delta, enriched::Coefficients::associahedra, 2);
    const auto w = enriched::realize(x, enriched::Indexing::zero_delta_c, enriched::Coefficients::cyclohedra, 2);
    c.expect(k.homology() == ordinary, "K realization of " + name + " = " + show(bettis(k.homology())));
    c.expect(w.homology() == ordinary, "W realization of " + name + " = " + show(bettis(w.homology())));
  }
  return c.ok();
}

// Left multiplication by 2x on k[x]/(x²): the nonzero map of the periodic
// bimodule resolution, tensored down.
std::vector<std::size_t> dual_numbers_periodic(std::uint32_t p, std::size_t top) {
  const IntMatrix twox = IntMatrix::from_rows({{0, 0}, {2, 0}});
  auto rank_of_boundary = [&](std::size_t n) -> std::size_t {
    return n == 0 || n % 2 == 1 ? 0 : exactalg::dense_rank_mod_p(twox, p);
  };
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= top; ++n) out.push_back(2 - rank_of_boundary(n) - rank_of_boundary(n + 1));
  return out;
}

bool squares_to_zero(const exactalg::ChainComplex& cx) {
  const auto& ring = cx.ring();
  const bool hom = cx.grading() == exactalg::Grading::homological;
  for (std::size_t n = 0; n + 1 < cx.length(); ++n) {
    // a after b
    const auto& a = hom ? cx.differential(n) : cx.differential(n + 1);
    const auto& b = hom ? cx.differential(n + 1) : cx.differential(n);
    if (a.cols() != b.rows()) return false;
    if (a.rows() == 0 || b.cols() == 0) continue;
    auto prod = exactalg::SparseMatrix::multiply(a, b, ring);
    prod.normalize(ring);
    if (!(prod == exactalg::SparseMatrix(a.rows(), b.cols()))) return false;
  }
  return true;
}

bool hochschild_suite(Check& c) {
  using namespace hochschild;
  const GroundRing f3 = GroundRing::prime_field(3), f5 = GroundRing::prime_field(5), z = GroundRing::integers();

  const Algebra dn = dual_numbers(f3);
  const Module reg = Module::regular(dn);
  const auto oracle = dual_numbers_periodic(3, 6);
  const auto full = cyclic_bar_complex(dn, reg, 7);
  auto hfull = full.homology();
  hfull.resize(7);
  auto hnorm = normalized_cyclic_bar_complex(dn, reg, 7).homology();
  hnorm.resize(7);
  c.expect(oracle == std::vector<std::size_t>{2, 1, 1, 1, 1, 1, 1}, "resolution oracle " + show(oracle));
  c.expect(bettis(hfull) == oracle, "full complex " + show(bettis(hfull)));
  c.expect(bettis(hnorm) == oracle, "normalized complex " + show(bettis(hnorm)));

  const Algebra m2 = matrix_algebra(f5, 2);
  const auto hm2 = hochschild_homology(m2, Module::regular(m2), 4);
  c.expect(bettis(hm2) == std::vector<std::size_t>{1, 0, 0, 0, 0}, "M2(F5) " + show(bettis(hm2)));

  std::vector<exactalg::ChainComplex> built = {full.complex,
                                               normalized_cyclic_bar_complex(dn, reg, 6).complex,
                                               cyclic_cobar_complex(dn, reg, 6).complex,
                                               normalized_cyclic_cobar_complex(dn, reg, 6).complex,
                                               cyclic_bar_complex(m2, Module::regular(m2), 4).complex,
                                               cyclic_cobar_complex(m2, Module::regular(m2), 3).complex,
                                               two_sided_bar_complex(dn, Module::augmentation(dn, {1, 0}, false, true),
                                                                     Module::augmentation(dn, {1, 0}, true, false), 5)
                                                   .complex};

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const GroundRing ring = trial % 4 == 3 ? z : (trial % 2 == 0 ? f3 : f5);
    const Algebra a = random_algebra(rng, ring, 4);
    const auto change = random_basis_change(rng, a.dim(), ring);
    const Algebra b = change_basis(a, change.p, change.p_inv);
    const std::size_t top = a.dim() <= 2 ? 4 : (ring.is_field() ? 3 : 2);
    const auto cb = cyclic_bar_complex(b, Module::regular(b), top + 1);
    built.push_back(cb.complex);
    auto hb = cb.homology();
    hb.resize(top + 1);
    c.expect(hochschild_homology(a, Module::regular(a), top) == hb,
             "basis change on random algebra " + std::to_string(trial));
    c.expect(hochschild_cohomology(a, Module::regular(a), 2) == hochschild_cohomology(b, Module::regular(b), 2),
             "cohomology under basis change on random algebra " + std::to_string(trial));
  }
  for (std::size_t i = 0; i < built.size(); ++i)
    c.expect(squares_to_zero(built[i]), "d^2 = 0 on complex " + std::to_string(i));
  return c.ok();
}

bool trace_cotrace(Check& c) {
  using namespace hochschild;
  const GroundRing f3 = GroundRing::prime_field(3), f5 = GroundRing::prime_field(5), z = GroundRing::integers();
  std::vector<std::pair<Algebra, Module>> cases;
  for (const GroundRing& ring : {f3, f5, z})
    for (const Algebra& a : {dual_numbers(ring), matrix_algebra(ring, 2), upper_triangular(ring),
                             truncated_polynomial(ring, 3), exterior_algebra(ring, 2)})
      cases.emplace_back(a, Module::regular(a));
  const Algebra t = upper_triangular(f5);
  cases.emplace_back(t, Module::augmentation(t, {1, 0, 0}, true, true));
  for (const auto& [a, m] : cases) {
    const auto hh0 = hochschild_homology(a, m, 0)[0];
    const auto tr = trace_universal(a, m);
    std::vector<Integer> tors;
    for (const auto& x : tr.torsion)
      if (x > 1) tors.push_back(x);
    c.expect(tr.free_rank == hh0.betti && tors == hh0.torsion, "trace universal vs HH_0");
    c.expect(cotrace_universal(a, m).cols() == hochschild_cohomology(a, m, 0)[0].betti, "cotrace universal vs HH^0");
  }

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const GroundRing ring = trial % 2 ? f3 : f5;
    const Algebra a = random_algebra(rng, ring, 4);
    const Module m = Module::regular(a);
    const auto u = trace_universal(a, m);
    std::uniform_int_distribution<int> coeff(0, static_cast<int>(ring.modulus()) - 1);
    // Pulled back from the quotient: factors and is natural.
    std::vector<std::int64_t> phi(m.rank(), 0);
    std::vector<Integer> phi_z(m.rank());
    std::vector<Integer> psi(u.free_rank);
    for (auto& x : psi) x = coeff(rng);
    for (std::size_t j = 0; j < m.rank(); ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < u.free_rank; ++i) s += psi[i] * u.projection.at(i, j);
      phi_z[j] = ring.reduce(s);
      phi[j] = phi_z[j].get_si();
    }
    c.expect(exactalg::factor_functional(u, phi_z, ring).has_value() && trace_extends(a, m, phi),
             "pulled-back functional " + std::to_string(trial));
    // Arbitrary functionals: factoring and naturality coincide.
    std::vector<std::int64_t> r(m.rank());
    std::vector<Integer> rz(m.rank());
    for (std::size_t j = 0; j < m.rank(); ++j) rz[j] = r[j] = coeff(rng);
    c.expect(exactalg::factor_functional(u, rz, ring).has_value() == trace_extends(a, m, r),
             "random functional " + std::to_string(trial));
    // Cotraces: every central element extends.
    const IntMatrix basis = cotrace_universal(a, m);
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      Vec v;
      for (std::size_t i = 0; i < m.rank(); ++i) v.push_back(ring.reduce(basis.at(i, j).get_si()));
      c.expect(cotrace_extends(a, m, v), "central element " + std::to_string(trial));
    }
  }
  const Algebra m2 = matrix_algebra(f5, 2);
  c.expect(!cotrace_extends(m2, Module::regular(m2), {1, 0, 0, 0}), "non-central element rejected");
  c.expect(!trace_extends(m2, Module::regular(m2), {1, 0, 0, 0}), "non-trace rejected");

  const Algebra dn = dual_numbers(f3);
  const Module reg = Module::regular(dn);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    c.expect(restriction_formulas_check(dn, reg, {1, 0}, n).ok, "trace restriction n = " + std::to_string(n));
    c.expect(restriction_formulas_check(dn, reg, {0, 1}, n).ok, "trace restriction n = " + std::to_string(n));
    c.expect(cotrace_restriction_check(dn, reg, {1, 0}, n).ok, "cotrace restriction n = " + std::to_string(n));
    c.expect(cotrace_restriction_check(dn, reg, {0, 1}, n).ok, "cotrace restriction n = " + std::to_string(n));
  }
  return c.ok();
}

bool census(Check& c) {
  auto kfaces = [](std::uint32_t m) { return KPoset(m).size(); };
  for (std::uint32_t n = 0; n <= 4; ++n) {
    const auto lin = enriched::representable_census(enriched::Indexing::zero_one_delta, n, n + 1);
    const auto cyc = enriched::representable_census(enriched::Indexing::zero_delta_c, n, n + 1);
    std::size_t lin0 = 0;
    for (std::uint32_t i = 1; i <= n + 1; ++i) lin0 += kfaces(i) * kfaces(n + 2 - i);
    const std::string tag = " n = " + std::to_string(n);
    c.expect(lin[0].components == n + 1 && lin[0].faces == lin0, "01delta degree 0" + tag);
    c.expect(cyc[0].components == n + 1 && cyc[0].faces == (n + 1) * kfaces(n + 1), "0deltaC degree 0" + tag);
    // Each degree-0 component is K_i x K_{n+2-i}, resp. a copy of K_{n+1}.
    std::map<std::vector<std::uint32_t>, std::size_t> lin_shapes, cyc_shapes;
    for (std::uint32_t i = 1; i <= n + 1; ++i) ++lin_shapes[{i, n + 2 - i}];
    cyc_shapes[{n + 1}] = n + 1;
    c.expect(lin[0].shapes == lin_shapes, "01delta degree-0 shapes" + tag);
    c.expect(cyc[0].shapes == cyc_shapes, "0deltaC degree-0 shapes" + tag);
    for (const auto* rows : {&lin, &cyc}) {
      c.expect((*rows)[n].nondegenerate == 1, "one nondegenerate top simplex" + tag);
      c.expect((*rows)[n + 1].nondegenerate == 0, "nothing nondegenerate above the top" + tag);
    }
  }
  return c.ok();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    bool (*run)(Check&);
  };
  const Criterion criteria[] = {
      {1, "f-vectors of K_3, K_4, W_2, W_3", kFVectorLimit, fvectors},
      {2, "contractibility of K_n (n<=8) and W_n (n<=7)", kContractibleLimit, contractible},
      {3, "vertex and top-cube counts", 0, vertex_counts},
      {4, "boundary decompositions follow the cone recursions", 0, boundary_decompositions},
      {5, "collapse naturality squares (n<=4)", kCollapseLimit, collapse_naturality},
      {6, "realization matches ordinary homology", 0, realization},
      {7, "Hochschild suite", kHochschildLimit, hochschild_suite},
      {8, "trace and cotrace universals", 0, trace_cotrace},
      {9, "representable census", 0, census},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    bool ok = false;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = cr.run(check);
    } catch (const std::exception& e) {
      error = std::string("; exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = cr.limit == 0 || secs < cr.limit;
    ok = ok && in_time && error.empty();
    if (!ok) ++failed;
    char timing[64];
    if (cr.limit > 0)
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, cr.limit);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " [" << timing << "] "
              << check.summary() << error << (in_time ? "" : "; time limit exceeded") << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
