#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycbar/enriched/enriched.hpp"
#include "cycbar/errors.hpp"
#include "cycbar/exactalg/linear.hpp"
#include "cycbar/hochschild/complexes.hpp"
#include "cycbar/polyhedra/polyhedra.hpp"

using namespace cycbar;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailure = 1, kUsage = 2, kInvalid = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
}

std::string torsion_text(const exactalg::HomologyGroup& g) {
  std::string s;
  for (const auto& t : g.torsion) s += (s.empty() ? "" : ",") + t.get_str();
  return s.empty() ? "-" : s;
}

std::string homology_table(const std::vector<exactalg::HomologyGroup>& h) {
  std::ostringstream out;
  out << "degree\tbetti\ttorsion\n";
  for (std::size_t n = 0; n < h.size(); ++n) out << n << '\t' << h[n].betti << '\t' << torsion_text(h[n]) << '\n';
  return out.str();
}

exactalg::GroundRing parse_ring(const std::string& name, std::uint32_t modulus) {
  if (name == "Z") return exactalg::GroundRing::integers();
  if (name == "F_p") {
    try {
      return exactalg::GroundRing::prime_field(modulus);
    } catch (const RangeError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown ring '" + name + "' (expected Z or F_p)");
}

std::size_t thread_count() {
  const char* env = std::getenv("CYCBAR_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<std::size_t>(v) : 1;
}

struct Output {
  std::string format = "json";
  void emit(const json& j, const std::function<std::string()>& table = {}) const {
    if (format == "table" && table)
      std::cout << table();
    else
      std::cout << j.dump(2) << '\n';
  }
};

// polytope

struct PolytopeArgs {
  std::string kind;
  std::uint32_t n = 0;
  std::string emit = "fvector";
};

template <class Poset, class Cubical>
int run_polytope(const PolytopeArgs& a, const Output& out) {
  json j{{"kind", a.kind}, {"n", a.n}};
  if (a.emit == "fvector") {
    const auto f = Poset(a.n).f_vector();
    j["fvector"] = f;
    out.emit(j, [&] {
      std::ostringstream s;
      s << "dim\tfaces\n";
      for (std::size_t d = 0; d < f.size(); ++d) s << d << '\t' << f[d] << '\n';
      return s.str();
    });
  } else if (a.emit == "poset") {
    std::cout << Poset(a.n).to_dot();
  } else if (a.emit == "cubes") {
    out.emit(Cubical(a.n).to_json());
  } else {
    const auto h = Cubical(a.n).chain_complex().homology();
    j["homology"] = exactalg::homology_report(h);
    out.emit(j, [&] { return homology_table(h); });
  }
  return kOk;
}

int cmd_polytope(const PolytopeArgs& a, const Output& out) {
  const bool k = a.kind == "K";
  const bool heavy = a.emit == "cubes" || a.emit == "homology";
  const std::uint32_t bound = k ? (heavy ? 8 : 10) : (heavy ? 7 : 8);
  if (a.n < 1 || a.n > bound)
    throw UsageError(a.kind + "_n with --emit " + a.emit + " needs 1 <= n <= " + std::to_string(bound));
  return k ? run_polytope<polyhedra::KPoset, polyhedra::KCubical>(a, out)
           : run_polytope<polyhedra::WPoset, polyhedra::WCubical>(a, out);
}

// hochschild, bar2

struct HochschildArgs {
  std::string algebra, bimodule, direction = "homology";
  std::size_t max_degree = 4;
  bool normalized = false;
};

int cmd_hochschild(const HochschildArgs& a, const Output& out) {
  const auto alg = hochschild::algebra_from_json(read_json(a.algebra));
  const auto m = a.bimodule.empty() ? hochschild::Module::regular(alg)
                                    : hochschild::module_from_json(read_json(a.bimodule), alg);
  if (!m.has_left() || !m.has_right()) throw ValidationError("the coefficient module must be a bimodule");
  const bool homology = a.direction == "homology";
  std::vector<exactalg::HomologyGroup> h;
  if (a.normalized) {
    const auto c = homology ? hochschild::normalized_cyclic_bar_complex(alg, m, a.max_degree + 1)
                            : hochschild::normalized_cyclic_cobar_complex(alg, m, a.max_degree + 1);
    h = c.homology();
    h.resize(a.max_degree + 1);
  } else {
    h = homology ? hochschild::hochschild_homology(alg, m, a.max_degree)
                 : hochschild::hochschild_cohomology(alg, m, a.max_degree);
  }
  json j{{"direction", a.direction},
         {"ring", alg.ring().name()},
         {"algebra_dim", alg.dim()},
         {"module_rank", m.rank()},
         {"max_degree", a.max_degree},
         {"normalized", a.normalized},
         {"groups", exactalg::homology_report(h)}};
  out.emit(j, [&] { return homology_table(h); });
  return kOk;
}

struct Bar2Args {
  std::string algebra, right, left;
  std::size_t max_degree = 3;
};

int cmd_bar2(const Bar2Args& a, const Output& out) {
  const auto alg = hochschild::algebra_from_json(read_json(a.algebra));
  const auto right = hochschild::module_from_json(read_json(a.right), alg);
  const auto left = hochschild::module_from_json(read_json(a.left), alg);
  auto h = hochschild::two_sided_bar_complex(alg, right, left, a.max_degree + 1).homology();
  h.resize(a.max_degree + 1);
  json j{{"ring", alg.ring().name()}, {"max_degree", a.max_degree}, {"tor", exactalg::homology_report(h)}};
  out.emit(j, [&] { return homology_table(h); });
  return kOk;
}

// realize, census

struct RealizeArgs {
  std::string functor, builtin, indexing = "01delta", module = "K", ring = "Z";
  std::uint32_t modulus = 2;
  std::size_t max_degree = 2;
  bool compare = false;
};

enriched::SimplicialSet builtin_set(const std::string& name) {
  using enriched::SimplicialSet;
  if (name == "point") return SimplicialSet::point();
  if (name == "circle") return SimplicialSet::circle();
  if (name == "sphere") return SimplicialSet::boundary_sphere(2);
  if (name == "collapsed2") return SimplicialSet::collapsed_simplex(2);
  if (name == "simplex2") return SimplicialSet::standard_simplex(2);
  throw UsageError("unknown builtin '" + name + "' (point, circle, sphere, collapsed2, simplex2)");
}

int cmd_realize(const RealizeArgs& a, const Output& out) {
  if (a.functor.empty() == a.builtin.empty()) throw UsageError("give exactly one of --functor and --builtin");
  const auto x = a.builtin.empty() ? enriched::simplicial_set_from_json(read_json(a.functor)) : builtin_set(a.builtin);
  const auto ring = parse_ring(a.ring, a.modulus);
  enriched::Indexing ind;
  enriched::Coefficients coeff;
  try {
    ind = enriched::parse_indexing(a.indexing);
    coeff = enriched::parse_coefficients(a.module);
  } catch (const RangeError& e) {
    throw UsageError(e.what());
  }
  const auto r = enriched::realize(x, ind, coeff, a.max_degree, ring);
  const auto h = r.homology();
  json j{{"indexing", a.indexing},
         {"module", a.module},
         {"ring", ring.name()},
         {"max_degree", a.max_degree},
         {"generators", r.generators},
         {"relations", r.relations},
         {"cells", r.complex.ranks()},
         {"homology", exactalg::homology_report(h)}};
  bool match = true;
  if (a.compare) {
    const auto ordinary = enriched::ordinary_homology(x, a.max_degree, ring);
    match = ordinary == h;
    j["ordinary"] = exactalg::homology_report(ordinary);
    j["comparison"] = match ? "MATCH" : "MISMATCH";
  }
  out.emit(j, [&] {
    std::string s = homology_table(h);
    if (a.compare) s += match ? "MATCH\n" : "MISMATCH\n";
    return s;
  });
  return match ? kOk : kFailure;
}

struct CensusArgs {
  std::string indexing = "01delta";
  std::uint32_t n = 2, max_degree = 2;
};

int cmd_census(const CensusArgs& a, const Output& out) {
  enriched::Indexing ind;
  try {
    ind = enriched::parse_indexing(a.indexing);
  } catch (const RangeError& e) {
    throw UsageError(e.what());
  }
  const auto rows = enriched::representable_census(ind, a.n, a.max_degree);
  json j{{"indexing", a.indexing}, {"n", a.n}, {"rows", json::array()}};
  for (const auto& r : rows) j["rows"].push_back(enriched::to_json(r));
  out.emit(j, [&] {
    std::ostringstream s;
    s << "degree\tcomponents\tnondegenerate\tfaces\tvertices\n";
    for (const auto& r : rows)
      s << r.degree << '\t' << r.components << '\t' << r.nondegenerate << '\t' << r.faces << '\t' << r.vertices << '\n';
    return s.str();
  });
  return kOk;
}

// check: seeded property suites. Trial t of a suite draws from its own
// stream, so results do not depend on the thread count.

using Trial = std::function<std::optional<std::string>(std::mt19937_64&)>;

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

exactalg::GroundRing small_field(std::mt19937_64& rng) {
  static const std::uint32_t primes[] = {2, 3, 5};
  return exactalg::GroundRing::prime_field(primes[std::uniform_int_distribution<int>(0, 2)(rng)]);
}

std::optional<std::string> basis_invariance(std::mt19937_64& rng) {
  const auto ring = small_field(rng);
  const auto a = hochschild::random_algebra(rng, ring, 3);
  const auto change = hochschild::random_basis_change(rng, a.dim(), ring);
  const auto b = hochschild::change_basis(a, change.p, change.p_inv);
  const auto ha = hochschild::hochschild_homology(a, hochschild::Module::regular(a), 3);
  const auto hb = hochschild::hochschild_homology(b, hochschild::Module::regular(b), 3);
  if (ha != hb) return "HH changed under a change of basis over " + ring.name();
  const auto ca = hochschild::hochschild_cohomology(a, hochschild::Module::regular(a), 2);
  const auto cb = hochschild::hochschild_cohomology(b, hochschild::Module::regular(b), 2);
  if (ca != cb) return "HH^* changed under a change of basis over " + ring.name();
  return std::nullopt;
}

std::optional<std::string> trace_factorization(std::mt19937_64& rng) {
  const auto ring = small_field(rng);
  const auto a = hochschild::random_algebra(rng, ring, 4);
  const auto m = hochschild::Module::regular(a);
  const auto c = hochschild::trace_universal(a, m);
  std::uniform_int_distribution<int> coeff(0, static_cast<int>(ring.modulus()) - 1);
  std::vector<std::int64_t> r(m.rank());
  std::vector<exactalg::Integer> rz(m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j) rz[j] = r[j] = coeff(rng);
  if (exactalg::factor_functional(c, rz, ring).has_value() != hochschild::trace_extends(a, m, r))
    return "factorization through HH_0 disagrees with naturality";
  return std::nullopt;
}

std::optional<std::string> enriched_associativity(std::mt19937_64& rng) {
  const bool linear = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  const auto ind = linear ? enriched::Indexing::zero_one_delta : enriched::Indexing::zero_delta_c;
  const auto cat = enriched::category_of(ind);
  std::uniform_int_distribution<std::uint32_t> dim(0, linear ? 3 : 4);
  std::vector<finord::FinOrdSet> obj;
  for (int i = 0; i < 4; ++i) obj.push_back(enriched::standard_object(ind, dim(rng)));
  std::vector<finord::NCMorphism> ms;
  std::vector<std::vector<polyhedra::PlanarTree>> faces;
  for (int i = 0; i < 3; ++i) {
    const auto hom = finord::hom_set(obj[i], obj[i + 1], cat);
    if (hom.empty()) return std::nullopt;
    ms.push_back(pick(rng, hom));
    std::vector<polyhedra::PlanarTree> fs;
    for (const auto& fib : ms.back().fibers()) {
      const polyhedra::KPoset p(static_cast<std::uint32_t>(fib.size()));
      std::vector<polyhedra::PlanarTree> all;
      for (int d = 0; d <= p.dimension(); ++d) all.insert(all.end(), p.faces(d).begin(), p.faces(d).end());
      fs.push_back(pick(rng, all));
    }
    faces.push_back(std::move(fs));
  }
  const auto gf = enriched::enriched_compose(ms[1], faces[1], ms[0], faces[0]);
  const auto hg = enriched::enriched_compose(ms[2], faces[2], ms[1], faces[1]);
  const auto left = enriched::enriched_compose(ms[2], faces[2], gf.h, gf.faces);
  const auto right = enriched::enriched_compose(hg.h, hg.faces, ms[0], faces[0]);
  if (!(left.h == right.h) || left.faces != right.faces) return "enriched composition is not associative";
  return std::nullopt;
}

template <class Model>
std::optional<std::string> boundary_squared(const Model& m, std::mt19937_64& rng) {
  const int d = std::uniform_int_distribution<int>(0, m.dimension())(rng);
  const auto& c = pick(rng, m.cells(d));
  std::map<typename Model::Cell, long> dd;
  for (const auto& [f, s] : Model::boundary(c))
    for (const auto& [g, t] : Model::boundary(f)) dd[g] += s * t;
  for (const auto& [g, v] : dd)
    if (v != 0) return "boundary of boundary is nonzero on a cell of dimension " + std::to_string(d);
  return std::nullopt;
}

std::optional<std::string> cubical_boundary(std::mt19937_64& rng) {
  const auto n = std::uniform_int_distribution<std::uint32_t>(2, 6)(rng);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return boundary_squared(polyhedra::KCubical(n), rng);
  return boundary_squared(polyhedra::WCubical(n), rng);
}

std::optional<std::string> realization(std::mt19937_64& rng) {
  static const std::vector<std::string> names = {"point", "circle", "sphere", "collapsed2", "simplex2"};
  const auto x = builtin_set(pick(rng, names));
  const int which = std::uniform_int_distribution<int>(0, 3)(rng);
  const auto ind = which % 2 == 0 ? enriched::Indexing::zero_one_delta : enriched::Indexing::zero_delta_c;
  const auto coeff = which < 2 ? (which == 0 ? enriched::Coefficients::associahedra : enriched::Coefficients::cyclohedra)
                               : enriched::Coefficients::simplices;
  const auto ring = std::uniform_int_distribution<int>(0, 1)(rng) ? exactalg::GroundRing::integers() : small_field(rng);
  if (enriched::realize(x, ind, coeff, 2, ring).homology() != enriched::ordinary_homology(x, 2, ring))
    return "realization differs from ordinary homology";
  return std::nullopt;
}

const std::vector<std::pair<std::string, Trial>>& suites() {
  static const std::vector<std::pair<std::string, Trial>> all = {
      {"basis-invariance", basis_invariance},
      {"trace-factorization", trace_factorization},
      {"enriched-associativity", enriched_associativity},
      {"cubical-boundary", cubical_boundary},
      {"realization", realization},
  };
  return all;
}

struct CheckArgs {
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::vector<std::string> suites;
};

int cmd_check(const CheckArgs& a, const Output& out) {
  std::vector<std::size_t> chosen;
  for (std::size_t s = 0; s < suites().size(); ++s)
    if (a.suites.empty() || std::find(a.suites.begin(), a.suites.end(), suites()[s].first) != a.suites.end())
      chosen.push_back(s);
  for (const auto& name : a.suites)
    if (std::none_of(suites().begin(), suites().end(), [&](const auto& s) { return s.first == name; }))
      throw UsageError("unknown suite '" + name + "'");

  const std::size_t jobs = chosen.size() * a.trials;
  std::vector<std::optional<std::string>> results(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job; (job = next++) < jobs;) {
      const std::size_t s = chosen[job / a.trials], t = job % a.trials;
      std::seed_seq seq{static_cast<std::uint32_t>(a.seed), static_cast<std::uint32_t>(a.seed >> 32),
                        static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)};
      std::mt19937_64 rng(seq);
      try {
        results[job] = suites()[s].second(rng);
      } catch (const std::exception& e) {
        results[job] = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < std::min(thread_count(), jobs); ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  json j{{"seed", a.seed}, {"trials", a.trials}, {"suites", json::array()}};
  bool ok = true;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    json failures = json::array();
    for (std::size_t t = 0; t < a.trials; ++t)
      if (const auto& r = results[c * a.trials + t]) failures.push_back({{"trial", t}, {"message", *r}});
    ok = ok && failures.empty();
    j["suites"].push_back({{"name", suites()[chosen[c]].first},
                           {"passed", a.trials - failures.size()},
                           {"failed", failures.size()},
                           {"failures", failures}});
  }
  out.emit(j, [&] {
    std::ostringstream s;
    for (const auto& suite : j["suites"])
      s << (suite["failed"] == 0 ? "PASS " : "FAIL ") << suite["name"].get<std::string>() << ' ' << suite["passed"]
        << '/' << a.trials << '\n';
    return s.str();
  });
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associahedra, cyclohedra, enriched realizations and Hochschild (co)homology"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::function<int()> run;

  PolytopeArgs pa;
  auto* poly = app.add_subcommand("polytope", "Face poset, cubical model or homology of K_n / W_n");
  poly->add_option("kind", pa.kind, "K or W")->required()->check(CLI::IsMember({"K", "W"}));
  poly->add_option("n", pa.n, "Number of leaves")->required();
  poly->add_option("--emit", pa.emit, "fvector, poset (DOT), cubes or homology")
      ->check(CLI::IsMember({"fvector", "poset", "cubes", "homology"}));
  poly->callback([&] { run = [&] { return cmd_polytope(pa, out); }; });

  HochschildArgs ha;
  auto* hh = app.add_subcommand("hochschild", "Hochschild homology or cohomology of an algebra");
  hh->add_option("--algebra", ha.algebra, "Algebra JSON file")->required();
  hh->add_option("--bimodule", ha.bimodule, "Bimodule JSON file (default: the algebra itself)");
  hh->add_option("--direction", ha.direction)->check(CLI::IsMember({"homology", "cohomology"}));
  hh->add_option("--max-degree", ha.max_degree)->check(CLI::Range(0, 12));
  hh->add_flag("--normalized", ha.normalized, "Use the normalized complex");
  hh->callback([&] { run = [&] { return cmd_hochschild(ha, out); }; });

  Bar2Args ba;
  auto* bar2 = app.add_subcommand("bar2", "Homology of the two-sided bar construction (Tor)");
  bar2->add_option("--algebra", ba.algebra)->required();
  bar2->add_option("--right", ba.right, "Right module JSON file")->required();
  bar2->add_option("--left", ba.left, "Left module JSON file")->required();
  bar2->add_option("--max-degree", ba.max_degree)->check(CLI::Range(0, 10));
  bar2->callback([&] { run = [&] { return cmd_bar2(ba, out); }; });

  RealizeArgs ra;
  auto* real = app.add_subcommand("realize", "Enriched realization of a simplicial set");
  real->add_option("--functor", ra.functor, "Simplicial set JSON file");
  real->add_option("--builtin", ra.builtin, "point, circle, sphere, collapsed2 or simplex2");
  real->add_option("--indexing", ra.indexing)->check(CLI::IsMember({"01delta", "0deltaC"}));
  real->add_option("--module", ra.module)->check(CLI::IsMember({"K", "W", "simplex"}));
  real->add_option("--max-degree", ra.max_degree)->check(CLI::Range(0, 3));
  real->add_option("--ring", ra.ring)->check(CLI::IsMember({"Z", "F_p"}));
  real->add_option("--modulus", ra.modulus);
  real->add_flag("--compare-ordinary", ra.compare, "Also compute simplicial homology and compare");
  real->callback([&] { run = [&] { return cmd_realize(ra, out); }; });

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "Enriched homs out of a representable object");
  census->add_option("--indexing", ca.indexing)->check(CLI::IsMember({"01delta", "0deltaC"}));
  census->add_option("--n", ca.n)->check(CLI::Range(0, 6));
  census->add_option("--max-degree", ca.max_degree)->check(CLI::Range(0, 6));
  census->callback([&] { run = [&] { return cmd_census(ca, out); }; });

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Seeded randomized property suites");
  check->add_option("--seed", ka.seed);
  check->add_option("--trials", ka.trials)->check(CLI::Range(1, 10000));
  check->add_option("--suite", ka.suites, "Suites to run (default: all)");
  check->callback([&] { run = [&] { return cmd_check(ka, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CompositionError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CategoryError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
