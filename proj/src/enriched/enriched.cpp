#include "cycbar/enriched/enriched.hpp"

#include <functional>
#include <memory>
#include <optional>

#include "cycbar/errors.hpp"

namespace cycbar::enriched {

namespace {

using polyhedra::CyclicCell;
using polyhedra::KCubical;
using polyhedra::KPoset;
using polyhedra::PlanarCell;
using polyhedra::SimplexFace;
using polyhedra::WCubical;

// Generators identified up to sign, or killed.
class SignedClasses {
 public:
  SignedClasses(std::size_t n, const exactalg::GroundRing& ring) : parent_(n), parity_(n, 1), killed_(n, false), ring_(ring) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  // (root, s) with a = s·root.
  std::pair<std::size_t, int> find(std::size_t a) {
    int s = 1;
    std::size_t r = a;
    while (parent_[r] != r) {
      s *= parity_[r];
      r = parent_[r];
    }
    // Path compression keeps the parities relative to the root.
    std::size_t cur = a;
    int cs = s;
    while (parent_[cur] != cur) {
      const std::size_t next = parent_[cur];
      const int ns = cs * parity_[cur];
      parent_[cur] = r;
      parity_[cur] = cs;
      cur = next;
      cs = ns;
    }
    return {r, s};
  }

  // a = sign·b
  void identify(std::size_t a, std::size_t b, int sign) {
    auto [ra, sa] = find(a);
    auto [rb, sb] = find(b);
    const int rel = sa * sign * sb;  // ra = rel·rb
    if (ra == rb) {
      if (rel == -1 && !(ring_.is_field() && ring_.modulus() == 2)) {
        if (!ring_.is_field()) throw ComputationError("coequalizer identifies a generator with its negative");
        killed_[ra] = true;
      }
      return;
    }
    parent_[ra] = rb;
    parity_[ra] = rel;
    if (killed_[ra]) killed_[rb] = true;
  }

  void kill(std::size_t a) { killed_[find(a).first] = true; }
  bool killed(std::size_t a) { return killed_[find(a).first]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<bool> killed_;
  exactalg::GroundRing ring_;
};

bool injective(const finord::DeltaMap& g) {
  for (std::size_t i = 1; i < g.table.size(); ++i)
    if (g.table[i] == g.table[i - 1]) return false;
  return true;
}

// Coefficient model on one object: cells numbered consecutively by
// dimension, with boundaries.
struct ObjectCells {
  std::vector<int> dims;
  std::vector<std::vector<std::pair<std::size_t, int>>> boundary;
};

template <class Model>
ObjectCells cubical_cells(const Model& m) {
  ObjectCells out;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (int d = 0; d <= m.dimension(); ++d) {
    offset.push_back(total);
    total += m.cells(d).size();
  }
  for (int d = 0; d <= m.dimension(); ++d)
    for (const auto& c : m.cells(d)) {
      out.dims.push_back(d);
      std::vector<std::pair<std::size_t, int>> b;
      for (const auto& [face, sign] : Model::boundary(c))
        b.emplace_back(offset[static_cast<std::size_t>(d - 1)] + m.index_of(face), sign);
      out.boundary.push_back(std::move(b));
    }
  return out;
}

template <class Model>
std::size_t cubical_id(const Model& m, const typename Model::Cell& c) {
  std::size_t off = 0;
  for (int d = 0; d < c.dimension(); ++d) off += m.cells(d).size();
  return off + m.index_of(c);
}

ObjectCells simplex_cells(std::uint32_t n, std::map<SimplexFace, std::size_t>& index) {
  ObjectCells out;
  const auto faces = polyhedra::simplex_faces(n);
  for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = i;
  for (const auto& f : faces) {
    out.dims.push_back(f.dimension());
    std::vector<std::pair<std::size_t, int>> b;
    if (f.dimension() > 0)
      for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        SimplexFace g = f;
        g.vertices.erase(g.vertices.begin() + static_cast<std::ptrdiff_t>(i));
        b.emplace_back(index.at(g), i % 2 == 0 ? 1 : -1);
      }
    out.boundary.push_back(std::move(b));
  }
  return out;
}

// All tuples with one cell of K(size_t) per fiber, with their augmentation.
std::vector<std::pair<std::vector<PlanarCell>, bool>> fiber_cells(const NCMorphism& f,
                                                                  std::map<std::uint32_t, KCubical>& cache) {
  std::vector<const KCubical*> models;
  for (const auto& fib : f.fibers()) {
    const auto size = static_cast<std::uint32_t>(fib.size());
    auto it = cache.find(size);
    if (it == cache.end()) it = cache.emplace(size, KCubical(size)).first;
    models.push_back(&it->second);
  }
  std::vector<std::pair<std::vector<PlanarCell>, bool>> out;
  std::vector<PlanarCell> cur;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t t, bool vertex) {
    if (t == models.size()) {
      out.emplace_back(cur, vertex);
      return;
    }
    for (int d = 0; d <= models[t]->dimension(); ++d)
      for (const auto& c : models[t]->cells(d)) {
        cur.push_back(c);
        rec(t + 1, vertex && d == 0);
        cur.pop_back();
      }
  };
  rec(0, true);
  return out;
}

}  // namespace

Category category_of(Indexing i) {
  return i == Indexing::zero_one_delta ? Category::zero_one_delta : Category::zero_delta_c;
}

Indexing parse_indexing(const std::string& s) {
  if (s == "01delta") return Indexing::zero_one_delta;
  if (s == "0deltaC") return Indexing::zero_delta_c;
  throw RangeError("unknown indexing '" + s + "' (expected 01delta or 0deltaC)");
}

Coefficients parse_coefficients(const std::string& s) {
  if (s == "K") return Coefficients::associahedra;
  if (s == "W") return Coefficients::cyclohedra;
  if (s == "simplex") return Coefficients::simplices;
  throw RangeError("unknown coefficient module '" + s + "' (expected K, W or simplex)");
}

FinOrdSet standard_object(Indexing i, std::uint32_t n) {
  return i == Indexing::zero_one_delta ? FinOrdSet::standard(finord::OrderKind::linear_min_max, n + 2)
                                       : FinOrdSet::standard(finord::OrderKind::cyclic, n + 1);
}

std::vector<HomComponent> enriched_hom(const FinOrdSet& s, const FinOrdSet& t, Category c) {
  std::map<std::uint32_t, std::unique_ptr<KPoset>> posets;
  auto poset = [&](std::uint32_t size) -> const KPoset& {
    auto& p = posets[size];
    if (!p) p = std::make_unique<KPoset>(size);
    return *p;
  };
  std::vector<HomComponent> out;
  for (auto& f : finord::hom_set(s, t, c)) {
    HomComponent comp;
    comp.faces = 1;
    comp.vertices = 1;
    for (const auto& fib : f.fibers()) {
      const auto size = static_cast<std::uint32_t>(fib.size());
      comp.fiber_sizes.push_back(size);
      comp.dimension += size > 2 ? static_cast<int>(size) - 2 : 0;
      comp.faces *= poset(size).size();
      comp.vertices *= poset(size).faces(0).size();
    }
    comp.f = std::move(f);
    out.push_back(std::move(comp));
  }
  return out;
}

ComposedFace enriched_compose(const NCMorphism& g, const std::vector<PlanarTree>& g_faces, const NCMorphism& f,
                              const std::vector<PlanarTree>& f_faces) {
  if (!(f.target() == g.source())) throw CompositionError("target of f is not the source of g");
  auto check = [](const NCMorphism& m, const std::vector<PlanarTree>& faces, const char* which) {
    if (faces.size() != m.target().size())
      throw ValidationError(std::string("need one face per target element of ") + which);
    for (std::size_t t = 0; t < faces.size(); ++t)
      if (faces[t].leaves() != m.fiber(static_cast<std::uint32_t>(t)).size())
        throw ValidationError(std::string("face over ") + std::to_string(t) + " of " + which +
                              " does not match the fiber size");
  };
  check(g, g_faces, "g");
  check(f, f_faces, "f");
  return {finord::compose(g, f), polyhedra::compose_fiber_faces(g, g_faces, f, f_faces)};
}

std::vector<HomologyGroup> Realization::homology() const {
  auto h = complex.homology();
  h.resize(max_degree + 1);
  return h;
}

Realization realize(const SimplicialSet& x, Indexing indexing, Coefficients coefficients, std::size_t max_degree,
                    const exactalg::GroundRing& ring) {
  if (coefficients == Coefficients::associahedra && indexing != Indexing::zero_one_delta)
    throw RangeError("associahedra act over 01delta only");
  if (coefficients == Coefficients::cyclohedra && indexing != Indexing::zero_delta_c)
    throw RangeError("cyclohedra act over 0deltaC only");
  const auto top = static_cast<std::uint32_t>(max_degree + 1);
  const Category cat = category_of(indexing);

  // Per object: coefficient cells and simplices.
  std::vector<std::unique_ptr<KCubical>> kmodels;
  std::vector<std::unique_ptr<WCubical>> wmodels;
  std::vector<std::map<SimplexFace, std::size_t>> sindex(top + 1);
  std::vector<ObjectCells> cells;
  std::vector<std::vector<Simplex>> xs;
  std::vector<std::map<Simplex, std::size_t>> xindex(top + 1);
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::uint32_t n = 0; n <= top; ++n) {
    switch (coefficients) {
      case Coefficients::associahedra:
        kmodels.push_back(std::make_unique<KCubical>(n + 2));
        cells.push_back(cubical_cells(*kmodels.back()));
        break;
      case Coefficients::cyclohedra:
        wmodels.push_back(std::make_unique<WCubical>(n + 1));
        cells.push_back(cubical_cells(*wmodels.back()));
        break;
      case Coefficients::simplices:
        cells.push_back(simplex_cells(n, sindex[n]));
        break;
    }
    xs.push_back(x.simplices(n));
    for (std::size_t i = 0; i < xs[n].size(); ++i) xindex[n][xs[n][i]] = i;
    offset.push_back(total);
    total += cells[n].dims.size() * xs[n].size();
  }
  auto gen = [&](std::uint32_t n, std::size_t cell, std::size_t xi) { return offset[n] + cell * xs[n].size() + xi; };

  SignedClasses classes(total, ring);
  std::size_t relations = 0;
  std::map<std::uint32_t, KCubical> fiber_models;
  for (std::uint32_t ns = 0; ns <= top; ++ns)
    for (std::uint32_t nt = 0; nt <= top; ++nt) {
      const auto hom = finord::hom_set(standard_object(indexing, ns), standard_object(indexing, nt), cat);
      const std::size_t nx = xs[ns].size();
      for (const auto& f : hom) {
        const finord::DeltaMap g = finord::iso_to_delta_op(f);
        std::vector<std::size_t> fx(nx);
        for (std::size_t i = 0; i < nx; ++i) fx[i] = xindex[nt].at(x.apply(g, xs[ns][i]));
        // lhs = sign·(image cell in R(S)), or nullopt; vertex = ε(p).
        auto relate = [&](std::size_t c, std::optional<std::pair<std::size_t, int>> lhs, bool vertex) {
          for (std::size_t i = 0; i < nx; ++i) {
            ++relations;
            if (lhs && vertex)
              classes.identify(gen(ns, lhs->first, i), gen(nt, c, fx[i]), lhs->second);
            else if (lhs)
              classes.kill(gen(ns, lhs->first, i));
            else if (vertex)
              classes.kill(gen(nt, c, fx[i]));
          }
        };
        if (coefficients == Coefficients::simplices) {
          const auto faces = polyhedra::simplex_faces(nt);
          for (std::size_t c = 0; c < faces.size(); ++c) {
            const SimplexFace img = polyhedra::simplex_map(g, faces[c]);
            if (img.dimension() == faces[c].dimension())
              relate(c, std::make_pair(sindex[ns].at(img), 1), true);
            else
              relate(c, std::nullopt, true);
          }
          continue;
        }
        const auto ps = fiber_cells(f, fiber_models);
        auto run = [&](const auto& target_model, const auto& source_model) {
          std::size_t c = 0;
          for (int d = 0; d <= target_model.dimension(); ++d)
            for (const auto& cell : target_model.cells(d)) {
              for (const auto& [p, vertex] : ps) {
                const auto mu = polyhedra::module_action(f, cell, p);
                if (mu)
                  relate(c, std::make_pair(cubical_id(source_model, mu->cell), mu->sign), vertex);
                else
                  relate(c, std::nullopt, vertex);
              }
              ++c;
            }
        };
        if (coefficients == Coefficients::associahedra)
          run(*kmodels[nt], *kmodels[ns]);
        else
          run(*wmodels[nt], *wmodels[ns]);
      }
    }

  // Quotient basis: one surviving root per class, grouped by degree.
  std::size_t top_dim = 0;
  for (const auto& oc : cells)
    for (int d : oc.dims) top_dim = std::max(top_dim, static_cast<std::size_t>(d));
  std::vector<std::size_t> basis_index(total, SIZE_MAX);
  std::vector<std::size_t> ranks(top_dim + 1, 0);
  std::vector<std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>> reps(top_dim + 1);
  for (std::uint32_t n = 0; n <= top; ++n)
    for (std::size_t c = 0; c < cells[n].dims.size(); ++c)
      for (std::size_t i = 0; i < xs[n].size(); ++i) {
        const std::size_t id = gen(n, c, i);
        auto [root, sign] = classes.find(id);
        if (root != id || classes.killed(id)) continue;
        const auto d = static_cast<std::size_t>(cells[n].dims[c]);
        basis_index[id] = ranks[d]++;
        reps[d].emplace_back(n, c, i);
      }
  std::vector<exactalg::SparseMatrix> boundaries;
  for (std::size_t d = 1; d <= top_dim; ++d) {
    exactalg::SparseMatrix b(ranks[d - 1], ranks[d]);
    for (std::size_t col = 0; col < reps[d].size(); ++col) {
      const auto [n, c, i] = reps[d][col];
      for (const auto& [face, sign] : cells[n].boundary[c]) {
        const std::size_t id = gen(n, face, i);
        if (classes.killed(id)) continue;
        auto [root, s] = classes.find(id);
        b.add(basis_index[root], col, sign * s);
      }
    }
    boundaries.push_back(std::move(b));
  }
  Realization out;
  out.max_degree = max_degree;
  out.generators = total;
  out.relations = relations;
  out.complex = ChainComplex::homological(ring, std::move(ranks), std::move(boundaries));
  return out;
}

std::vector<HomologyGroup> ordinary_homology(const SimplicialSet& x, std::size_t max_degree,
                                             const exactalg::GroundRing& ring) {
  auto h = x.normalized_chains(ring).homology();
  h.resize(max_degree + 1);
  return h;
}

std::vector<CensusRow> representable_census(Indexing indexing, std::uint32_t n, std::uint32_t max_degree) {
  const Category cat = category_of(indexing);
  const FinOrdSet s = standard_object(indexing, n);
  std::vector<CensusRow> out;
  for (std::uint32_t k = 0; k <= max_degree; ++k) {
    CensusRow row;
    row.degree = k;
    for (const auto& comp : enriched_hom(s, standard_object(indexing, k), cat)) {
      ++row.components;
      if (injective(finord::iso_to_delta_op(comp.f))) ++row.nondegenerate;
      row.faces += comp.faces;
      row.vertices += comp.vertices;
      ++row.shapes[comp.fiber_sizes];
    }
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json to_json(const CensusRow& r) {
  nlohmann::json shapes = nlohmann::json::array();
  for (const auto& [sizes, count] : r.shapes) shapes.push_back({{"fibers", sizes}, {"count", count}});
  return {{"degree", r.degree},
          {"components", r.components},
          {"nondegenerate", r.nondegenerate},
          {"faces", r.faces},
          {"vertices", r.vertices},
          {"shapes", shapes}};
}

}  // namespace cycbar::enriched
