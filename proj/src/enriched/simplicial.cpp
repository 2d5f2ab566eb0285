#include "cycbar/enriched/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cycbar/errors.hpp"

namespace cycbar::enriched {

namespace {

using finord::DeltaMap;

std::vector<std::uint32_t> identity_table(std::uint32_t n) {
  std::vector<std::uint32_t> t(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) t[i] = i;
  return t;
}

bool is_surjection_onto(const std::vector<std::uint32_t>& s, std::uint32_t k) {
  if (s.empty() || s.front() != 0 || s.back() != k) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] != s[i - 1] && s[i] != s[i - 1] + 1) return false;
  return true;
}

DeltaMap coface_map(std::uint32_t n, std::uint32_t i) {
  // δ_i: [n-1] → [n] skipping i
  DeltaMap g{n - 1, n, {}};
  for (std::uint32_t x = 0; x < n; ++x) g.table.push_back(x < i ? x : x + 1);
  return g;
}

DeltaMap codegeneracy_map(std::uint32_t n, std::uint32_t i) {
  // σ_i: [n+1] → [n] repeating i
  DeltaMap g{n + 1, n, {}};
  for (std::uint32_t x = 0; x <= n + 1; ++x) g.table.push_back(x <= i ? x : x - 1);
  return g;
}

std::string subset_name(const std::vector<std::uint32_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Nondegenerate simplices of Δ[n] (all subsets when `proper` is false),
// by dimension, with faces.
SimplicialSet simplex_like(std::uint32_t n, bool proper) {
  std::vector<std::vector<std::vector<std::uint32_t>>> subsets;
  const std::uint32_t top = proper ? n - 1 : n;
  for (std::uint32_t k = 0; k <= top; ++k) {
    std::vector<std::vector<std::uint32_t>> level;
    std::vector<bool> pick(n + 1, false);
    std::fill(pick.begin(), pick.begin() + k + 1, true);
    do {
      std::vector<std::uint32_t> s;
      for (std::uint32_t i = 0; i <= n; ++i)
        if (pick[i]) s.push_back(i);
      level.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(level.begin(), level.end());
    subsets.push_back(level);
  }
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<Simplex>>> faces(subsets.size());
  for (std::uint32_t k = 0; k < subsets.size(); ++k) {
    names.emplace_back();
    for (const auto& s : subsets[k]) {
      names.back().push_back(subset_name(s));
      if (k == 0) continue;
      std::vector<Simplex> fs;
      for (std::uint32_t i = 0; i <= k; ++i) {
        auto t = s;
        t.erase(t.begin() + i);
        const auto& lower = subsets[k - 1];
        const auto idx = static_cast<std::uint32_t>(std::lower_bound(lower.begin(), lower.end(), t) - lower.begin());
        fs.push_back(SimplicialSet::nondegenerate_simplex(k - 1, idx));
      }
      faces[k].push_back(fs);
    }
  }
  return SimplicialSet(std::move(names), std::move(faces));
}

}  // namespace

SimplicialSet::SimplicialSet(std::vector<std::vector<std::string>> names,
                             std::vector<std::vector<std::vector<Simplex>>> faces)
    : names_(std::move(names)), faces_(std::move(faces)) {
  if (names_.empty() || names_[0].empty()) throw ValidationError("a simplicial set needs at least one vertex");
  while (names_.size() > 1 && names_.back().empty()) names_.pop_back();
  faces_.resize(names_.size());
  if (!faces_[0].empty()) throw ValidationError("vertices have no faces");
  for (std::uint32_t k = 1; k < names_.size(); ++k) {
    if (faces_[k].size() != names_[k].size())
      throw ValidationError("faces missing for some " + std::to_string(k) + "-simplices");
    for (std::uint32_t y = 0; y < names_[k].size(); ++y) {
      const auto& fs = faces_[k][y];
      if (fs.size() != k + 1) throw ValidationError("simplex '" + names_[k][y] + "' needs " + std::to_string(k + 1) + " faces");
      for (const auto& f : fs) {
        if (f.degeneracy.size() != k || f.k >= k || f.index >= nondegenerate(f.k) ||
            !is_surjection_onto(f.degeneracy, f.k))
          throw ValidationError("malformed face of simplex '" + names_[k][y] + "'");
      }
    }
  }
  for (std::uint32_t k = 2; k < names_.size(); ++k)
    for (std::uint32_t y = 0; y < names_[k].size(); ++y) {
      const Simplex x = nondegenerate_simplex(k, y);
      for (std::uint32_t j = 1; j <= k; ++j)
        for (std::uint32_t i = 0; i < j; ++i)
          if (face(i, face(j, x)) != face(j - 1, face(i, x)))
            throw ValidationError("d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                                  std::to_string(j - 1) + " d_" + std::to_string(i) + " on simplex '" + names_[k][y] +
                                  "'");
    }
}

Simplex SimplicialSet::nondegenerate_simplex(std::uint32_t k, std::uint32_t index) {
  return Simplex{identity_table(k), k, index};
}

SimplicialSet SimplicialSet::point() { return SimplicialSet({{"*"}}, {}); }

SimplicialSet SimplicialSet::circle() { return collapsed_simplex(1); }

SimplicialSet SimplicialSet::standard_simplex(std::uint32_t n) { return simplex_like(n, false); }

SimplicialSet SimplicialSet::boundary_sphere(std::uint32_t n) { return simplex_like(n + 1, true); }

SimplicialSet SimplicialSet::collapsed_simplex(std::uint32_t n) {
  if (n == 0) return point();
  std::vector<std::vector<std::string>> names(n + 1);
  names[0] = {"*"};
  names[n] = {n == 1 ? "e" : "s"};
  std::vector<std::vector<std::vector<Simplex>>> faces(n + 1);
  faces[n] = {std::vector<Simplex>(n + 1, Simplex{std::vector<std::uint32_t>(n, 0), 0, 0})};
  return SimplicialSet(std::move(names), std::move(faces));
}

std::string SimplicialSet::describe(const Simplex& x) const {
  const std::string& base = name(x.k, x.index);
  if (!x.is_degenerate()) return base;
  std::string s = "s";
  for (std::size_t i = 0; i < x.degeneracy.size(); ++i) s += (i ? "," : "[") + std::to_string(x.degeneracy[i]);
  return s + "](" + base + ")";
}

std::vector<Simplex> SimplicialSet::simplices(std::uint32_t n) const {
  std::vector<Simplex> out;
  for (std::uint32_t k = 0; k <= std::min(n, dimension()); ++k) {
    if (nondegenerate(k) == 0) continue;
    // Surjections [n] ↠ [k]: choose the k steps among the n gaps.
    std::vector<bool> step(n, false);
    std::fill(step.begin(), step.begin() + k, true);
    std::vector<std::vector<std::uint32_t>> tables;
    do {
      std::vector<std::uint32_t> t{0};
      for (std::uint32_t i = 0; i < n; ++i) t.push_back(t.back() + (step[i] ? 1 : 0));
      tables.push_back(t);
    } while (std::prev_permutation(step.begin(), step.end()));
    std::sort(tables.begin(), tables.end());
    for (const auto& t : tables)
      for (std::uint32_t y = 0; y < nondegenerate(k); ++y) out.push_back(Simplex{t, k, y});
  }
  return out;
}

Simplex SimplicialSet::apply(const DeltaMap& g, const Simplex& x) const {
  if (g.target_n != x.dimension()) throw RangeError("map does not end at the simplex dimension");
  std::vector<std::uint32_t> h(g.source_n + 1);
  for (std::uint32_t i = 0; i <= g.source_n; ++i) h[i] = x.degeneracy[g.table[i]];
  std::uint32_t k = x.k, index = x.index;
  for (;;) {
    std::vector<bool> hit(k + 1, false);
    for (auto v : h) hit[v] = true;
    std::uint32_t missing = k + 1;
    for (std::uint32_t j = k + 1; j-- > 0;)
      if (!hit[j]) {
        missing = j;
        break;
      }
    if (missing == k + 1) return Simplex{h, k, index};
    const Simplex& d = faces_[k][index][missing];
    for (auto& v : h) v = d.degeneracy[v > missing ? v - 1 : v];
    k = d.k;
    index = d.index;
  }
}

Simplex SimplicialSet::face(std::uint32_t i, const Simplex& x) const {
  const std::uint32_t n = x.dimension();
  if (n == 0 || i > n) throw RangeError("face index out of range");
  return apply(coface_map(n, i), x);
}

Simplex SimplicialSet::degeneracy(std::uint32_t i, const Simplex& x) const {
  const std::uint32_t n = x.dimension();
  if (i > n) throw RangeError("degeneracy index out of range");
  return apply(codegeneracy_map(n, i), x);
}

exactalg::ChainComplex SimplicialSet::normalized_chains(const exactalg::GroundRing& ring) const {
  std::vector<std::size_t> ranks;
  std::vector<exactalg::SparseMatrix> boundaries;
  for (std::uint32_t k = 0; k <= dimension(); ++k) {
    ranks.push_back(nondegenerate(k));
    if (k == 0) continue;
    exactalg::SparseMatrix b(nondegenerate(k - 1), nondegenerate(k));
    for (std::uint32_t y = 0; y < nondegenerate(k); ++y)
      for (std::uint32_t i = 0; i <= k; ++i) {
        const Simplex& f = faces_[k][y][i];
        if (!f.is_degenerate()) b.add(f.index, y, i % 2 == 0 ? 1 : -1);
      }
    boundaries.push_back(std::move(b));
  }
  return exactalg::ChainComplex::homological(ring, std::move(ranks), std::move(boundaries));
}

exactalg::ChainComplex SimplicialSet::moore_complex(std::uint32_t top, const exactalg::GroundRing& ring) const {
  std::vector<std::vector<Simplex>> levels;
  std::vector<std::map<Simplex, std::size_t>> index;
  for (std::uint32_t n = 0; n <= top; ++n) {
    levels.push_back(simplices(n));
    index.emplace_back();
    for (std::size_t i = 0; i < levels.back().size(); ++i) index.back()[levels.back()[i]] = i;
  }
  std::vector<std::size_t> ranks;
  std::vector<exactalg::SparseMatrix> boundaries;
  for (std::uint32_t n = 0; n <= top; ++n) {
    ranks.push_back(levels[n].size());
    if (n == 0) continue;
    exactalg::SparseMatrix b(levels[n - 1].size(), levels[n].size());
    for (std::size_t c = 0; c < levels[n].size(); ++c)
      for (std::uint32_t i = 0; i <= n; ++i)
        b.add(index[n - 1].at(face(i, levels[n][c])), c, i % 2 == 0 ? 1 : -1);
    boundaries.push_back(std::move(b));
  }
  return exactalg::ChainComplex::homological(ring, std::move(ranks), std::move(boundaries));
}

SimplicialSet simplicial_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("simplices")) throw ValidationError("simplicial set JSON needs 'simplices'");
  std::vector<std::vector<std::string>> names;
  try {
    names = j.at("simplices").get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("'simplices' must list names by dimension");
  }
  std::map<std::string, std::pair<std::uint32_t, std::uint32_t>> where;
  for (std::uint32_t k = 0; k < names.size(); ++k)
    for (std::uint32_t i = 0; i < names[k].size(); ++i)
      if (!where.emplace(names[k][i], std::make_pair(k, i)).second)
        throw ValidationError("duplicate simplex name '" + names[k][i] + "'");
  const nlohmann::json faces_json = j.value("faces", nlohmann::json::object());
  std::vector<std::vector<std::vector<Simplex>>> faces(names.size());
  for (std::uint32_t k = 1; k < names.size(); ++k)
    for (const auto& nm : names[k]) {
      if (!faces_json.contains(nm)) throw ValidationError("no faces given for simplex '" + nm + "'");
      std::vector<Simplex> fs;
      for (const auto& f : faces_json.at(nm)) {
        std::string target;
        std::vector<std::uint32_t> degen;
        if (f.is_string()) {
          target = f.get<std::string>();
        } else if (f.is_object() && f.contains("simplex")) {
          target = f.at("simplex").get<std::string>();
          if (f.contains("degeneracy")) degen = f.at("degeneracy").get<std::vector<std::uint32_t>>();
        } else {
          throw ValidationError("bad face entry for simplex '" + nm + "'");
        }
        auto it = where.find(target);
        if (it == where.end()) throw ValidationError("unknown simplex '" + target + "'");
        if (degen.empty()) degen = identity_table(it->second.first);
        fs.push_back(Simplex{degen, it->second.first, it->second.second});
      }
      faces[k].push_back(fs);
    }
  return SimplicialSet(std::move(names), std::move(faces));
}

nlohmann::json simplicial_set_to_json(const SimplicialSet& x) {
  nlohmann::json names = nlohmann::json::array();
  nlohmann::json faces = nlohmann::json::object();
  for (std::uint32_t k = 0; k <= x.dimension(); ++k) {
    nlohmann::json level = nlohmann::json::array();
    for (std::uint32_t i = 0; i < x.nondegenerate(k); ++i) {
      level.push_back(x.name(k, i));
      if (k == 0) continue;
      nlohmann::json fs = nlohmann::json::array();
      for (std::uint32_t f = 0; f <= k; ++f) {
        const Simplex d = x.face(f, SimplicialSet::nondegenerate_simplex(k, i));
        if (d.is_degenerate())
          fs.push_back({{"simplex", x.name(d.k, d.index)}, {"degeneracy", d.degeneracy}});
        else
          fs.push_back(x.name(d.k, d.index));
      }
      faces[x.name(k, i)] = fs;
    }
    names.push_back(level);
  }
  return {{"simplices", names}, {"faces", faces}};
}

}  // namespace cycbar::enriched
