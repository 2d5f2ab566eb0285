#include "cycbar/finord/finord.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "cycbar/errors.hpp"

namespace cycbar::finord {
namespace {

constexpr std::array<std::pair<OrderKind, std::string_view>, 5> kKindNames{{
    {OrderKind::linear, "linear"},
    {OrderKind::cyclic, "cyclic-with-basepoint"},
    {OrderKind::linear_min, "linear-with-min"},
    {OrderKind::linear_max, "linear-with-max"},
    {OrderKind::linear_min_max, "linear-with-min-max"},
}};

constexpr std::array<std::pair<Category, std::string_view>, 9> kCategoryNames{{
    {Category::delta_sigma, "delta-sigma"},
    {Category::delta, "delta"},
    {Category::delta_plus, "delta-plus"},
    {Category::zero_delta, "0delta"},
    {Category::one_delta, "1delta"},
    {Category::zero_one_delta, "01delta"},
    {Category::delta_c, "deltaC"},
    {Category::delta_c_plus, "deltaC-plus"},
    {Category::zero_delta_c, "0deltaC"},
}};

bool is_cyclic(Category c) {
  return c == Category::delta_c || c == Category::delta_c_plus || c == Category::zero_delta_c;
}

bool allows_empty(Category c) {
  return c == Category::delta_sigma || c == Category::delta_plus || c == Category::delta_c_plus;
}

// Calls visit(v) for every nondecreasing v of length len with values < bound.
void for_each_monotone(std::size_t len, std::uint32_t bound,
                       const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> v(len, 0);
  if (len == 0) {
    visit(v);
    return;
  }
  if (bound == 0) return;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t lo) {
    if (pos == len) {
      visit(v);
      return;
    }
    for (std::uint32_t x = lo; x < bound; ++x) {
      v[pos] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, 0);
}

// Fibers of a sequence assignment: seq[k] goes to values[k], fibers listed in
// sequence order.
NCMorphism from_sequence(const FinOrdSet& s, const FinOrdSet& t, const std::vector<std::uint32_t>& seq,
                         const std::vector<std::uint32_t>& values) {
  std::vector<std::uint32_t> map(s.size());
  std::vector<std::vector<std::uint32_t>> fibers(t.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    map[seq[k]] = values[k];
    fibers[values[k]].push_back(seq[k]);
  }
  return NCMorphism(s, t, std::move(map), std::move(fibers));
}

}  // namespace

std::string_view to_string(OrderKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::string_view to_string(Category c) {
  for (const auto& [cat, name] : kCategoryNames)
    if (cat == c) return name;
  return "?";
}

OrderKind parse_order_kind(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  throw ValidationError("unknown order kind '" + std::string(s) + "'");
}

Category parse_category(std::string_view s) {
  for (const auto& [cat, name] : kCategoryNames)
    if (name == s) return cat;
  throw ValidationError("unknown category '" + std::string(s) + "'");
}

OrderKind order_kind_of(Category c) {
  switch (c) {
    case Category::delta_sigma:
    case Category::delta:
    case Category::delta_plus:
      return OrderKind::linear;
    case Category::zero_delta:
      return OrderKind::linear_min;
    case Category::one_delta:
      return OrderKind::linear_max;
    case Category::zero_one_delta:
      return OrderKind::linear_min_max;
    case Category::delta_c:
    case Category::delta_c_plus:
    case Category::zero_delta_c:
      return OrderKind::cyclic;
  }
  return OrderKind::linear;
}

FinOrdSet::FinOrdSet(std::vector<std::string> labels, OrderKind kind) : labels_(std::move(labels)), kind_(kind) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw ValidationError("duplicate element label '" + l + "'");
  const bool has_min = kind == OrderKind::linear_min || kind == OrderKind::linear_min_max;
  const bool has_max = kind == OrderKind::linear_max || kind == OrderKind::linear_min_max;
  if (has_min && (labels_.empty() || labels_.front() != "0"))
    throw ValidationError("a set with a minimum must list \"0\" first");
  if (has_max && (labels_.empty() || labels_.back() != "1"))
    throw ValidationError("a set with a maximum must list \"1\" last");
  if (kind == OrderKind::linear_min_max && labels_.size() < 2)
    throw ValidationError("a set with distinct minimum and maximum needs two elements");
}

FinOrdSet FinOrdSet::standard(OrderKind kind, std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  switch (kind) {
    case OrderKind::linear:
      for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
      break;
    case OrderKind::cyclic:
    case OrderKind::linear_min:
      for (std::size_t i = 0; i < size; ++i) labels.push_back(i == 0 ? "0" : "x" + std::to_string(i));
      break;
    case OrderKind::linear_max:
      for (std::size_t i = 0; i < size; ++i) labels.push_back(i + 1 == size ? "1" : "x" + std::to_string(i + 1));
      break;
    case OrderKind::linear_min_max:
      if (size < 2) throw RangeError("a set with minimum and maximum needs two elements");
      for (std::size_t i = 0; i < size; ++i)
        labels.push_back(i == 0 ? "0" : (i + 1 == size ? "1" : "x" + std::to_string(i)));
      break;
  }
  return FinOrdSet(std::move(labels), kind);
}

std::size_t FinOrdSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw ValidationError("no element labelled '" + std::string(label) + "'");
}

void FinOrdSet::check_object(Category c) const {
  if (kind_ != order_kind_of(c))
    throw CategoryError("object of kind " + std::string(to_string(kind_)) + " is not in " + std::string(to_string(c)));
  if (labels_.empty() && !allows_empty(c))
    throw CategoryError("the empty set is not an object of " + std::string(to_string(c)));
}

NCMorphism::NCMorphism(FinOrdSet source, FinOrdSet target, std::vector<std::uint32_t> map,
                       std::vector<std::vector<std::uint32_t>> fibers)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)), fibers_(std::move(fibers)) {
  if (map_.size() != source_.size()) throw ValidationError("map table length differs from the source size");
  if (fibers_.size() != target_.size()) throw ValidationError("need one fiber order per target element");
  for (auto t : map_)
    if (t >= target_.size()) throw ValidationError("map value outside the target");
  std::vector<bool> seen(source_.size(), false);
  for (std::uint32_t t = 0; t < fibers_.size(); ++t)
    for (auto s : fibers_[t]) {
      if (s >= source_.size() || seen[s]) throw ValidationError("fiber orders do not partition the source");
      if (map_[s] != t) throw ValidationError("fiber order over " + target_.label(t) + " lists an element mapping elsewhere");
      seen[s] = true;
    }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ValidationError("an element of the source is missing from every fiber order");
}

NCMorphism NCMorphism::from_map(FinOrdSet source, FinOrdSet target, std::vector<std::uint32_t> map) {
  std::vector<std::vector<std::uint32_t>> fibers(target.size());
  for (std::uint32_t s = 0; s < map.size(); ++s) {
    if (map[s] >= target.size()) throw ValidationError("map value outside the target");
    fibers[map[s]].push_back(s);
  }
  return NCMorphism(std::move(source), std::move(target), std::move(map), std::move(fibers));
}

NCMorphism NCMorphism::identity(const FinOrdSet& s) {
  std::vector<std::uint32_t> map(s.size());
  std::iota(map.begin(), map.end(), 0u);
  return from_map(s, s, std::move(map));
}

std::vector<std::uint32_t> NCMorphism::concatenated_fibers() const {
  std::vector<std::uint32_t> out;
  out.reserve(map_.size());
  for (const auto& f : fibers_) out.insert(out.end(), f.begin(), f.end());
  return out;
}

void NCMorphism::check_morphism(Category c) const {
  source_.check_object(c);
  target_.check_object(c);
  const std::string where = " in " + std::string(to_string(c));
  const std::size_t n = source_.size();
  if (c == Category::delta_sigma) return;
  if (is_cyclic(c)) {
    const auto seq = concatenated_fibers();
    for (std::size_t k = 0; k < n; ++k)
      if (seq[k] != (seq[0] + k) % n) throw CategoryError("fibers do not concatenate to a rotation of the source" + where);
    if (c == Category::zero_delta_c && map_[0] != 0) throw CategoryError("basepoint not preserved" + where);
    return;
  }
  for (std::size_t s = 1; s < n; ++s)
    if (map_[s] < map_[s - 1]) throw CategoryError("map is not order preserving" + where);
  for (const auto& f : fibers_)
    if (!std::is_sorted(f.begin(), f.end())) throw CategoryError("fiber order disagrees with the source order" + where);
  const bool keep_min = c == Category::zero_delta || c == Category::zero_one_delta;
  const bool keep_max = c == Category::one_delta || c == Category::zero_one_delta;
  if (keep_min && map_.front() != 0) throw CategoryError("minimum not preserved" + where);
  if (keep_max && map_.back() + 1 != target_.size()) throw CategoryError("maximum not preserved" + where);
}

bool NCMorphism::belongs_to(Category c) const {
  try {
    check_morphism(c);
    return true;
  } catch (const CategoryError&) {
    return false;
  }
}

bool lex_less(const NCMorphism& a, const NCMorphism& b) {
  if (a.map_ != b.map_) return a.map_ < b.map_;
  return a.fibers_ < b.fibers_;
}

NCMorphism compose(const NCMorphism& g, const NCMorphism& f) {
  if (!(f.target() == g.source())) throw CompositionError("target of f is not the source of g");
  std::vector<std::uint32_t> map(f.source().size());
  for (std::uint32_t s = 0; s < map.size(); ++s) map[s] = g(f(s));
  std::vector<std::vector<std::uint32_t>> fibers(g.target().size());
  for (std::uint32_t u = 0; u < fibers.size(); ++u)
    for (auto t : g.fiber(u)) fibers[u].insert(fibers[u].end(), f.fiber(t).begin(), f.fiber(t).end());
  return NCMorphism(f.source(), g.target(), std::move(map), std::move(fibers));
}

std::vector<NCMorphism> hom_set(const FinOrdSet& s, const FinOrdSet& t, Category c) {
  s.check_object(c);
  t.check_object(c);
  const std::size_t n = s.size();
  const auto bound = static_cast<std::uint32_t>(t.size());
  std::vector<NCMorphism> out;
  if (c == Category::delta_sigma) {
    // Every map, then every ordering of each fiber.
    std::vector<std::uint32_t> map(n, 0);
    std::function<void(std::size_t)> maps = [&](std::size_t pos) {
      if (pos == n) {
        auto base = NCMorphism::from_map(s, t, map).fibers();
        std::function<void(std::size_t)> orders = [&](std::size_t ti) {
          if (ti == base.size()) {
            out.emplace_back(s, t, map, base);
            return;
          }
          std::sort(base[ti].begin(), base[ti].end());
          do orders(ti + 1);
          while (std::next_permutation(base[ti].begin(), base[ti].end()));
        };
        orders(0);
        return;
      }
      for (std::uint32_t v = 0; v < bound; ++v) {
        map[pos] = v;
        maps(pos + 1);
      }
    };
    maps(0);
  } else if (is_cyclic(c)) {
    if (n == 0) {
      out.push_back(NCMorphism::from_map(s, t, {}));
    } else {
      std::vector<std::uint32_t> seq(n);
      for (std::uint32_t r = 0; r < n; ++r) {
        for (std::uint32_t k = 0; k < n; ++k) seq[k] = (r + k) % n;
        for_each_monotone(n, bound, [&](const std::vector<std::uint32_t>& values) {
          auto f = from_sequence(s, t, seq, values);
          if (f.belongs_to(c)) out.push_back(std::move(f));
        });
      }
    }
  } else {
    std::vector<std::uint32_t> seq(n);
    std::iota(seq.begin(), seq.end(), 0u);
    for_each_monotone(n, bound, [&](const std::vector<std::uint32_t>& values) {
      auto f = from_sequence(s, t, seq, values);
      if (f.belongs_to(c)) out.push_back(std::move(f));
    });
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

DeltaMap DeltaMap::identity(std::uint32_t n) {
  DeltaMap d{n, n, std::vector<std::uint32_t>(n + 1)};
  std::iota(d.table.begin(), d.table.end(), 0u);
  return d;
}

DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
  if (f.target_n != g.source_n) throw CompositionError("Delta maps are not composable");
  DeltaMap h{f.source_n, g.target_n, std::vector<std::uint32_t>(f.table.size())};
  for (std::size_t i = 0; i < f.table.size(); ++i) h.table[i] = g.table[f.table[i]];
  return h;
}

std::vector<DeltaMap> delta_maps(std::uint32_t m, std::uint32_t n) {
  std::vector<DeltaMap> out;
  for_each_monotone(m + 1, n + 1, [&](const std::vector<std::uint32_t>& v) { out.push_back({m, n, v}); });
  return out;
}

std::uint32_t delta_dimension(const FinOrdSet& s) {
  switch (s.kind()) {
    case OrderKind::linear_min_max:
      return static_cast<std::uint32_t>(s.size() - 2);
    case OrderKind::cyclic:
      if (s.size() == 0) break;
      return static_cast<std::uint32_t>(s.size() - 1);
    default:
      break;
  }
  throw CategoryError("object has no Delta dimension");
}

namespace {

// ⁰¹Δ map given by its table on {0,...,n+1} → {0,...,m+1}; gap i of the
// source lies between s_i and s_{i+1}.
DeltaMap dual_of_doubly_based(const std::vector<std::uint32_t>& table, std::uint32_t target_size) {
  const auto n = static_cast<std::uint32_t>(table.size() - 2);
  const std::uint32_t m = target_size - 2;
  DeltaMap g{m, n, std::vector<std::uint32_t>(m + 1)};
  for (std::uint32_t j = 0; j <= m; ++j) {
    std::uint32_t i = 0;
    while (i + 1 <= n && table[i + 1] <= j) ++i;
    g.table[j] = i;
  }
  return g;
}

std::vector<std::uint32_t> doubly_based_of_dual(const DeltaMap& g) {
  std::vector<std::uint32_t> table(g.target_n + 2);
  for (std::uint32_t k = 0; k < table.size(); ++k)
    table[k] = static_cast<std::uint32_t>(std::count_if(g.table.begin(), g.table.end(), [&](std::uint32_t v) { return v < k; }));
  return table;
}

}  // namespace

DeltaMap iso_to_delta_op(const NCMorphism& f) {
  if (f.source().kind() == OrderKind::linear_min_max) {
    f.check_morphism(Category::zero_one_delta);
    return dual_of_doubly_based(f.map(), static_cast<std::uint32_t>(f.target().size()));
  }
  if (f.source().kind() != OrderKind::cyclic) throw CategoryError("iso_to_delta_op needs a morphism of 01delta or 0deltaC");
  f.check_morphism(Category::zero_delta_c);
  // Adjoin a maximum: elements before 0 in the fiber over 0 go to it.
  const auto n = static_cast<std::uint32_t>(f.source().size());
  const auto m = static_cast<std::uint32_t>(f.target().size());
  std::vector<std::uint32_t> table(n + 1);
  for (std::uint32_t s = 0; s < n; ++s) table[s] = f(s);
  bool before_zero = true;
  for (auto s : f.fiber(0)) {
    if (s == 0) before_zero = false;
    table[s] = before_zero ? m : 0;
  }
  table[n] = m;
  return dual_of_doubly_based(table, m + 1);
}

NCMorphism iso_from_delta_op(const DeltaMap& g, Category category) {
  if (g.table.size() != g.source_n + 1) throw ValidationError("Delta map table has the wrong length");
  for (std::size_t i = 0; i < g.table.size(); ++i)
    if (g.table[i] > g.target_n || (i > 0 && g.table[i] < g.table[i - 1]))
      throw CategoryError("not an order-preserving map of Delta");
  const auto table = doubly_based_of_dual(g);
  if (category == Category::zero_one_delta) {
    auto s = FinOrdSet::standard(OrderKind::linear_min_max, g.target_n + 2);
    auto t = FinOrdSet::standard(OrderKind::linear_min_max, g.source_n + 2);
    return NCMorphism::from_map(std::move(s), std::move(t), table);
  }
  if (category != Category::zero_delta_c) throw CategoryError("iso_from_delta_op targets 01delta or 0deltaC");
  const std::uint32_t n = g.target_n + 1;  // |S|
  const std::uint32_t m = g.source_n + 1;  // |T|
  std::vector<std::uint32_t> map(n);
  std::vector<std::vector<std::uint32_t>> fibers(m);
  std::vector<std::uint32_t> wrapped;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (table[s] == m) {
      map[s] = 0;
      wrapped.push_back(s);
    } else {
      map[s] = table[s];
      fibers[table[s]].push_back(s);
    }
  }
  fibers[0].insert(fibers[0].begin(), wrapped.begin(), wrapped.end());
  return NCMorphism(FinOrdSet::standard(OrderKind::cyclic, n), FinOrdSet::standard(OrderKind::cyclic, m), std::move(map),
                    std::move(fibers));
}

Factorization factor(const NCMorphism& f) {
  const auto seq = f.concatenated_fibers();
  const FinOrdSet& s = f.source();
  std::vector<std::uint32_t> sigma(s.size()), phi(s.size());
  for (std::uint32_t k = 0; k < seq.size(); ++k) {
    sigma[seq[k]] = k;
    phi[k] = f(seq[k]);
  }
  return {NCMorphism::from_map(s, s, std::move(sigma)), NCMorphism::from_map(s, f.target(), std::move(phi))};
}

void to_json(nlohmann::json& j, const FinOrdSet& s) {
  j = nlohmann::json{{"elements", s.labels()}, {"order_kind", to_string(s.kind())}};
}

void from_json(const nlohmann::json& j, FinOrdSet& s) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("order_kind"))
    throw ValidationError("a set needs \"elements\" and \"order_kind\"");
  s = FinOrdSet(j.at("elements").get<std::vector<std::string>>(), parse_order_kind(j.at("order_kind").get<std::string>()));
}

void to_json(nlohmann::json& j, const NCMorphism& f) {
  nlohmann::json map = nlohmann::json::array();
  for (auto t : f.map()) map.push_back(f.target().label(t));
  nlohmann::json fibers = nlohmann::json::object();
  for (std::uint32_t t = 0; t < f.target().size(); ++t) {
    nlohmann::json order = nlohmann::json::array();
    for (auto s : f.fiber(t)) order.push_back(f.source().label(s));
    fibers[f.target().label(t)] = std::move(order);
  }
  j = nlohmann::json{{"source", f.source()}, {"target", f.target()}, {"map", std::move(map)}, {"fiber_orders", std::move(fibers)}};
}

void from_json(const nlohmann::json& j, NCMorphism& f) {
  for (const char* key : {"source", "target", "map", "fiber_orders"})
    if (!j.contains(key)) throw ValidationError(std::string("morphism is missing \"") + key + "\"");
  auto s = j.at("source").get<FinOrdSet>();
  auto t = j.at("target").get<FinOrdSet>();
  const auto& jm = j.at("map");
  if (!jm.is_array() || jm.size() != s.size()) throw ValidationError("map table must list one target per source element");
  std::vector<std::uint32_t> map;
  for (const auto& v : jm) map.push_back(static_cast<std::uint32_t>(t.index_of(v.get<std::string>())));
  std::vector<std::vector<std::uint32_t>> fibers(t.size());
  for (const auto& [label, order] : j.at("fiber_orders").items()) {
    auto& fiber = fibers[t.index_of(label)];
    for (const auto& v : order) fiber.push_back(static_cast<std::uint32_t>(s.index_of(v.get<std::string>())));
  }
  f = NCMorphism(std::move(s), std::move(t), std::move(map), std::move(fibers));
}

}  // namespace cycbar::finord
