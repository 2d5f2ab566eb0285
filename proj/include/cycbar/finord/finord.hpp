#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cycbar::finord {

enum class OrderKind { linear, cyclic, linear_min, linear_max, linear_min_max };

// Subcategories of noncommutative sets. The "+" variants allow the empty set.
enum class Category {
  delta_sigma,
  delta,
  delta_plus,
  zero_delta,
  one_delta,
  zero_one_delta,
  delta_c,
  delta_c_plus,
  zero_delta_c,
};

std::string_view to_string(OrderKind k);
std::string_view to_string(Category c);
OrderKind parse_order_kind(std::string_view s);
Category parse_category(std::string_view s);
// The order kind carried by objects of a category.
OrderKind order_kind_of(Category c);

// A finite set listed in canonical order; for cyclic sets the basepoint is
// listed first. Elements are referred to by position.
class FinOrdSet {
 public:
  FinOrdSet() = default;
  FinOrdSet(std::vector<std::string> labels, OrderKind kind);

  // Canonical object with `size` elements: "0","1",... for linear sets,
  // "0","x1",...,"1" for sets with min and max, "0","x1",... for cyclic and
  // min-only sets, "x1",...,"1" for max-only sets.
  static FinOrdSet standard(OrderKind kind, std::size_t size);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  OrderKind kind() const { return kind_; }
  // Position of a label; throws ValidationError when absent.
  std::size_t index_of(std::string_view label) const;

  // Throws CategoryError unless this is an object of c.
  void check_object(Category c) const;

  friend bool operator==(const FinOrdSet&, const FinOrdSet&) = default;

 private:
  std::vector<std::string> labels_;
  OrderKind kind_ = OrderKind::linear;
};

// A map of finite sets with a linear order on every fiber.
class NCMorphism {
 public:
  NCMorphism() = default;
  // Throws ValidationError when the fiber orders do not partition the source
  // compatibly with the map.
  NCMorphism(FinOrdSet source, FinOrdSet target, std::vector<std::uint32_t> map,
             std::vector<std::vector<std::uint32_t>> fibers);
  // Fibers in increasing source order.
  static NCMorphism from_map(FinOrdSet source, FinOrdSet target, std::vector<std::uint32_t> map);
  static NCMorphism identity(const FinOrdSet& s);

  const FinOrdSet& source() const { return source_; }
  const FinOrdSet& target() const { return target_; }
  const std::vector<std::uint32_t>& map() const { return map_; }
  std::uint32_t operator()(std::uint32_t s) const { return map_.at(s); }
  const std::vector<std::vector<std::uint32_t>>& fibers() const { return fibers_; }
  const std::vector<std::uint32_t>& fiber(std::uint32_t t) const { return fibers_.at(t); }

  // Fibers concatenated in target order.
  std::vector<std::uint32_t> concatenated_fibers() const;

  bool belongs_to(Category c) const;
  // Throws CategoryError naming the violated constraint.
  void check_morphism(Category c) const;

  friend bool operator==(const NCMorphism&, const NCMorphism&) = default;
  // Lexicographic on (map table, fiber orders); objects are not compared.
  friend bool lex_less(const NCMorphism& a, const NCMorphism& b);

 private:
  FinOrdSet source_;
  FinOrdSet target_;
  std::vector<std::uint32_t> map_;
  std::vector<std::vector<std::uint32_t>> fibers_;
};

// g ∘ f. The fiber over u lists the f-fibers over g⁻¹(u) in g's fiber order.
NCMorphism compose(const NCMorphism& g, const NCMorphism& f);

// All morphisms S → T of c, ordered by lex_less.
std::vector<NCMorphism> hom_set(const FinOrdSet& s, const FinOrdSet& t, Category c);

// An order-preserving map [source_n] → [target_n] in Δ.
struct DeltaMap {
  std::uint32_t source_n = 0;
  std::uint32_t target_n = 0;
  std::vector<std::uint32_t> table;

  static DeltaMap identity(std::uint32_t n);
  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
};
DeltaMap compose(const DeltaMap& g, const DeltaMap& f);
// All monotone maps [m] → [n], lexicographic.
std::vector<DeltaMap> delta_maps(std::uint32_t m, std::uint32_t n);

// The contravariant isomorphisms ⁰¹Δ → Δ and ⁰ΔC → Δ. An object with k
// interior points (⁰¹Δ: size k+2; ⁰ΔC: size k+1) goes to [k]; the
// morphism S → T goes to a map [dim T] → [dim S].
DeltaMap iso_to_delta_op(const NCMorphism& f);
// Inverse on hom-sets; `category` selects ⁰¹Δ or ⁰ΔC.
NCMorphism iso_from_delta_op(const DeltaMap& g, Category category);
// The number k of interior points, i.e. the Δ-dimension of an object.
std::uint32_t delta_dimension(const FinOrdSet& s);

// f = monotone ∘ permutation, once the source and target are linearly ordered.
struct Factorization {
  NCMorphism permutation;  // bijection S → S with singleton fibers
  NCMorphism monotone;     // a morphism of Δ₊ (fibers in natural order)
};
Factorization factor(const NCMorphism& f);

void to_json(nlohmann::json& j, const FinOrdSet& s);
void from_json(const nlohmann::json& j, FinOrdSet& s);
void to_json(nlohmann::json& j, const NCMorphism& f);
void from_json(const nlohmann::json& j, NCMorphism& f);

}  // namespace cycbar::finord
