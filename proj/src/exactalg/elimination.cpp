#include "cycbar/exactalg/elimination.hpp"

#include <algorithm>
#include <numeric>

#include "cycbar/errors.hpp"
#include "cycbar/exactalg/smith.hpp"

namespace cycbar::exactalg {
namespace {

struct Overflow {};

struct WordPolicy {
  using T = std::int64_t;
  static bool is_unit(T v) { return v == 1 || v == -1; }
  // a - f*b
  static T sub_mul(T a, T f, T b) {
    T prod, out;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
    return out;
  }
  // a / u for a unit pivot u
  static T quotient(T a, T u) { return u == 1 ? a : -a; }
  static bool is_zero(T v) { return v == 0; }
  static Integer to_integer(T v) { return Integer(static_cast<long>(v)); }
};

struct BigPolicy {
  using T = Integer;
  static bool is_unit(const T& v) { return v == 1 || v == -1; }
  static T sub_mul(const T& a, const T& f, const T& b) { return a - f * b; }
  static T quotient(const T& a, const T& u) { return u == 1 ? a : T(-a); }
  static bool is_zero(const T& v) { return v == 0; }
  static Integer to_integer(const T& v) { return v; }
};

struct FieldPolicy {
  using T = std::int64_t;
  std::int64_t p;
  bool is_unit(T v) const { return v != 0; }
  T sub_mul(T a, T f, T b) const {
    T r = (a - (f * b) % p) % p;
    return r < 0 ? r + p : r;
  }
  T quotient(T a, T u) const { return (a * static_cast<T>(inverse_mod(static_cast<std::uint32_t>(u), p))) % p; }
  static bool is_zero(T v) { return v == 0; }
  static Integer to_integer(T v) { return Integer(static_cast<long>(v)); }
};

template <class Policy>
class Eliminator {
 public:
  using T = typename Policy::T;
  struct Entry {
    std::uint32_t col;
    T value;
  };
  using Row = std::vector<Entry>;

  Eliminator(const SparseMatrix& m, Policy policy) : policy_(policy), cols_(m.cols()) {
    rows_.resize(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& e : m.column(j)) rows_[e.row].push_back({static_cast<std::uint32_t>(j), T(e.value)});
    col_rows_.resize(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r]) col_rows_[e.col].push_back(static_cast<std::uint32_t>(r));
    row_alive_.assign(rows_.size(), true);
    col_alive_.assign(cols_, true);
  }

  MatrixInvariants run() {
    std::size_t rank = 0;
    std::vector<std::uint32_t> order(cols_);
    for (bool progress = true; progress;) {
      progress = false;
      std::iota(order.begin(), order.end(), 0u);
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return col_rows_[a].size() < col_rows_[b].size();
      });
      for (std::uint32_t c : order) {
        if (!col_alive_[c]) continue;
        auto& members = col_rows_[c];
        std::erase_if(members, [&](std::uint32_t r) { return !row_alive_[r] || find(r, c) == nullptr; });
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.empty()) {
          col_alive_[c] = false;
          continue;
        }
        std::uint32_t pivot = 0;
        bool have = false;
        for (std::uint32_t r : members) {
          if (!policy_.is_unit(find(r, c)->value)) continue;
          if (!have || rows_[r].size() < rows_[pivot].size() ||
              (rows_[r].size() == rows_[pivot].size() && r < pivot)) {
            pivot = r;
            have = true;
          }
        }
        if (!have) continue;
        const T pv = find(pivot, c)->value;
        const std::vector<std::uint32_t> targets = members;
        for (std::uint32_t r : targets) {
          if (r == pivot) continue;
          const T factor = policy_.quotient(find(r, c)->value, pv);
          eliminate(r, pivot, factor);
        }
        row_alive_[pivot] = false;
        col_alive_[c] = false;
        members.clear();
        ++rank;
        progress = true;
      }
    }

    // Whatever survives has no unit entries; finish densely.
    std::vector<std::uint32_t> live_rows;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (row_alive_[r] && !rows_[r].empty()) live_rows.push_back(static_cast<std::uint32_t>(r));
    MatrixInvariants out;
    out.rank = rank;
    if (live_rows.empty()) return out;
    std::vector<std::uint32_t> live_cols;
    std::vector<std::int64_t> col_index(cols_, -1);
    for (std::uint32_t r : live_rows)
      for (const auto& e : rows_[r])
        if (col_index[e.col] < 0) {
          col_index[e.col] = static_cast<std::int64_t>(live_cols.size());
          live_cols.push_back(e.col);
        }
    IntMatrix dense(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& e : rows_[live_rows[i]]) dense.at(i, col_index[e.col]) = Policy::to_integer(e.value);
    for (const Integer& d : smith_invariants(std::move(dense))) {
      ++out.rank;
      if (d != 1) out.torsion.push_back(d);
    }
    return out;
  }

 private:
  const Entry* find(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? &*it : nullptr;
  }

  // rows_[r] -= factor * rows_[p]
  void eliminate(std::uint32_t r, std::uint32_t p, const T& factor) {
    const Row& src = rows_[p];
    Row& dst = rows_[r];
    Row merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
        merged.push_back(dst[i++]);
      } else if (i == dst.size() || src[j].col < dst[i].col) {
        T v = policy_.sub_mul(T(0), factor, src[j].value);
        if (!Policy::is_zero(v)) {
          col_rows_[src[j].col].push_back(r);
          merged.push_back({src[j].col, std::move(v)});
        }
        ++j;
      } else {
        T v = policy_.sub_mul(dst[i].value, factor, src[j].value);
        if (!Policy::is_zero(v)) merged.push_back({dst[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    dst = std::move(merged);
  }

  Policy policy_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<bool> row_alive_;
  std::vector<bool> col_alive_;
};

}  // namespace

MatrixInvariants matrix_invariants(const SparseMatrix& m, const GroundRing& ring) {
  if (ring.is_field()) return Eliminator<FieldPolicy>(m, FieldPolicy{ring.modulus()}).run();
  try {
    return Eliminator<WordPolicy>(m, WordPolicy{}).run();
  } catch (const Overflow&) {
    return Eliminator<BigPolicy>(m, BigPolicy{}).run();
  }
}

std::size_t dense_rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const GroundRing ring = GroundRing::prime_field(p);
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = ring.reduce(m.at(i, j)).get_si();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inverse_mod(static_cast<std::uint32_t>(a[rank][c]), p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const std::int64_t f = (a[i][c] * inv) % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace cycbar::exactalg
