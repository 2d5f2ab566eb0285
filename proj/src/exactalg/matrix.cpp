#include "cycbar/exactalg/matrix.hpp"

#include <algorithm>
#include <string>

#include "cycbar/errors.hpp"

namespace cycbar::exactalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::optional<std::uint32_t> modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw RangeError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw RangeError("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_, a.modulus_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  if (c.modulus_) {
    GroundRing ring = GroundRing::prime_field(*c.modulus_);
    for (auto& v : c.data_) v = ring.reduce(v);
  }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.modulus_ == b.modulus_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(src, j) != 0) at(dst, j) += factor * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (at(i, src) != 0) at(i, dst) += factor * at(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void to_json(nlohmann::json& j, const IntMatrix& m) {
  j = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& v = m.at(r, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    j.push_back(std::move(row));
  }
}

void from_json(const nlohmann::json& j, IntMatrix& m) {
  if (!j.is_array()) throw ValidationError("matrix JSON must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  m = IntMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ValidationError("ragged matrix JSON");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = j[r][c];
      if (v.is_number_integer())
        m.at(r, c) = v.get<long>();
      else if (v.is_string())
        m.at(r, c) = Integer(v.get<std::string>());
      else
        throw ValidationError("matrix entries must be integers");
    }
  }
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows_ || col >= cols_) throw RangeError("sparse entry out of range");
  if (value != 0) columns_[col].push_back({static_cast<std::uint32_t>(row), value});
}

void SparseMatrix::normalize(const GroundRing& ring) {
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < col.size();) {
      std::int64_t sum = 0;
      const std::uint32_t r = col[i].row;
      for (; i < col.size() && col[i].row == r; ++i) {
        if (__builtin_add_overflow(sum, col[i].value, &sum)) throw ComputationError("sparse entry overflow");
        sum = ring.reduce(sum);
      }
      if (sum != 0) col[out++] = {r, sum};
    }
    col.resize(out);
  }
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) m.at(e.row, j) = static_cast<long>(e.value);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m, const GroundRing& ring) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer v = ring.reduce(m.at(i, j));
      if (v == 0) continue;
      if (!v.fits_slong_p()) throw ComputationError("entry does not fit a machine word");
      s.add(i, j, v.get_si());
    }
  s.normalize(ring);
  return s;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) t.columns_[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& a, const SparseMatrix& b, const GroundRing& ring) {
  if (a.cols_ != b.rows_) throw RangeError("sparse product dimension mismatch");
  SparseMatrix c(a.rows_, b.cols_);
  std::vector<__int128> acc(a.rows_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < b.cols_; ++j) {
    touched.clear();
    for (const auto& eb : b.columns_[j]) {
      for (const auto& ea : a.columns_[eb.row]) {
        if (acc[ea.row] == 0) touched.push_back(ea.row);
        acc[ea.row] += static_cast<__int128>(ea.value) * eb.value;
        if (ring.is_field()) acc[ea.row] %= ring.modulus();
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (auto r : touched) {
      __int128 v = acc[r];
      acc[r] = 0;
      if (ring.is_field()) {
        v %= ring.modulus();
        if (v < 0) v += ring.modulus();
      }
      if (v == 0) continue;
      if (v > INT64_MAX || v < INT64_MIN) throw ComputationError("sparse product overflow");
      c.columns_[j].push_back({r, static_cast<std::int64_t>(v)});
    }
  }
  return c;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t j = 0; j < a.cols_; ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].row != y[k].row || x[k].value != y[k].value) return false;
  }
  return true;
}

}  // namespace cycbar::exactalg
