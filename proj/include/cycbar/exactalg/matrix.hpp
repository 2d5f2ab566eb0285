#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "cycbar/exactalg/ring.hpp"

namespace cycbar::exactalg {

// Dense matrix of arbitrary-precision integers. When a modulus tag is set,
// every entry is a canonical residue mod that prime.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::optional<std::uint32_t> modulus = {});

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::optional<std::uint32_t> modulus() const { return modulus_; }

  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  // Bareiss fraction-free determinant; square matrices only.
  Integer determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::optional<std::uint32_t> modulus_;
  std::vector<Integer> data_;
};

// Dense JSON: an array of rows of integers.
void to_json(nlohmann::json& j, const IntMatrix& m);
void from_json(const nlohmann::json& j, IntMatrix& m);

struct SparseEntry {
  std::uint32_t row;
  std::int64_t value;
};

// Column-compressed sparse matrix with machine-word entries. Used for
// boundary maps, whose entries stay small even when the matrices are large.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  // Accumulates; call normalize() before reading.
  void add(std::size_t row, std::size_t col, std::int64_t value);
  // Sorts each column, merges duplicates, reduces by the ring and drops zeros.
  void normalize(const GroundRing& ring);

  std::span<const SparseEntry> column(std::size_t j) const { return columns_[j]; }
  bool is_zero() const { return nnz() == 0; }

  IntMatrix to_dense() const;
  static SparseMatrix from_dense(const IntMatrix& m, const GroundRing& ring);
  SparseMatrix transpose() const;

  // Product over the ring; throws ComputationError on int64 overflow over Z.
  static SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const GroundRing& ring);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<SparseEntry>> columns_;
};

}  // namespace cycbar::exactalg
