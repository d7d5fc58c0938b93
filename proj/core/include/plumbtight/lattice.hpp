#pragma once

// Exact integer/rational linear algebra for small symmetric forms.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "plumbtight/rational.hpp"

namespace plumbtight {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const std::int64_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Block-diagonal sum of two square matrices.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Unique solution of m x = rhs. Throws std::domain_error if m is singular.
std::vector<Rational> solve(const IntMatrix& m, std::span<const std::int64_t> rhs);

/// rhs^T m^{-1} rhs, i.e. the square of a covector under the inverse form.
Rational inverse_square(const IntMatrix& m, std::span<const std::int64_t> rhs);

/// Signature and rank of a nondegenerate symmetric form, by congruence diagonalization over Q.
struct SignatureRank {
  int signature = 0;
  int b2 = 0;
};
SignatureRank signature_b2(const IntMatrix& form);

/// Cached inverse of a nondegenerate integer form for repeated covector squares.
/// Stores the adjugate so that K^T Q^{-1} K = K^T adj K / det with integer arithmetic.
class InverseForm {
 public:
  explicit InverseForm(const IntMatrix& form);

  std::size_t size() const { return n_; }
  std::int64_t det() const { return det_; }

  /// Numerator of K^2 over det(): returns K^T adj K.
  std::int64_t square_numerator(std::span<const std::int32_t> covector) const;
  Rational square(std::span<const std::int32_t> covector) const;

 private:
  std::size_t n_ = 0;
  std::int64_t det_ = 1;
  std::vector<std::int64_t> adj_;
};

/// Canonical coset representatives of Z^n modulo the column lattice of a nonsingular matrix,
/// via its lower-triangular Hermite normal form.
class CosetReducer {
 public:
  explicit CosetReducer(const IntMatrix& generators);

  /// The unique representative r of v + L with 0 <= r_i < H_ii.
  std::vector<std::int64_t> reduce(std::span<const std::int32_t> v) const;
  /// True iff a - b lies in the lattice.
  bool same_coset(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const;

  /// Index of the lattice in Z^n.
  Integer index() const;

  const IntMatrix& hermite() const { return hnf_; }

 private:
  IntMatrix hnf_;
};

}  // namespace plumbtight
