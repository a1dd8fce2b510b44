#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ckit/foundation/field.hpp"

namespace ckit {

using VectorK = std::vector<Scalar>;

VectorK zero_vector(const FieldContext& ctx, std::size_t n);
VectorK unit_vector(const FieldContext& ctx, std::size_t n, std::size_t i);
bool is_zero_vector(const VectorK& v);
VectorK add(const VectorK& a, const VectorK& b);
VectorK sub(const VectorK& a, const VectorK& b);
VectorK scale(const Scalar& s, const VectorK& v);

// Dense matrix over a single field context, row-major.
class MatrixK {
 public:
  MatrixK() = default;
  MatrixK(const FieldContext& ctx, std::size_t rows, std::size_t cols);

  static MatrixK identity(const FieldContext& ctx, std::size_t n);
  static MatrixK from_rows(const FieldContext& ctx, std::size_t cols,
                           const std::vector<VectorK>& rows);
  static MatrixK from_columns(const FieldContext& ctx, std::size_t rows,
                              const std::vector<VectorK>& cols);
  static MatrixK from_ints(const FieldContext& ctx, const std::vector<std::vector<long>>& rows);

  const FieldContext& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VectorK row(std::size_t i) const;
  VectorK column(std::size_t j) const;
  std::vector<VectorK> row_vectors() const;

  MatrixK transpose() const;
  VectorK apply(const VectorK& x) const;
  bool is_zero() const;

  MatrixK& operator+=(const MatrixK& o);
  MatrixK& operator-=(const MatrixK& o);
  friend MatrixK operator+(MatrixK a, const MatrixK& b) { return a += b; }
  friend MatrixK operator-(MatrixK a, const MatrixK& b) { return a -= b; }
  friend MatrixK operator*(const MatrixK& a, const MatrixK& b);
  friend MatrixK operator*(const Scalar& s, MatrixK a);

  bool operator==(const MatrixK& o) const;
  bool operator!=(const MatrixK& o) const { return !(*this == o); }

 private:
  FieldContext ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  MatrixK form;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const MatrixK& m);
std::size_t rank(const MatrixK& m);
Scalar determinant(const MatrixK& m);
MatrixK inverse(const MatrixK& m);
// Some x with m x = b, if one exists.
std::optional<VectorK> solve(const MatrixK& m, const VectorK& b);

}  // namespace ckit
