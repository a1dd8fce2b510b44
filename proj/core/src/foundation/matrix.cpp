#include "ckit/foundation/matrix.hpp"

#include <utility>

namespace ckit {

VectorK zero_vector(const FieldContext& ctx, std::size_t n) { return VectorK(n, ctx.zero()); }

VectorK unit_vector(const FieldContext& ctx, std::size_t n, std::size_t i) {
  VectorK v = zero_vector(ctx, n);
  v.at(i) = ctx.one();
  return v;
}

bool is_zero_vector(const VectorK& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

VectorK add(const VectorK& a, const VectorK& b) {
  if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
  VectorK r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

VectorK sub(const VectorK& a, const VectorK& b) {
  if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
  VectorK r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

VectorK scale(const Scalar& s, const VectorK& v) {
  VectorK r = v;
  for (auto& x : r) x *= s;
  return r;
}

MatrixK::MatrixK(const FieldContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, ctx.zero()) {}

MatrixK MatrixK::identity(const FieldContext& ctx, std::size_t n) {
  MatrixK m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

MatrixK MatrixK::from_rows(const FieldContext& ctx, std::size_t cols,
                           const std::vector<VectorK>& rows) {
  MatrixK m(ctx, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatrixK MatrixK::from_columns(const FieldContext& ctx, std::size_t rows,
                              const std::vector<VectorK>& cols) {
  MatrixK m(ctx, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw PreconditionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

MatrixK MatrixK::from_ints(const FieldContext& ctx, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  MatrixK m(ctx, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ctx.from_int(rows[i][j]);
  }
  return m;
}

VectorK MatrixK::row(std::size_t i) const {
  return VectorK(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

VectorK MatrixK::column(std::size_t j) const {
  VectorK v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<VectorK> MatrixK::row_vectors() const {
  std::vector<VectorK> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

MatrixK MatrixK::transpose() const {
  MatrixK t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

VectorK MatrixK::apply(const VectorK& x) const {
  if (x.size() != cols_) throw PreconditionError("matrix-vector shape mismatch");
  VectorK y = zero_vector(ctx_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !x[j].is_zero()) y[i] += a * x[j];
    }
  return y;
}

bool MatrixK::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

MatrixK& MatrixK::operator+=(const MatrixK& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

MatrixK& MatrixK::operator-=(const MatrixK& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

MatrixK operator*(const MatrixK& a, const MatrixK& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
  if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("matrix contexts differ");
  MatrixK c(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

MatrixK operator*(const Scalar& s, MatrixK a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

bool MatrixK::operator==(const MatrixK& o) const {
  return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const MatrixK& m) {
  RrefResult r{m, 0, {}};
  MatrixK& a = r.form;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(lead, j));
    Scalar inv = a(lead, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(lead, j).is_zero()) a(i, j) -= f * a(lead, j);
    }
    r.pivots.push_back(c);
    ++lead;
  }
  r.rank = lead;
  return r;
}

std::size_t rank(const MatrixK& m) { return rref(m).rank; }

Scalar determinant(const MatrixK& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  MatrixK a = m;
  const std::size_t n = a.rows();
  Scalar det = m.context().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return m.context().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

MatrixK inverse(const MatrixK& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  MatrixK aug(m.context(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.context().one();
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw DivisionByZero("matrix is singular");
  MatrixK inv(m.context(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

std::optional<VectorK> solve(const MatrixK& m, const VectorK& b) {
  if (b.size() != m.rows()) throw PreconditionError("right-hand side length mismatch");
  const std::size_t n = m.cols();
  MatrixK aug(m.context(), m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  VectorK x = zero_vector(m.context(), n);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, n);
  return x;
}

}  // namespace ckit
