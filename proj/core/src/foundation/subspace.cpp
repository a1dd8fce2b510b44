#include "ckit/foundation/subspace.hpp"

namespace ckit {

SubspaceK SubspaceK::zero(const FieldContext& ctx, std::size_t n) {
  SubspaceK s;
  s.n_ = n;
  s.basis_ = MatrixK(ctx, 0, n);
  return s;
}

SubspaceK SubspaceK::full(const FieldContext& ctx, std::size_t n) {
  return row_space(MatrixK::identity(ctx, n));
}

SubspaceK SubspaceK::span(const FieldContext& ctx, std::size_t n, const std::vector<VectorK>& vs) {
  return row_space(MatrixK::from_rows(ctx, n, vs));
}

SubspaceK SubspaceK::row_space(const MatrixK& m) {
  SubspaceK s;
  s.n_ = m.cols();
  RrefResult r = rref(m);
  s.basis_ = MatrixK(m.context(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = r.form(i, j);
  s.pivots_ = std::move(r.pivots);
  return s;
}

VectorK SubspaceK::reduce(const VectorK& v) const {
  if (v.size() != n_) throw PreconditionError("ambient dimension mismatch");
  VectorK w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!basis_(i, j).is_zero()) w[j] -= f * basis_(i, j);
  }
  return w;
}

bool SubspaceK::contains(const VectorK& v) const { return is_zero_vector(reduce(v)); }

bool SubspaceK::contains(const SubspaceK& u) const {
  check_compatible(u);
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!contains(u.basis_.row(i))) return false;
  return true;
}

SubspaceK SubspaceK::sum(const SubspaceK& o) const {
  check_compatible(o);
  std::vector<VectorK> rows = basis_vectors();
  for (auto& r : o.basis_vectors()) rows.push_back(std::move(r));
  return span(context(), n_, rows);
}

SubspaceK SubspaceK::intersect(const SubspaceK& o) const {
  check_compatible(o);
  const std::size_t du = dim(), dv = o.dim();
  if (du == 0 || dv == 0) return zero(context(), n_);
  std::vector<VectorK> stacked = basis_vectors();
  for (auto& r : o.basis_vectors()) stacked.push_back(std::move(r));
  // (a, b) with a U + b V = 0 gives a U in the intersection.
  SubspaceK rel = ckit::kernel(MatrixK::from_rows(context(), n_, stacked).transpose());
  std::vector<VectorK> out;
  for (std::size_t k = 0; k < rel.dim(); ++k) {
    VectorK x = zero_vector(context(), n_);
    for (std::size_t i = 0; i < du; ++i) {
      const Scalar& a = rel.basis()(k, i);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) x[j] += a * basis_(i, j);
    }
    out.push_back(std::move(x));
  }
  return span(context(), n_, out);
}

bool SubspaceK::operator==(const SubspaceK& o) const {
  return n_ == o.n_ && basis_ == o.basis_;
}

void SubspaceK::check_compatible(const SubspaceK& o) const {
  if (n_ != o.n_) throw PreconditionError("subspaces live in different ambient spaces");
  if (!(context() == o.context())) throw ContextMismatch("subspace contexts differ");
}

KernelImage kernel_image(const MatrixK& m) {
  KernelImage ki{kernel(m), image(m)};
  if (ki.kernel.dim() + ki.image.dim() != m.cols())
    throw Error("rank theorem violated in kernel_image");
  return ki;
}

SubspaceK kernel(const MatrixK& m) {
  const std::size_t n = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<VectorK> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    VectorK x = zero_vector(m.context(), n);
    x[f] = m.context().one();
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.form(i, f);
    basis.push_back(std::move(x));
  }
  return SubspaceK::span(m.context(), n, basis);
}

SubspaceK image(const MatrixK& m) { return SubspaceK::row_space(m.transpose()); }

SubspaceK map_subspace(const MatrixK& m, const SubspaceK& u) {
  std::vector<VectorK> imgs;
  for (const auto& v : u.basis_vectors()) imgs.push_back(m.apply(v));
  return SubspaceK::span(m.context(), m.rows(), imgs);
}

SubspaceK orthogonal(const SubspaceK& u, const MatrixK& gram) {
  std::vector<VectorK> rows;
  for (const auto& v : u.basis_vectors()) rows.push_back(gram.apply(v));
  if (rows.empty()) return SubspaceK::full(gram.context(), gram.rows());
  return kernel(MatrixK::from_rows(gram.context(), gram.rows(), rows));
}

}  // namespace ckit
