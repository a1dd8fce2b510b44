#pragma once

#include <vector>

#include "ckit/foundation/matrix.hpp"

namespace ckit {

// Subspace of K^n kept as its reduced row-echelon basis, so equality is row equality.
class SubspaceK {
 public:
  SubspaceK() = default;

  static SubspaceK zero(const FieldContext& ctx, std::size_t n);
  static SubspaceK full(const FieldContext& ctx, std::size_t n);
  static SubspaceK span(const FieldContext& ctx, std::size_t n, const std::vector<VectorK>& vs);
  static SubspaceK row_space(const MatrixK& m);

  const FieldContext& context() const { return basis_.context(); }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixK& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<VectorK> basis_vectors() const { return basis_.row_vectors(); }

  // v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
  VectorK reduce(const VectorK& v) const;
  bool contains(const VectorK& v) const;
  bool contains(const SubspaceK& u) const;

  SubspaceK sum(const SubspaceK& o) const;
  SubspaceK intersect(const SubspaceK& o) const;

  bool operator==(const SubspaceK& o) const;
  bool operator!=(const SubspaceK& o) const { return !(*this == o); }

 private:
  void check_compatible(const SubspaceK& o) const;

  std::size_t n_ = 0;
  MatrixK basis_;
  std::vector<std::size_t> pivots_;
};

struct KernelImage {
  SubspaceK kernel;  // inside K^cols
  SubspaceK image;   // column space, inside K^rows
};

// m is read as the map x -> m x on column vectors.
KernelImage kernel_image(const MatrixK& m);
SubspaceK kernel(const MatrixK& m);
SubspaceK image(const MatrixK& m);
SubspaceK map_subspace(const MatrixK& m, const SubspaceK& u);
// {x : x^T g u = 0 for all u in U}.
SubspaceK orthogonal(const SubspaceK& u, const MatrixK& gram);

}  // namespace ckit
