#pragma once

#include "ckit/foundation/polynomial.hpp"
#include "ckit/jordan/hermitian.hpp"

namespace ckit::jordan {

// The determinant cubic of H_3(O) as an integer polynomial in the 27
// coordinates, its gradient, and the inverse Gram matrix of the trace form.
// Built once from det3 by interpolation; immutable afterwards.
class CubicData {
 public:
  static const CubicData& octonion();

  const Polynomial& det() const { return det_; }
  const std::vector<Polynomial>& gradient() const { return grad_; }
  const std::vector<std::vector<long>>& gram_inverse() const { return ginv_; }

  VectorK gradient_at(const FieldContext& ctx, const VectorK& x) const;
  // A# = G^{-1} grad det(A), so T(A#, B) = D_B det(A).
  VectorK adjoint_coords(const FieldContext& ctx, const VectorK& x) const;

 private:
  CubicData();

  struct Term {
    long coef;
    std::uint16_t a, b;
  };

  Polynomial det_;
  std::vector<Polynomial> grad_;
  std::vector<std::vector<Term>> grad_terms_;
  std::vector<std::vector<long>> ginv_;
};

// n = 3, any tag (associative tags go through the embedding into H_3(O)).
HermitianMatrix adjoint(const HermitianMatrix& a);
// (A+B)# - A# - B#.
HermitianMatrix cross(const HermitianMatrix& a, const HermitianMatrix& b);
// d/dt det3(A + tB) at t = 0.
Scalar det3_directional(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace ckit::jordan
