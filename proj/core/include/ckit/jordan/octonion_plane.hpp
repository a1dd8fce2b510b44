#pragma once

#include "ckit/jordan/rank_one.hpp"

namespace ckit::jordan {

// The six minor equations of H_3 (1-based a_tu):
//   a11 a22 - Q(a12), a11 a33 - Q(a13), a22 a33 - Q(a23),
//   a11 a23 - a21 a13, a32 a21 - a31 a22, a21 a33 - a23 a31,
// flattened to 3 + 3 d scalars. Any tag; n = 3.
VectorK minor_residuals(const HermitianMatrix& a);
// minor_residuals for tag O: 27 scalars.
VectorK octonion_quadrics(const HermitianMatrix& a);

enum class PlaneClass { X0, X1 };

struct Classification {
  PlaneClass cls = PlaneClass::X1;
  std::string route;          // diagonal | mixed | null_plane | isotropic_line
  Triple triple;              // X1: A = scale * nu2(triple)
  Scalar scale;
  std::vector<CompElement> plane;  // X0: basis of the null plane
};

class NotRankOne : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Decision tree of the X = X0 u X1 proof. A != 0, quadrics vanish, tag O, n = 3.
Classification classify_rank_one_octonion(const HermitianMatrix& a);
Json classification_to_json(const Classification& c);

// [[0, conj a, conj b], [a, 0, conj c], [b, c, 0]].
HermitianMatrix null_plane_matrix(const CompElement& a, const CompElement& b, const CompElement& c);

// Lexicographically first independent octonions a, b over F_p with
// re = Q = 0 and a^2 = b^2 = ab = ba = 0.
std::optional<std::pair<CompElement, CompElement>> find_null_plane(const FieldContext& fp);
// Residues lifted to the symmetric range (-p/2, p/2] over Q.
CompElement lift_to_rationals(const CompElement& x);

struct ScalingWitness {
  Triple z;
  CompElement lambda;
  HermitianMatrix nu2_z, nu2_z_lambda;
};

// First (z1, z2, lambda) over F_p with Q(lambda) != 0, nu2(z) != 0 and
// nu2(z lambda) not proportional to nu2(z).
std::optional<ScalingWitness> find_scaling_failure(const FieldContext& fp);

// x = c y for some scalar c (c may be zero only if x = 0).
bool proportional(const HermitianMatrix& x, const HermitianMatrix& y);

}  // namespace ckit::jordan
