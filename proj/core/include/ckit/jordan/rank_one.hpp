#pragma once

#include <optional>

#include "ckit/foundation/report.hpp"
#include "ckit/jordan/hermitian.hpp"

namespace ckit::jordan {

using Triple = std::vector<CompElement>;

class NonAssociative : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// U_A B = T(A,B) A for every basis B. A != 0.
bool jordan_rank_one(const HermitianMatrix& a);
// Same identity tested against one given B.
bool rank_one_identity_at(const HermitianMatrix& a, const HermitianMatrix& b);

// The six 2x2-minor equations of H_3; all vanish. n = 3, A != 0.
bool minors_rank_one_3(const HermitianMatrix& a);

// (n d) x (n d) matrix of z -> (sum_u a_tu z_u)_t; associative tags only.
MatrixK l_operator(const HermitianMatrix& a);
// d | rank L_A and (rank L_A = d iff rank one).
Report l_rank_tests(const HermitianMatrix& a);

struct SquareTest {
  bool square_identity = false;  // A^2 = tr(A) A
  bool rank_one = false;
  bool agrees() const { return square_identity == rank_one; }
};

// A^2 computed as U_A(Id). n = 3, A != 0.
SquareTest square_test(const HermitianMatrix& a);

// Associator of every generator triple vanishes.
bool generates_associative(const Triple& z);
// (z_i conj(z_j)); throws NonAssociative for octonionic families that fail it.
HermitianMatrix veronese(const Triple& z);

// lambda -> (z_t lambda)_t has a nontrivial kernel. Tags C, H.
bool indeterminacy_member(const Triple& z);
// Membership agrees with nu2(z) = 0.
Report indeterminacy_report(const Triple& z);

// I * M(A), with M(A) the 2n x 2n block matrix of the entries acting on
// R(e) in the basis {e, E21} and I = diag([[0,-1],[1,0]], ...). Tag H.
MatrixK scorza_map(const HermitianMatrix& a);
// The block-diagonal base point used by scorza_map and the a = 4 classical model.
MatrixK symplectic_base_point(const FieldContext& ctx, std::size_t n);

struct Preimage {
  Triple z;
  Scalar scale;  // A = scale * nu2(z)
};

// Exhaustive search over F_p for A = c nu2(z), c != 0; octonionic families must
// generate an associative subalgebra unless any_family is set.
std::optional<Preimage> find_veronese_preimage(const HermitianMatrix& a, bool any_family = false);

Json triple_to_json(const Triple& z);

}  // namespace ckit::jordan
