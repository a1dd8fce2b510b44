#pragma once

#include "ckit/cubic27/incidence.hpp"
#include "ckit/jordan/hermitian.hpp"

namespace ckit::cubic27 {

// The linear map W -> H_3(O) with det3(theta_map(t)) = beta(t).
jordan::HermitianMatrix theta_map(const GridTriple& t);
// 27 x 27 matrix sending grid coordinates to HermitianMatrix coordinates.
MatrixK theta_matrix(const FieldContext& ctx);
GridTriple theta_preimage(const jordan::HermitianMatrix& a);

// det3 composed with theta, as an integer polynomial in the 27 grid variables.
Polynomial det_theta_polynomial();

// gradient zero <=> quadrics of theta_map(t) vanish <=> theta_map(t) zero or rank one.
Report singular_locus_check(const GridTriple& t);

GridTriple random_grid(const FieldContext& ctx, TrialRng& rng);

}  // namespace ckit::cubic27
