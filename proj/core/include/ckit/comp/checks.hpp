#pragma once

#include "ckit/comp/algebra.hpp"
#include "ckit/foundation/report.hpp"

namespace ckit::comp {

// Invertible z: L(z) = R(z) = A. Isotropic z: L(z), R(z) are maximal
// isotropic of dimension dim A / 2. Tag must not be R; z != 0.
Report check_composition_general(const CompElement& z);

// For nonzero isotropic z1, z2: z2 in L(z1) iff conj(z1) z2 = 0.
bool left_image_criterion(const CompElement& z1, const CompElement& z2);

struct TrialityDims {
  std::size_t ll = 0;  // dim L(x) n L(y)
  std::size_t rr = 0;  // dim R(x) n R(y)
  std::size_t lr = 0;  // dim L(x) n R(y)
};

TrialityDims triality_dims(const CompElement& x, const CompElement& y);

// The three bullets on octonion pairs; x, y nonzero isotropic.
Report check_triality(const CompElement& x, const CompElement& y);

// dim L(x) n L(y) even and dim L(x) n R(y) odd for nonzero isotropic octonions.
bool triality_parity(const CompElement& x, const CompElement& y);

}  // namespace ckit::comp
