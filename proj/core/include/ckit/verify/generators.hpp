#pragma once

#include "ckit/jordan/rank_one.hpp"

namespace ckit::verify {

// Zero half the time, so that zero divisors show up.
Scalar sparse_scalar(const FieldContext& ctx, TrialRng& rng);
jordan::Triple random_triple(const comp::AlgebraTag& tag, std::size_t n, TrialRng& rng);
// Three octonions in the subalgebra generated by two random (often isotropic) elements.
jordan::Triple random_associative_triple(const FieldContext& ctx, TrialRng& rng);

}  // namespace ckit::verify
