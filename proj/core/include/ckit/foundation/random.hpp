#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ckit/foundation/matrix.hpp"

namespace ckit {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t stream_id(std::string_view name);

// Generator keyed by (seed, stream, trial): trial k draws the same values no
// matter which worker runs it or in which order.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

  std::mt19937_64& engine() { return eng_; }
  std::uint64_t below(std::uint64_t n);
  long between(long lo, long hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 eng_;
};

// Uniform residue over F_p; over Q a fraction a/b with |a| <= 9, 1 <= b <= 9.
Scalar random_scalar(const FieldContext& ctx, TrialRng& rng);
Scalar random_nonzero_scalar(const FieldContext& ctx, TrialRng& rng);
VectorK random_vector(const FieldContext& ctx, std::size_t n, TrialRng& rng);
MatrixK random_matrix(const FieldContext& ctx, std::size_t rows, std::size_t cols, TrialRng& rng);
// Uniform-ish invertible matrix with determinant 1.
MatrixK random_special_linear(const FieldContext& ctx, std::size_t n, TrialRng& rng);
MatrixK random_invertible(const FieldContext& ctx, std::size_t n, TrialRng& rng);

}  // namespace ckit
