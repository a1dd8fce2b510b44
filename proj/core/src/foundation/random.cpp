#include "ckit/foundation/random.hpp"

namespace ckit {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
    : eng_(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ trial)) {}

std::uint64_t TrialRng::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = eng_();
  while (x >= limit);
  return x % n;
}

long TrialRng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar random_scalar(const FieldContext& ctx, TrialRng& rng) {
  if (ctx.is_prime()) return Scalar::residue(ctx, rng.below(ctx.characteristic()));
  long num = rng.between(-9, 9);
  long den = rng.between(1, 9);
  return ctx.fraction(num, den);
}

Scalar random_nonzero_scalar(const FieldContext& ctx, TrialRng& rng) {
  for (;;) {
    Scalar s = random_scalar(ctx, rng);
    if (!s.is_zero()) return s;
  }
}

VectorK random_vector(const FieldContext& ctx, std::size_t n, TrialRng& rng) {
  VectorK v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(ctx, rng));
  return v;
}

MatrixK random_matrix(const FieldContext& ctx, std::size_t rows, std::size_t cols, TrialRng& rng) {
  MatrixK m(ctx, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(ctx, rng);
  return m;
}

MatrixK random_invertible(const FieldContext& ctx, std::size_t n, TrialRng& rng) {
  for (;;) {
    MatrixK m = random_matrix(ctx, n, n, rng);
    if (!determinant(m).is_zero()) return m;
  }
}

MatrixK random_special_linear(const FieldContext& ctx, std::size_t n, TrialRng& rng) {
  MatrixK m = random_invertible(ctx, n, rng);
  Scalar inv = determinant(m).inverse();
  for (std::size_t j = 0; j < n; ++j) m(0, j) *= inv;
  return m;
}

}  // namespace ckit
