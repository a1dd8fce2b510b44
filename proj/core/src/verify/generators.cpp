#include "ckit/verify/generators.hpp"

namespace ckit::verify {

using comp::AlgebraTag;
using comp::CompElement;
using comp::Kind;

Scalar sparse_scalar(const FieldContext& ctx, TrialRng& rng) {
  return rng.coin() ? ctx.zero() : random_scalar(ctx, rng);
}

jordan::Triple random_triple(const AlgebraTag& tag, std::size_t n, TrialRng& rng) {
  jordan::Triple z;
  for (std::size_t t = 0; t < n; ++t) z.push_back(comp::random_element(tag, rng));
  return z;
}

jordan::Triple random_associative_triple(const FieldContext& ctx, TrialRng& rng) {
  AlgebraTag o(Kind::O, ctx);
  auto gen = [&] { return rng.coin() ? comp::random_isotropic(o, rng) : comp::random_element(o, rng); };
  CompElement u = gen(), v = gen();
  const CompElement span[] = {CompElement::one(o), u, v, u * v};
  jordan::Triple z;
  for (int t = 0; t < 3; ++t) {
    CompElement x = CompElement::zero(o);
    for (const auto& b : span) x += sparse_scalar(ctx, rng) * b;
    z.push_back(x);
  }
  return z;
}

}  // namespace ckit::verify
