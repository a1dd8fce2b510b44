#include "ckit/jordan/cubic.hpp"

namespace ckit::jordan {

namespace {

constexpr std::size_t kDim = 27;

long integral(const Scalar& s) {
  const mpq_class& q = s.rational();
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw Error("trace-form Gram inverse is not integral");
  return q.get_num().get_si();
}

Kind require_n3(const HermitianMatrix& a) {
  if (a.n() != 3) throw PreconditionError("adjoint and cross need n = 3");
  return a.tag().kind();
}

}  // namespace

CubicData::CubicData() {
  const FieldContext q = FieldContext::rationals();
  const AlgebraTag tag(Kind::O, q);
  det_ = interpolate_cubic_form(kDim, [&](const VectorK& x) {
    return det3(HermitianMatrix::from_coordinates(tag, 3, x));
  });
  for (std::size_t v = 0; v < kDim; ++v) {
    grad_.push_back(det_.derivative(static_cast<std::uint16_t>(v)));
    std::vector<Term> terms;
    for (const auto& [m, c] : grad_.back().terms()) {
      if (m.size() != 2) throw Error("gradient of the cubic is not quadratic");
      terms.push_back({static_cast<long>(c), m[0], m[1]});
    }
    grad_terms_.push_back(std::move(terms));
  }
  MatrixK gi = inverse(trace_form_gram(tag, 3));
  ginv_.assign(kDim, std::vector<long>(kDim, 0));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) ginv_[i][j] = integral(gi(i, j));
}

const CubicData& CubicData::octonion() {
  static const CubicData data;
  return data;
}

VectorK CubicData::gradient_at(const FieldContext& ctx, const VectorK& x) const {
  if (x.size() != kDim) throw PreconditionError("cubic data expects 27 coordinates");
  VectorK g = zero_vector(ctx, kDim);
  for (std::size_t v = 0; v < kDim; ++v)
    for (const auto& t : grad_terms_[v]) {
      if (x[t.a].is_zero() || x[t.b].is_zero()) continue;
      g[v] += ctx.from_int(t.coef) * x[t.a] * x[t.b];
    }
  return g;
}

VectorK CubicData::adjoint_coords(const FieldContext& ctx, const VectorK& x) const {
  VectorK g = gradient_at(ctx, x);
  VectorK out = zero_vector(ctx, kDim);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      long c = ginv_[i][j];
      if (c == 0 || g[j].is_zero()) continue;
      out[i] += ctx.from_int(c) * g[j];
    }
  return out;
}

HermitianMatrix adjoint(const HermitianMatrix& a) {
  Kind kind = require_n3(a);
  HermitianMatrix big = kind == Kind::O ? a : embed(a, Kind::O);
  const CubicData& cd = CubicData::octonion();
  HermitianMatrix adj = HermitianMatrix::from_coordinates(
      big.tag(), 3, cd.adjoint_coords(a.context(), big.coordinates()));
  if (kind == Kind::O) return adj;
  auto back = restrict_to(adj, kind);
  if (!back) throw Error("adjoint left the associative subalgebra");
  return *back;
}

HermitianMatrix cross(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_n3(a);
  return adjoint(a + b) - adjoint(a) - adjoint(b);
}

Scalar det3_directional(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_n3(a);
  HermitianMatrix big_a = a.tag().kind() == Kind::O ? a : embed(a, Kind::O);
  HermitianMatrix big_b = b.tag().kind() == Kind::O ? b : embed(b, Kind::O);
  VectorK g = CubicData::octonion().gradient_at(a.context(), big_a.coordinates());
  VectorK bc = big_b.coordinates();
  Scalar s = a.context().zero();
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * bc[i];
  return s;
}

}  // namespace ckit::jordan
