#include "ckit/cubic27/theta.hpp"

#include "ckit/jordan/cubic.hpp"
#include "ckit/jordan/octonion_plane.hpp"

namespace ckit::cubic27 {

using jordan::HermitianMatrix;

namespace {

struct Slot {
  int sign;
  const char* var;
};

// Slot table of theta: r1, r2, r3, then x1, x2, x3 each as a Cayley pair
// (A11, A12, A21, A22, B11, B12, B21, B22), placed as
// [[r1, conj x3, conj x2], [x3, r2, x1], [x2, conj x1, r3]].
// Relative to the displayed Cayley pairs, both blocks of x3 are conjugated by
// J = [[0,1],[-1,0]] and the signs of c22 (in x2) and c21 (in x3) are flipped;
// only with these changes does det3 o theta reproduce beta.
constexpr Slot kSlots[27] = {
    {+1, "b13"}, {+1, "c31"}, {-1, "a11"},
    {+1, "a21"}, {-1, "c33"}, {+1, "a31"}, {+1, "c32"}, {+1, "b31"}, {-1, "b21"}, {-1, "b32"}, {+1, "b22"},
    {+1, "a12"}, {+1, "a13"}, {-1, "b33"}, {+1, "b23"}, {-1, "c22"}, {-1, "c23"}, {-1, "c12"}, {-1, "c13"},
    {-1, "a22"}, {-1, "a23"}, {-1, "a32"}, {-1, "a33"}, {-1, "c21"}, {-1, "b11"}, {-1, "c11"}, {+1, "b12"},
};

}  // namespace

HermitianMatrix theta_map(const GridTriple& t) {
  const FieldContext& ctx = t.context();
  const VectorK v = t.to_vector();
  VectorK s;
  for (const auto& slot : kSlots) {
    const Scalar& x = v[point_from_label(slot.var)];
    s.push_back(slot.sign > 0 ? x : -x);
  }
  comp::AlgebraTag o(comp::Kind::O, ctx);
  auto octonion = [&](std::size_t off) { return comp::CompElement(o, VectorK(s.begin() + off, s.begin() + off + 8)); };
  HermitianMatrix a(o, 3);
  for (std::size_t i = 0; i < 3; ++i) a.set_diag(i, s[i]);
  a.set_entry(1, 2, octonion(3));
  a.set_entry(2, 0, octonion(11));
  a.set_entry(1, 0, octonion(19));
  return a;
}

MatrixK theta_matrix(const FieldContext& ctx) {
  std::vector<VectorK> cols;
  for (std::size_t v = 0; v < kPoints; ++v)
    cols.push_back(theta_map(GridTriple::from_vector(ctx, unit_vector(ctx, kPoints, v))).coordinates());
  return MatrixK::from_columns(ctx, kPoints, cols);
}

GridTriple theta_preimage(const HermitianMatrix& a) {
  if (a.tag().kind() != comp::Kind::O || a.n() != 3) throw PreconditionError("theta_preimage needs H_3(O)");
  auto x = solve(theta_matrix(a.context()), a.coordinates());
  if (!x) throw Error("theta matrix is not invertible");
  return GridTriple::from_vector(a.context(), *x);
}

Polynomial det_theta_polynomial() {
  const FieldContext q = FieldContext::rationals();
  MatrixK m = theta_matrix(q);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < kPoints; ++i) {
    Polynomial p;
    for (std::size_t j = 0; j < kPoints; ++j) {
      const mpq_class& c = m(i, j).rational();
      if (c == 0) continue;
      p += Polynomial::monomial(c.get_num().get_si(), {static_cast<std::uint16_t>(j)});
    }
    images.push_back(p);
  }
  return jordan::CubicData::octonion().det().compose(images);
}

Report singular_locus_check(const GridTriple& t) {
  HermitianMatrix a = theta_map(t);
  const bool grad_zero = is_zero_vector(beta_gradient(t));
  const bool quadrics = is_zero_vector(jordan::octonion_quadrics(a));
  const bool rank_le_one = a.is_zero() || jordan::jordan_rank_one(a);
  Report rep;
  Json detail{{"gradient_zero", grad_zero}, {"quadrics_vanish", quadrics}, {"rank_at_most_one", rank_le_one}};
  if (!(grad_zero == quadrics && quadrics == rank_le_one)) detail["point"] = vector_to_json(t.to_vector());
  rep.add("singular_locus_equivalence", grad_zero == quadrics && quadrics == rank_le_one, detail);
  return rep;
}

GridTriple random_grid(const FieldContext& ctx, TrialRng& rng) {
  return GridTriple::from_vector(ctx, random_vector(ctx, kPoints, rng));
}

}  // namespace ckit::cubic27
