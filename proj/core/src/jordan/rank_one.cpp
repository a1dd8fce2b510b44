#include "ckit/jordan/rank_one.hpp"

#include "ckit/jordan/cubic.hpp"
#include "ckit/jordan/octonion_plane.hpp"

namespace ckit::jordan {

using comp::conj;
using comp::mul;
using comp::norm_q;
using comp::Side;

namespace {

void require_nonzero(const HermitianMatrix& a) {
  if (a.is_zero()) throw PreconditionError("rank-one tests need A != 0");
}

const AlgebraTag& family_tag(const Triple& z) {
  if (z.empty()) throw PreconditionError("empty family");
  for (const auto& x : z)
    if (!(x.tag() == z[0].tag())) throw ContextMismatch("family mixes algebras");
  return z[0].tag();
}

// U_A B with A# supplied, for the octonionic route.
HermitianMatrix u_with_sharp(const HermitianMatrix& a, const HermitianMatrix& sharp,
                             const HermitianMatrix& sharp_sharp, const HermitianMatrix& b) {
  HermitianMatrix c = adjoint(sharp + b) - sharp_sharp - adjoint(b);
  return trace_form(a, b) * a - c;
}

}  // namespace

bool rank_one_identity_at(const HermitianMatrix& a, const HermitianMatrix& b) {
  return u_operator(a, b) == trace_form(a, b) * a;
}

bool jordan_rank_one(const HermitianMatrix& a) {
  require_nonzero(a);
  auto basis = HermitianMatrix::basis(a.tag(), a.n());
  if (a.tag().kind() == Kind::O && a.n() == 3) {
    HermitianMatrix sharp = adjoint(a);
    HermitianMatrix sharp_sharp = adjoint(sharp);
    for (const auto& b : basis)
      if (u_with_sharp(a, sharp, sharp_sharp, b) != trace_form(a, b) * a) return false;
    return true;
  }
  for (const auto& b : basis)
    if (!rank_one_identity_at(a, b)) return false;
  return true;
}

bool minors_rank_one_3(const HermitianMatrix& a) {
  if (a.n() != 3) throw PreconditionError("minor test needs n = 3");
  require_nonzero(a);
  return is_zero_vector(minor_residuals(a));
}

MatrixK l_operator(const HermitianMatrix& a) {
  if (a.tag().kind() == Kind::O) throw PreconditionError("L_A is defined for associative tags");
  const std::size_t n = a.n(), d = a.tag().dim();
  MatrixK m(a.context(), n * d, n * d);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t u = 0; u < n; ++u) {
      MatrixK blk = comp::mul_operator(a.entry(t, u), Side::Left);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) m(t * d + i, u * d + k) = blk(i, k);
    }
  return m;
}

Report l_rank_tests(const HermitianMatrix& a) {
  require_nonzero(a);
  const std::size_t d = a.tag().dim();
  const std::size_t r = rank(l_operator(a));
  const bool r1 = jordan_rank_one(a);
  Json detail{{"rank_L_A", r}, {"dim_A", d}, {"rank_one", r1}, {"A", hermitian_to_json(a)}};
  Report rep;
  rep.add("rank_divisible_by_dim", r % d == 0, detail);
  rep.add("rank_equals_dim_iff_rank_one", (r == d) == r1, detail);
  return rep;
}

SquareTest square_test(const HermitianMatrix& a) {
  if (a.n() != 3) throw PreconditionError("square test needs n = 3");
  require_nonzero(a);
  HermitianMatrix sq = u_operator(a, HermitianMatrix::identity(a.tag(), 3));
  return {sq == trace(a) * a, jordan_rank_one(a)};
}

bool generates_associative(const Triple& z) {
  const AlgebraTag& tag = family_tag(z);
  if (tag.associative()) return true;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      for (std::size_t k = j + 1; k < z.size(); ++k)
        if (!comp::associator(z[i], z[j], z[k]).is_zero()) return false;
  return true;
}

HermitianMatrix veronese(const Triple& z) {
  const AlgebraTag& tag = family_tag(z);
  if (!generates_associative(z))
    throw NonAssociative("octonionic family does not generate an associative subalgebra");
  HermitianMatrix a(tag, z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    a.set_diag(i, norm_q(z[i]));
    for (std::size_t j = i + 1; j < z.size(); ++j) a.set_upper(i, j, mul(z[i], conj(z[j])));
  }
  return a;
}

bool indeterminacy_member(const Triple& z) {
  const AlgebraTag& tag = family_tag(z);
  if (tag.kind() != Kind::C && tag.kind() != Kind::H)
    throw PreconditionError("indeterminacy locus is handled for C and H only");
  const std::size_t d = tag.dim();
  MatrixK m(tag.context(), z.size() * d, d);
  for (std::size_t t = 0; t < z.size(); ++t) {
    MatrixK blk = comp::mul_operator(z[t], Side::Left);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) m(t * d + i, k) = blk(i, k);
  }
  return rank(m) < d;
}

Report indeterminacy_report(const Triple& z) {
  bool member = indeterminacy_member(z);
  bool vanishes = veronese(z).is_zero();
  Report rep;
  rep.add("member_iff_nu2_zero", member == vanishes,
          Json{{"member", member}, {"nu2_zero", vanishes}, {"z", triple_to_json(z)}});
  return rep;
}

MatrixK symplectic_base_point(const FieldContext& ctx, std::size_t n) {
  MatrixK i(ctx, 2 * n, 2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    i(2 * t, 2 * t + 1) = -ctx.one();
    i(2 * t + 1, 2 * t) = ctx.one();
  }
  return i;
}

MatrixK scorza_map(const HermitianMatrix& a) {
  if (a.tag().kind() != Kind::H) throw PreconditionError("scorza_map needs tag H");
  const std::size_t n = a.n();
  MatrixK m(a.context(), 2 * n, 2 * n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t u = 0; u < n; ++u) {
      // Left multiplication by x on [[p,0],[q,0]] acts on (p,q) through x itself.
      MatrixK blk = a.entry(t, u).block();
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) m(2 * t + i, 2 * u + k) = blk(i, k);
    }
  return symplectic_base_point(a.context(), n) * m;
}

namespace {

struct PreimageSearch {
  const HermitianMatrix& target;  // already divided by the scale
  bool any_family;
  const std::vector<CompElement>& elements;
  Triple z;

  bool extend(std::size_t t) {
    const std::size_t n = target.n();
    if (t == n) return any_family || generates_associative(z);
    const AlgebraTag& tag = target.tag();
    const FieldContext& ctx = tag.context();
    const Scalar& qt = target.diag(t);
    if (t == 0) {
      for (const auto& x : elements) {
        if (norm_q(x) != qt) continue;
        z.push_back(x);
        if (extend(1)) return true;
        z.pop_back();
      }
      return false;
    }
    // w = conj(z_t) solves z_s w = a_st for all s < t.
    const std::size_t d = tag.dim();
    MatrixK m(ctx, t * d, d);
    VectorK rhs;
    for (std::size_t s = 0; s < t; ++s) {
      MatrixK blk = comp::mul_operator(z[s], Side::Left);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) m(s * d + i, k) = blk(i, k);
      const auto& c = target.upper(s, t).coords();
      rhs.insert(rhs.end(), c.begin(), c.end());
    }
    auto part = solve(m, rhs);
    if (!part) return false;
    SubspaceK ker = kernel(m);
    const std::uint64_t p = ctx.characteristic();
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < ker.dim(); ++k) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      VectorK w = *part;
      std::uint64_t r = idx;
      for (std::size_t k = 0; k < ker.dim(); ++k) {
        Scalar c = Scalar::residue(ctx, r % p);
        r /= p;
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i) w[i] += c * ker.basis()(k, i);
      }
      CompElement wz(tag, w);
      if (norm_q(wz) != qt) continue;
      z.push_back(conj(wz));
      if (extend(t + 1)) return true;
      z.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Preimage> find_veronese_preimage(const HermitianMatrix& a, bool any_family) {
  const FieldContext& ctx = a.context();
  if (!ctx.is_prime()) throw PreconditionError("preimage search runs over prime fields");
  const std::vector<CompElement> elements = comp::all_elements(a.tag());
  for (std::uint32_t c = 1; c < ctx.characteristic(); ++c) {
    Scalar scale = Scalar::residue(ctx, c);
    HermitianMatrix target = scale.inverse() * a;
    PreimageSearch search{target, any_family, elements, {}};
    if (search.extend(0)) return Preimage{search.z, scale};
  }
  return std::nullopt;
}

Json triple_to_json(const Triple& z) {
  Json arr = Json::array();
  for (const auto& x : z) arr.push_back(comp::element_to_json(x));
  return arr;
}

}  // namespace ckit::jordan
