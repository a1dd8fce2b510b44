#include "ckit/calgmod/submodule.hpp"

#include <algorithm>

namespace ckit::calgmod {

using comp::conj;
using comp::mul;

namespace {

void require_c_or_h(const AlgebraTag& tag) {
  if (tag.kind() != Kind::C && tag.kind() != Kind::H)
    throw PreconditionError("right submodules are handled for C and H");
}

std::vector<VectorK> right_translates(const AlgebraTag& tag, const VectorK& v, std::size_t n) {
  std::vector<VectorK> out;
  ModVector mv = unflatten(tag, n, v);
  for (std::size_t k = 0; k < tag.dim(); ++k)
    out.push_back(flatten(right_mul(mv, CompElement::basis(tag, k))));
  return out;
}

// Columns [u d, u d + d) for the listed coordinates u, applied to the basis of s.
MatrixK projection_matrix(const SubspaceK& s, const std::vector<std::size_t>& coords, std::size_t d) {
  MatrixK m(s.context(), coords.size() * d, s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t c = 0; c < coords.size(); ++c)
      for (std::size_t k = 0; k < d; ++k) m(c * d + k, i) = s.basis()(i, coords[c] * d + k);
  return m;
}

std::size_t projection_rank(const SubspaceK& s, const std::vector<std::size_t>& coords, std::size_t d) {
  if (s.dim() == 0) return 0;
  return rank(projection_matrix(s, coords, d));
}

VectorK combine(const SubspaceK& s, const VectorK& c) {
  VectorK v = zero_vector(s.context(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!c[i].is_zero()) v = add(v, scale(c[i], s.basis().row(i)));
  return v;
}

// Some v in s whose coordinates at coords equal target.
std::optional<VectorK> lift(const SubspaceK& s, const std::vector<std::size_t>& coords, std::size_t d,
                            const VectorK& target) {
  auto c = solve(projection_matrix(s, coords, d), target);
  if (!c) return std::nullopt;
  return combine(s, *c);
}

SubspaceK vanishing_at(const SubspaceK& s, const std::vector<std::size_t>& coords, std::size_t d) {
  if (s.dim() == 0) return s;
  SubspaceK ker = kernel(projection_matrix(s, coords, d));
  std::vector<VectorK> vs;
  for (const auto& c : ker.basis_vectors()) vs.push_back(combine(s, c));
  return SubspaceK::span(s.context(), s.ambient_dim(), vs);
}

SubspaceK cyclic(const AlgebraTag& tag, std::size_t n, const VectorK& v) {
  return SubspaceK::span(tag.context(), n * tag.dim(), right_translates(tag, v, n));
}

VectorK conj_all(const AlgebraTag& tag, std::size_t n, const VectorK& v) {
  ModVector mv = unflatten(tag, n, v);
  for (auto& x : mv) x = conj(x);
  return flatten(mv);
}

RightSubmodule conjugate_space(const AlgebraTag& tag, std::size_t n, const SubspaceK& s) {
  std::vector<VectorK> vs;
  for (const auto& v : s.basis_vectors()) vs.push_back(conj_all(tag, n, v));
  return RightSubmodule(tag, n, SubspaceK::span(tag.context(), n * tag.dim(), vs));
}

// Coordinates of A^n e (plus) or A^n f (minus) inside K^{n d}.
std::vector<std::size_t> component_coords(Kind kind, std::size_t n, bool plus) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < n; ++t) {
    if (kind == Kind::C) {
      out.push_back(t * 2 + (plus ? 0 : 1));
    } else {
      out.push_back(t * 4 + (plus ? 0 : 1));
      out.push_back(t * 4 + (plus ? 2 : 3));
    }
  }
  return out;
}

SubspaceK restrict_coords(const SubspaceK& s, const std::vector<std::size_t>& coords) {
  std::vector<VectorK> vs;
  for (const auto& v : s.basis_vectors()) {
    VectorK w;
    for (auto c : coords) w.push_back(v[c]);
    vs.push_back(w);
  }
  return SubspaceK::span(s.context(), coords.size(), vs);
}

std::vector<VectorK> extend_coords(const SubspaceK& s, const std::vector<std::size_t>& coords,
                                   std::size_t ambient) {
  std::vector<VectorK> vs;
  for (const auto& v : s.basis_vectors()) {
    VectorK w = zero_vector(s.context(), ambient);
    for (std::size_t i = 0; i < coords.size(); ++i) w[coords[i]] = v[i];
    vs.push_back(w);
  }
  return vs;
}

}  // namespace

VectorK flatten(const ModVector& v) {
  VectorK out;
  for (const auto& x : v) out.insert(out.end(), x.coords().begin(), x.coords().end());
  return out;
}

ModVector unflatten(const AlgebraTag& tag, std::size_t n, const VectorK& c) {
  const std::size_t d = tag.dim();
  if (c.size() != n * d) throw PreconditionError("vector has the wrong length for A^n");
  ModVector out;
  for (std::size_t u = 0; u < n; ++u)
    out.emplace_back(tag, VectorK(c.begin() + u * d, c.begin() + (u + 1) * d));
  return out;
}

ModVector right_mul(const ModVector& v, const CompElement& l) {
  ModVector out;
  for (const auto& x : v) out.push_back(mul(x, l));
  return out;
}

MatrixK right_mult_operator(const CompElement& l, std::size_t n) {
  const std::size_t d = l.tag().dim();
  MatrixK blk = comp::mul_operator(l, comp::Side::Right);
  MatrixK m(l.context(), n * d, n * d);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) m(u * d + i, u * d + k) = blk(i, k);
  return m;
}

CompElement unit_e(const AlgebraTag& tag) {
  require_c_or_h(tag);
  return CompElement::basis(tag, 0);
}

CompElement unit_f(const AlgebraTag& tag) {
  require_c_or_h(tag);
  return CompElement::basis(tag, tag.kind() == Kind::C ? 1 : 3);
}

CompElement unit_h(const AlgebraTag& tag) {
  if (tag.kind() != Kind::H) throw PreconditionError("h is defined in H");
  return CompElement::basis(tag, 1) + CompElement::basis(tag, 2);
}

bool RightSubmodule::is_closed(const AlgebraTag& tag, std::size_t n, const SubspaceK& space) {
  require_c_or_h(tag);
  if (space.ambient_dim() != n * tag.dim()) return false;
  for (const auto& v : space.basis_vectors())
    for (const auto& w : right_translates(tag, v, n))
      if (!space.contains(w)) return false;
  return true;
}

RightSubmodule::RightSubmodule(AlgebraTag tag, std::size_t n, SubspaceK space)
    : tag_(tag), n_(n), space_(std::move(space)) {
  if (!is_closed(tag_, n_, space_)) throw NotSubmodule("subspace is not closed under right multiplication");
}

RightSubmodule RightSubmodule::zero(const AlgebraTag& tag, std::size_t n) {
  return RightSubmodule(tag, n, SubspaceK::zero(tag.context(), n * tag.dim()));
}

RightSubmodule RightSubmodule::full(const AlgebraTag& tag, std::size_t n) {
  return RightSubmodule(tag, n, SubspaceK::full(tag.context(), n * tag.dim()));
}

bool RightSubmodule::is_free() const {
  if (tag_.kind() == Kind::H) return dim() % 4 == 0;
  PlusMinus pm = decompose_pm(*this);
  return pm.plus.dim() == pm.minus.dim();
}

std::size_t RightSubmodule::free_rank() const {
  if (!is_free()) throw PreconditionError("module is not free");
  return dim() / tag_.dim();
}

Span module_span(const AlgebraTag& tag, std::size_t n, const std::vector<ModVector>& vs) {
  require_c_or_h(tag);
  std::vector<VectorK> all;
  for (const auto& v : vs) {
    if (v.size() != n) throw PreconditionError("vector has the wrong rank");
    auto t = right_translates(tag, flatten(v), n);
    all.insert(all.end(), t.begin(), t.end());
  }
  RightSubmodule m(tag, n, SubspaceK::span(tag.context(), n * tag.dim(), all));
  return {m, m.dim() == tag.dim() * vs.size()};
}

PlusMinus decompose_pm(const RightSubmodule& e) {
  const auto& tag = e.tag();
  SubspaceK ae = image(right_mult_operator(unit_e(tag), e.n()));
  SubspaceK af = image(right_mult_operator(unit_f(tag), e.n()));
  return {e.space().intersect(ae), e.space().intersect(af)};
}

GrassmannDatum grassmann_iso(const RightSubmodule& e) {
  if (!e.is_free()) throw PreconditionError("grassmann_iso needs a free module");
  PlusMinus pm = decompose_pm(e);
  const Kind kind = e.tag().kind();
  GrassmannDatum g;
  g.kind = kind;
  g.plus = restrict_coords(pm.plus, component_coords(kind, e.n(), true));
  if (kind == Kind::C) g.minus = restrict_coords(pm.minus, component_coords(kind, e.n(), false));
  return g;
}

RightSubmodule grassmann_inverse(const GrassmannDatum& g, const FieldContext& ctx, std::size_t n) {
  AlgebraTag tag(g.kind, ctx);
  const std::size_t ambient = n * tag.dim();
  std::vector<VectorK> vs = extend_coords(g.plus, component_coords(g.kind, n, true), ambient);
  if (g.kind == Kind::C) {
    auto minus = extend_coords(g.minus, component_coords(g.kind, n, false), ambient);
    vs.insert(vs.end(), minus.begin(), minus.end());
  } else {
    MatrixK rh = right_mult_operator(unit_h(tag), n);
    const std::size_t k = vs.size();
    for (std::size_t i = 0; i < k; ++i) vs.push_back(rh.apply(vs[i]));
  }
  return RightSubmodule(tag, n, SubspaceK::span(ctx, ambient, vs));
}

std::vector<ModVector> paired_generators(const RightSubmodule& e) {
  if (e.tag().kind() != Kind::C) throw PreconditionError("paired generators are defined for C");
  GrassmannDatum g = grassmann_iso(e);
  std::vector<ModVector> out;
  for (std::size_t t = 0; t < g.plus.dim(); ++t) {
    VectorK v;
    for (std::size_t u = 0; u < e.n(); ++u) {
      v.push_back(g.plus.basis()(t, u));
      v.push_back(g.minus.basis()(t, u));
    }
    out.push_back(unflatten(e.tag(), e.n(), v));
  }
  return out;
}

RightSubmodule dual_perp(const RightSubmodule& y) {
  if (!y.is_free()) throw PreconditionError("dual_perp needs a free module");
  const auto& tag = y.tag();
  const std::size_t n = y.n(), d = tag.dim();
  // a -> sum_u a_u y_u for every basis vector y, stacked.
  MatrixK m(tag.context(), y.dim() * d, n * d);
  auto basis = y.space().basis_vectors();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    ModVector yv = unflatten(tag, n, basis[b]);
    for (std::size_t u = 0; u < n; ++u) {
      MatrixK r = comp::mul_operator(yv[u], comp::Side::Right);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) m(b * d + i, u * d + k) = r(i, k);
    }
  }
  return conjugate_space(tag, n, kernel(m));
}

RightSubmodule dual_perp_via_pairing(const RightSubmodule& y) {
  if (!y.is_free()) throw PreconditionError("dual_perp needs a free module");
  const auto& tag = y.tag();
  const std::size_t n = y.n(), d = tag.dim();
  const CompElement one = CompElement::one(tag);
  MatrixK pairing(tag.context(), n * d, n * d);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        pairing(u * d + i, u * d + k) =
            comp::bilinear(one, mul(CompElement::basis(tag, i), CompElement::basis(tag, k)));
  return conjugate_space(tag, n, orthogonal(y.space(), pairing));
}

std::vector<ModVector> extract_generators(const RightSubmodule& e) {
  const auto& tag = e.tag();
  if (tag.kind() != Kind::H) throw PreconditionError("extract_generators needs tag H");
  const std::size_t n = e.n(), d = 4;
  std::vector<ModVector> gens;
  SubspaceK cur = e.space();
  std::vector<std::size_t> active;
  for (std::size_t t = 0; t < n; ++t) active.push_back(t);

  while (cur.dim() > 0) {
    std::vector<std::size_t> next;
    for (auto t : active) {
      std::size_t r = projection_rank(cur, {t}, d);
      if (r % 2 != 0) throw Error("projection of a submodule has odd rank");
      if (r > 0) next.push_back(t);
    }
    active = next;

    auto full = std::find_if(active.begin(), active.end(),
                             [&](std::size_t t) { return projection_rank(cur, {t}, d) == 4; });
    if (full != active.end()) {
      const std::size_t t = *full;
      VectorK v = *lift(cur, {t}, d, CompElement::one(tag).coords());
      gens.push_back(unflatten(tag, n, v));
      cur = vanishing_at(cur, {t}, d);
      continue;
    }
    if (active.size() == 1) {
      if (cur.dim() != 2) throw Error("single active coordinate with dimension != 2");
      gens.push_back(unflatten(tag, n, cur.basis().row(0)));
      break;
    }
    bool dropped = false;
    for (std::size_t i = 0; i < active.size() && !dropped; ++i)
      for (std::size_t j = i + 1; j < active.size() && !dropped; ++j)
        if (projection_rank(cur, {active[i], active[j]}, d) == 2) {
          // The other coordinates already determine cur.
          active.erase(active.begin() + static_cast<long>(i));
          dropped = true;
        }
    if (dropped) continue;

    const std::size_t t = active[0], u = active[1];
    SubspaceK f = restrict_coords(cur, {t * d, t * d + 1, t * d + 2, t * d + 3,
                                        u * d, u * d + 1, u * d + 2, u * d + 3});
    VectorK xy;
    for (const auto& row : f.basis_vectors())
      if (!is_zero_vector(VectorK(row.begin(), row.begin() + 4))) {
        xy = row;
        break;
      }
    CompElement x(tag, VectorK(xy.begin(), xy.begin() + 4));
    std::vector<CompElement> line;
    for (const auto& row : vanishing_at(f, {0}, d).basis_vectors())
      line.emplace_back(tag, VectorK(row.begin() + 4, row.end()));
    if (line.size() != 2) throw Error("pair projection is not a product of two planes");
    std::vector<CompElement> candidates{line[0], line[1], line[0] + line[1]};
    std::optional<VectorK> v;
    for (const auto& z : candidates) {
      VectorK target = x.coords();
      target.insert(target.end(), z.coords().begin(), z.coords().end());
      if (cyclic(tag, 2, target).dim() != 4) continue;
      v = lift(cur, {t, u}, d, target);
      if (v) break;
    }
    if (!v) throw Error("no free generator found for a two-coordinate projection");
    gens.push_back(unflatten(tag, n, *v));
    cur = vanishing_at(cur, {t, u}, d);
  }
  return gens;
}

RightSubmodule random_free_submodule(const AlgebraTag& tag, std::size_t n, std::size_t r,
                                     TrialRng& rng) {
  if (r > n) throw PreconditionError("rank exceeds n");
  for (;;) {
    std::vector<ModVector> vs;
    for (std::size_t t = 0; t < r; ++t) {
      ModVector v;
      for (std::size_t u = 0; u < n; ++u) v.push_back(comp::random_element(tag, rng));
      vs.push_back(v);
    }
    Span s = module_span(tag, n, vs);
    if (s.free) return s.module;
  }
}

Json submodule_to_json(const RightSubmodule& e) {
  Json j;
  j["alg"] = std::string(1, comp::kind_letter(e.tag().kind()));
  put_context(j, e.tag().context());
  j["n"] = e.n();
  j["dim"] = e.dim();
  Json rows = Json::array();
  for (const auto& v : e.space().basis_vectors()) rows.push_back(vector_to_json(v));
  j["basis"] = rows;
  return j;
}

}  // namespace ckit::calgmod
