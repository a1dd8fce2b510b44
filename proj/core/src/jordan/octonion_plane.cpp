#include "ckit/jordan/octonion_plane.hpp"

namespace ckit::jordan {

using comp::conj;
using comp::mul;
using comp::norm_q;

namespace {

void require_o3(const HermitianMatrix& a) {
  if (a.tag().kind() != Kind::O || a.n() != 3)
    throw PreconditionError("expected an element of H_3(O)");
}

// A = scale * nu2(z) for z = L_A(y), if z is associative and nu2(z) is a nonzero multiple of A.
std::optional<Classification> try_column(const HermitianMatrix& a, const Triple& y,
                                         const std::string& route) {
  const AlgebraTag& tag = a.tag();
  Triple z;
  bool all_zero = true;
  for (std::size_t t = 0; t < 3; ++t) {
    CompElement s = CompElement::zero(tag);
    for (std::size_t u = 0; u < 3; ++u)
      if (!y[u].is_zero()) s += mul(a.entry(t, u), y[u]);
    all_zero = all_zero && s.is_zero();
    z.push_back(s);
  }
  if (all_zero || !generates_associative(z)) return std::nullopt;
  HermitianMatrix v = veronese(z);
  VectorK vc = v.coordinates(), ac = a.coordinates();
  std::size_t k = 0;
  while (k < ac.size() && ac[k].is_zero()) ++k;
  if (k == ac.size() || vc[k].is_zero()) return std::nullopt;
  Scalar c = vc[k] / ac[k];
  if (v != c * a) return std::nullopt;
  Classification out;
  out.cls = PlaneClass::X1;
  out.route = route;
  out.triple = z;
  out.scale = c.inverse();
  return out;
}

Triple unit_slots(const AlgebraTag& tag, std::size_t i, std::size_t j, const CompElement& x) {
  Triple y(3, CompElement::zero(tag));
  y[i] = CompElement::one(tag);
  if (j != i) y[j] = x;
  return y;
}

std::vector<CompElement> mixing_candidates(const AlgebraTag& tag) {
  std::vector<CompElement> xs{CompElement::one(tag)};
  for (std::size_t k = 0; k < tag.dim(); ++k) xs.push_back(CompElement::basis(tag, k));
  for (std::size_t k = 0; k < tag.dim(); ++k)
    for (std::size_t l = k + 1; l < tag.dim(); ++l) {
      xs.push_back(CompElement::basis(tag, k) + CompElement::basis(tag, l));
      xs.push_back(CompElement::basis(tag, k) - CompElement::basis(tag, l));
    }
  return xs;
}

std::optional<Classification> search_mixed(const HermitianMatrix& a, const std::string& route,
                                           bool any_pair) {
  const AlgebraTag& tag = a.tag();
  auto xs = mixing_candidates(tag);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!any_pair && comp::re(a.upper(i, j)).is_zero()) continue;
      for (const auto& x : xs) {
        if (auto c = try_column(a, unit_slots(tag, i, j, x), route)) return c;
        if (auto c = try_column(a, unit_slots(tag, j, i, x), route)) return c;
      }
    }
  if (!any_pair) return std::nullopt;
  // Generic columns: z = L_A(y) works whenever Q(sum conj(z_u) y_u) != 0.
  for (std::uint64_t trial = 0; trial < 256; ++trial) {
    TrialRng rng(0, stream_id("classify"), trial);
    Triple y;
    for (int u = 0; u < 3; ++u) {
      VectorK v = zero_vector(tag.context(), tag.dim());
      for (auto& s : v) s = tag.context().from_int(rng.between(-1, 1));
      y.emplace_back(tag, v);
    }
    if (auto c = try_column(a, y, route)) return c;
  }
  return std::nullopt;
}

}  // namespace

VectorK minor_residuals(const HermitianMatrix& a) {
  if (a.n() != 3) throw PreconditionError("minor residuals need n = 3");
  auto e = [&](std::size_t i, std::size_t j) { return a.entry(i, j); };
  const Scalar &a11 = a.diag(0), &a22 = a.diag(1), &a33 = a.diag(2);
  VectorK r{a11 * a22 - norm_q(e(0, 1)), a11 * a33 - norm_q(e(0, 2)), a22 * a33 - norm_q(e(1, 2))};
  CompElement q4 = a11 * e(1, 2) - mul(e(1, 0), e(0, 2));
  CompElement q5 = mul(e(2, 1), e(1, 0)) - a22 * e(2, 0);
  CompElement q6 = a33 * e(1, 0) - mul(e(1, 2), e(2, 0));
  for (const auto* q : {&q4, &q5, &q6}) r.insert(r.end(), q->coords().begin(), q->coords().end());
  return r;
}

VectorK octonion_quadrics(const HermitianMatrix& a) {
  require_o3(a);
  return minor_residuals(a);
}

Classification classify_rank_one_octonion(const HermitianMatrix& a) {
  require_o3(a);
  if (a.is_zero()) throw PreconditionError("classification needs A != 0");
  if (!is_zero_vector(octonion_quadrics(a))) throw NotRankOne("quadric residuals do not vanish");
  const AlgebraTag& tag = a.tag();

  for (std::size_t i = 0; i < 3; ++i) {
    if (a.diag(i).is_zero()) continue;
    if (auto c = try_column(a, unit_slots(tag, i, i, CompElement::zero(tag)), "diagonal")) return *c;
    throw Error("diagonal route failed to rebuild a preimage");
  }

  if (auto c = search_mixed(a, "mixed", false)) return *c;

  std::vector<CompElement> entries{a.entry(1, 0), a.entry(2, 0), a.entry(2, 1)};
  for (const auto& x : entries)
    if (!comp::re(x).is_zero()) throw Error("mixed route failed with a nonzero real part");
  for (const auto& x : entries)
    for (const auto& y : entries)
      if (!mul(x, y).is_zero()) throw Error("off-diagonal entries do not multiply to zero");
  std::vector<VectorK> vs;
  for (const auto& x : entries) vs.push_back(x.coords());
  SubspaceK span = SubspaceK::span(tag.context(), tag.dim(), vs);
  if (span.dim() == 2) {
    Classification out;
    out.cls = PlaneClass::X0;
    out.route = "null_plane";
    for (const auto& v : span.basis_vectors()) out.plane.emplace_back(tag, v);
    return out;
  }
  if (auto c = search_mixed(a, "isotropic_line", true)) return *c;
  throw Error("no Veronese preimage found on the isotropic-line route");
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["class"] = c.cls == PlaneClass::X0 ? "X0" : "X1";
  j["route"] = c.route;
  Json w;
  if (c.cls == PlaneClass::X0) {
    Json plane = Json::array();
    for (const auto& x : c.plane) plane.push_back(comp::element_to_json(x));
    w["plane"] = plane;
  } else {
    w["triple"] = triple_to_json(c.triple);
    w["scale"] = scalar_to_json(c.scale);
  }
  j["witness"] = w;
  return j;
}

HermitianMatrix null_plane_matrix(const CompElement& a, const CompElement& b, const CompElement& c) {
  HermitianMatrix m(a.tag(), 3);
  m.set_entry(1, 0, a);
  m.set_entry(2, 0, b);
  m.set_entry(2, 1, c);
  return m;
}

std::optional<std::pair<CompElement, CompElement>> find_null_plane(const FieldContext& fp) {
  AlgebraTag tag(Kind::O, fp);
  std::vector<CompElement> null;
  for (const auto& x : comp::all_elements(tag)) {
    if (x.is_zero() || !comp::re(x).is_zero() || !norm_q(x).is_zero()) continue;
    if (!mul(x, x).is_zero()) continue;
    null.push_back(x);
  }
  for (std::size_t i = 0; i < null.size(); ++i)
    for (std::size_t j = i + 1; j < null.size(); ++j) {
      const auto &a = null[i], &b = null[j];
      if (!mul(a, b).is_zero() || !mul(b, a).is_zero()) continue;
      if (SubspaceK::span(fp, 8, {a.coords(), b.coords()}).dim() != 2) continue;
      return std::make_pair(a, b);
    }
  return std::nullopt;
}

CompElement lift_to_rationals(const CompElement& x) {
  const FieldContext q = FieldContext::rationals();
  const long p = x.context().characteristic();
  VectorK v;
  for (const auto& s : x.coords()) {
    long r = s.residue();
    if (r > p / 2) r -= p;
    v.push_back(q.from_int(r));
  }
  return CompElement(AlgebraTag(x.tag().kind(), q), v);
}

bool proportional(const HermitianMatrix& x, const HermitianMatrix& y) {
  VectorK xc = x.coordinates(), yc = y.coordinates();
  std::size_t k = 0;
  while (k < yc.size() && yc[k].is_zero()) ++k;
  if (k == yc.size()) return x.is_zero();
  return x == (xc[k] / yc[k]) * y;
}

std::optional<ScalingWitness> find_scaling_failure(const FieldContext& fp) {
  AlgebraTag tag(Kind::O, fp);
  const auto elems = comp::all_elements(tag);
  std::vector<CompElement> units;
  for (const auto& x : elems)
    if (!norm_q(x).is_zero()) units.push_back(x);
  for (const auto& z1 : elems) {
    // z1 = 0 gives nu2(z lambda) = Q(lambda) nu2(z).
    if (z1.is_zero()) continue;
    for (const auto& z2 : elems) {
      Triple z{z1, z2};
      HermitianMatrix v = veronese(z);
      if (v.is_zero()) continue;
      for (const auto& lam : units) {
        Triple zl{mul(z1, lam), mul(z2, lam)};
        HermitianMatrix w = veronese(zl);
        if (!proportional(w, v)) return ScalingWitness{z, lam, v, w};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ckit::jordan
