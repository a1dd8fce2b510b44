#include <map>

#include "ckit/comp/checks.hpp"
#include "ckit/foundation/parallel.hpp"
#include "ckit/verify/criteria.hpp"

namespace ckit::verify {

using comp::AlgebraTag;
using comp::CompElement;
using comp::Kind;

namespace {

constexpr Kind kAll[] = {Kind::R, Kind::C, Kind::H, Kind::O};
constexpr Kind kSplit[] = {Kind::C, Kind::H, Kind::O};

std::string key(const VectorK& v) {
  std::string k;
  for (const auto& x : v) k += x.to_string() + ",";
  return k;
}

// Isotropic partner for the left-image bullet: half the time z1 w, which lies in L(z1).
CompElement partner(const CompElement& z1, TrialRng& rng) {
  const AlgebraTag& tag = z1.tag();
  if (rng.coin()) {
    for (;;) {
      CompElement y = z1 * comp::random_element(tag, rng);
      if (!y.is_zero()) return y;
    }
  }
  return comp::random_isotropic(tag, rng);
}

}  // namespace

Report field_axioms(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  sampled(rep, s.spec("field_axioms"), [&](TrialRng& rng) {
    Scalar a = random_scalar(ctx, rng), b = random_scalar(ctx, rng), c = random_scalar(ctx, rng);
    Json detail{{"a", scalar_to_json(a)}, {"b", scalar_to_json(b)}, {"c", scalar_to_json(c)}};
    Report r;
    r.add("add_associative", (a + b) + c == a + (b + c), detail);
    r.add("mul_associative", (a * b) * c == a * (b * c), detail);
    r.add("distributive", a * (b + c) == a * b + a * c, detail);
    r.add("commutative", a * b == b * a && a + b == b + a, detail);
    r.add("additive_inverse", (a + (-a)).is_zero(), detail);
    if (!a.is_zero()) r.add("multiplicative_inverse", (a * a.inverse()).is_one(), detail);
    return r;
  });
  return rep;
}

Report linear_algebra_invariants(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  sampled(rep, s.spec("linear_algebra"), [&](TrialRng& rng) {
    const std::size_t n = 2 + rng.below(5);
    MatrixK m = random_matrix(ctx, 1 + rng.below(n), n, rng);
    if (rng.coin() && m.rows() > 1) {
      // force a dependent row
      VectorK r = add(m.row(0), scale(random_scalar(ctx, rng), m.row(1)));
      for (std::size_t j = 0; j < n; ++j) m(m.rows() - 1, j) = r[j];
    }
    MatrixK once = rref(m).form;
    auto vs = [&](std::size_t k) {
      std::vector<VectorK> out;
      for (std::size_t i = 0; i < k; ++i) out.push_back(random_vector(ctx, n, rng));
      return out;
    };
    SubspaceK u = SubspaceK::span(ctx, n, vs(rng.below(n + 1)));
    SubspaceK v = SubspaceK::span(ctx, n, vs(rng.below(n + 1)));
    Report r;
    r.add("rref_idempotent", rref(once).form == once, Json{{"m", matrix_to_json(m)}});
    r.add("dimension_formula", u.intersect(v).dim() + u.sum(v).dim() == u.dim() + v.dim(),
          Json{{"U", matrix_to_json(u.basis())}, {"V", matrix_to_json(v.basis())}});
    return r;
  });
  return rep;
}

Report composition_identities(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (Kind k : kAll) {
    AlgebraTag tag(k, ctx);
    Report part;
    sampled(part, s.spec("composition_" + tag.name()), [&](TrialRng& rng) {
      CompElement x = comp::random_element(tag, rng), y = comp::random_element(tag, rng);
      CompElement z = comp::random_element(tag, rng);
      Report r;
      r.add("norm_multiplicative", comp::norm_q(x * y) == comp::norm_q(x) * comp::norm_q(y),
            Json{{"x", element_to_json(x)}, {"y", element_to_json(y)}});
      r.add("alternative_conjugate", comp::conj(z) * (z * x) == comp::norm_q(z) * x,
            Json{{"z", element_to_json(z)}, {"x", element_to_json(x)}});
      return r;
    });
    rep.merge(part, tag.name() + ".");
  }
  return rep;
}

Report composition_exhaustive_f2() {
  Report rep;
  const FieldContext f2 = FieldContext::prime(2);
  for (Kind k : {Kind::R, Kind::C, Kind::H}) {
    AlgebraTag tag(k, f2);
    auto all = comp::all_elements(tag);
    Json bad;
    for (const auto& x : all) {
      for (const auto& y : all)
        if (comp::norm_q(x * y) != comp::norm_q(x) * comp::norm_q(y)) {
          bad = Json{{"x", element_to_json(x)}, {"y", element_to_json(y)}};
          break;
        }
      if (!bad.is_null()) break;
    }
    rep.add(tag.name() + ".norm_multiplicative_exhaustive", bad.is_null(),
            bad.is_null() ? Json{{"pairs", all.size() * all.size()}} : bad);
  }
  return rep;
}

Report isotropic_octonions_exhaustive(const FieldContext& fp) {
  AlgebraTag o(Kind::O, fp);
  std::vector<CompElement> iso;
  for (const auto& z : comp::all_elements(o))
    if (!z.is_zero() && comp::norm_q(z).is_zero()) iso.push_back(z);

  std::vector<Report> per(iso.size());
  std::vector<std::string> lkey(iso.size());
  parallel_for(iso.size(), [&](std::size_t i) {
    per[i] = comp::check_composition_general(iso[i]);
    VectorK flat;
    for (const auto& r : comp::left_image(iso[i]).basis_vectors()) flat.insert(flat.end(), r.begin(), r.end());
    lkey[i] = key(flat);
  });

  Report rep;
  std::map<std::string, std::pair<bool, Json>> agg;
  std::vector<std::string> order;
  for (const auto& r : per)
    for (const auto& c : r.checks()) {
      auto [it, fresh] = agg.emplace(c.name, std::make_pair(true, Json()));
      if (fresh) order.push_back(c.name);
      if (!c.passed && it->second.first) it->second = {false, c.detail};
    }
  for (const auto& name : order) {
    const auto& [ok, detail] = agg[name];
    rep.add(name, ok, ok ? Json{{"isotropic_elements", iso.size()}} : detail);
  }

  // Injectivity of z -> L(z) up to scalars: each class of equal L(z) has p - 1 members.
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < iso.size(); ++i) classes[lkey[i]].push_back(i);
  Json bad;
  for (const auto& [k, members] : classes) {
    for (std::size_t m : members) {
      bool prop = false;
      for (std::uint32_t c = 1; c < fp.characteristic() && !prop; ++c)
        prop = Scalar::residue(fp, c) * iso[members.front()] == iso[m];
      if (!prop) {
        bad = Json{{"x", element_to_json(iso[members.front()])}, {"y", element_to_json(iso[m])}};
        break;
      }
    }
    if (!bad.is_null()) break;
  }
  rep.add("left_image_injective_projectively", bad.is_null(),
          bad.is_null() ? Json{{"classes", classes.size()}} : bad);
  return rep;
}

Report composition_general_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (Kind k : kSplit) {
    AlgebraTag tag(k, ctx);
    Report part;
    sampled(part, s.spec("composition_general_" + tag.name()), [&](TrialRng& rng) {
      CompElement z = rng.coin() ? comp::random_isotropic(tag, rng) : comp::random_invertible_element(tag, rng);
      return comp::check_composition_general(z);
    });
    rep.merge(part, tag.name() + ".");
  }
  return rep;
}

Report left_image_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (Kind k : kSplit) {
    AlgebraTag tag(k, ctx);
    Report part;
    sampled(part, s.spec("left_image_" + tag.name()), [&](TrialRng& rng) {
      CompElement z1 = comp::random_isotropic(tag, rng);
      CompElement z2 = partner(z1, rng);
      Report r;
      r.add("left_image_criterion", comp::left_image_criterion(z1, z2),
            Json{{"z1", element_to_json(z1)}, {"z2", element_to_json(z2)}});
      return r;
    });
    rep.merge(part, tag.name() + ".");
  }
  return rep;
}

Report triality_sampled(const FieldContext& ctx, const Sampling& s) {
  AlgebraTag o(Kind::O, ctx);
  Report rep;
  sampled(rep, s.spec("triality"), [&](TrialRng& rng) {
    CompElement x = comp::random_isotropic(o, rng);
    CompElement y;
    switch (rng.below(3)) {
      case 0:
        y = comp::random_isotropic(o, rng);
        break;
      case 1:
        y = comp::random_isotropic_orthogonal(x, rng);
        break;
      default:
        // y in L(conj x), so x y = 0
        do y = comp::conj(x) * comp::random_element(o, rng);
        while (y.is_zero());
    }
    Report r = comp::check_triality(x, y);
    r.add("parity", comp::triality_parity(x, y), Json{{"x", element_to_json(x)}, {"y", element_to_json(y)}});
    return r;
  });
  return rep;
}

}  // namespace ckit::verify
