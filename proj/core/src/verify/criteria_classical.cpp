#include <algorithm>

#include "ckit/classical/model.hpp"
#include "ckit/jordan/rank_one.hpp"
#include "ckit/verify/criteria.hpp"

namespace ckit::verify {

using classical::ClassicalModel;

namespace {

constexpr int kModels[] = {1, 2, 4};

}  // namespace

Report structure_group_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (int a : kModels) {
    ClassicalModel m = ClassicalModel::make(a, a == 4 ? 2 : 3, ctx);
    Report part;
    sampled(part, s.spec("structure_group_a" + std::to_string(a)), [&](TrialRng& rng) {
      classical::GroupElement g = classical::random_group_element(m, rng);
      std::vector<MatrixK> samples;
      for (int k = 0; k < 4; ++k) samples.push_back(classical::random_rank_one(m, rng));
      Report r = classical::structure_report(m, g, samples);
      return r;
    });
    rep.merge(part, "a" + std::to_string(a) + ".");
  }
  return rep;
}

Report classical_rank_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (int a : kModels) {
    ClassicalModel m = ClassicalModel::make(a, a == 4 ? 2 : 3, ctx);
    Report part;
    sampled(part, s.spec("classical_rank_a" + std::to_string(a)), [&](TrialRng& rng) {
      MatrixK x = rng.coin() ? classical::random_rank_one(m, rng) : classical::random_carrier_element(m, rng);
      if (x.is_zero()) return Report();
      return classical::rank_one_report(m, x);
    });
    rep.merge(part, "a" + std::to_string(a) + ".");
  }
  return rep;
}

Report scorza_agreement_exhaustive() {
  const FieldContext f2 = FieldContext::prime(2);
  comp::AlgebraTag h(comp::Kind::H, f2);
  ClassicalModel m = ClassicalModel::make(4, 2, f2);
  Json bad_carrier, bad_rank;
  std::vector<VectorK> images;
  jordan::for_each_hermitian(h, 2, [&](const jordan::HermitianMatrix& a) {
    MatrixK x = jordan::scorza_map(a);
    if (!classical::in_carrier(m, x)) {
      if (bad_carrier.is_null()) bad_carrier = hermitian_to_json(a);
      return;
    }
    images.push_back(classical::carrier_coordinates(m, x));
    if (a.is_zero()) return;
    if (jordan::jordan_rank_one(a) != classical::rank_one_classical(m, x) && bad_rank.is_null())
      bad_rank = Json{{"A", hermitian_to_json(a)}, {"image", matrix_to_json(x)}};
  });
  Report rep;
  rep.add("scorza_image_alternating", bad_carrier.is_null(), bad_carrier);
  rep.add("scorza_rank_one_agreement", bad_rank.is_null(), bad_rank.is_null() ? Json{{"elements", 64}} : bad_rank);
  std::sort(images.begin(), images.end(), [](const VectorK& x, const VectorK& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].residue() != y[i].residue()) return x[i].residue() < y[i].residue();
    return false;
  });
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  rep.add("scorza_bijective", injective && images.size() == 64, Json{{"images", images.size()}});
  return rep;
}

}  // namespace ckit::verify
