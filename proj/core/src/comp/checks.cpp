#include "ckit/comp/checks.hpp"

namespace ckit::comp {

namespace {

void require_isotropic_octonion(const CompElement& x) {
  if (x.tag().kind() != Kind::O) throw PreconditionError("triality checks need octonions");
  if (x.is_zero() || !norm_q(x).is_zero())
    throw PreconditionError("triality checks need nonzero isotropic elements");
}

Json dims_json(const TrialityDims& d) {
  return Json{{"dim_LxLy", d.ll}, {"dim_RxRy", d.rr}, {"dim_LxRy", d.lr}};
}

}  // namespace

Report check_composition_general(const CompElement& z) {
  const AlgebraTag& tag = z.tag();
  if (tag.kind() == Kind::R) throw PreconditionError("composition checks exclude R");
  if (z.is_zero()) throw PreconditionError("composition checks need z != 0");
  Report rep;
  KernelImage lk = kernel_image(mul_operator(z, Side::Left));
  KernelImage rk = kernel_image(mul_operator(z, Side::Right));
  const std::size_t d = tag.dim();
  Json stats{{"z", element_to_json(z)},
             {"dim_L", lk.image.dim()},
             {"dim_ker_L", lk.kernel.dim()},
             {"dim_R", rk.image.dim()}};
  if (!norm_q(z).is_zero()) {
    rep.add("invertible_L_full", lk.image.dim() == d, stats);
    rep.add("invertible_R_full", rk.image.dim() == d, stats);
  } else {
    rep.add("isotropic_dim_L_half", lk.image.dim() == d / 2, stats);
    rep.add("isotropic_dim_R_half", rk.image.dim() == d / 2, stats);
    rep.add("isotropic_L_in_quadric", is_totally_isotropic(tag, lk.image), stats);
    rep.add("isotropic_R_in_quadric", is_totally_isotropic(tag, rk.image), stats);
  }
  return rep;
}

bool left_image_criterion(const CompElement& z1, const CompElement& z2) {
  bool member = left_image(z1).contains(z2.coords());
  bool annihilated = mul(conj(z1), z2).is_zero();
  return member == annihilated;
}

TrialityDims triality_dims(const CompElement& x, const CompElement& y) {
  SubspaceK lx = left_image(x), ly = left_image(y);
  SubspaceK rx = right_image(x), ry = right_image(y);
  return {lx.intersect(ly).dim(), rx.intersect(ry).dim(), lx.intersect(ry).dim()};
}

Report check_triality(const CompElement& x, const CompElement& y) {
  require_isotropic_octonion(x);
  require_isotropic_octonion(y);
  Report rep;
  SubspaceK lx = left_image(x), ly = left_image(y);
  SubspaceK rx = right_image(x), ry = right_image(y);
  SubspaceK ll = lx.intersect(ly);
  TrialityDims d{ll.dim(), rx.intersect(ry).dim(), lx.intersect(ry).dim()};
  Json detail = dims_json(d);
  detail["x"] = element_to_json(x);
  detail["y"] = element_to_json(y);

  bool a = d.ll >= 2, b = d.rr >= 2, c = bilinear(x, y).is_zero();
  rep.add("orthogonality", a == b && b == c, detail);

  bool ok2 = true;
  if (d.ll == 2) {
    SubspaceK via_x = map_subspace(mul_operator(x, Side::Left), left_image(conj(y)));
    SubspaceK via_y = map_subspace(mul_operator(y, Side::Left), left_image(conj(x)));
    ok2 = ll == via_x && ll == via_y;
  }
  rep.add("intersection_images", ok2, detail);

  bool xy_zero = mul(x, y).is_zero();
  rep.add("product_zero", xy_zero == (d.lr == 3), detail);
  return rep;
}

bool triality_parity(const CompElement& x, const CompElement& y) {
  require_isotropic_octonion(x);
  require_isotropic_octonion(y);
  TrialityDims d = triality_dims(x, y);
  return d.ll % 2 == 0 && d.lr % 2 == 1;
}

}  // namespace ckit::comp
