#pragma once

#include <optional>
#include <string>

#include "ckit/foundation/json_io.hpp"
#include "ckit/foundation/random.hpp"
#include "ckit/foundation/subspace.hpp"

// Split composition algebras in the 2x2 matrix / Cayley pair model.
//
// Coordinates: R = (l) standing for l*Id; C = (c11, c22) standing for
// diag(c11, c22); H = (m11, m12, m21, m22); O = (A, B) with A and B laid out
// like H.
namespace ckit::comp {

enum class Kind { R, C, H, O };

std::size_t kind_dim(Kind k);
char kind_letter(Kind k);
Kind kind_from_letter(const std::string& s);

class AlgebraTag {
 public:
  AlgebraTag() = default;
  AlgebraTag(Kind kind, FieldContext ctx) : kind_(kind), ctx_(ctx) {}

  Kind kind() const { return kind_; }
  std::size_t dim() const { return kind_dim(kind_); }
  const FieldContext& context() const { return ctx_; }
  bool associative() const { return kind_ != Kind::O; }
  std::string name() const;

  bool operator==(const AlgebraTag&) const = default;

 private:
  Kind kind_ = Kind::R;
  FieldContext ctx_;
};

class CompElement {
 public:
  CompElement() = default;
  CompElement(AlgebraTag tag, VectorK coords);

  static CompElement zero(const AlgebraTag& tag);
  static CompElement one(const AlgebraTag& tag);
  static CompElement basis(const AlgebraTag& tag, std::size_t i);
  static CompElement scalar(const AlgebraTag& tag, const Scalar& s);

  const AlgebraTag& tag() const { return tag_; }
  const FieldContext& context() const { return tag_.context(); }
  const VectorK& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  // The k-th 2x2 block of the payload (k = 1 only for O).
  MatrixK block(std::size_t k = 0) const;
  bool is_zero() const { return is_zero_vector(coords_); }

  CompElement& operator+=(const CompElement& o);
  CompElement& operator-=(const CompElement& o);
  friend CompElement operator+(CompElement a, const CompElement& b) { return a += b; }
  friend CompElement operator-(CompElement a, const CompElement& b) { return a -= b; }
  CompElement operator-() const;
  friend CompElement operator*(const Scalar& s, const CompElement& x);

  bool operator==(const CompElement& o) const;
  bool operator!=(const CompElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  AlgebraTag tag_;
  VectorK coords_;
};

CompElement mul(const CompElement& x, const CompElement& y);
inline CompElement operator*(const CompElement& x, const CompElement& y) { return mul(x, y); }
CompElement conj(const CompElement& x);
Scalar norm_q(const CompElement& x);
// <x,y> = Q(x+y) - Q(x) - Q(y); re(1) = 2.
Scalar bilinear(const CompElement& x, const CompElement& y);
Scalar re(const CompElement& x);
// conj(x) / Q(x); throws when Q(x) = 0.
CompElement inverse(const CompElement& x);
CompElement associator(const CompElement& x, const CompElement& y, const CompElement& z);

enum class Side { Left, Right };

// Column j holds the coordinates of z * b_j (left) or b_j * z (right).
MatrixK mul_operator(const CompElement& z, Side side);
// L(z) = z A and R(z) = A z as subspaces of K^d.
SubspaceK left_image(const CompElement& z);
SubspaceK right_image(const CompElement& z);
// Gram matrix of the bilinear form on the coordinate basis.
MatrixK gram_matrix(const AlgebraTag& tag);
CompElement from_vector(const AlgebraTag& tag, const VectorK& v);
// Q and <,> vanish on a basis of u.
bool is_totally_isotropic(const AlgebraTag& tag, const SubspaceK& u);

// Subalgebra inclusions R < C < H < O (the first Cayley component for H < O).
CompElement embed(const CompElement& x, Kind target);
std::optional<CompElement> restrict_to(const CompElement& x, Kind target);

CompElement random_element(const AlgebraTag& tag, TrialRng& rng);
CompElement random_invertible_element(const AlgebraTag& tag, TrialRng& rng);
// Nonzero element with Q = 0; tag must not be R.
CompElement random_isotropic(const AlgebraTag& tag, TrialRng& rng);
// Nonzero isotropic y with <x, y> = 0.
CompElement random_isotropic_orthogonal(const CompElement& x, TrialRng& rng);

// Every element of the algebra over F_p, in coordinate-lexicographic order.
std::vector<CompElement> all_elements(const AlgebraTag& tag);

Json element_to_json(const CompElement& x);
CompElement element_from_json(const Json& j);

}  // namespace ckit::comp
