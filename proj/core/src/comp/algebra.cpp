#include "ckit/comp/algebra.hpp"

#include <array>

namespace ckit::comp {

namespace {

struct Pair {
  std::size_t i, j;
  int sign;
};

// Q is the sum of sign * x_i * x_j over these hyperbolic pairs.
std::vector<Pair> hyperbolic_pairs(Kind k) {
  switch (k) {
    case Kind::R: return {};
    case Kind::C: return {{0, 1, 1}};
    case Kind::H: return {{0, 3, 1}, {1, 2, -1}};
    case Kind::O: return {{0, 3, 1}, {1, 2, -1}, {4, 7, 1}, {5, 6, -1}};
  }
  return {};
}

using M2 = std::array<Scalar, 4>;

M2 m2_mul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

M2 m2_conj(const M2& a) { return {a[3], -a[1], -a[2], a[0]}; }

M2 m2_sub(const M2& a, const M2& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
M2 m2_add(const M2& a, const M2& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

M2 m2_at(const VectorK& v, std::size_t off) { return {v[off], v[off + 1], v[off + 2], v[off + 3]}; }

void check_same(const CompElement& x, const CompElement& y) {
  if (!(x.tag() == y.tag())) throw ContextMismatch("algebra tags differ: " + x.tag().name() +
                                                   " vs " + y.tag().name());
}

}  // namespace

std::size_t kind_dim(Kind k) {
  switch (k) {
    case Kind::R: return 1;
    case Kind::C: return 2;
    case Kind::H: return 4;
    case Kind::O: return 8;
  }
  return 0;
}

char kind_letter(Kind k) {
  switch (k) {
    case Kind::R: return 'r';
    case Kind::C: return 'c';
    case Kind::H: return 'h';
    case Kind::O: return 'o';
  }
  return '?';
}

Kind kind_from_letter(const std::string& s) {
  if (s == "r" || s == "R") return Kind::R;
  if (s == "c" || s == "C") return Kind::C;
  if (s == "h" || s == "H") return Kind::H;
  if (s == "o" || s == "O") return Kind::O;
  throw ParseError("unknown algebra \"" + s + "\" (expected r, c, h or o)");
}

std::string AlgebraTag::name() const {
  return std::string(1, static_cast<char>(std::toupper(kind_letter(kind_)))) + "_" + ctx_.name();
}

CompElement::CompElement(AlgebraTag tag, VectorK coords) : tag_(tag), coords_(std::move(coords)) {
  if (coords_.size() != tag_.dim())
    throw PreconditionError("element of " + tag_.name() + " needs " + std::to_string(tag_.dim()) +
                            " coordinates");
  for (const auto& c : coords_)
    if (!(c.context() == tag_.context())) throw ContextMismatch("coordinate field differs from tag");
}

CompElement CompElement::zero(const AlgebraTag& tag) {
  return CompElement(tag, zero_vector(tag.context(), tag.dim()));
}

CompElement CompElement::one(const AlgebraTag& tag) { return scalar(tag, tag.context().one()); }

CompElement CompElement::scalar(const AlgebraTag& tag, const Scalar& s) {
  VectorK v = zero_vector(tag.context(), tag.dim());
  switch (tag.kind()) {
    case Kind::R: v[0] = s; break;
    case Kind::C: v[0] = s; v[1] = s; break;
    case Kind::H:
    case Kind::O: v[0] = s; v[3] = s; break;
  }
  return CompElement(tag, v);
}

CompElement CompElement::basis(const AlgebraTag& tag, std::size_t i) {
  return CompElement(tag, unit_vector(tag.context(), tag.dim(), i));
}

MatrixK CompElement::block(std::size_t k) const {
  const FieldContext& ctx = context();
  MatrixK m(ctx, 2, 2);
  switch (tag_.kind()) {
    case Kind::R:
      if (k == 0) m(0, 0) = m(1, 1) = coords_[0];
      break;
    case Kind::C:
      if (k == 0) {
        m(0, 0) = coords_[0];
        m(1, 1) = coords_[1];
      }
      break;
    case Kind::H:
    case Kind::O: {
      if (k > 0 && tag_.kind() == Kind::H) break;
      std::size_t off = 4 * k;
      m(0, 0) = coords_[off];
      m(0, 1) = coords_[off + 1];
      m(1, 0) = coords_[off + 2];
      m(1, 1) = coords_[off + 3];
      break;
    }
  }
  return m;
}

CompElement& CompElement::operator+=(const CompElement& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CompElement& CompElement::operator-=(const CompElement& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CompElement CompElement::operator-() const {
  CompElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CompElement operator*(const Scalar& s, const CompElement& x) {
  CompElement r = x;
  for (auto& c : r.coords_) c *= s;
  return r;
}

bool CompElement::operator==(const CompElement& o) const {
  return tag_ == o.tag_ && coords_ == o.coords_;
}

std::string CompElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += (tag_.kind() == Kind::O && i == 4) ? " | " : ", ";
    s += coords_[i].to_string();
  }
  return s + ")";
}

CompElement mul(const CompElement& x, const CompElement& y) {
  check_same(x, y);
  const VectorK& a = x.coords();
  const VectorK& b = y.coords();
  switch (x.tag().kind()) {
    case Kind::R: return CompElement(x.tag(), {a[0] * b[0]});
    case Kind::C: return CompElement(x.tag(), {a[0] * b[0], a[1] * b[1]});
    case Kind::H: {
      M2 p = m2_mul(m2_at(a, 0), m2_at(b, 0));
      return CompElement(x.tag(), VectorK(p.begin(), p.end()));
    }
    case Kind::O: {
      // (A,B)*(C,D) = (AC - conj(D) B, B conj(C) + DA)
      M2 A = m2_at(a, 0), B = m2_at(a, 4), C = m2_at(b, 0), D = m2_at(b, 4);
      M2 first = m2_sub(m2_mul(A, C), m2_mul(m2_conj(D), B));
      M2 second = m2_add(m2_mul(B, m2_conj(C)), m2_mul(D, A));
      VectorK v(first.begin(), first.end());
      v.insert(v.end(), second.begin(), second.end());
      return CompElement(x.tag(), v);
    }
  }
  throw Error("unreachable");
}

CompElement conj(const CompElement& x) {
  const VectorK& a = x.coords();
  switch (x.tag().kind()) {
    case Kind::R: return x;
    case Kind::C: return CompElement(x.tag(), {a[1], a[0]});
    case Kind::H: return CompElement(x.tag(), {a[3], -a[1], -a[2], a[0]});
    case Kind::O:
      return CompElement(x.tag(), {a[3], -a[1], -a[2], a[0], -a[4], -a[5], -a[6], -a[7]});
  }
  throw Error("unreachable");
}

Scalar norm_q(const CompElement& x) {
  const VectorK& a = x.coords();
  if (x.tag().kind() == Kind::R) return a[0] * a[0];
  Scalar q = x.context().zero();
  for (const auto& p : hyperbolic_pairs(x.tag().kind())) {
    Scalar t = a[p.i] * a[p.j];
    if (p.sign > 0) q += t;
    else q -= t;
  }
  return q;
}

Scalar bilinear(const CompElement& x, const CompElement& y) {
  check_same(x, y);
  return norm_q(x + y) - norm_q(x) - norm_q(y);
}

Scalar re(const CompElement& x) { return bilinear(x, CompElement::one(x.tag())); }

CompElement inverse(const CompElement& x) {
  Scalar q = norm_q(x);
  if (q.is_zero()) throw DivisionByZero("element with Q = 0 has no inverse");
  return q.inverse() * conj(x);
}

CompElement associator(const CompElement& x, const CompElement& y, const CompElement& z) {
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

MatrixK mul_operator(const CompElement& z, Side side) {
  const AlgebraTag& tag = z.tag();
  std::vector<VectorK> cols;
  for (std::size_t j = 0; j < tag.dim(); ++j) {
    CompElement b = CompElement::basis(tag, j);
    cols.push_back((side == Side::Left ? mul(z, b) : mul(b, z)).coords());
  }
  return MatrixK::from_columns(tag.context(), tag.dim(), cols);
}

SubspaceK left_image(const CompElement& z) { return image(mul_operator(z, Side::Left)); }
SubspaceK right_image(const CompElement& z) { return image(mul_operator(z, Side::Right)); }

MatrixK gram_matrix(const AlgebraTag& tag) {
  const std::size_t d = tag.dim();
  MatrixK g(tag.context(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      g(i, j) = bilinear(CompElement::basis(tag, i), CompElement::basis(tag, j));
  return g;
}

CompElement from_vector(const AlgebraTag& tag, const VectorK& v) { return CompElement(tag, v); }

bool is_totally_isotropic(const AlgebraTag& tag, const SubspaceK& u) {
  std::vector<CompElement> b;
  for (const auto& v : u.basis_vectors()) b.emplace_back(tag, v);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!norm_q(b[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!bilinear(b[i], b[j]).is_zero()) return false;
  }
  return true;
}

CompElement embed(const CompElement& x, Kind target) {
  const FieldContext& ctx = x.context();
  const Kind src = x.tag().kind();
  if (kind_dim(target) < kind_dim(src)) throw PreconditionError("embedding into a smaller algebra");
  if (src == target) return x;
  VectorK v = zero_vector(ctx, kind_dim(target));
  const VectorK& a = x.coords();
  switch (src) {
    case Kind::R: v[0] = a[0]; if (target != Kind::C) v[3] = a[0]; else v[1] = a[0]; break;
    case Kind::C: v[0] = a[0]; v[3] = a[1]; break;
    case Kind::H: for (std::size_t i = 0; i < 4; ++i) v[i] = a[i]; break;
    case Kind::O: break;
  }
  return CompElement(AlgebraTag(target, ctx), v);
}

std::optional<CompElement> restrict_to(const CompElement& x, Kind target) {
  const FieldContext& ctx = x.context();
  if (kind_dim(target) > kind_dim(x.tag().kind())) return embed(x, target);
  VectorK pulled;
  switch (target) {
    case Kind::R: pulled = {x[0]}; break;
    case Kind::C: pulled = {x[0], x.tag().kind() == Kind::C ? x[1] : x[3]}; break;
    case Kind::H: pulled = {x[0], x[1], x[2], x[3]}; break;
    case Kind::O: pulled = x.coords(); break;
  }
  CompElement y(AlgebraTag(target, ctx), pulled);
  if (embed(y, x.tag().kind()) != x) return std::nullopt;
  return y;
}

CompElement random_element(const AlgebraTag& tag, TrialRng& rng) {
  return CompElement(tag, random_vector(tag.context(), tag.dim(), rng));
}

CompElement random_invertible_element(const AlgebraTag& tag, TrialRng& rng) {
  for (;;) {
    CompElement x = random_element(tag, rng);
    if (!norm_q(x).is_zero()) return x;
  }
}

CompElement random_isotropic(const AlgebraTag& tag, TrialRng& rng) {
  if (tag.kind() == Kind::R) throw PreconditionError("R has no nonzero isotropic elements");
  const FieldContext& ctx = tag.context();
  if (ctx.is_prime() && ctx.characteristic() <= 31) {
    for (;;) {
      CompElement x = random_element(tag, rng);
      if (!x.is_zero() && norm_q(x).is_zero()) return x;
    }
  }
  // Solve Q = 0 for the partner coordinate of a random nonzero pivot.
  auto pairs = hyperbolic_pairs(tag.kind());
  for (;;) {
    VectorK v = random_vector(ctx, tag.dim(), rng);
    const Pair& p = pairs[rng.below(pairs.size())];
    bool flip = rng.coin();
    std::size_t i = flip ? p.j : p.i, j = flip ? p.i : p.j;
    v[i] = random_nonzero_scalar(ctx, rng);
    v[j] = ctx.zero();
    CompElement x(tag, v);
    Scalar rest = norm_q(x);
    Scalar coef = p.sign > 0 ? v[i] : -v[i];
    v[j] = -rest / coef;
    CompElement y(tag, v);
    if (!y.is_zero() && norm_q(y).is_zero()) return y;
  }
}

CompElement random_isotropic_orthogonal(const CompElement& x, TrialRng& rng) {
  const AlgebraTag& tag = x.tag();
  const FieldContext& ctx = tag.context();
  if (tag.kind() == Kind::R) throw PreconditionError("R has no nonzero isotropic elements");
  if (ctx.is_prime() && ctx.characteristic() <= 11) {
    for (;;) {
      CompElement y = random_isotropic(tag, rng);
      if (bilinear(x, y).is_zero()) return y;
    }
  }
  auto pairs = hyperbolic_pairs(tag.kind());
  VectorK w = gram_matrix(tag).apply(x.coords());
  for (int attempt = 0; attempt < 200 && pairs.size() >= 2; ++attempt) {
    std::size_t a = rng.below(pairs.size()), b = rng.below(pairs.size() - 1);
    if (b >= a) ++b;
    const Pair& pq = pairs[a];
    const Pair& pk = pairs[b];
    // Unknowns y_j (partner of fixed y_i) and y_k (partner of fixed y_k2).
    std::size_t i = pq.i, j = pq.j, k = pk.i, k2 = pk.j;
    if (rng.coin()) std::swap(i, j);
    if (rng.coin()) std::swap(k, k2);
    VectorK v = random_vector(ctx, tag.dim(), rng);
    v[i] = random_nonzero_scalar(ctx, rng);
    v[j] = ctx.zero();
    v[k] = ctx.zero();
    CompElement base(tag, v);
    Scalar r = norm_q(base);
    Scalar s = ctx.zero();
    for (std::size_t t = 0; t < v.size(); ++t) s += w[t] * v[t];
    MatrixK m(ctx, 2, 2);
    m(0, 0) = pq.sign > 0 ? v[i] : -v[i];
    m(0, 1) = pk.sign > 0 ? v[k2] : -v[k2];
    m(1, 0) = w[j];
    m(1, 1) = w[k];
    if (determinant(m).is_zero()) continue;
    auto sol = solve(m, {-r, -s});
    v[j] = (*sol)[0];
    v[k] = (*sol)[1];
    CompElement y(tag, v);
    if (!y.is_zero() && norm_q(y).is_zero() && bilinear(x, y).is_zero()) return y;
  }
  // Fallback for C or degenerate draws: y = x * lambda is orthogonal to isotropic x.
  for (;;) {
    CompElement y = mul(x, random_element(tag, rng));
    if (!y.is_zero() && norm_q(y).is_zero() && bilinear(x, y).is_zero()) return y;
  }
}

std::vector<CompElement> all_elements(const AlgebraTag& tag) {
  const FieldContext& ctx = tag.context();
  if (!ctx.is_prime()) throw PreconditionError("exhaustive iteration needs a prime field");
  const std::uint64_t p = ctx.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < tag.dim(); ++i) total *= p;
  std::vector<CompElement> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    VectorK v(tag.dim());
    std::uint64_t r = idx;
    for (std::size_t i = tag.dim(); i-- > 0;) {
      v[i] = Scalar::residue(ctx, r % p);
      r /= p;
    }
    out.emplace_back(tag, std::move(v));
  }
  return out;
}

Json element_to_json(const CompElement& x) {
  Json j;
  j["alg"] = std::string(1, kind_letter(x.tag().kind()));
  put_context(j, x.context());
  j["coords"] = vector_to_json(x.coords());
  return j;
}

CompElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alg") || !j.contains("coords"))
    throw ParseError("element needs \"alg\" and \"coords\"");
  FieldContext ctx = get_context(j);
  AlgebraTag tag(kind_from_letter(j["alg"].get<std::string>()), ctx);
  VectorK v = vector_from_json(ctx, j["coords"]);
  if (v.size() != tag.dim()) throw ParseError("wrong number of coordinates for " + tag.name());
  return CompElement(tag, v);
}

}  // namespace ckit::comp
