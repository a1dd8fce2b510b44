#include "ckit/foundation/field.hpp"

namespace ckit {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldContext FieldContext::prime(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime_number(p))
    throw PreconditionError("field characteristic must be a prime below 65536, got " +
                            std::to_string(p));
  return FieldContext(p);
}

Scalar FieldContext::zero() const { return Scalar(*this, 0); }
Scalar FieldContext::one() const { return Scalar(*this, 1); }
Scalar FieldContext::from_int(long v) const { return Scalar(*this, v); }

Scalar FieldContext::fraction(long num, long den) const {
  return Scalar(*this, num) / Scalar(*this, den);
}

std::string FieldContext::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const FieldContext& ctx, long v) : ctx_(ctx) {
  if (ctx.is_rational()) {
    v_ = mpq_class(v);
  } else {
    long p = ctx.characteristic();
    long r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(const FieldContext& ctx, const mpq_class& q) : ctx_(ctx) {
  if (ctx.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    v_ = std::move(c);
    return;
  }
  mpz_class p = ctx.characteristic();
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw DivisionByZero("denominator vanishes in " + ctx.name());
  if (num < 0) num += p;
  Scalar n = residue(ctx, num.get_ui());
  Scalar d = residue(ctx, den.get_ui());
  *this = n / d;
}

Scalar Scalar::residue(const FieldContext& ctx, std::uint64_t r) {
  if (ctx.is_rational()) return Scalar(ctx, static_cast<long>(r));
  Scalar s;
  s.ctx_ = ctx;
  s.v_ = static_cast<std::uint32_t>(r % ctx.characteristic());
  return s;
}

Scalar Scalar::parse(const FieldContext& ctx, const std::string& text) {
  try {
    mpq_class q(text, 10);
    q.canonicalize();
    if (ctx.is_prime() && q.get_den() != 1)
      throw ParseError("fraction literal in prime field: " + text);
    if (ctx.is_prime() && (q < 0 || q >= ctx.characteristic()))
      throw ParseError("residue out of range [0,p): " + text);
    return Scalar(ctx, q);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a scalar literal: " + text);
  }
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint32_t>(&v_)) return *r == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint32_t>(&v_)) return *r == 1;
  return std::get<mpq_class>(v_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint32_t>(&v_)) return *r;
  throw PreconditionError("residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return *q;
  throw PreconditionError("rational() on a prime-field scalar");
}

void Scalar::check_same(const Scalar& o) const {
  if (!(ctx_ == o.ctx_))
    throw ContextMismatch("scalar contexts differ: " + ctx_.name() + " vs " + o.ctx_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto x = std::get_if<std::uint32_t>(&r.v_)) {
    if (*x) *x = ctx_.characteristic() - *x;
  } else {
    mpq_class& q = std::get<mpq_class>(r.v_);
    q = -q;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + ctx_.name());
  Scalar r = *this;
  if (auto x = std::get_if<std::uint32_t>(&r.v_)) {
    std::uint64_t p = ctx_.characteristic();
    std::uint64_t base = *x, acc = 1, e = p - 2;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    *x = static_cast<std::uint32_t>(acc);
  } else {
    mpq_class& q = std::get<mpq_class>(r.v_);
    q = 1 / q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto x = std::get_if<std::uint32_t>(&v_)) {
    std::uint32_t s = *x + std::get<std::uint32_t>(o.v_);
    std::uint32_t p = ctx_.characteristic();
    *x = s >= p ? s - p : s;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto x = std::get_if<std::uint32_t>(&v_)) {
    std::uint32_t y = std::get<std::uint32_t>(o.v_);
    *x = *x >= y ? *x - y : *x + ctx_.characteristic() - y;
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto x = std::get_if<std::uint32_t>(&v_)) {
    std::uint64_t m = std::uint64_t(*x) * std::get<std::uint32_t>(o.v_);
    *x = static_cast<std::uint32_t>(m % ctx_.characteristic());
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw DivisionByZero("division by zero in " + ctx_.name());
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return v_ == o.v_;
}

std::string Scalar::to_string() const {
  if (auto x = std::get_if<std::uint32_t>(&v_)) return std::to_string(*x);
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace ckit
