#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace ckit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Raised when an operation is called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class Scalar;

// Either the rationals (characteristic 0) or a prime field F_p with p < 2^16.
class FieldContext {
 public:
  FieldContext() = default;

  static FieldContext rationals() { return FieldContext(); }
  static FieldContext prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  // Number of elements, 0 for Q.
  std::uint64_t order() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar fraction(long num, long den) const;

  std::string name() const;

  bool operator==(const FieldContext&) const = default;

 private:
  explicit FieldContext(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(const FieldContext& ctx, long v);
  Scalar(const FieldContext& ctx, const mpq_class& q);

  // F_p residue, reduced on construction.
  static Scalar residue(const FieldContext& ctx, std::uint64_t r);
  // Parses "a", "-a" or "a/b" (rationals) or a residue literal (prime fields).
  static Scalar parse(const FieldContext& ctx, const std::string& text);

  const FieldContext& context() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t residue() const;
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  FieldContext ctx_;
  std::variant<std::uint32_t, mpq_class> v_;
};

}  // namespace ckit
