#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ckit/foundation/matrix.hpp"

namespace ckit {

// Sorted multiset of variable indices; {0,0,3} is x0^2 x3.
using Monomial = std::vector<std::uint16_t>;

// Sparse multivariate polynomial with integer coefficients (overflow-checked).
class Polynomial {
 public:
  using Terms = std::map<Monomial, long long>;

  Polynomial() = default;
  static Polynomial constant(long long c);
  static Polynomial variable(std::uint16_t v);
  static Polynomial monomial(long long c, Monomial m);

  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const Monomial& m) const;
  int degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(long long c) const;

  Polynomial derivative(std::uint16_t v) const;
  Scalar evaluate(const FieldContext& ctx, const VectorK& x) const;
  // Substitutes images[v] for variable v.
  Polynomial compose(const std::vector<Polynomial>& images) const;

  bool operator==(const Polynomial& o) const = default;

  std::string to_string(const std::vector<std::string>& names) const;

  // m must be sorted.
  void add_term(const Monomial& m, long long c);

 private:
  Terms terms_;
};

// Recovers a homogeneous cubic form in nvars variables from its values over Q
// at 0/1/2 combinations of unit vectors; throws if a coefficient is not integral.
Polynomial interpolate_cubic_form(std::size_t nvars,
                                  const std::function<Scalar(const VectorK&)>& f);

}  // namespace ckit
