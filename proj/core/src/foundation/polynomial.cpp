#include "ckit/foundation/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ckit {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
  return r;
}

long long to_integer(const Scalar& s) {
  const mpq_class& q = s.rational();
  if (q.get_den() != 1) throw Error("interpolated coefficient is not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw Error("interpolated coefficient too large");
  return q.get_num().get_si();
}

}  // namespace

Polynomial Polynomial::constant(long long c) { return monomial(c, {}); }

Polynomial Polynomial::variable(std::uint16_t v) { return monomial(1, {v}); }

Polynomial Polynomial::monomial(long long c, Monomial m) {
  Polynomial p;
  std::sort(m.begin(), m.end());
  p.add_term(m, c);
  return p;
}

long long Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

void Polynomial::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add_term(m, checked_mul(ca, cb));
    }
  return r;
}

Polynomial Polynomial::scaled(long long c) const {
  Polynomial r;
  for (const auto& [m, k] : terms_) r.add_term(m, checked_mul(k, c));
  return r;
}

Polynomial Polynomial::derivative(std::uint16_t v) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    auto lo = std::lower_bound(m.begin(), m.end(), v);
    auto hi = std::upper_bound(m.begin(), m.end(), v);
    long long mult = hi - lo;
    if (mult == 0) continue;
    Monomial d = m;
    d.erase(d.begin() + (lo - m.begin()));
    r.add_term(d, checked_mul(c, mult));
  }
  return r;
}

Scalar Polynomial::evaluate(const FieldContext& ctx, const VectorK& x) const {
  Scalar total = ctx.zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = ctx.from_int(static_cast<long>(c));
    for (auto v : m) {
      const Scalar& xv = x.at(v);
      if (xv.is_zero()) {
        t = ctx.zero();
        break;
      }
      t *= xv;
    }
    if (!t.is_zero()) total += t;
  }
  return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(c);
    for (auto v : m) t = t * images.at(v);
    r += t;
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long a = c;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    first = false;
    if (a != 1 || m.empty()) os << a;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (a != 1 || i > 0) os << "*";
      os << (m[i] < names.size() ? names[m[i]] : "x" + std::to_string(m[i]));
    }
  }
  return os.str();
}

Polynomial interpolate_cubic_form(std::size_t nvars,
                                  const std::function<Scalar(const VectorK&)>& f) {
  const FieldContext q = FieldContext::rationals();
  auto point = [&](std::initializer_list<std::pair<std::size_t, long>> coords) {
    VectorK x = zero_vector(q, nvars);
    for (auto [i, v] : coords) x[i] = q.from_int(v);
    return f(x);
  };
  if (!point({}).is_zero()) throw Error("cubic form is not homogeneous");

  std::vector<Scalar> single(nvars);
  for (std::size_t i = 0; i < nvars; ++i) single[i] = point({{i, 1}});
  std::vector<std::vector<Scalar>> pair(nvars, std::vector<Scalar>(nvars));

  Polynomial p;
  auto u16 = [](std::size_t i) { return static_cast<std::uint16_t>(i); };
  for (std::size_t i = 0; i < nvars; ++i) {
    p.add_term({u16(i), u16(i), u16(i)}, to_integer(single[i]));
    for (std::size_t j = i + 1; j < nvars; ++j) {
      pair[i][j] = point({{i, 1}, {j, 1}});
      Scalar s1 = pair[i][j] - single[i] - single[j];
      Scalar s2 = point({{i, 2}, {j, 1}}) - q.from_int(8) * single[i] - single[j];
      Scalar b = (s2 - q.from_int(2) * s1) / q.from_int(2);
      p.add_term({u16(i), u16(i), u16(j)}, to_integer(b));
      p.add_term({u16(i), u16(j), u16(j)}, to_integer(s1 - b));
    }
  }
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i + 1; j < nvars; ++j)
      for (std::size_t k = j + 1; k < nvars; ++k) {
        Scalar c = point({{i, 1}, {j, 1}, {k, 1}}) - pair[i][j] - pair[i][k] - pair[j][k] +
                   single[i] + single[j] + single[k];
        p.add_term({u16(i), u16(j), u16(k)}, to_integer(c));
      }
  return p;
}

}  // namespace ckit
