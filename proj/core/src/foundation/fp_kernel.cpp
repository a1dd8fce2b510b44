#include "ckit/foundation/fp_kernel.hpp"

#include "ckit/foundation/field.hpp"

namespace ckit::fp {

std::size_t leading(const Vec& v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i]) return i;
  return n;
}

Kernel::Kernel(std::uint32_t p, std::size_t n) : p_(p), n_(n) {
  if (p >= 256 || !is_prime_number(p)) throw PreconditionError("packed kernel needs a prime below 256");
  if (n > kMaxLen) throw PreconditionError("packed kernel vector length above 16");
  add_.resize(p * p);
  mul_.resize(p * p);
  inv_.assign(p, 0);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) {
      add_[a * p + b] = static_cast<std::uint8_t>((a + b) % p);
      mul_[a * p + b] = static_cast<std::uint8_t>((a * b) % p);
      if ((a * b) % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
}

void Kernel::axpy(Vec& v, std::uint8_t c, const Vec& w) const {
  if (!c) return;
  const std::uint8_t* mrow = &mul_[c * p_];
  for (std::size_t i = 0; i < n_; ++i)
    if (w[i]) v[i] = add_[v[i] * p_ + mrow[w[i]]];
}

void Kernel::rref(Rows& rows) const {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < n_ && lead < rows.size(); ++c) {
    std::size_t piv = lead;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[lead]);
    Vec& r = rows[lead];
    std::uint8_t s = inv_[r[c]];
    if (s != 1)
      for (std::size_t j = c; j < n_; ++j) r[j] = mul_[r[j] * p_ + s];
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != lead && rows[i][c]) axpy(rows[i], neg(rows[i][c]), r);
    ++lead;
  }
  rows.resize(lead);
}

void Kernel::reduce(const Rows& basis, Vec& v) const {
  for (const auto& r : basis) {
    std::size_t c = leading(r, n_);
    if (v[c]) axpy(v, neg(v[c]), r);
  }
}

bool Kernel::in_span(const Rows& basis, const Vec& v) const {
  Vec w = v;
  reduce(basis, w);
  return leading(w, n_) == n_;
}

bool Kernel::contains(const Rows& big, const Rows& small) const {
  for (const auto& r : small)
    if (!in_span(big, r)) return false;
  return true;
}

Rows Kernel::sum(const Rows& a, const Rows& b) const {
  Rows rows = a;
  rows.insert(rows.end(), b.begin(), b.end());
  rref(rows);
  return rows;
}

std::string Kernel::key(const Rows& basis) const {
  std::string k;
  k.reserve(basis.size() * n_ + 1);
  k.push_back(static_cast<char>(basis.size()));
  for (const auto& r : basis)
    for (std::size_t i = 0; i < n_; ++i) k.push_back(static_cast<char>(r[i]));
  return k;
}

std::uint64_t Kernel::space_size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n_; ++i) s *= p_;
  return s;
}

Vec Kernel::decode(std::uint64_t index) const {
  Vec v{};
  for (std::size_t i = n_; i-- > 0;) {
    v[i] = static_cast<std::uint8_t>(index % p_);
    index /= p_;
  }
  return v;
}

}  // namespace ckit::fp
