#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Packed small-prime linear algebra for the enumeration hot loops.
namespace ckit::fp {

inline constexpr std::size_t kMaxLen = 16;
using Vec = std::array<std::uint8_t, kMaxLen>;
using Rows = std::vector<Vec>;

class Kernel {
 public:
  Kernel(std::uint32_t p, std::size_t n);

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return n_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * p_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * p_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return a ? static_cast<std::uint8_t>(p_ - a) : 0; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

  // v += c * w
  void axpy(Vec& v, std::uint8_t c, const Vec& w) const;
  // Canonical reduced echelon form in place; zero rows dropped.
  void rref(Rows& rows) const;
  // Reduces v against an echelon basis; v becomes zero iff it was in the span.
  void reduce(const Rows& basis, Vec& v) const;
  bool in_span(const Rows& basis, const Vec& v) const;
  bool contains(const Rows& big, const Rows& small) const;
  Rows sum(const Rows& a, const Rows& b) const;

  std::string key(const Rows& basis) const;
  // Enumerates every vector of F_p^n in lexicographic order via index decoding.
  Vec decode(std::uint64_t index) const;
  std::uint64_t space_size() const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::uint8_t> add_, mul_, inv_;
};

std::size_t leading(const Vec& v, std::size_t n);

}  // namespace ckit::fp
