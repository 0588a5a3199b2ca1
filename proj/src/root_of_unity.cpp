#include "tkchar/root_of_unity.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "tkchar/errors.hpp"

namespace tkchar {

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den < 1) {
    throw std::invalid_argument("root of unity: denominator must be >= 1, got " +
                                std::to_string(den));
  }
  num = mod_floor(num, 2 * den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity& RootOfUnity::operator*=(const RootOfUnity& other) {
  const std::int64_t l = std::lcm(den_, other.den_);
  const std::int64_t c = num_ * (l / den_) + other.num_ * (l / other.den_);
  *this = RootOfUnity(c, l);
  return *this;
}

std::string RootOfUnity::to_string() const {
  return "e^(i*pi*" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

RootOfUnity root(std::int64_t c, std::int64_t N) { return RootOfUnity(c, N); }

RootOfUnity mul(const RootOfUnity& x, const RootOfUnity& y) { return x * y; }

RootOfUnity pow(const RootOfUnity& x, std::int64_t k) {
  const std::int64_t period = 2 * x.den();
  return RootOfUnity(mod_floor(x.num() * mod_floor(k, period), period), x.den());
}

RootOfUnity conj(const RootOfUnity& x) { return pow(x, -1); }

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

RootOfUnity crt_attachment(std::int64_t k, std::int64_t m, std::int64_t k2,
                           std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("crt_attachment: m, n must be positive");
  if (std::gcd(m, n) != 1) {
    throw std::domain_error("crt_attachment: m and n are not coprime");
  }
  if (mod_floor(k - k2, 2) != 0) {
    throw NoSolutionError("crt_attachment: k and k2 have different parity");
  }
  // c = k + 2m*j with m*j = (k2 - k)/2 (mod n).
  const std::int64_t half = (k2 - k) / 2;
  const std::int64_t m_inv = mod_floor(extended_gcd(m, n).x, n);
  const std::int64_t j = mod_floor(mod_floor(half, n) * m_inv, n);
  const std::int64_t c = mod_floor(k + 2 * m * j, 2 * m * n);
  return root(c, m * n);
}

}  // namespace tkchar
