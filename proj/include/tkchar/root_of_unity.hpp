#pragma once

#include <complex>
#include <cstdint>
#include <compare>
#include <numbers>
#include <string>

namespace tkchar {

/// An exact point e^{i*pi*c/N} on the unit circle.
///
/// Angles are kept in units of pi, so e^{i*pi*k/m} is simply (k, m). The
/// stored pair is canonical: c is reduced into [0, 2N) and c/N is in lowest
/// terms, which makes equality structural.
class RootOfUnity {
 public:
  /// The identity, e^0.
  constexpr RootOfUnity() = default;

  /// Throws std::invalid_argument when den < 1.
  RootOfUnity(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Angle in [0, 2*pi).
  template <typename Scalar = double>
  Scalar angle() const {
    return std::numbers::pi_v<Scalar> * static_cast<Scalar>(num_) /
           static_cast<Scalar>(den_);
  }

  template <typename Scalar = double>
  std::complex<Scalar> to_complex() const {
    const Scalar theta = angle<Scalar>();
    return {std::cos(theta), std::sin(theta)};
  }

  bool is_real() const noexcept { return den_ == 1; }  // +1 or -1

  RootOfUnity& operator*=(const RootOfUnity& other);
  friend RootOfUnity operator*(RootOfUnity x, const RootOfUnity& y) { return x *= y; }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// e^{i*pi*c/N}; throws std::invalid_argument when N < 1.
RootOfUnity root(std::int64_t c, std::int64_t N);

RootOfUnity mul(const RootOfUnity& x, const RootOfUnity& y);
RootOfUnity pow(const RootOfUnity& x, std::int64_t k);
RootOfUnity conj(const RootOfUnity& x);

template <typename Scalar = double>
std::complex<Scalar> to_complex(const RootOfUnity& x) {
  return x.to_complex<Scalar>();
}

/// Attachment parameter for coprime (m, n): the unique t on the circle with
/// t^n = e^{i*pi*k/m} and t^m = e^{i*pi*k2/n}.
///
/// Solves c = k (mod 2m), c = k2 (mod 2n) for c mod 2mn and returns
/// root(c, m*n). k and k2 may be any integers; callers after the r = -inf
/// endpoint pass 2n - k2 for mu^{-1}.
///
/// Throws std::domain_error when gcd(m, n) != 1 and NoSolutionError when
/// k and k2 have different parity.
RootOfUnity crt_attachment(std::int64_t k, std::int64_t m, std::int64_t k2,
                           std::int64_t n);

/// Bezout coefficients: returns {g, x, y} with a*x + b*y = g = gcd(a, b).
struct Bezout {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

/// Non-negative remainder.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace tkchar
