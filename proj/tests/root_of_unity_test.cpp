#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "tkchar/errors.hpp"
#include "tkchar/root_of_unity.hpp"

using namespace tkchar;

namespace {

// All c in [0, 2mn) with e^{i pi c/(mn)} satisfying t^n = root(k, m), t^m = root(k2, n),
// found by scanning and comparing complex values.
std::vector<std::int64_t> brute_force_crt(int k, int m, int k2, int n) {
  std::vector<std::int64_t> out;
  const auto lambda = root(k, m).to_complex(), mu = root(k2, n).to_complex();
  for (std::int64_t c = 0; c < 2LL * m * n; ++c) {
    const double theta = M_PI * static_cast<double>(c) / (m * n);
    const std::complex<double> tn = std::polar(1.0, theta * n), tm = std::polar(1.0, theta * m);
    if (std::abs(tn - lambda) < 1e-9 && std::abs(tm - mu) < 1e-9) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("root canonical form") {
  CHECK(root(0, 1) == RootOfUnity{});
  CHECK(root(12, 12) == root(1, 1));
  CHECK(root(12, 12).num() == 1);
  CHECK(root(12, 12).den() == 1);
  CHECK(root(25, 12) == root(1, 12));
  CHECK(root(-1, 4) == root(7, 4));
  CHECK(root(6, 4) == root(3, 2));
  CHECK_THROWS_AS(root(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(root(1, -3), std::invalid_argument);
}

TEST_CASE("group operations") {
  CHECK(pow(root(1, 3), 3) == root(1, 1));
  CHECK(mul(root(1, 4), root(1, 4)) == root(1, 2));
  CHECK(conj(root(1, 6)) == root(11, 6));
  CHECK(pow(root(5, 7), 0) == RootOfUnity{});
  CHECK(pow(root(5, 7), -1) == conj(root(5, 7)));
}

TEST_CASE("to_complex") {
  const auto one = root(0, 1).to_complex();
  CHECK(one.real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(one.imag()) < 1e-15);
  const auto i = root(1, 2).to_complex();
  CHECK(std::abs(i.real()) < 1e-15);
  CHECK(std::abs(i.imag() - 1.0) < 1e-15);
  const auto z = root(1, 3).to_complex();
  CHECK(std::abs(z.real() - 0.5) < 1e-15);
  CHECK(std::abs(z.imag() - std::sqrt(3.0) / 2) < 1e-15);
  for (int N = 1; N <= 24; ++N) {
    for (int c = 0; c < 2 * N; ++c) CHECK(std::abs(std::abs(root(c, N).to_complex()) - 1.0) < 1e-15);
  }
}

TEST_CASE("mul agrees with complex multiplication") {
  for (int N1 = 1; N1 <= 12; ++N1) {
    for (int c1 = 0; c1 < 2 * N1; ++c1) {
      for (int N2 = 1; N2 <= 12; N2 += 5) {
        for (int c2 = 0; c2 < 2 * N2; ++c2) {
          const auto x = root(c1, N1), y = root(c2, N2);
          CHECK(std::abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("pow matches iterated multiplication") {
  for (int N = 1; N <= 24; ++N) {
    for (int c = 0; c < 2 * N; ++c) {
      const RootOfUnity x = root(c, N);
      RootOfUnity up{}, down{};
      for (int k = 0; k <= 64; ++k) {
        CHECK(pow(x, k) == up);
        CHECK(pow(x, -k) == down);
        up *= x;
        down *= conj(x);
      }
    }
  }
}

TEST_CASE("crt_attachment examples against brute force") {
  CHECK(brute_force_crt(1, 3, 1, 2) == std::vector<std::int64_t>{1});
  CHECK(crt_attachment(1, 3, 1, 2) == root(1, 6));
  CHECK(brute_force_crt(1, 3, 3, 2) == std::vector<std::int64_t>{7});
  CHECK(crt_attachment(1, 3, 3, 2) == root(7, 6));
  CHECK(brute_force_crt(2, 5, 2, 3) == std::vector<std::int64_t>{2});
  CHECK(crt_attachment(2, 5, 2, 3) == root(2, 15));
}

TEST_CASE("crt_attachment errors") {
  CHECK_THROWS_AS(crt_attachment(1, 3, 2, 2), NoSolutionError);
  CHECK_THROWS_AS(crt_attachment(1, 4, 1, 6), std::domain_error);
}

TEST_CASE("crt_attachment: exact power equations and uniqueness, coprime m, n <= 10") {
  for (int m = 2; m <= 10; ++m) {
    for (int n = 2; n <= 10; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (int k = 1; k < m; ++k) {
        for (int k2 = 1; k2 < 2 * n; ++k2) {
          if ((k - k2) % 2 != 0) continue;
          const RootOfUnity t = crt_attachment(k, m, k2, n);
          CHECK(pow(t, n) == root(k, m));
          CHECK(pow(t, m) == root(k2, n));
          const auto scan = brute_force_crt(k, m, k2, n);
          REQUIRE(scan.size() == 1);
          CHECK(root(scan.front(), std::int64_t{m} * n) == t);
        }
      }
    }
  }
}

TEST_CASE("extended_gcd") {
  for (int a = 1; a <= 30; ++a) {
    for (int b = 1; b <= 30; ++b) {
      const Bezout bz = extended_gcd(a, b);
      CHECK(bz.g == std::gcd(a, b));
      CHECK(a * bz.x + b * bz.y == bz.g);
    }
  }
}
