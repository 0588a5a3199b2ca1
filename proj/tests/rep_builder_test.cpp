#include <doctest.h>

#include "test_support.hpp"
#include "tkchar/rep_builder.hpp"

using namespace tkchar;
using tkchar::testing::Gen;
using tkchar::testing::max_abs;
using C = std::complex<double>;

namespace {

double char_distance(const std::vector<C>& u, const std::vector<C>& v) {
  double out = 0;
  for (std::size_t i = 0; i < u.size(); ++i) out = std::max(out, std::abs(u[i] - v[i]));
  return out;
}

}  // namespace

TEST_CASE("build_irr trefoil examples") {
  const GroupParams p(3, 2);
  const auto rep = build_irr(p, 1, 1, 0.5);
  CHECK(cross_ratio_of_pair(rep) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(rep.A.trace() - 1.0) < 1e-15);
  CHECK(std::abs(rep.B.trace()) < 1e-15);
  CHECK(std::abs(commutator_trace(rep.A.matrix(), rep.B.matrix()) - 2.0) > 1e-3);
  const auto near = build_irr(p, 1, 1, 1e-6);
  CHECK(std::abs(commutator_trace(near.A.matrix(), near.B.matrix()) - 2.0) < 1e-4);
}

TEST_CASE("build_irr rejects bad input") {
  const GroupParams p(4, 6);
  CHECK_THROWS_AS(build_irr(p, 1, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_irr(p, 4, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_irr(p, 1, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_irr(p, 1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_irr(p, 1, 1, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(build_irr(p, 1, 1, std::nan("")), std::invalid_argument);
}

TEST_CASE("build_irr guarantees") {
  Gen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const GroupParams p(gen.integer(2, 12), gen.integer(2, 12));
    const auto comps = enumerate_irr(p);
    const auto id = comps[gen.integer(0, static_cast<int>(comps.size()) - 1)];
    const double t = gen.uniform(1e-3, 1 - 1e-3);
    const auto rep = build_irr(p, id.k, id.kp, t);
    const double sign = id.k % 2 ? -1.0 : 1.0;
    CHECK(max_abs(mat_pow(rep.A.matrix(), p.m()) - sign * Mat2d::Identity()) < 1e-10);
    CHECK(max_abs(mat_pow(rep.B.matrix(), p.n()) - sign * Mat2d::Identity()) < 1e-10);
    CHECK(relation_residual(p, rep) < 1e-10);
    CHECK_FALSE(is_reducible_pair(rep.A, rep.B));
    CHECK(std::abs(cross_ratio_of_pair(rep) - t / (t - 1)) < 1e-9 * (1 + t / (1 - t)));
    const auto P = gen.su2();
    CHECK(std::abs(cross_ratio_of_pair(conjugate_pair(rep, P)) - t / (t - 1)) <
          1e-9 * (1 + t / (1 - t)));
  }
}

TEST_CASE("irreducibility boundary") {
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      const GroupParams p(m, n);
      for (auto id : enumerate_irr(p)) {
        for (double t = 0.01; t <= 0.99 + 1e-12; t += 0.049) {
          const auto rep = build_irr(p, id.k, id.kp, t);
          CHECK_FALSE(is_reducible_pair(rep.A, rep.B));
        }
        for (double t : {1e-8, 1 - 1e-8}) {
          const auto rep = build_irr(p, id.k, id.kp, t);
          CHECK(is_reducible_pair(rep.A.matrix(), rep.B.matrix(), 1e-3));
        }
      }
    }
}

TEST_CASE("build_red_coprime examples") {
  const GroupParams p(3, 2);
  const auto id = build_red_coprime(p, C(1));
  CHECK(max_abs(id.A.matrix() - Mat2d::Identity()) < 1e-15);
  CHECK(max_abs(id.B.matrix() - Mat2d::Identity()) < 1e-15);
  const auto r = build_red_coprime(p, std::polar(1.0, M_PI / 12));
  CHECK(std::abs(r.A.trace() - std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(r.B.trace() - std::sqrt(2.0)) < 1e-14);
  const auto neg = build_red_coprime(p, C(-1));
  CHECK(max_abs(neg.A.matrix() - Mat2d::Identity()) < 1e-14);   // (-1)^2
  CHECK(max_abs(neg.B.matrix() + Mat2d::Identity()) < 1e-14);   // (-1)^3
  CHECK_THROWS_AS(build_red_coprime(p, C(1.1)), std::invalid_argument);
  CHECK_THROWS_AS(build_red_coprime(GroupParams(4, 6), C(1)), std::invalid_argument);
}

TEST_CASE("build_red_noncoprime examples") {
  const GroupParams p(4, 6);
  const auto alpha = reducible_alpha(p, 1);
  const RootOfUnity xi = root(2, p.d());
  // t = 1: lambda = 1, mu = alpha^{-1}; lambda^a mu^{-b} = alpha^b = xi
  CHECK(pow(conj(alpha), -p.b()) == xi);
  CHECK(pow(alpha, p.b()) == xi);
  const auto rep = build_red_noncoprime(p, 1, root(0, 1));
  CHECK(max_abs(rep.A.matrix() - Mat2d::Identity()) < 1e-15);
  CHECK(std::abs(rep.B.matrix()(0, 0) - conj(alpha).to_complex()) < 1e-15);
  CHECK(relation_residual(p, rep) < 1e-10);
  CHECK_THROWS_AS(build_red_noncoprime(p, 0, C(0.5)), std::invalid_argument);

  // i = 0 matches the coprime formula in (a, b)
  const GroupParams ab(p.a(), p.b());
  const C t = std::polar(1.0, 0.77);
  const auto red0 = build_red_noncoprime(p, 0, t);
  const auto cop = build_red_coprime(ab, t);
  CHECK(max_abs(red0.A.matrix() - cop.A.matrix()) < 1e-14);
  CHECK(max_abs(red0.B.matrix() - cop.B.matrix()) < 1e-14);
}

TEST_CASE("reducible builders satisfy the relation") {
  Gen gen(12);
  for (int i = 0; i < 1000; ++i) {
    const GroupParams p(gen.integer(2, 15), gen.integer(2, 15));
    const C t = gen.unit();
    if (p.coprime()) {
      const auto rep = build_red_coprime(p, t);
      CHECK(relation_residual(p, rep) < 1e-10);
      CHECK(std::abs(rep.A.trace() - std::pow(t, p.n()) - std::pow(t, -p.n())) < 1e-12);
    }
    const int idx = gen.integer(0, p.d() - 1);
    const auto rep = build_red_noncoprime(p, idx, t);
    CHECK(relation_residual(p, rep) < 1e-10);
    CHECK(is_reducible_pair(rep.A, rep.B));
    // membership in X_red^i
    const C lam = rep.A.a(), mu = rep.B.a();
    const C z = std::pow(lam, p.a()) * std::pow(mu, -p.b());
    CHECK(std::abs(z - std::polar(1.0, 2 * M_PI * idx / p.d())) < 1e-10);
  }
}

TEST_CASE("word parsing") {
  CHECK(Word::parse("xyXY") == Word::commutator());
  CHECK(Word::parse("xyXY").to_string() == "xyXY");
  CHECK(Word::parse("xxy").letters() == std::vector<Letter>{{Generator::X, 2}, {Generator::Y, 1}});
  CHECK(Word::parse("xxy").to_string() == "xxy");
  CHECK(Word::parse("xXy") == Word::y());
  CHECK(Word::parse("xyYX").empty());
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("xz"), std::invalid_argument);
  const auto list = parse_word_list("x,y,xyXY");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == Word::commutator());
  CHECK_THROWS_AS(parse_word_list("x,,y"), std::invalid_argument);
  const auto defaults = default_words();
  REQUIRE(defaults.size() == 5);
  CHECK(defaults[3].to_string() == "xY");
}

TEST_CASE("character examples") {
  const Mat2d id = Mat2d::Identity();
  const auto c = character(id, id, {Word::x()});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == C(2));
  CHECK_THROWS_AS(character(id, id, {}), std::invalid_argument);
  CHECK(std::abs(evaluate(Word(), id, id).trace() - 2.0) == 0.0);

  const GroupParams p(3, 2);
  for (double t : {0.1, 0.4, 0.9}) {
    CHECK(std::abs(character(build_irr(p, 1, 1, t), {Word::x()})[0] - 1.0) < 1e-14);
  }
  const auto words = default_words();
  const auto ch = character(build_irr(p, 1, 1, 0.5), words);
  CHECK(std::abs(ch[4] - (-1.0)) < 1e-12);
}

TEST_CASE("characters are conjugation invariant") {
  Gen gen(13);
  const auto words = default_words();
  for (int i = 0; i < 300; ++i) {
    const GroupParams p(gen.integer(2, 9), gen.integer(2, 9));
    const auto comps = enumerate_irr(p);
    const auto id = comps[gen.integer(0, static_cast<int>(comps.size()) - 1)];
    const auto rep = build_irr(p, id.k, id.kp, gen.uniform(0.01, 0.99));
    const auto conj_rep = conjugate_pair(rep, gen.su2());
    CHECK(char_distance(character(rep, words), character(conj_rep, words)) < 1e-10);
    CHECK(std::abs(cross_ratio_of_pair(rep) - cross_ratio_of_pair(conj_rep)) < 1e-9);
  }
}

TEST_CASE("limits of irreducible arcs are the reducible attachment points") {
  const auto words = default_words();
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      const GroupParams p(m, n);
      for (auto id : enumerate_irr(p)) {
        const auto eig = *describe_irr(p, id).eigen_data;
        RepPaird at0, at1;
        if (p.coprime()) {
          at0 = build_red_coprime(p, crt_attachment(id.k, m, id.kp, n).to_complex());
          at1 = build_red_coprime(p, crt_attachment(id.k, m, 2 * n - id.kp, n).to_complex());
        } else {
          const EigenPair e1{eig.lambda, conj(eig.mu)};
          at0 = build_red_noncoprime(p, reducible_index(p, eig), reducible_parameter(p, eig));
          at1 = build_red_noncoprime(p, reducible_index(p, e1), reducible_parameter(p, e1));
        }
        const auto c0 = character(at0, words), c1 = character(at1, words);
        for (double eps : {1e-4, 1e-6, 1e-8}) {
          const double e0 = char_distance(character(build_irr(p, id.k, id.kp, eps), words), c0);
          const double e1 = char_distance(character(build_irr(p, id.k, id.kp, 1 - eps), words), c1);
          CHECK(e0 < 20 * std::sqrt(eps));
          CHECK(e1 < 20 * std::sqrt(eps));
        }
        // the two ends are different characters
        CHECK(char_distance(c0, c1) > 1e-3);
      }
    }
}
