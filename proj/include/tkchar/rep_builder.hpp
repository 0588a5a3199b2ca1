#pragma once

// Explicit SU(2) representatives (A, B), A^m = B^n, for every point of every
// component, and character evaluation on words.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "tkchar/components.hpp"
#include "tkchar/root_of_unity.hpp"
#include "tkchar/su2.hpp"
#include "tkchar/word.hpp"

namespace tkchar {

template <typename Scalar>
struct RepPair {
  UnitaryMatrix<Scalar> A;
  UnitaryMatrix<Scalar> B;
};

using RepPaird = RepPair<double>;

template <typename Scalar>
UnitaryMatrix<Scalar> diagonal(Complex<Scalar> z) {
  return UnitaryMatrix<Scalar>::from_quaternion(z, Complex<Scalar>(0));
}

/// Irreducible representative of Irr(k, k') at t = |b|^2 in (0, 1).
///
/// A = diag(lambda, lambda^{-1}); B has eigenvectors [a:b], [-b:a] with
/// a = sqrt(1 - t), b = sqrt(t) real, so the four eigenvectors have
/// cross-ratio t/(t - 1). t -> 0 is the r = 0 end of the arc.
template <typename Scalar = double>
RepPair<Scalar> build_irr(const GroupParams& p, int k, int kp, Scalar t) {
  if (!is_admissible(p, k, kp)) {
    throw std::invalid_argument("build_irr: " + to_string(IrrId{k, kp}) + " is not a component");
  }
  if (!(t > Scalar(0) && t < Scalar(1))) {
    throw std::invalid_argument("build_irr: t must lie in (0, 1)");
  }
  using U = UnitaryMatrix<Scalar>;
  const U rot = U::from_quaternion(Complex<Scalar>(std::sqrt(Scalar(1) - t)),
                                   Complex<Scalar>(std::sqrt(t)));
  const U A = diagonal(root(k, p.m()).to_complex<Scalar>());
  const U B = rot * diagonal(root(kp, p.n()).to_complex<Scalar>()) * rot.inverse();
  return {A, B};
}

namespace detail {
template <typename Scalar>
Scalar unit_angle(Complex<Scalar> t, double tol) {
  if (std::abs(std::abs(t) - Scalar(1)) > Scalar(tol)) {
    throw std::invalid_argument("reducible builder: |t| must be 1");
  }
  return std::arg(t);
}
}  // namespace detail

/// Coprime reducible representative: A = diag(t^n), B = diag(t^m), with
/// character coordinate s = t + 1/t.
template <typename Scalar = double>
RepPair<Scalar> build_red_coprime(const GroupParams& p, Complex<Scalar> t, double tol = kDefaultTol) {
  if (!p.coprime()) throw std::invalid_argument("build_red_coprime: gcd(m, n) != 1");
  const Scalar theta = detail::unit_angle(t, tol);
  return {diagonal(std::polar(Scalar(1), Scalar(p.n()) * theta)),
          diagonal(std::polar(Scalar(1), Scalar(p.m()) * theta))};
}

/// Reducible representative on the raw chart X_red^i, i in [0, d):
/// A = diag(t^b), B = diag(alpha_i^{-1} t^a), so lambda^a mu^{-b} = xi^i.
template <typename Scalar = double>
RepPair<Scalar> build_red_noncoprime(const GroupParams& p, int raw_index, Complex<Scalar> t,
                                     double tol = kDefaultTol) {
  const Scalar theta = detail::unit_angle(t, tol);
  const Complex<Scalar> alpha_inv = conj(reducible_alpha(p, raw_index)).to_complex<Scalar>();
  return {diagonal(std::polar(Scalar(1), Scalar(p.b()) * theta)),
          diagonal(alpha_inv * std::polar(Scalar(1), Scalar(p.a()) * theta))};
}

template <typename Scalar = double>
RepPair<Scalar> build_red_noncoprime(const GroupParams& p, int raw_index, const RootOfUnity& t) {
  return build_red_noncoprime<Scalar>(p, raw_index, t.to_complex<Scalar>());
}

/// Image of a word under x -> A, y -> B.
template <typename DA, typename DB>
Mat2<typename DA::Scalar::value_type> evaluate(const Word& w, const Eigen::MatrixBase<DA>& a,
                                               const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar::value_type;
  Mat2<S> acc = Mat2<S>::Identity();
  for (const Letter& l : w.letters()) {
    acc = acc * (l.gen == Generator::X ? mat_pow(a, l.exponent) : mat_pow(b, l.exponent));
  }
  return acc;
}

/// Traces of the given words; throws std::invalid_argument on an empty list.
template <typename DA, typename DB>
std::vector<Complex<typename DA::Scalar::value_type>> character(const Eigen::MatrixBase<DA>& a,
                                                                const Eigen::MatrixBase<DB>& b,
                                                                const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("character: empty word list");
  std::vector<Complex<typename DA::Scalar::value_type>> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(evaluate(w, a, b).trace());
  return out;
}

template <typename Scalar>
std::vector<Complex<Scalar>> character(const RepPair<Scalar>& rep, const std::vector<Word>& words) {
  return character(rep.A.matrix(), rep.B.matrix(), words);
}

/// ||A^m - B^n|| in the max-entry norm.
template <typename DA, typename DB>
auto relation_residual(const GroupParams& p, const Eigen::MatrixBase<DA>& a,
                       const Eigen::MatrixBase<DB>& b) {
  return (mat_pow(a, p.m()) - mat_pow(b, p.n())).cwiseAbs().maxCoeff();
}

template <typename Scalar>
Scalar relation_residual(const GroupParams& p, const RepPair<Scalar>& rep) {
  return relation_residual(p, rep.A.matrix(), rep.B.matrix());
}

/// Cross-ratio [e1, e2, f1, f2] of the oriented eigenvectors of A and B.
/// Real and negative on irreducible SU(2) pairs. Throws DegenerateError when
/// either matrix is central or an eigenvector of A is one of B.
template <typename DA, typename DB>
Complex<typename DA::Scalar::value_type> eigenvector_cross_ratio(const Eigen::MatrixBase<DA>& a,
                                                                 const Eigen::MatrixBase<DB>& b,
                                                                 double tol = kDefaultTol) {
  const auto ea = eigen_decompose(a, tol);
  const auto eb = eigen_decompose(b, tol);
  return cross_ratio(ea.e1, ea.e2, eb.e1, eb.e2, tol);
}

template <typename Scalar>
Scalar cross_ratio_of_pair(const RepPair<Scalar>& rep, double tol = kDefaultTol) {
  return eigenvector_cross_ratio(rep.A.matrix(), rep.B.matrix(), tol).real();
}

/// Conjugate both generators by P.
template <typename Scalar>
RepPair<Scalar> conjugate_pair(const RepPair<Scalar>& rep, const UnitaryMatrix<Scalar>& P) {
  return {P * rep.A * P.inverse(), P * rep.B * P.inverse()};
}

}  // namespace tkchar
