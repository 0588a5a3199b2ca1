#pragma once

// 2x2 complex matrix kernel: SU(2) through the unit-quaternion model, general
// SL(2,C) matrices, powers, the commutator-trace reducibility test, a
// normal-matrix eigendecomposition and the projective cross-ratio.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

#include "tkchar/errors.hpp"

namespace tkchar {

inline constexpr double kDefaultTol = 1e-9;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Mat2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Complex<Scalar>, 2, 1>;

using Mat2d = Mat2<double>;
using Vec2d = Vec2<double>;

/// The SU(2) element [[a, -conj(b)], [b, conj(a)]] with |a|^2 + |b|^2 = 1.
template <typename Scalar>
class UnitaryMatrix {
 public:
  using C = Complex<Scalar>;

  UnitaryMatrix() : a_(1), b_(0) {}

  /// Accepts |a|^2 + |b|^2 within 1e-9 of 1 and renormalizes; throws
  /// std::invalid_argument for zero or badly off-sphere input.
  static UnitaryMatrix from_quaternion(C a, C b) {
    const Scalar norm2 = std::norm(a) + std::norm(b);
    if (!(norm2 > Scalar(0))) {
      throw std::invalid_argument("from_quaternion: zero-norm input");
    }
    if (std::abs(norm2 - Scalar(1)) > Scalar(1e-9)) {
      throw std::invalid_argument("from_quaternion: |a|^2+|b|^2 is not 1");
    }
    const Scalar s = Scalar(1) / std::sqrt(norm2);
    return UnitaryMatrix(a * s, b * s);
  }

  /// Reads (a, b) off the first column of a unitary det-1 matrix.
  template <typename Derived>
  static UnitaryMatrix from_matrix(const Eigen::MatrixBase<Derived>& m, Scalar tol = Scalar(1e-9)) {
    const C a = m(0, 0), b = m(1, 0);
    if (std::abs(m(0, 1) + std::conj(b)) > tol || std::abs(m(1, 1) - std::conj(a)) > tol) {
      throw std::invalid_argument("from_matrix: matrix is not in SU(2)");
    }
    return from_quaternion(a, b);
  }

  const C& a() const noexcept { return a_; }
  const C& b() const noexcept { return b_; }

  Mat2<Scalar> matrix() const {
    Mat2<Scalar> m;
    m << a_, -std::conj(b_), b_, std::conj(a_);
    return m;
  }

  Scalar trace() const { return Scalar(2) * a_.real(); }

  UnitaryMatrix inverse() const { return UnitaryMatrix(std::conj(a_), -b_); }

  /// Quaternion product; agrees with matrix multiplication.
  friend UnitaryMatrix operator*(const UnitaryMatrix& x, const UnitaryMatrix& y) {
    return UnitaryMatrix(x.a_ * y.a_ - std::conj(x.b_) * y.b_,
                         x.b_ * y.a_ + std::conj(x.a_) * y.b_);
  }

 private:
  UnitaryMatrix(C a, C b) : a_(a), b_(b) {}

  C a_;
  C b_;
};

using UnitaryMatrixd = UnitaryMatrix<double>;

/// A general 2x2 complex matrix with determinant 1 (checked to 1e-10).
template <typename Scalar>
class SpecialLinearMatrix {
 public:
  explicit SpecialLinearMatrix(const Mat2<Scalar>& m) : m_(m) {
    if (std::abs(m.determinant() - Complex<Scalar>(1)) > Scalar(1e-10)) {
      throw std::invalid_argument("SpecialLinearMatrix: determinant is not 1");
    }
  }
  SpecialLinearMatrix(const UnitaryMatrix<Scalar>& u) : m_(u.matrix()) {}  // NOLINT

  const Mat2<Scalar>& matrix() const noexcept { return m_; }
  Complex<Scalar> trace() const { return m_.trace(); }

  /// Adjugate; equals the inverse because det = 1.
  SpecialLinearMatrix inverse() const { return SpecialLinearMatrix(sl2_inverse(m_), Unchecked{}); }

  friend SpecialLinearMatrix operator*(const SpecialLinearMatrix& x, const SpecialLinearMatrix& y) {
    return SpecialLinearMatrix(x.m_ * y.m_, Unchecked{});
  }

  template <typename Derived>
  static Mat2<Scalar> sl2_inverse(const Eigen::MatrixBase<Derived>& m) {
    Mat2<Scalar> inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return inv;
  }

 private:
  struct Unchecked {};
  SpecialLinearMatrix(const Mat2<Scalar>& m, Unchecked) : m_(m) {}

  Mat2<Scalar> m_;
};

/// [x : y] in CP^1.
template <typename Scalar>
struct ProjectivePoint {
  Vec2<Scalar> v;

  ProjectivePoint() : v(Vec2<Scalar>(Complex<Scalar>(1), Complex<Scalar>(0))) {}
  ProjectivePoint(Complex<Scalar> x, Complex<Scalar> y) : v(x, y) {
    if (x == Complex<Scalar>(0) && y == Complex<Scalar>(0)) {
      throw std::invalid_argument("ProjectivePoint: [0:0] is not a point");
    }
  }
  explicit ProjectivePoint(const Vec2<Scalar>& w) : ProjectivePoint(w(0), w(1)) {}

  /// y/x; infinite at [0:1] is not representable, callers check x first.
  Complex<Scalar> affine() const { return v(1) / v(0); }
};

/// det[p q] = p.x q.y - p.y q.x
template <typename Scalar>
Complex<Scalar> bracket(const ProjectivePoint<Scalar>& p, const ProjectivePoint<Scalar>& q) {
  return p.v(0) * q.v(1) - p.v(1) * q.v(0);
}

/// |sin| of the Fubini-Study angle between two points; 0 iff they coincide.
template <typename Scalar>
Scalar projective_distance(const ProjectivePoint<Scalar>& p, const ProjectivePoint<Scalar>& q) {
  return std::abs(bracket(p, q)) / (p.v.norm() * q.v.norm());
}

template <typename Scalar>
ProjectivePoint<Scalar> operator*(const Mat2<Scalar>& m, const ProjectivePoint<Scalar>& p) {
  return ProjectivePoint<Scalar>(Vec2<Scalar>(m * p.v));
}

// --- matrix algebra -------------------------------------------------------

template <typename Derived>
auto trace(const Eigen::MatrixBase<Derived>& x) {
  return x.trace();
}

template <typename Derived>
auto inverse2(const Eigen::MatrixBase<Derived>& x) {
  using S = typename Derived::Scalar::value_type;
  return SpecialLinearMatrix<S>::sl2_inverse(x);
}

/// Binary exponentiation; negative k uses the det-1 inverse.
template <typename Derived>
Mat2<typename Derived::Scalar::value_type> mat_pow(const Eigen::MatrixBase<Derived>& x, long k) {
  using S = typename Derived::Scalar::value_type;
  Mat2<S> base = k < 0 ? Mat2<S>(inverse2(x)) : Mat2<S>(x);
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Mat2<S> acc = Mat2<S>::Identity();
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// P X P^{-1}
template <typename DX, typename DP>
Mat2<typename DX::Scalar::value_type> conjugate_by(const Eigen::MatrixBase<DX>& x,
                                                   const Eigen::MatrixBase<DP>& p) {
  return p * x * inverse2(p);
}

/// tr(A B A^{-1} B^{-1})
template <typename DA, typename DB>
Complex<typename DA::Scalar::value_type> commutator_trace(const Eigen::MatrixBase<DA>& a,
                                                          const Eigen::MatrixBase<DB>& b) {
  return (a * b * inverse2(a) * inverse2(b)).trace();
}

/// A pair generates a reducible representation iff tr[A,B] = 2.
template <typename DA, typename DB>
bool is_reducible_pair(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                       double tol = kDefaultTol) {
  using S = typename DA::Scalar::value_type;
  return std::abs(commutator_trace(a, b) - Complex<S>(2)) <= S(tol);
}

template <typename Scalar>
bool is_reducible_pair(const UnitaryMatrix<Scalar>& a, const UnitaryMatrix<Scalar>& b,
                       double tol = kDefaultTol) {
  return is_reducible_pair(a.matrix(), b.matrix(), tol);
}

/// max-entry distance to +Id or -Id, whichever is closer.
template <typename Derived>
auto distance_to_center(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar::value_type;
  const Mat2<S> id = Mat2<S>::Identity();
  return std::min((m - id).cwiseAbs().maxCoeff(), (m + id).cwiseAbs().maxCoeff());
}

template <typename Scalar>
struct EigenDecomposition {
  Complex<Scalar> lambda;  ///< Im(lambda) > 0 for unitary input
  ProjectivePoint<Scalar> e1;  ///< M e1 = lambda e1
  ProjectivePoint<Scalar> e2;  ///< M e2 = lambda^{-1} e2, orthogonal to e1
};

/// Eigendecomposition of a normal det-1 matrix (every SU(2) element).
///
/// The eigenvalue with positive imaginary part is returned as lambda; the
/// second eigenvector is the Hermitian complement of the first. Throws
/// DegenerateError when M is within tol of +-Id (max-entry distance), where
/// the eigenspace is the whole plane.
template <typename Derived>
EigenDecomposition<typename Derived::Scalar::value_type> eigen_decompose(
    const Eigen::MatrixBase<Derived>& m, double tol = kDefaultTol) {
  using S = typename Derived::Scalar::value_type;
  using C = Complex<S>;
  if (distance_to_center(m) <= S(tol)) {
    throw DegenerateError("eigen_decompose: matrix is central (+-Id)");
  }
  const C half_tr = m.trace() / S(2);
  C lambda = half_tr + std::sqrt(half_tr * half_tr - C(1));
  if (lambda.imag() < S(0) || (lambda.imag() == S(0) && std::abs(lambda) < S(1))) {
    lambda = C(1) / lambda;
  }
  // Two candidate kernel vectors of M - lambda; keep the better-conditioned.
  const Vec2<S> u(m(0, 1), lambda - m(0, 0));
  const Vec2<S> w(lambda - m(1, 1), m(1, 0));
  Vec2<S> e = u.norm() >= w.norm() ? u : w;
  e.normalize();
  const Vec2<S> f(-std::conj(e(1)), std::conj(e(0)));
  return {lambda, ProjectivePoint<S>(e), ProjectivePoint<S>(f)};
}

template <typename Scalar>
EigenDecomposition<Scalar> eigen_decompose(const UnitaryMatrix<Scalar>& m, double tol = kDefaultTol) {
  return eigen_decompose(m.matrix(), tol);
}

/// Cross-ratio [p1, p2, p3, p4] = (z3 - z1)(z4 - z2) / ((z3 - z2)(z4 - z1))
/// with z = y/x, written with brackets so that points at infinity need no
/// special case:
///
///     [p1,p3][p2,p4] / ([p2,p3][p1,p4])
///
/// With this convention [0, inf, z, 1] = z and, for an orthonormal pair of
/// bases {[1:0],[0:1]}, {[a:b],[-conj b: conj a]}, the value is
/// |b|^2 / (|b|^2 - 1). Throws DegenerateError if any two points coincide
/// within tol.
template <typename Scalar>
Complex<Scalar> cross_ratio(const ProjectivePoint<Scalar>& p1, const ProjectivePoint<Scalar>& p2,
                            const ProjectivePoint<Scalar>& p3, const ProjectivePoint<Scalar>& p4,
                            double tol = kDefaultTol) {
  const ProjectivePoint<Scalar>* pts[4] = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (projective_distance(*pts[i], *pts[j]) <= Scalar(tol)) {
        throw DegenerateError("cross_ratio: points " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " coincide");
      }
    }
  }
  return bracket(p1, p3) * bracket(p2, p4) / (bracket(p2, p3) * bracket(p1, p4));
}

}  // namespace tkchar
