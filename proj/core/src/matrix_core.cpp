#include "conformal/matrix_core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "conformal/error.hpp"

namespace conformal {

HermMat2::HermMat2(const Mat2C& m) {
  m_(0, 0) = Complex(m(0, 0).real(), 0.0);
  m_(1, 1) = Complex(m(1, 1).real(), 0.0);
  m_(0, 1) = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  m_(1, 0) = std::conj(m_(0, 1));
}

double MinkowskiVector::operator[](int mu) const {
  switch (mu) {
    case 0: return x0;
    case 1: return x1;
    case 2: return x2;
    case 3: return x3;
    default: throw Error(ErrorCode::InvalidArgument, "Minkowski index out of range");
  }
}

double minkowski_dot(const MinkowskiVector& a, const MinkowskiVector& b) noexcept {
  return a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3;
}

Complex det2(const Mat2C& m) noexcept { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Complex det4(const Mat4C& m) { return m.fullPivLu().determinant(); }

double condition_number(const Mat2C& m) {
  const double smax = operator_norm(m);
  if (smax == 0.0) return std::numeric_limits<double>::infinity();
  // For 2x2, smax * smin = |det|.
  const double smin = std::abs(det2(m)) / smax;
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

Mat2C inverse2(const Mat2C& m, double max_condition) {
  const double cond = condition_number(m);
  if (!(cond <= max_condition)) {
    throw Error(ErrorCode::NumericalSingularity,
                "2x2 inverse with condition number " + std::to_string(cond));
  }
  const Complex det = det2(m);
  Mat2C adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return adj / det;
}

namespace {

// a*d - |b|^2 with the rounding error of each product recovered by fma, so
// the result is accurate relative to the determinant itself.
// Error-free sum: s + e == a + b exactly.
void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

// a*d - |b|^2 carried in double-double, so the result is accurate relative
// to the determinant itself rather than to the diagonal entries.
double compensated_det(double a, double d, Complex b) {
  const double br = b.real(), bi = b.imag();
  const double ad = a * d, ad_e = std::fma(a, d, -ad);
  const double rr = br * br, rr_e = std::fma(br, br, -rr);
  const double ii = bi * bi, ii_e = std::fma(bi, bi, -ii);
  double s1, e1, s2, e2;
  two_sum(ad, -rr, s1, e1);
  two_sum(s1, -ii, s2, e2);
  return s2 + (((e1 + e2) + ad_e) - rr_e - ii_e);
}

}  // namespace

HermitianEigen hermitian_eigen(const HermMat2& h) {
  const Mat2C& m = h.matrix();
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = m(0, 1);
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double rad = std::hypot(half, std::abs(b));

  HermitianEigen out;
  out.lower = mean - rad;
  out.upper = mean + rad;
  // The eigenvalue of smaller magnitude suffers cancellation; recover it from
  // the determinant.
  if (mean > 0.0 && out.upper > 0.0) {
    out.lower = compensated_det(a, d, b) / out.upper;
  } else if (mean < 0.0 && out.lower < 0.0) {
    out.upper = compensated_det(a, d, b) / out.lower;
  }
  if (rad == 0.0) {
    out.vectors = Mat2C::Identity();
    return out;
  }
  // Eigenvector of the upper eigenvalue, picking the better-conditioned of
  // the two equivalent null-vector candidates of (m - upper E).
  Eigen::Vector2cd v;
  if (half >= 0.0) {
    v << Complex(rad + half, 0.0), std::conj(b);
  } else {
    v << b, Complex(rad - half, 0.0);
  }
  v.normalize();
  out.vectors.col(1) = v;
  out.vectors(0, 0) = -std::conj(v(1));
  out.vectors(1, 0) = std::conj(v(0));
  return out;
}

Mat2C herm_inv_sqrt(const HermMat2& m, double tol) {
  const HermitianEigen eig = hermitian_eigen(m);
  const double floor = tol * std::abs(m.trace());
  if (!(eig.lower > floor) || !std::isfinite(eig.upper)) {
    throw Error(ErrorCode::NotPositiveDefinite,
                "smallest eigenvalue " + std::to_string(eig.lower) + " is below the floor");
  }
  Eigen::Vector2cd scale(1.0 / std::sqrt(eig.lower), 1.0 / std::sqrt(eig.upper));
  const Mat2C p = eig.vectors * scale.asDiagonal() * eig.vectors.adjoint();
  return HermMat2(p).matrix();
}

double operator_norm(const Mat2C& m) {
  const HermitianEigen eig = hermitian_eigen(HermMat2(m.adjoint() * m));
  return std::sqrt(std::max(eig.upper, 0.0));
}

const std::array<Mat2C, 4>& pauli_basis() {
  static const std::array<Mat2C, 4> basis = [] {
    std::array<Mat2C, 4> s;
    s[0] << 1.0, 0.0, 0.0, 1.0;
    s[1] << 0.0, 1.0, 1.0, 0.0;
    s[2] << 0.0, -kI, kI, 0.0;
    s[3] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return basis;
}

HermMat2 pauli_compose(const MinkowskiVector& x) {
  Mat2C w;
  w << Complex(x.x0 + x.x3, 0.0), Complex(x.x1, -x.x2),
       Complex(x.x1, x.x2), Complex(x.x0 - x.x3, 0.0);
  return HermMat2(w);
}

MinkowskiVector pauli_decompose(const HermMat2& h) {
  const Mat2C& w = h.matrix();
  const double w00 = w(0, 0).real();
  const double w11 = w(1, 1).real();
  return {0.5 * (w00 + w11), w(1, 0).real(), w(1, 0).imag(), 0.5 * (w00 - w11)};
}

Mat2C identity2() { return Mat2C::Identity(); }

Mat4C assemble_blocks(const Mat2C& a, const Mat2C& b, const Mat2C& c, const Mat2C& d) {
  Mat4C m;
  m.topLeftCorner<2, 2>() = a;
  m.topRightCorner<2, 2>() = b;
  m.bottomLeftCorner<2, 2>() = c;
  m.bottomRightCorner<2, 2>() = d;
  return m;
}

HermMat2 hermitian_part(const Mat2C& w) { return HermMat2(0.5 * (w + w.adjoint())); }

HermMat2 anti_hermitian_part(const Mat2C& w) {
  return HermMat2((w - w.adjoint()) / (2.0 * kI));
}

bool all_finite(const Mat2C& m) noexcept {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

}  // namespace conformal
