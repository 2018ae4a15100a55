#include "conformal/disk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "conformal/error.hpp"
#include "conformal/quadrature.hpp"

namespace conformal {

DiskPoint::DiskPoint(Complex w) : w_(w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || !(std::abs(w) < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "disk point must satisfy |w| < 1");
  }
}

double su11_membership_residual(const Mat2C& m) {
  Mat2C J = Mat2C::Zero();
  J(0, 0) = 1.0;
  J(1, 1) = -1.0;
  const double form = max_abs((m.adjoint() * J * m - J).eval());
  return std::max(form, std::abs(det2(m) - 1.0));
}

SU11Element::SU11Element(const Mat2C& m, double tol) : m_(m) {
  const double res = su11_membership_residual(m);
  if (!(res <= tol)) {
    throw Error(ErrorCode::NotInGroup, "SU(1,1) residual " + std::to_string(res));
  }
}

DiskPoint cayley(const HalfPlanePoint& z) {
  const Complex zc(z.q(), z.p());
  return DiskPoint((zc - kI) / (zc + kI));
}

HalfPlanePoint inverse_cayley(const DiskPoint& w) {
  const Complex z = kI * (1.0 + w.w()) / (1.0 - w.w());
  return {z.real(), z.imag()};
}

Eigen::Matrix2d inverse_cayley_jacobian(const DiskPoint& w) {
  const Complex one_minus = 1.0 - w.w();
  const Complex deriv = 2.0 * kI / (one_minus * one_minus);
  // Cauchy-Riemann: d(q, p)/d(x, y) = [[Re f', -Im f'], [Im f', Re f']].
  Eigen::Matrix2d J;
  J << deriv.real(), -deriv.imag(), deriv.imag(), deriv.real();
  return J;
}

Eigen::Matrix2d disk_metric(const DiskPoint& w) {
  const double s = 1.0 - std::norm(w.w());
  return 4.0 * Eigen::Matrix2d::Identity() / (s * s);
}

double boundary_coordinate(double t) { return -1.0 / std::tan(0.5 * t); }

double boundary_coordinate_derivative(double t) {
  const double s = std::sin(0.5 * t);
  return 0.5 / (s * s);
}

const Mat2C& gamma_c() {
  static const Mat2C g = [] {
    Mat2C m;
    m << 1.0, -kI, 1.0, kI;
    return Mat2C((Complex(1.0, -1.0) / 2.0) * m);
  }();
  return g;
}

const Mat2C& gamma_c_inverse() {
  static const Mat2C g = [] {
    Mat2C m;
    m << kI, kI, -1.0, 1.0;
    return Mat2C((Complex(1.0, -1.0) / 2.0) * m);
  }();
  return g;
}

SL2RElement gamma_conjugate(const SU11Element& A) {
  const Mat2C r = gamma_c_inverse() * A.matrix() * gamma_c();
  double imag = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) imag = std::max(imag, std::abs(r(i, j).imag()));
  if (imag > 1e-10) {
    throw Error(ErrorCode::NotInGroup, "conjugated matrix keeps imaginary part " + std::to_string(imag));
  }
  return {r(0, 0).real(), r(0, 1).real(), r(1, 0).real(), r(1, 1).real()};
}

SU11Element gamma_lift(const SL2RElement& A) {
  Mat2C m;
  m << A.a(), A.b(), A.c(), A.d();
  return SU11Element(gamma_c() * m * gamma_c_inverse(), 1e-11);
}

Complex mobius(const Mat2C& m, Complex w) {
  return (m(0, 0) * w + m(0, 1)) / (m(1, 0) * w + m(1, 1));
}

double circle_metric(const DiskPoint& xi, double t) {
  const Complex z = std::polar(1.0, t);
  return (1.0 - std::norm(xi.w())) / std::norm(1.0 - z * std::conj(xi.w()));
}

Complex coherent_eta(const DiskPoint& v, Complex z) {
  if (!(std::abs(z) <= 1.0 + 1e-15)) {
    throw Error(ErrorCode::InvalidArgument, "coherent_eta evaluated outside the closed disk");
  }
  const Complex denom = 1.0 - z * std::conj(v.w());
  return (1.0 - std::norm(v.w())) / (denom * denom);
}

namespace {

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Gauss-Legendre in r on [0, 1], periodic trapezoid in theta.
Complex disk_integral(std::span<const Complex> f, std::span<const Complex> g, int radial_order,
                      int angular_points) {
  const GaussLegendreRule& rule = gauss_legendre(radial_order);
  const double dtheta = 2.0 * std::numbers::pi / angular_points;
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = 0.5 * (rule.nodes[i] + 1.0);
    Complex ring = 0.0;
    for (int k = 0; k < angular_points; ++k) {
      const Complex z = std::polar(r, k * dtheta);
      ring += evaluate_polynomial(f, z) * std::conj(evaluate_polynomial(g, z));
    }
    sum += 0.5 * rule.weights[i] * r * ring * dtheta;
  }
  // dz ^ dz-bar = -2i dx ^ dy; orientation fixed so that norms are positive.
  return sum / std::numbers::pi;
}

}  // namespace

Complex berezin_inner_product(std::span<const Complex> f, std::span<const Complex> g,
                              const DiskQuadratureOptions& opts) {
  const int degree = static_cast<int>(std::max(f.size(), g.size()));
  const int radial = std::max(opts.radial_order, degree + 2);
  const int angular = std::max(opts.angular_points, 2 * degree + 2);
  const Complex coarse = disk_integral(f, g, radial, angular);
  const Complex fine = disk_integral(f, g, 2 * radial, 2 * angular);
  if (std::abs(fine - coarse) > opts.tol * std::max(1.0, std::abs(fine))) {
    throw Error(ErrorCode::QuadratureNotConverged, "disk quadrature did not converge");
  }
  return fine;
}

}  // namespace conformal
