#include "conformal/halfplane.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conformal/error.hpp"
#include "conformal/quadrature.hpp"

namespace conformal {

HalfPlanePoint::HalfPlanePoint(double q, double p) : q_(q), p_(p) {
  if (!std::isfinite(q) || !std::isfinite(p) || !(p > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "half-plane point needs finite q and p > 0");
  }
}

SL2RElement::SL2RElement(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  const double det = a * d - b * c;
  if (!std::isfinite(det) || std::abs(det - 1.0) > 1e-12) {
    throw Error(ErrorCode::NotInGroup, "SL(2,R) element has determinant " + std::to_string(det));
  }
}

SL2RElement operator*(const SL2RElement& x, const SL2RElement& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

double parabola_field(double x, const HalfPlanePoint& pt) {
  const double s = x - pt.q();
  return 0.5 * (s * s / pt.p() + pt.p());
}

double metric_g(double x, const HalfPlanePoint& pt) {
  const double s = x - pt.q();
  const double denom = pt.p() + s * s / pt.p();
  return 4.0 / (denom * denom);
}

double metric_variation(double x, const HalfPlanePoint& pt, const MetricPerturbation& h) {
  // g = 4p^2 / D^2 with D = p^2 + s^2, s = x - q:
  //   dg/dq = 16 p^2 s / D^3,  dg/dp = 8 p (s^2 - p^2) / D^3.
  const double p = pt.p();
  const double s = x - pt.q();
  const double D = p * p + s * s;
  return 8.0 * p * (2.0 * p * s * h.dq + (s * s - p * p) * h.dp) / (D * D * D);
}

HalfPlanePoint sl2r_act(const SL2RElement& A, const HalfPlanePoint& pt) {
  const double a = A.a(), b = A.b(), c = A.c(), d = A.d();
  const double q = pt.q(), p = pt.p();
  const double norm2 = q * q + p * p;
  const double denom = d * d + 2.0 * c * d * q + c * c * norm2;
  const double re = (b * d - q + 2.0 * a * d * q + a * c * norm2) / denom;
  const double im = p / denom;
  return {re, im};
}

double sl2r_act_boundary(const SL2RElement& A, double x) {
  const double denom = A.c() * x + A.d();
  if (std::abs(denom) <= 1e-14 * (std::abs(A.c() * x) + std::abs(A.d()))) {
    throw Error(ErrorCode::SingularPoint, "cx + d vanishes at x = " + std::to_string(x));
  }
  return (A.a() * x + A.b()) / denom;
}

double sl2r_boundary_derivative(const SL2RElement& A, double x) {
  const double denom = A.d() + A.c() * x;
  return 1.0 / (denom * denom);
}

double covariance_residual(const SL2RElement& A, double x, const HalfPlanePoint& pt) {
  const double moved_x = sl2r_act_boundary(A, x);
  const HalfPlanePoint moved_pt = sl2r_act(A, pt);
  const double lhs = parabola_field(moved_x, moved_pt);
  const double rhs = sl2r_boundary_derivative(A, x) * parabola_field(x, pt);
  return std::abs(lhs - rhs);
}

Eigen::Matrix2d sl2r_jacobian(const SL2RElement& A, const HalfPlanePoint& pt) {
  const double a = A.a(), b = A.b(), c = A.c(), d = A.d();
  const double q = pt.q(), p = pt.p();
  const double denom = d * d + 2.0 * c * d * q + c * c * (q * q + p * p);
  const double m = (a * d - b * c) / (denom * denom);
  const double diag = d * d + 2.0 * c * d * q + c * c * (q * q - p * p);
  const double off = 2.0 * c * (d + c * q) * p;
  Eigen::Matrix2d J;
  J << diag, off, -off, diag;
  return m * J;
}

Eigen::Matrix2d hyperbolic_metric(const HalfPlanePoint& pt) {
  return Eigen::Matrix2d::Identity() / (pt.p() * pt.p());
}

double hyperbolic_invariance_residual(const SL2RElement& A, const HalfPlanePoint& pt) {
  const Eigen::Matrix2d J = sl2r_jacobian(A, pt);
  const Eigen::Matrix2d pulled = J.transpose() * hyperbolic_metric(sl2r_act(A, pt)) * J;
  return (pulled - hyperbolic_metric(pt)).cwiseAbs().maxCoeff();
}

namespace {

struct QuadratureSums {
  double value = 0.0;
  double magnitude = 0.0;  // integral of |integrand|
};

QuadratureSums dewitt_at_order(const HalfPlanePoint& pt, const MetricPerturbation& h1,
                               const MetricPerturbation& h2, int order) {
  const double q = pt.q(), p = pt.p();
  auto integrand = [&](double u) {
    const double t = std::tan(u);
    const double x = q + p * t;
    const double dx_du = p * (1.0 + t * t);
    const double g = metric_g(x, pt);
    const double omega = std::sqrt(g);
    return metric_variation(x, pt, h1) * metric_variation(x, pt, h2) * omega / (g * g) * dx_du;
  };
  const double half_pi = 0.5 * std::numbers::pi;
  return {integrate(integrand, -half_pi, half_pi, order),
          integrate([&](double u) { return std::abs(integrand(u)); }, -half_pi, half_pi, order)};
}

}  // namespace

double dewitt_inner_product(const HalfPlanePoint& pt, const MetricPerturbation& h1,
                            const MetricPerturbation& h2, const QuadratureOptions& opts) {
  const QuadratureSums coarse = dewitt_at_order(pt, h1, h2, opts.order);
  const QuadratureSums fine = dewitt_at_order(pt, h1, h2, 2 * opts.order);
  // Cross terms can integrate to zero, so convergence is judged against the
  // integral of the absolute integrand.
  const double diff = std::abs(fine.value - coarse.value);
  if (diff > opts.rel_tol * fine.magnitude) {
    throw Error(ErrorCode::QuadratureNotConverged,
                "orders " + std::to_string(opts.order) + "/" + std::to_string(2 * opts.order) +
                    " differ by " + std::to_string(diff));
  }
  return fine.value;
}

double dewitt_closed_form(const HalfPlanePoint& pt, const MetricPerturbation& h) {
  return 4.0 * std::numbers::pi * (h.dq * h.dq + h.dp * h.dp) / (pt.p() * pt.p());
}

}  // namespace conformal
