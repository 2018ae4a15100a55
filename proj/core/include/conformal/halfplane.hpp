#pragma once

// Parabola-family metrics on the real line, the SL(2,R) action on the upper
// half-plane and its boundary, and the induced inner product on the
// two-parameter family of metrics.

#include <Eigen/Core>

namespace conformal {

/// z = q + i p with p > 0.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double q, double p);

  double q() const noexcept { return q_; }
  double p() const noexcept { return p_; }

 private:
  double q_;
  double p_;
};

/// Real 2x2 matrix ((a, b), (c, d)) with ad - bc = 1 within 1e-12.
class SL2RElement {
 public:
  SL2RElement(double a, double b, double c, double d);

  static SL2RElement identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  friend SL2RElement operator*(const SL2RElement& x, const SL2RElement& y);

 private:
  double a_, b_, c_, d_;
};

/// Tangent vector (dq, dp) to the family of metrics.
struct MetricPerturbation {
  double dq = 0.0;
  double dp = 0.0;
};

double parabola_field(double x, const HalfPlanePoint& pt);
double metric_g(double x, const HalfPlanePoint& pt);

/// dg = (dg/dq) dq + (dg/dp) dp, from the symbolic derivative of metric_g.
double metric_variation(double x, const HalfPlanePoint& pt, const MetricPerturbation& h);

HalfPlanePoint sl2r_act(const SL2RElement& A, const HalfPlanePoint& pt);

/// (ax + b)/(cx + d). SingularPoint when |cx + d| < 1e-14 (|cx| + |d|).
double sl2r_act_boundary(const SL2RElement& A, double x);

/// d sigma_A / dx = 1 / (d + c x)^2 on the boundary.
double sl2r_boundary_derivative(const SL2RElement& A, double x);

double covariance_residual(const SL2RElement& A, double x, const HalfPlanePoint& pt);

/// Real Jacobian of (q, p) -> sigma_A(q + i p).
Eigen::Matrix2d sl2r_jacobian(const SL2RElement& A, const HalfPlanePoint& pt);

/// G(q, p) = I / p^2.
Eigen::Matrix2d hyperbolic_metric(const HalfPlanePoint& pt);

/// max |J^T G(sigma_A(z)) J - G(z)|.
double hyperbolic_invariance_residual(const SL2RElement& A, const HalfPlanePoint& pt);

struct QuadratureOptions {
  int order = 64;
  double rel_tol = 1e-9;  // tolerance between order and 2*order
};

/// Integral over R of g^-1 h1 g^-1 h2 omega dx (trace omitted), evaluated
/// after x = q + p tan(u). Throws QuadratureNotConverged when successive
/// orders disagree by more than rel_tol.
double dewitt_inner_product(const HalfPlanePoint& pt, const MetricPerturbation& h1,
                            const MetricPerturbation& h2, const QuadratureOptions& opts = {});

/// 4 pi (dq^2 + dp^2) / p^2.
double dewitt_closed_form(const HalfPlanePoint& pt, const MetricPerturbation& h);

}  // namespace conformal
