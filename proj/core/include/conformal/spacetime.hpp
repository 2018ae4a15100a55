#pragma once

// The conformally flat metric induced by the rotationally invariant coherent
// state, its U(1) flow, the Killing field Xi, and comoving coordinates.

#include <array>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "conformal/matrix_core.hpp"

namespace conformal {

/// (t, r, theta, phi) with r >= 0 and theta in [0, pi].
struct RadialPoint {
  double t = 0.0;
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  RadialPoint() = default;
  RadialPoint(double t, double r, double theta, double phi);
};

/// (tau, rho, theta, phi); the chart requires 1 - rho^2 + (1 + rho^2) cos(2 tau) > 0.
struct ComovingPoint {
  double tau = 0.0;
  double rho = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Symmetric 4x4 metric components in the (t, r, theta, phi) basis.
class MetricSample {
 public:
  MetricSample() : g_(Eigen::Matrix4d::Zero()) {}
  explicit MetricSample(const Eigen::Matrix4d& g);

  const Eigen::Matrix4d& components() const noexcept { return g_; }
  double operator()(int i, int j) const { return g_(i, j); }

  /// Signs of the eigenvalues, ascending; (+,-,-,-) shows as {-1,-1,-1,+1}.
  std::array<int, 4> eigenvalue_signs() const;
  bool lorentzian() const;

 private:
  Eigen::Matrix4d g_;
};

RadialPoint to_radial(const MinkowskiVector& x);

/// diag(1, -1, -r^2, -r^2 sin^2 theta).
MetricSample minkowski_radial(const RadialPoint& p);

/// 16 L^4 / (L^4 + (t^2 - r^2)^2 + 2 L^2 (t^2 + r^2)).
double induced_conformal_factor(double L, double t, double r);
MetricSample induced_metric(double L, const MinkowskiVector& x);
MetricSample induced_metric(double L, const RadialPoint& p);

/// 1 / (1 + (t^2 - r^2)^2 + 2 (t^2 + r^2)).
double rescaled_conformal_factor(double t, double r);
MetricSample rescaled_metric(const RadialPoint& p);

/// Flow of the diagonal U(1) subgroup in (t, r); angles are unchanged.
/// ChartSingularity when alpha leaves the window around 0 in which the orbit
/// stays finite, or the denominator drops below 1e-10.
RadialPoint u1_flow(double alpha, const RadialPoint& p);

/// Xi = (1 + r^2 + t^2) d/dt + 2 r t d/dr, as (t, r, theta, phi) components.
std::array<double, 4> killing_xi(const RadialPoint& p);

/// A vector field with only t and r components, depending only on (t, r),
/// with its analytic Jacobian d(field^a)/d(x^b), a, b in {t, r}.
struct RadialVectorField {
  std::function<Eigen::Vector2d(const RadialPoint&)> value;
  std::function<Eigen::Matrix2d(const RadialPoint&)> jacobian;
};

RadialVectorField killing_field();
RadialVectorField zero_field();

using MetricField = std::function<MetricSample(const RadialPoint&)>;

/// (L_V g)_{mn} = V^a d_a g_{mn} + g_{an} d_m V^a + g_{ma} d_n V^a with metric
/// derivatives by central differences of step h in (t, r). StepTooSmall if
/// h < 1e-9.
Eigen::Matrix4d lie_derivative_fd(const MetricField& metric, const RadialVectorField& field,
                                  const RadialPoint& p, double h);

RadialPoint comoving_to_radial(const ComovingPoint& c);

/// diag(1, -1/(1+rho^2)^2, -rho^2/(1+rho^2)^2, -rho^2 sin^2 theta/(1+rho^2)^2).
Eigen::Matrix4d desitter_metric(const ComovingPoint& c);

/// max |J^T g_rescaled J - de Sitter| with J the central-difference Jacobian
/// of comoving_to_radial.
double desitter_pullback_residual(const ComovingPoint& c, double h);

/// max |J^T g_rescaled(flow(p)) J - g_rescaled(p)| with J the FD Jacobian of
/// p -> u1_flow(alpha, p); the finite form of the Killing property.
double flow_pullback_residual(double alpha, const RadialPoint& p, double h);

struct TRGrid {
  double t_min = 0.0;
  double t_max = 0.0;
  int nt = 1;
  double r_min = 0.0;
  double r_max = 0.0;
  int nr = 1;

  /// Row-major: t index outer, r index inner. A single count pins the
  /// coordinate at its minimum.
  std::vector<RadialPoint> points(double theta = 0.5 * std::numbers::pi, double phi = 0.0) const;
};

struct KillingSample {
  RadialPoint point;
  Eigen::Vector2d vector;  // (Xi^t, Xi^r)
};

std::vector<KillingSample> killing_field_samples(const TRGrid& grid);

}  // namespace conformal
