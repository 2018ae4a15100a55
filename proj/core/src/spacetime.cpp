#include "conformal/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "conformal/error.hpp"

namespace conformal {
namespace {

constexpr double kChartFloor = 1e-10;

Eigen::Matrix4d radial_eta(double r, double theta) {
  const double s = std::sin(theta);
  return Eigen::Vector4d(1.0, -1.0, -r * r, -r * r * s * s).asDiagonal();
}

}  // namespace

RadialPoint::RadialPoint(double t_, double r_, double theta_, double phi_)
    : t(t_), r(r_), theta(theta_), phi(phi_) {
  if (!std::isfinite(t) || !std::isfinite(r) || !(r >= 0.0) || !(theta >= 0.0) ||
      !(theta <= std::numbers::pi)) {
    throw Error(ErrorCode::InvalidArgument, "radial point needs r >= 0 and theta in [0, pi]");
  }
}

MetricSample::MetricSample(const Eigen::Matrix4d& g) : g_(0.5 * (g + g.transpose())) {}

std::array<int, 4> MetricSample::eigenvalue_signs() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(g_, Eigen::EigenvaluesOnly);
  std::array<int, 4> signs{};
  for (int i = 0; i < 4; ++i) {
    const double v = solver.eigenvalues()(i);
    signs[i] = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
  }
  return signs;
}

bool MetricSample::lorentzian() const {
  return eigenvalue_signs() == std::array<int, 4>{-1, -1, -1, 1};
}

RadialPoint to_radial(const MinkowskiVector& x) {
  const double r = std::sqrt(x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3);
  const double theta = r > 0.0 ? std::acos(std::clamp(x.x3 / r, -1.0, 1.0)) : 0.0;
  const double phi = std::atan2(x.x2, x.x1);
  return {x.x0, r, theta, phi};
}

MetricSample minkowski_radial(const RadialPoint& p) { return MetricSample(radial_eta(p.r, p.theta)); }

double induced_conformal_factor(double L, double t, double r) {
  if (!(L > 0.0)) throw Error(ErrorCode::InvalidArgument, "L must be positive");
  const double L2 = L * L;
  const double gap = t * t - r * r;
  return 16.0 * L2 * L2 / (L2 * L2 + gap * gap + 2.0 * L2 * (t * t + r * r));
}

MetricSample induced_metric(double L, const RadialPoint& p) {
  return MetricSample(induced_conformal_factor(L, p.t, p.r) * radial_eta(p.r, p.theta));
}

MetricSample induced_metric(double L, const MinkowskiVector& x) {
  return induced_metric(L, to_radial(x));
}

double rescaled_conformal_factor(double t, double r) {
  const double gap = t * t - r * r;
  return 1.0 / (1.0 + gap * gap + 2.0 * (t * t + r * r));
}

MetricSample rescaled_metric(const RadialPoint& p) {
  return MetricSample(rescaled_conformal_factor(p.t, p.r) * radial_eta(p.r, p.theta));
}

namespace {

// (t, r) images as plain numbers. Both maps are smooth through r = 0 (resp.
// rho = 0), so the finite-difference stencils may step to negative radii.
double flow_denominator(double alpha, double t, double r) {
  return 1.0 + t * t - r * r + std::cos(2.0 * alpha) * (1.0 + r * r - t * t) - 2.0 * std::sin(2.0 * alpha) * t;
}

Eigen::Vector2d flow_tr(double alpha, double t, double r) {
  const double c2 = std::cos(2.0 * alpha);
  const double s2 = std::sin(2.0 * alpha);
  const double denom = flow_denominator(alpha, t, r);
  if (std::abs(denom) < kChartFloor) {
    throw Error(ErrorCode::ChartSingularity, "U(1) flow leaves the chart at alpha = " + std::to_string(alpha));
  }
  return {(2.0 * c2 * t + s2 * (1.0 + r * r - t * t)) / denom, 2.0 * r / denom};
}

Eigen::Vector2d comoving_tr(double tau, double rho) {
  const double rho2 = rho * rho;
  const double denom = 1.0 - rho2 + (1.0 + rho2) * std::cos(2.0 * tau);
  if (!(denom > kChartFloor)) {
    throw Error(ErrorCode::ChartSingularity, "comoving chart denominator vanished");
  }
  return {(1.0 + rho2) * std::sin(2.0 * tau) / denom, 2.0 * rho / denom};
}

// Central-difference Jacobian of a planar map.
template <class F>
Eigen::Matrix2d fd_jacobian(F&& f, double x, double y, double h) {
  Eigen::Matrix2d J;
  J.col(0) = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
  J.col(1) = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
  return J;
}

}  // namespace

RadialPoint u1_flow(double alpha, const RadialPoint& p) {
  // denominator = a + R cos(2 alpha + psi) with R cos psi = 1 + r^2 - t^2 and
  // R sin psi = 2t. It vanishes (r = 0) or first turns negative (r > 0) at
  // alpha* = (pi - psi)/2, where the orbit runs through infinity; the chart
  // holds the open window (alpha* - pi, alpha*) around alpha = 0.
  const double psi = std::atan2(2.0 * p.t, 1.0 + p.r * p.r - p.t * p.t);
  const double pole = 0.5 * (std::numbers::pi - psi);
  if (!(alpha < pole && alpha > pole - std::numbers::pi) ||
      !(flow_denominator(alpha, p.t, p.r) > kChartFloor)) {
    throw Error(ErrorCode::ChartSingularity, "U(1) flow leaves the chart at alpha = " + std::to_string(alpha));
  }
  const Eigen::Vector2d tr = flow_tr(alpha, p.t, p.r);
  return {tr(0), tr(1), p.theta, p.phi};
}

std::array<double, 4> killing_xi(const RadialPoint& p) {
  return {1.0 + p.r * p.r + p.t * p.t, 2.0 * p.r * p.t, 0.0, 0.0};
}

RadialVectorField killing_field() {
  return {[](const RadialPoint& p) {
            const auto xi = killing_xi(p);
            return Eigen::Vector2d(xi[0], xi[1]);
          },
          [](const RadialPoint& p) {
            Eigen::Matrix2d J;
            J << 2.0 * p.t, 2.0 * p.r,
                 2.0 * p.r, 2.0 * p.t;
            return J;
          }};
}

RadialVectorField zero_field() {
  return {[](const RadialPoint&) { return Eigen::Vector2d::Zero().eval(); },
          [](const RadialPoint&) { return Eigen::Matrix2d::Zero().eval(); }};
}

Eigen::Matrix4d lie_derivative_fd(const MetricField& metric, const RadialVectorField& field,
                                  const RadialPoint& p, double h) {
  if (!(h >= 1e-9)) throw Error(ErrorCode::StepTooSmall, "finite-difference step below 1e-9");
  if (p.r - h < 0.0) throw Error(ErrorCode::ChartSingularity, "stencil crosses r = 0");

  const Eigen::Matrix4d g = metric(p).components();
  const Eigen::Matrix4d dg_dt =
      (metric({p.t + h, p.r, p.theta, p.phi}).components() -
       metric({p.t - h, p.r, p.theta, p.phi}).components()) / (2.0 * h);
  const Eigen::Matrix4d dg_dr =
      (metric({p.t, p.r + h, p.theta, p.phi}).components() -
       metric({p.t, p.r - h, p.theta, p.phi}).components()) / (2.0 * h);

  const Eigen::Vector2d v = field.value(p);
  // dv(a, b) = d v^a / d x^b, only the (t, r) block is non-zero.
  Eigen::Matrix4d dv = Eigen::Matrix4d::Zero();
  dv.topLeftCorner<2, 2>() = field.jacobian(p);

  // (dv^T g)_{mn} = sum_a d_m v^a g_{an}.
  return v(0) * dg_dt + v(1) * dg_dr + dv.transpose() * g + g * dv;
}

RadialPoint comoving_to_radial(const ComovingPoint& c) {
  const Eigen::Vector2d tr = comoving_tr(c.tau, c.rho);
  return {tr(0), tr(1), c.theta, c.phi};
}

Eigen::Matrix4d desitter_metric(const ComovingPoint& c) {
  const double w = 1.0 + c.rho * c.rho;
  const double s = std::sin(c.theta);
  const double k = 1.0 / (w * w);
  return Eigen::Vector4d(1.0, -k, -k * c.rho * c.rho, -k * c.rho * c.rho * s * s).asDiagonal();
}

namespace {

// Pullback of the rescaled metric through a (t, r)-only coordinate map whose
// 2x2 Jacobian is supplied; angular components are carried algebraically.
Eigen::Matrix4d pullback_tr(const RadialPoint& image, const Eigen::Matrix2d& J) {
  const Eigen::Matrix4d g = rescaled_metric(image).components();
  Eigen::Matrix4d full = Eigen::Matrix4d::Identity();
  full.topLeftCorner<2, 2>() = J;
  return full.transpose() * g * full;
}

}  // namespace

double desitter_pullback_residual(const ComovingPoint& c, double h) {
  if (!(h >= 1e-9)) throw Error(ErrorCode::StepTooSmall, "finite-difference step below 1e-9");
  const Eigen::Matrix2d J = fd_jacobian(comoving_tr, c.tau, c.rho, h);
  const Eigen::Matrix4d pulled = pullback_tr(comoving_to_radial(c), J);
  return (pulled - desitter_metric(c)).cwiseAbs().maxCoeff();
}

double flow_pullback_residual(double alpha, const RadialPoint& p, double h) {
  if (!(h >= 1e-9)) throw Error(ErrorCode::StepTooSmall, "finite-difference step below 1e-9");
  const Eigen::Matrix2d J =
      fd_jacobian([alpha](double t, double r) { return flow_tr(alpha, t, r); }, p.t, p.r, h);
  const Eigen::Matrix4d pulled = pullback_tr(u1_flow(alpha, p), J);
  return (pulled - rescaled_metric(p).components()).cwiseAbs().maxCoeff();
}

std::vector<RadialPoint> TRGrid::points(double theta, double phi) const {
  if (nt < 1 || nr < 1 || t_max < t_min || r_max < r_min || r_min < 0.0) {
    throw Error(ErrorCode::InvalidGrid, "grid needs counts >= 1, ordered bounds and r_min >= 0");
  }
  std::vector<RadialPoint> out;
  out.reserve(static_cast<std::size_t>(nt) * nr);
  for (int i = 0; i < nt; ++i) {
    const double t = nt == 1 ? t_min : t_min + (t_max - t_min) * i / (nt - 1);
    for (int j = 0; j < nr; ++j) {
      const double r = nr == 1 ? r_min : r_min + (r_max - r_min) * j / (nr - 1);
      out.emplace_back(t, r, theta, phi);
    }
  }
  return out;
}

std::vector<KillingSample> killing_field_samples(const TRGrid& grid) {
  std::vector<KillingSample> out;
  for (const RadialPoint& p : grid.points()) {
    const auto xi = killing_xi(p);
    out.push_back({p, Eigen::Vector2d(xi[0], xi[1])});
  }
  return out;
}

}  // namespace conformal
