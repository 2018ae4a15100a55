#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "conformal/error.hpp"
#include "conformal/sampling.hpp"
#include "conformal/spacetime.hpp"
#include "conformal/tube.hpp"
#include "oracles.hpp"

using namespace conformal;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

// U(1) flow computed on Hermitian matrices: W -> (tan a E + W)(E - tan a W)^-1.
std::pair<double, double> flow_on_matrices(double alpha, double t, double r) {
  Eigen::Matrix2cd w;
  w << Complex(t + r, 0.0), 0.0, 0.0, Complex(t - r, 0.0);
  const double k = std::tan(alpha);
  const Eigen::Matrix2cd num = k * Eigen::Matrix2cd::Identity() + w;
  const Eigen::Matrix2cd den = Eigen::Matrix2cd::Identity() - k * w;
  // Diagonal case: entrywise division.
  const Complex a = num(0, 0) / den(0, 0);
  const Complex b = num(1, 1) / den(1, 1);
  return {0.5 * (a + b).real(), std::abs(0.5 * (a - b).real())};
}

RadialPoint random_point(Sampler& s, double r_min = 0.1) {
  return {s.uniform(-2.0, 2.0), s.uniform(r_min, 2.0), s.uniform(0.2, kPi - 0.2), s.uniform(0.0, 2.0 * kPi)};
}

Eigen::Matrix4d eta_radial(const RadialPoint& p) {
  const double s = std::sin(p.theta);
  return Eigen::Vector4d(1.0, -1.0, -p.r * p.r, -p.r * p.r * s * s).asDiagonal();
}

}  // namespace

TEST(RadialPoint, Validation) {
  EXPECT_NO_THROW(RadialPoint(0.0, 0.0, 0.0, 0.0));
  EXPECT_EQ(code_of([] { RadialPoint(0.0, -0.1, 1.0, 0.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { RadialPoint(0.0, 1.0, 4.0, 0.0); }), ErrorCode::InvalidArgument);
}

TEST(InducedMetric, Examples) {
  EXPECT_DOUBLE_EQ(induced_conformal_factor(1.0, 0.0, 0.0), 16.0);
  EXPECT_DOUBLE_EQ(induced_conformal_factor(1.0, 0.0, 1.0), 4.0);
  const MetricSample g = induced_metric(1.0, RadialPoint(0.0, 1.0, kPi / 2, 0.0));
  EXPECT_DOUBLE_EQ(g(0, 0), 4.0);
  EXPECT_DOUBLE_EQ(g(1, 1), -4.0);
  EXPECT_DOUBLE_EQ(g(2, 2), -4.0);
  EXPECT_DOUBLE_EQ(g(3, 3), -4.0);
}

TEST(InducedMetric, FactorIsSquaredModulusOfRotationalState) {
  Sampler s(61);
  for (int i = 0; i < 200; ++i) {
    const double L = s.uniform(0.3, 3.0);
    const MinkowskiVector x = s.minkowski_box(3.0);
    const RadialPoint p = to_radial(x);
    const double f = induced_conformal_factor(L, p.t, p.r);
    const double ref = std::norm(phi_explicit(TubeStateParams({0, 0, 0, 0}, {L, 0, 0, 0}), x));
    EXPECT_NEAR(f, ref, 1e-12 * ref);
    // Factor times denominator is 16 L^4.
    const double den = std::pow(L, 4) + std::pow(p.t * p.t - p.r * p.r, 2) +
                       2.0 * L * L * (p.t * p.t + p.r * p.r);
    EXPECT_NEAR(f * den, 16.0 * std::pow(L, 4), 1e-13 * 16.0 * std::pow(L, 4));
    const MetricSample g = induced_metric(L, x);
    const Eigen::Matrix4d expected = f * eta_radial(p);
    EXPECT_LT((g.components() - expected).cwiseAbs().maxCoeff(), 1e-13 * f * std::max(1.0, p.r * p.r));
  }
}

TEST(RescaledMetric, ExamplesAndConstantRatio) {
  EXPECT_DOUBLE_EQ(rescaled_conformal_factor(0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(rescaled_conformal_factor(1.0, 0.0), 0.25);
  Sampler s(62);
  for (int i = 0; i < 100; ++i) {
    const RadialPoint p = random_point(s, 0.0);
    EXPECT_NEAR(rescaled_conformal_factor(p.t, p.r), oracle::desitter_factor_alt(p.t, p.r),
                1e-15);
    const MetricSample induced = induced_metric(1.0, p);
    const MetricSample rescaled = rescaled_metric(p);
    for (int k = 0; k < 4; ++k) {
      if (rescaled(k, k) == 0.0) continue;
      EXPECT_NEAR(induced(k, k) / rescaled(k, k), 16.0, 1e-13);
    }
  }
}

TEST(MetricSample, SignatureAndSymmetry) {
  Sampler s(63);
  for (int i = 0; i < 100; ++i) {
    const RadialPoint p = random_point(s);
    EXPECT_TRUE(rescaled_metric(p).lorentzian());
    EXPECT_TRUE(induced_metric(s.uniform(0.5, 2.0), p).lorentzian());
    EXPECT_TRUE(minkowski_radial(p).lorentzian());
    EXPECT_EQ(rescaled_metric(p).eigenvalue_signs(), (std::array<int, 4>{-1, -1, -1, 1}));
  }
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 1) = 2.0;
  const MetricSample sym(m);
  EXPECT_EQ(sym(0, 1), sym(1, 0));
  EXPECT_FALSE(MetricSample(Eigen::Matrix4d::Identity()).lorentzian());
}

TEST(U1Flow, IdentityAndMatrixOracle) {
  Sampler s(64);
  for (int i = 0; i < 100; ++i) {
    const RadialPoint p = random_point(s, 0.0);
    const RadialPoint same = u1_flow(0.0, p);
    EXPECT_NEAR(same.t, p.t, 1e-15 * std::max(1.0, std::abs(p.t)));
    EXPECT_NEAR(same.r, p.r, 1e-15 * std::max(1.0, p.r));
    const double alpha = s.uniform(-0.3, 0.3);
    const RadialPoint q = u1_flow(alpha, p);
    const auto [t_ref, r_ref] = flow_on_matrices(alpha, p.t, p.r);
    const double scale = std::max({1.0, std::abs(t_ref), r_ref});
    EXPECT_NEAR(q.t, t_ref, 1e-12 * scale);
    EXPECT_NEAR(q.r, r_ref, 1e-12 * scale);
    EXPECT_EQ(q.theta, p.theta);
    EXPECT_EQ(q.phi, p.phi);
  }
}

TEST(U1Flow, GroupProperty) {
  Sampler s(65);
  for (int i = 0; i < 200; ++i) {
    // Orbits reach infinity in finite alpha; stay where the flow remains in the chart.
    const RadialPoint p{s.uniform(-0.5, 0.5), s.uniform(0.0, 0.5), 1.0, 0.0};
    const double a1 = s.uniform(-0.3, 0.3), a2 = s.uniform(-0.3, 0.3);
    const RadialPoint once = u1_flow(a1 + a2, p);
    const RadialPoint twice = u1_flow(a1, u1_flow(a2, p));
    const double scale = std::max({1.0, std::abs(once.t), once.r});
    EXPECT_NEAR(once.t, twice.t, 1e-10 * scale);
    EXPECT_NEAR(once.r, twice.r, 1e-10 * scale);
  }
}

TEST(U1Flow, ChartSingularity) {
  // At t = r = 0 the denominator is 2 + 2 cos(2 alpha), zero at alpha = pi/2.
  EXPECT_EQ(code_of([] { u1_flow(kPi / 2, RadialPoint(0.0, 0.0, 1.0, 0.0)); }),
            ErrorCode::ChartSingularity);
}

TEST(U1Flow, WindowEndsWhereOrbitReachesInfinity) {
  // On the time axis the orbit is t = tan(alpha): finite on (-pi/2, pi/2).
  const RadialPoint o(0.0, 0.0, 1.0, 0.0);
  EXPECT_NEAR(u1_flow(1.5, o).t, std::tan(1.5), 1e-12 * std::tan(1.5));
  EXPECT_EQ(code_of([&] { u1_flow(1.6, o); }), ErrorCode::ChartSingularity);
  EXPECT_EQ(code_of([&] { u1_flow(-1.6, o); }), ErrorCode::ChartSingularity);
  // Off the axis the window ends where the denominator first turns negative,
  // located here by scanning.
  Sampler s(71);
  for (int i = 0; i < 20; ++i) {
    const RadialPoint p{s.uniform(-1.5, 1.5), s.uniform(0.1, 1.5), 1.0, 0.0};
    double alpha = 0.0;
    const double step = 1e-4;
    auto denom = [&](double a) {
      return 1.0 + p.t * p.t - p.r * p.r + std::cos(2 * a) * (1.0 + p.r * p.r - p.t * p.t) -
             2.0 * std::sin(2 * a) * p.t;
    };
    while (denom(alpha + step) > 0.0) alpha += step;
    EXPECT_NO_THROW(u1_flow(alpha - step, p));
    EXPECT_EQ(code_of([&] { u1_flow(alpha + 2 * step, p); }), ErrorCode::ChartSingularity);
  }
}

TEST(KillingXi, ExamplesAndFlowDerivative) {
  const auto o = killing_xi(RadialPoint(0.0, 0.0, 1.0, 0.0));
  EXPECT_EQ(o, (std::array<double, 4>{1.0, 0.0, 0.0, 0.0}));
  const auto one = killing_xi(RadialPoint(1.0, 1.0, 1.0, 0.0));
  EXPECT_EQ(one, (std::array<double, 4>{3.0, 2.0, 0.0, 0.0}));
  Sampler s(66);
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const RadialPoint p = random_point(s, 0.0);
    const RadialPoint plus = u1_flow(h, p), minus = u1_flow(-h, p);
    const auto xi = killing_xi(p);
    EXPECT_NEAR((plus.t - minus.t) / (2 * h), xi[0], 1e-7 * std::max(1.0, xi[0]));
    EXPECT_NEAR((plus.r - minus.r) / (2 * h), xi[1], 1e-7 * std::max(1.0, std::abs(xi[1])));
  }
}

TEST(KillingField, AnalyticJacobianMatchesFD) {
  const RadialVectorField f = killing_field();
  Sampler s(67);
  const double h = 1e-6;
  for (int i = 0; i < 50; ++i) {
    const RadialPoint p = random_point(s);
    const Eigen::Matrix2d j = f.jacobian(p);
    RadialPoint tp = p, tm = p, rp = p, rm = p;
    tp.t += h;
    tm.t -= h;
    rp.r += h;
    rm.r -= h;
    const Eigen::Vector2d dt = (f.value(tp) - f.value(tm)) / (2 * h);
    const Eigen::Vector2d dr = (f.value(rp) - f.value(rm)) / (2 * h);
    EXPECT_NEAR(j(0, 0), dt(0), 1e-8);
    EXPECT_NEAR(j(1, 0), dt(1), 1e-8);
    EXPECT_NEAR(j(0, 1), dr(0), 1e-8);
    EXPECT_NEAR(j(1, 1), dr(1), 1e-8);
  }
}

TEST(LieDerivative, KillingForRescaledMetricOnGrid) {
  const TRGrid grid{-2.0, 2.0, 20, 0.1, 2.0, 20};
  double worst = 0.0;
  for (const RadialPoint& p : grid.points()) {
    const Eigen::Matrix4d l = lie_derivative_fd(rescaled_metric, killing_field(), p, 1e-5);
    worst = std::max(worst, l.cwiseAbs().maxCoeff());
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(LieDerivative, ConformalKillingForMinkowski) {
  const TRGrid grid{-2.0, 2.0, 20, 0.1, 2.0, 20};
  double worst = 0.0;
  for (const RadialPoint& p : grid.points()) {
    const Eigen::Matrix4d l = lie_derivative_fd(minkowski_radial, killing_field(), p, 1e-5);
    worst = std::max(worst, (l - 4.0 * p.t * eta_radial(p)).cwiseAbs().maxCoeff());
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(LieDerivative, ZeroFieldAndErrors) {
  const RadialPoint p(0.3, 0.7, 1.0, 0.0);
  EXPECT_EQ(lie_derivative_fd(rescaled_metric, zero_field(), p, 1e-5), Eigen::Matrix4d::Zero());
  EXPECT_EQ(code_of([&] { lie_derivative_fd(rescaled_metric, killing_field(), p, 1e-10); }),
            ErrorCode::StepTooSmall);
  EXPECT_EQ(code_of([&] {
              lie_derivative_fd(rescaled_metric, killing_field(), RadialPoint(0.0, 1e-6, 1.0, 0.0), 1e-5);
            }),
            ErrorCode::ChartSingularity);
  // A field that is not Killing is detected: pure time translation.
  RadialVectorField dt{[](const RadialPoint&) { return Eigen::Vector2d(1.0, 0.0); },
                       [](const RadialPoint&) { return Eigen::Matrix2d::Zero().eval(); }};
  EXPECT_GT(lie_derivative_fd(rescaled_metric, dt, p, 1e-5).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(FlowPullback, FiniteKillingProperty) {
  Sampler s(68);
  for (int i = 0; i < 100; ++i) {
    const RadialPoint p{s.uniform(-1.0, 1.0), s.uniform(0.1, 1.5), s.uniform(0.2, kPi - 0.2), 0.0};
    const double alpha = s.uniform(-0.3, 0.3);
    EXPECT_LT(flow_pullback_residual(alpha, p, 1e-5), 1e-6);
  }
}

TEST(Comoving, Examples) {
  const RadialPoint o = comoving_to_radial({0.0, 0.0, 1.0, 0.0});
  EXPECT_EQ(o.t, 0.0);
  EXPECT_EQ(o.r, 0.0);
  const RadialPoint a = comoving_to_radial({0.0, 0.3, 1.0, 0.0});
  EXPECT_EQ(a.t, 0.0);
  EXPECT_NEAR(a.r, 0.3, 1e-16);
  for (double tau : {-0.7, -0.2, 0.1, 0.5, 1.2}) {
    const RadialPoint b = comoving_to_radial({tau, 0.0, 1.0, 0.0});
    EXPECT_NEAR(b.t, std::tan(tau), 1e-14 * std::max(1.0, std::abs(std::tan(tau))));
    EXPECT_EQ(b.r, 0.0);
  }
  EXPECT_EQ(code_of([] { comoving_to_radial({kPi / 2, 0.0, 1.0, 0.0}); }), ErrorCode::ChartSingularity);
}

TEST(Comoving, TimeIsFlowParameter) {
  // Comoving time advances along the orbits of Xi: flowing (t, r) at tau = 0
  // by alpha lands on comoving time alpha.
  Sampler s(69);
  for (int i = 0; i < 50; ++i) {
    const double rho = s.uniform(0.0, 0.8), tau = s.uniform(-0.5, 0.5);
    const RadialPoint start = comoving_to_radial({0.0, rho, 1.0, 0.0});
    const RadialPoint flowed = u1_flow(tau, start);
    const RadialPoint direct = comoving_to_radial({tau, rho, 1.0, 0.0});
    EXPECT_NEAR(flowed.t, direct.t, 1e-12);
    EXPECT_NEAR(flowed.r, direct.r, 1e-12);
  }
}

TEST(DeSitter, PullbackResidual) {
  EXPECT_LT(desitter_pullback_residual({0.0, 0.0, 1.0, 0.0}, 1e-5), 1e-8);
  Sampler s(70);
  for (int i = 0; i < 50; ++i) {
    const ComovingPoint c{s.uniform(-0.5, 0.5), s.uniform(0.0, 0.8), s.uniform(0.1, kPi - 0.1),
                          s.uniform(0.0, 2.0 * kPi)};
    const double res = desitter_pullback_residual(c, 1e-5);
    EXPECT_LT(res, 1e-6);
    // Spherical symmetry: changing theta leaves (t, r) untouched, and the
    // residual scales only with the angular components.
    ComovingPoint rotated = c;
    rotated.theta = kPi - c.theta;
    EXPECT_NEAR(desitter_pullback_residual(rotated, 1e-5), res, 1e-12);
  }
  const Eigen::Matrix4d g = desitter_metric({0.2, 0.5, kPi / 2, 0.0});
  EXPECT_DOUBLE_EQ(g(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(g(1, 1), -1.0 / (1.25 * 1.25));
  EXPECT_DOUBLE_EQ(g(2, 2), -0.25 / (1.25 * 1.25));
}

TEST(KillingSamples, GridLayout) {
  const TRGrid single{0.0, 0.0, 1, 0.0, 0.0, 1};
  const auto one = killing_field_samples(single);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].point.t, 0.0);
  EXPECT_EQ(one[0].point.r, 0.0);
  EXPECT_EQ(one[0].vector, Eigen::Vector2d(1.0, 0.0));

  const TRGrid grid{-1.0, 1.0, 3, 0.0, 2.0, 5};
  const auto samples = killing_field_samples(grid);
  ASSERT_EQ(samples.size(), 15u);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) {
      const KillingSample& k = samples[i * 5 + j];
      EXPECT_DOUBLE_EQ(k.point.t, -1.0 + i);
      EXPECT_DOUBLE_EQ(k.point.r, 0.5 * j);
      const auto xi = killing_xi(k.point);
      EXPECT_EQ(k.vector, Eigen::Vector2d(xi[0], xi[1]));
    }
  }
  const auto again = killing_field_samples(grid);
  for (std::size_t i = 0; i < samples.size(); ++i) EXPECT_EQ(again[i].vector, samples[i].vector);
  EXPECT_EQ(code_of([] { TRGrid{0.0, 1.0, 0, 0.0, 1.0, 2}.points(); }), ErrorCode::InvalidGrid);
}
