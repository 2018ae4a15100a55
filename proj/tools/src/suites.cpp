#include "conformal_cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <numbers>

#include "conformal/disk.hpp"
#include "conformal/error.hpp"
#include "conformal/halfplane.hpp"
#include "conformal/numdiff.hpp"
#include "conformal/sampling.hpp"
#include "conformal/spacetime.hpp"
#include "conformal/su22.hpp"
#include "conformal/tube.hpp"

namespace conformal::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  int checks = 0;
  double worst = 0.0;

  void add(double residual) {
    ++checks;
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    worst = std::max(worst, residual);
  }
};

using CheckFn = std::function<void(Sampler&, const RunConfig&, Outcome&)>;

struct Check {
  std::string name;
  double tolerance;
  CheckFn run;
};

std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// --- halfplane -------------------------------------------------------------

std::vector<Check> halfplane_checks() {
  return {
      {"halfplane.dewitt", 1e-8,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const HalfPlanePoint pt = s.half_plane(5.0, 0.1, 10.0);
           const MetricPerturbation h{s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0)};
           const double closed = dewitt_closed_form(pt, h);
           out.add(std::abs(dewitt_inner_product(pt, h, h) - closed) / closed);
         }
       }},
      {"halfplane.covariance", 1e-10,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         while (out.checks < cfg.samples) {
           const SL2RElement A = s.sl2r();
           const HalfPlanePoint pt = s.half_plane();
           const double x = s.uniform(-5.0, 5.0);
           if (std::abs(A.c() * x + A.d()) < 0.1) continue;
           out.add(covariance_residual(A, x, pt));
         }
       }},
      {"halfplane.invariance", 1e-10,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           out.add(hyperbolic_invariance_residual(s.sl2r(), s.half_plane()));
         }
       }},
  };
}

// --- disk ------------------------------------------------------------------

std::vector<Check> disk_checks() {
  return {
      {"disk.coincidence", 1e-12,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const DiskPoint v = s.disk_point(0.95);
           const double t = s.uniform(0.0, 2.0 * kPi);
           out.add(std::abs(std::abs(coherent_eta(v, std::polar(1.0, t))) - circle_metric(v, t)));
         }
       }},
      {"disk.cayley_round_trip", 1e-14,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const DiskPoint w = s.disk_point(0.99);
           out.add(std::abs(cayley(inverse_cayley(w)).w() - w.w()));
         }
       }},
      {"disk.gamma_homomorphism", 1e-11,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SL2RElement A = s.sl2r(3.0), B = s.sl2r(3.0);
           const Mat2C prod = gamma_lift(A).matrix() * gamma_lift(B).matrix();
           const SL2RElement back = gamma_conjugate(SU11Element(prod, 1e-10));
           const SL2RElement ref = A * B;
           const double scale = std::max({std::abs(ref.a()), std::abs(ref.b()), std::abs(ref.c()),
                                          std::abs(ref.d())});
           out.add(std::max({std::abs(back.a() - ref.a()), std::abs(back.b() - ref.b()),
                             std::abs(back.c() - ref.c()), std::abs(back.d() - ref.d())}) /
                   scale);
         }
       }},
      {"disk.berezin_orthogonality", 1e-10,
       [](Sampler&, const RunConfig&, Outcome& out) {
         constexpr int kMaxDegree = 6;
         for (int m = 0; m <= kMaxDegree; ++m) {
           for (int n = 0; n <= kMaxDegree; ++n) {
             std::vector<Complex> f(m + 1, 0.0), g(n + 1, 0.0);
             f[m] = 1.0;
             g[n] = 1.0;
             const Complex expected = m == n ? Complex(1.0 / (n + 1)) : Complex(0.0);
             out.add(std::abs(berezin_inner_product(f, g) - expected));
           }
         }
       }},
  };
}

// --- su22 ------------------------------------------------------------------

std::vector<Check> su22_checks() {
  return {
      {"su22.membership", 1e-10,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           out.add(su22_membership_residual((s.su22() * s.su22()).matrix()));
         }
       }},
      {"su22.euz", 1e-11,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SU22Element m = s.su22();
           out.add(euz_residual(m, s.domain_point(0.9), s.domain_point(0.9)));
         }
       }},
      {"su22.ezz", 1e-11,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SU22Element m = s.su22();
           out.add(ezz_residual(m, s.domain_point(0.9)));
         }
       }},
      {"su22.action", 1e-10,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SU22Element m1 = s.su22(), m2 = s.su22();
           const DomainPoint z = s.domain_point(0.9);
           const Mat2C a = frac_linear_act(m1, frac_linear_act(m2, z)).z();
           const Mat2C b = frac_linear_act(m1 * m2, z).z();
           out.add(max_abs((a - b).eval()));
         }
       }},
      {"su22.shilov", 1e-10,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SU22Element m = s.su22();
           const Mat2C img = mobius(m, s.shilov_point().u());
           out.add(max_abs((img.adjoint() * img - Mat2C::Identity()).eval()));
         }
       }},
      {"su22.kernel", 1e-14,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         const Complex scalars[] = {1.0, -1.0, Complex(0.0, 1.0), Complex(0.0, -1.0)};
         for (int i = 0; i < cfg.samples; ++i) {
           const DomainPoint z = s.domain_point(0.9);
           for (Complex k : scalars) {
             const SU22Element m = SU22Element::from_matrix(k * Mat4C::Identity());
             out.add(max_abs((frac_linear_act(m, z).z() - z.z()).eval()));
           }
         }
       }},
      {"su22.jacobian_fd", 1e-6,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SU22Element m = s.su22(0.7);
           const DomainPoint z = s.domain_point(0.7);
           const Complex fd = holomorphic_jacobian_det_fd(
               [&m](const Mat2C& w) { return mobius(m, w); }, z.z(), cfg.fd_step);
           const Complex an = jacobian_det(m, z);
           out.add(std::abs(fd - an) / std::abs(an));
         }
       }},
      {"su22.equivariance", 1e-10,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SU22Element m = s.su22();
           out.add(equivariance_check(m, s.domain_point(0.9), s.domain_point(0.9)).residual);
         }
       }},
      {"su22.phase_modulus", 1e-13,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const SU22Element m = s.su22();
           out.add(equivariance_check(m, s.domain_point(0.9), s.domain_point(0.9)).phase_modulus_error);
         }
       }},
  };
}

// --- tube ------------------------------------------------------------------

std::vector<Check> tube_checks() {
  return {
      {"tube.round_trip_domain", 1e-12,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const DomainPoint z = s.domain_point(0.9);
           out.add(max_abs((inverse_cayley4(cayley4(z)).z() - z.z()).eval()));
         }
       }},
      {"tube.round_trip_tube", 1e-12,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const TubePoint w = s.tube_point();
           out.add(max_abs((cayley4(inverse_cayley4(w)).w() - w.w()).eval()));
         }
       }},
      {"tube.shilov_hermitian", 1e-12,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         while (out.checks < cfg.samples) {
           const ShilovPoint u = s.shilov_point();
           if (operator_norm(inverse2(Mat2C::Identity() + u.u(), 1e20)) > 1e3) continue;
           const Mat2C img = cayley4_boundary(u);
           out.add(max_abs(anti_hermitian_part(img).matrix()) / std::max(1.0, max_abs(img)));
         }
       }},
      {"tube.dzdw_fd", 1e-6,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const TubePoint w = s.tube_point();
           const Complex an = cayley4_jacobian(w.w());
           const Complex fd = holomorphic_jacobian_det_fd(inverse_cayley4_matrix, w.w(), cfg.fd_step);
           out.add(std::abs(fd - an) / std::abs(an));
         }
       }},
      {"tube.two_path", 1e-9,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         const Complex k = tube_transport_constant();
         for (int i = 0; i < cfg.samples; ++i) {
           const TubeStateParams p = s.tube_state();
           const Mat2C w = s.tube_point().w();
           const Complex direct = phi_tube(p, w);
           out.add(std::abs(direct - k * transported_coherent_phi(p, w)) / std::max(1.0, std::abs(direct)));
         }
       }},
  };
}

// --- spacetime -------------------------------------------------------------

Eigen::Matrix4d eta_radial(const RadialPoint& p) {
  const double s = std::sin(p.theta);
  return Eigen::Vector4d(1.0, -1.0, -p.r * p.r, -p.r * p.r * s * s).asDiagonal();
}

const TRGrid kKillingGrid{-2.0, 2.0, 20, 0.1, 2.0, 20};

std::vector<Check> spacetime_checks() {
  return {
      {"spacetime.killing_rescaled", 1e-6,
       [](Sampler&, const RunConfig& cfg, Outcome& out) {
         for (const RadialPoint& p : kKillingGrid.points()) {
           out.add(lie_derivative_fd(rescaled_metric, killing_field(), p, cfg.fd_step).cwiseAbs().maxCoeff());
         }
       }},
      {"spacetime.conformal_killing_minkowski", 1e-6,
       [](Sampler&, const RunConfig& cfg, Outcome& out) {
         for (const RadialPoint& p : kKillingGrid.points()) {
           const Eigen::Matrix4d l = lie_derivative_fd(minkowski_radial, killing_field(), p, cfg.fd_step);
           out.add((l - 4.0 * p.t * eta_radial(p)).cwiseAbs().maxCoeff());
         }
       }},
      {"spacetime.desitter", 1e-6,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const ComovingPoint c{s.uniform(-0.5, 0.5), s.uniform(0.0, 0.8), s.uniform(0.1, kPi - 0.1),
                                 s.uniform(0.0, 2.0 * kPi)};
           out.add(desitter_pullback_residual(c, cfg.fd_step));
         }
       }},
      {"spacetime.flow_pullback", 1e-6,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const RadialPoint p{s.uniform(-1.0, 1.0), s.uniform(0.1, 1.5), s.uniform(0.2, kPi - 0.2), 0.0};
           out.add(flow_pullback_residual(s.uniform(-0.3, 0.3), p, cfg.fd_step));
         }
       }},
      {"spacetime.flow_group", 1e-10,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const RadialPoint p{s.uniform(-0.5, 0.5), s.uniform(0.0, 0.5), 1.0, 0.0};
           const double a1 = s.uniform(-0.3, 0.3), a2 = s.uniform(-0.3, 0.3);
           const RadialPoint once = u1_flow(a1 + a2, p);
           const RadialPoint twice = u1_flow(a1, u1_flow(a2, p));
           const double scale = std::max({1.0, std::abs(once.t), once.r});
           out.add(std::max(std::abs(once.t - twice.t), std::abs(once.r - twice.r)) / scale);
         }
       }},
      {"spacetime.conformal_factor", 1e-12,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const double L = s.uniform(0.3, 3.0);
           const MinkowskiVector x = s.minkowski_box(3.0);
           const RadialPoint p = to_radial(x);
           const double f = induced_conformal_factor(L, p.t, p.r);
           const double phi2 = std::norm(phi_rotational(L, x));
           out.add(std::abs(f - phi2) / phi2);
         }
       }},
      {"spacetime.ratio16", 1e-12,
       [](Sampler& s, const RunConfig& cfg, Outcome& out) {
         for (int i = 0; i < cfg.samples; ++i) {
           const double t = s.uniform(-3.0, 3.0), r = s.uniform(0.0, 3.0);
           out.add(rel(induced_conformal_factor(1.0, t, r) / rescaled_conformal_factor(t, r), 16.0));
         }
       }},
  };
}

const std::map<std::string, std::function<std::vector<Check>()>>& registry() {
  static const std::map<std::string, std::function<std::vector<Check>()>> r{
      {"disk", disk_checks},   {"halfplane", halfplane_checks}, {"spacetime", spacetime_checks},
      {"su22", su22_checks},   {"tube", tube_checks},
  };
  return r;
}

std::vector<SuiteReport> run_suite(const std::string& suite, const RunConfig& cfg) {
  std::vector<SuiteReport> reports;
  for (const Check& check : registry().at(suite)()) {
    Sampler sampler(check_seed(cfg.seed, check.name));
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      check.run(sampler, cfg, out);
    } catch (const Error&) {
      out.worst = std::numeric_limits<double>::infinity();
      out.checks = std::max(out.checks, 1);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    SuiteReport rep;
    rep.suite = check.name;
    rep.checks_run = out.checks;
    rep.max_residual = out.worst;
    rep.tolerance = cfg.tolerance_for(check.name, check.tolerance);
    rep.passed = out.worst <= rep.tolerance;
    rep.wall_time = cfg.timing ? elapsed.count() : 0.0;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const std::string& name : requested) {
    if (name == "all") {
      out.insert(out.end(), suite_names().begin(), suite_names().end());
    } else if (registry().contains(name)) {
      out.push_back(name);
    } else {
      throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::UnknownSuite, "no suites requested");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> check_names(const std::string& suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + suite + "'");
  std::vector<std::string> names;
  for (const Check& c : it->second()) names.push_back(c.name);
  return names;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& suites, const RunConfig& cfg) {
  const std::vector<std::string> ordered = resolve_suites(suites);
  std::vector<std::future<std::vector<SuiteReport>>> pending;
  pending.reserve(ordered.size());
  for (const std::string& name : ordered) {
    pending.push_back(std::async(std::launch::async, run_suite, name, std::cref(cfg)));
  }
  std::vector<SuiteReport> merged;
  for (auto& f : pending) {
    auto part = f.get();
    merged.insert(merged.end(), part.begin(), part.end());
  }
  return merged;
}

}  // namespace conformal::cli
