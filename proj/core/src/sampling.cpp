#include "conformal/sampling.hpp"

#include <cmath>
#include <numbers>

namespace conformal {

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Complex Sampler::complex_box(double half_width) {
  const double re = uniform(-half_width, half_width);
  const double im = uniform(-half_width, half_width);
  return {re, im};
}

Mat2C Sampler::matrix(double half_width) {
  Mat2C m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = complex_box(half_width);
  return m;
}

SL2RElement Sampler::sl2r(double max_entry) {
  for (;;) {
    const double a = uniform(-max_entry, max_entry);
    const double b = uniform(-max_entry, max_entry);
    const double c = uniform(-max_entry, max_entry);
    if (std::abs(a) < 0.2) continue;
    const double d = (1.0 + b * c) / a;
    if (std::abs(d) > max_entry) continue;
    return {a, b, c, d};
  }
}

HalfPlanePoint Sampler::half_plane(double q_abs, double p_min, double p_max) {
  const double q = uniform(-q_abs, q_abs);
  const double p = uniform(p_min, p_max);
  return {q, p};
}

DiskPoint Sampler::disk_point(double max_radius) {
  const double r = uniform(0.0, max_radius);
  const double angle = uniform(0.0, 2.0 * std::numbers::pi);
  return DiskPoint(std::polar(r, angle));
}

DomainPoint Sampler::domain_point(double max_norm) {
  Mat2C m = matrix(1.0);
  const double norm = operator_norm(m);
  const double target = uniform(0.0, max_norm);
  if (norm > 0.0) m *= target / norm;
  return DomainPoint(m);
}

Mat2C Sampler::unitary(double phase) {
  Complex a = complex_box(1.0);
  Complex b = complex_box(1.0);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  const Complex e = std::polar(1.0, phase);
  Mat2C u;
  u << a, -std::conj(b) * e, b, std::conj(a) * e;
  return u;
}

ShilovPoint Sampler::shilov_point() {
  return ShilovPoint(unitary(uniform(0.0, 2.0 * std::numbers::pi)));
}

SU22Element Sampler::su22(double max_norm) {
  const SU22Element frame = build_coherent_frame(domain_point(max_norm));
  const double phase = uniform(0.0, 2.0 * std::numbers::pi);
  const Mat2C u = unitary(phase);
  const Mat2C v = unitary(-phase);
  return frame * SU22Element::block_unitary(u, v);
}

MinkowskiVector Sampler::future_cone() {
  const double l0 = uniform(0.5, 2.0);
  const double radius = uniform(0.0, 0.9 * l0);
  const double cos_theta = uniform(-1.0, 1.0);
  const double sin_theta = std::sqrt(1.0 - cos_theta * cos_theta);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return {l0, radius * sin_theta * std::cos(phi), radius * sin_theta * std::sin(phi),
          radius * cos_theta};
}

MinkowskiVector Sampler::minkowski_box(double half_width) {
  const double x0 = uniform(-half_width, half_width);
  const double x1 = uniform(-half_width, half_width);
  const double x2 = uniform(-half_width, half_width);
  const double x3 = uniform(-half_width, half_width);
  return {x0, x1, x2, x3};
}

TubeStateParams Sampler::tube_state(double q_half_width) {
  const MinkowskiVector q = minkowski_box(q_half_width);
  const MinkowskiVector l = future_cone();
  return {q, l};
}

TubePoint Sampler::tube_point(double x_half_width) {
  const MinkowskiVector x = minkowski_box(x_half_width);
  const MinkowskiVector y = future_cone();
  return TubePoint(pauli_compose(x).matrix() + kI * pauli_compose(y).matrix());
}

}  // namespace conformal
