#include "conformal/tube.hpp"

#include <cmath>
#include <string>

#include "conformal/error.hpp"

namespace conformal {
namespace {

const Mat2C& E2() {
  static const Mat2C e = Mat2C::Identity();
  return e;
}

}  // namespace

TubePoint::TubePoint(const Mat2C& w) : w_(w) {
  if (!all_finite(w)) throw Error(ErrorCode::InvalidArgument, "tube point must be finite");
  const HermitianEigen eig = hermitian_eigen(anti_hermitian_part(w));
  if (!(eig.lower > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tube point needs Im W positive definite");
  }
}

TubeStateParams::TubeStateParams(const MinkowskiVector& q, const MinkowskiVector& l) : q_(q), l_(l) {
  if (!(l.x0 > 0.0) || !(minkowski_square(l) > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "l must lie in the open future cone");
  }
}

TubePoint TubeStateParams::zeta() const {
  return TubePoint(pauli_compose(q_).matrix() + kI * pauli_compose(l_).matrix());
}

const Mat4C& cayley4_blocks() {
  static const Mat4C m = assemble_blocks(-kI * E2(), kI * E2(), E2(), E2());
  return m;
}

const Mat4C& inverse_cayley4_blocks() {
  static const Mat4C m = assemble_blocks(kI * E2(), E2(), -kI * E2(), E2());
  return m;
}

Mat2C cayley4_matrix(const Mat2C& z) { return kI * (E2() - z) * inverse2(E2() + z); }

Mat2C inverse_cayley4_matrix(const Mat2C& w) {
  return (E2() + kI * w) * inverse2(E2() - kI * w);
}

TubePoint cayley4(const DomainPoint& z) { return TubePoint(cayley4_matrix(z.z())); }

DomainPoint inverse_cayley4(const TubePoint& w) {
  return DomainPoint(inverse_cayley4_matrix(w.w()));
}

Mat2C cayley4_boundary(const ShilovPoint& u) { return cayley4_matrix(u.u()); }

Complex cayley4_jacobian(const Mat2C& w) {
  inverse2(E2() - kI * w);  // conditioning guard
  return jacobian_det(inverse_cayley4_blocks(), w);
}

Complex cayley4_forward_jacobian(const Mat2C& z) {
  inverse2(E2() + z);
  return jacobian_det(cayley4_blocks(), z);
}

Complex phi_tube(const TubeStateParams& zeta, const Mat2C& w) {
  const TubePoint z = zeta.zeta();
  const double det_y = det2(z.imag_part().matrix()).real();
  const Complex numerator = kI * 2.0 * std::sqrt(det_y);
  const Complex denom = det2(w - z.w().adjoint());
  if (std::abs(denom) < 1e-14 * std::max(1.0, max_abs(w) * max_abs(w))) {
    throw Error(ErrorCode::PoleOnShilov, "det(W - zeta^*) vanishes");
  }
  return numerator / denom;
}

Complex phi_explicit(const TubeStateParams& params, const MinkowskiVector& x) {
  const MinkowskiVector y = x - params.q();
  const double l2 = minkowski_square(params.l());
  const double y2 = minkowski_square(y);
  const double ly = minkowski_dot(params.l(), y);
  const double gap = l2 - y2;
  const double denom = gap * gap + 4.0 * ly * ly;
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::PoleOnShilov, "explicit coherent-state denominator vanished");
  }
  return -4.0 * l2 * Complex(y2 - l2, -2.0 * ly) / denom;
}

Complex phi_rotational(double L, const MinkowskiVector& x) {
  if (!(L > 0.0)) throw Error(ErrorCode::InvalidArgument, "L must be positive");
  const double x2 = minkowski_square(x);
  const double gap = L * L - x2;
  const double denom = gap * gap + 4.0 * L * L * x.x0 * x.x0;
  return -4.0 * L * L * Complex(x2 - L * L, -2.0 * L * x.x0) / denom;
}

Complex transported_coherent_phi(const TubeStateParams& zeta, const Mat2C& w) {
  const DomainPoint xi = inverse_cayley4(zeta.zeta());
  const Mat2C z = inverse_cayley4_matrix(w);
  const Complex phi = coherent_phi(xi, z).value();
  return bidensity_transport(cayley4_blocks(), xi.z(), z, phi);
}

Complex tube_transport_constant() {
  const TubeStateParams reference({0.0, 0.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0});
  const Mat2C w = kI * E2();
  return phi_tube(reference, w) / transported_coherent_phi(reference, w);
}

}  // namespace conformal
