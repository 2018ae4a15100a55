#include "conformal/su22.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conformal/error.hpp"

namespace conformal {
namespace {

constexpr double kMaxCondition = 1e12;

struct Blocks {
  Mat2C a, b, c, d;
};

Blocks split(const Mat4C& m) {
  return {m.topLeftCorner<2, 2>(), m.topRightCorner<2, 2>(), m.bottomLeftCorner<2, 2>(),
          m.bottomRightCorner<2, 2>()};
}

}  // namespace

double su22_membership_residual(const Mat4C& m) {
  const Blocks k = split(m);
  const Mat2C E = Mat2C::Identity();
  const double r1 = max_abs((k.a * k.a.adjoint() - k.b * k.b.adjoint() - E).eval());
  const double r2 = max_abs((k.d * k.d.adjoint() - k.c * k.c.adjoint() - E).eval());
  const double r3 = max_abs((k.a * k.c.adjoint() - k.b * k.d.adjoint()).eval());
  return std::max({r1, r2, r3, std::abs(det4(m) - 1.0)});
}

SU22Element SU22Element::from_blocks(const Mat2C& a, const Mat2C& b, const Mat2C& c,
                                     const Mat2C& d, double tol) {
  const double res = su22_membership_residual(assemble_blocks(a, b, c, d));
  if (!(res <= tol)) {
    throw Error(ErrorCode::NotInGroup, "SU(2,2) membership residual " + std::to_string(res));
  }
  return SU22Element(a, b, c, d);
}

SU22Element SU22Element::from_matrix(const Mat4C& m, double tol) {
  const Blocks k = split(m);
  return from_blocks(k.a, k.b, k.c, k.d, tol);
}

SU22Element SU22Element::identity() {
  const Mat2C E = Mat2C::Identity();
  const Mat2C Z = Mat2C::Zero();
  return SU22Element(E, Z, Z, E);
}

SU22Element SU22Element::u1(double alpha) {
  const Complex phase = std::polar(1.0, alpha);
  const Mat2C E = Mat2C::Identity();
  const Mat2C Z = Mat2C::Zero();
  return from_blocks(phase * E, Z, Z, std::conj(phase) * E);
}

SU22Element SU22Element::block_unitary(const Mat2C& u, const Mat2C& v, double tol) {
  const Mat2C Z = Mat2C::Zero();
  return from_blocks(u, Z, Z, v, tol);
}

SU22Element operator*(const SU22Element& x, const SU22Element& y) {
  return SU22Element(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                     x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

DomainPoint::DomainPoint(const Mat2C& z) : z_(z) {
  if (!all_finite(z) || !(operator_norm(z) < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "domain point must satisfy ||Z|| < 1");
  }
}

ShilovPoint::ShilovPoint(const Mat2C& u, double tol) : u_(u) {
  const double res = max_abs((u.adjoint() * u - Mat2C::Identity()).eval());
  if (!all_finite(u) || !(res <= tol)) {
    throw Error(ErrorCode::InvalidArgument, "Shilov point is not unitary, residual " + std::to_string(res));
  }
}

SU22Element su22_inverse(const SU22Element& m) {
  return SU22Element::from_blocks(m.a().adjoint(), -m.c().adjoint(), -m.b().adjoint(),
                                  m.d().adjoint());
}

Complex block_det(const Mat4C& m) {
  const Blocks k = split(m);
  if (condition_number(k.a) <= kMaxCondition) {
    return det2(k.a) * det2(k.d - k.c * inverse2(k.a) * k.b);
  }
  if (condition_number(k.d) <= kMaxCondition) {
    return block_det_via_d(m);
  }
  throw Error(ErrorCode::BlockSingular, "neither diagonal block is invertible");
}

Complex block_det_via_d(const Mat4C& m) {
  const Blocks k = split(m);
  if (!(condition_number(k.d) <= kMaxCondition)) {
    throw Error(ErrorCode::BlockSingular, "D block is not invertible");
  }
  return det2(k.d) * det2(k.a - k.b * inverse2(k.d) * k.c);
}

Mat2C mobius(const Mat4C& m, const Mat2C& z) {
  const Blocks k = split(m);
  return (k.a * z + k.b) * inverse2(k.c * z + k.d, kMaxCondition);
}

Mat2C mobius(const SU22Element& m, const Mat2C& z) {
  return (m.a() * z + m.b()) * inverse2(m.c() * z + m.d(), kMaxCondition);
}

DomainPoint frac_linear_act(const SU22Element& m, const DomainPoint& z) {
  return DomainPoint(mobius(m, z.z()));
}

ShilovPoint frac_linear_act(const SU22Element& m, const ShilovPoint& u, double tol) {
  return ShilovPoint(mobius(m, u.u()), tol);
}

Complex automorphy_factor(const Mat4C& m, const Mat2C& z) {
  const Blocks k = split(m);
  return det2(k.c * z + k.d);
}

Complex automorphy_factor(const SU22Element& m, const Mat2C& z) {
  return det2(m.c() * z + m.d());
}

double euz_residual(const SU22Element& m, const DomainPoint& z1, const DomainPoint& z2) {
  const Mat2C E = Mat2C::Identity();
  const Mat2C w1 = mobius(m, z1.z());
  const Mat2C w2 = mobius(m, z2.z());
  const Mat2C lhs = E - w1.adjoint() * w2;
  const Mat2C inv1 = inverse2(m.c() * z1.z() + m.d());
  const Mat2C inv2 = inverse2(m.c() * z2.z() + m.d());
  const Mat2C rhs = inv1.adjoint() * (E - z1.z().adjoint() * z2.z()) * inv2;
  return max_abs((lhs - rhs).eval());
}

double ezz_residual(const SU22Element& m, const DomainPoint& z) { return euz_residual(m, z, z); }

Complex jacobian_det(const Mat4C& m, const Mat2C& z) {
  const Complex detm = det4(m);
  const Complex j = automorphy_factor(m, z);
  if (std::abs(j) == 0.0) throw Error(ErrorCode::NumericalSingularity, "C Z + D is singular");
  const Complex j2 = j * j;
  return detm * detm / (j2 * j2);
}

Complex jacobian_det(const SU22Element& m, const DomainPoint& z) {
  const Mat2C czd = m.c() * z.z() + m.d();
  if (!(condition_number(czd) <= kMaxCondition)) {
    throw Error(ErrorCode::NumericalSingularity, "C Z + D is ill conditioned");
  }
  const Complex j = det2(czd);
  const Complex j2 = j * j;
  return 1.0 / (j2 * j2);
}

SU22Element build_coherent_frame(const DomainPoint& xi) {
  const Mat2C& x = xi.z();
  const Mat2C E = Mat2C::Identity();
  const Mat2C a = herm_inv_sqrt(HermMat2(E - x * x.adjoint()));
  const Mat2C d = herm_inv_sqrt(HermMat2(E - x.adjoint() * x));
  return SU22Element::from_blocks(a, x * d, x.adjoint() * a, d);
}

Mat4C coherent_frame_inverse(const DomainPoint& xi) {
  const Mat2C& x = xi.z();
  const Mat2C E = Mat2C::Identity();
  const Mat2C a = herm_inv_sqrt(HermMat2(E - x * x.adjoint()));
  const Mat2C d = herm_inv_sqrt(HermMat2(E - x.adjoint() * x));
  return assemble_blocks(a, -a * x, -d * x.adjoint(), d);
}

DensityValue coherent_phi(const DomainPoint& xi, const Mat2C& z) {
  const Mat2C& x = xi.z();
  const Mat2C E = Mat2C::Identity();
  // E - xi^* xi is positive definite, so its determinant is a positive real.
  const double numerator = std::sqrt(std::max(det2(E - x.adjoint() * x).real(), 0.0));
  const Complex denom = det2(E - x.adjoint() * z);
  if (std::abs(denom) < 1e-14) {
    throw Error(ErrorCode::BoundaryPole, "det(E - xi^* Z) vanishes");
  }
  return DensityValue(numerator / denom);
}

DensityValue density_transform(const DensityValue& phi, Complex automorphy, DensitySlot slot) {
  if (std::abs(automorphy) == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "automorphy factor must be non-zero");
  }
  switch (slot) {
    case DensitySlot::Holomorphic:
      return DensityValue(phi.value() * automorphy);
    case DensitySlot::Phase:
      return DensityValue(phi.value() * std::conj(automorphy) / std::abs(automorphy));
  }
  return phi;
}

Complex bidensity_transport(const Mat4C& m, const Mat2C& xi, const Mat2C& z, Complex phi) {
  DensityValue v(phi);
  v = density_transform(v, automorphy_factor(m, xi), DensitySlot::Phase);
  v = density_transform(v, automorphy_factor(m, z), DensitySlot::Holomorphic);
  return v.value();
}

EquivarianceCheck equivariance_check(const SU22Element& m, const DomainPoint& xi,
                                     const DomainPoint& z) {
  const DomainPoint xi_moved = frac_linear_act(m, xi);
  const DomainPoint z_moved = frac_linear_act(m, z);
  const Complex lhs = coherent_phi(xi_moved, z_moved.z()).value();
  const Complex rhs =
      bidensity_transport(m.matrix(), xi.z(), z.z(), coherent_phi(xi, z.z()).value());
  const Complex j_xi = automorphy_factor(m, xi.z());
  const Complex phase = std::conj(j_xi) / std::abs(j_xi);
  return {std::abs(lhs - rhs), std::abs(std::abs(phase) - 1.0)};
}

double equivariance_residual(const SU22Element& m, const DomainPoint& xi, const DomainPoint& z) {
  const EquivarianceCheck check = equivariance_check(m, xi, z);
  if (check.phase_modulus_error > 1e-13) {
    throw Error(ErrorCode::NumericalSingularity,
                "phase factor modulus off by " + std::to_string(check.phase_modulus_error));
  }
  return check.residual;
}

}  // namespace conformal
