#pragma once

// SU(2,2) acting on the bounded domain D = { Z : E - Z^*Z > 0 } by
// fractional-linear maps, weight-1/4 densities and the coherent-state system.

#include "conformal/matrix_core.hpp"

namespace conformal {

/// Block matrix ((A, B), (C, D)) satisfying M G M^* = G, G = diag(E, -E),
/// and det M = 1. Construction validates; nothing is projected back.
class SU22Element {
 public:
  static SU22Element from_blocks(const Mat2C& a, const Mat2C& b, const Mat2C& c, const Mat2C& d,
                                 double tol = 1e-10);
  static SU22Element from_matrix(const Mat4C& m, double tol = 1e-10);
  static SU22Element identity();
  /// diag(e^{i alpha} E, e^{-i alpha} E).
  static SU22Element u1(double alpha);
  /// diag(U, V) with U, V unitary and det U det V = 1.
  static SU22Element block_unitary(const Mat2C& u, const Mat2C& v, double tol = 1e-10);

  const Mat2C& a() const noexcept { return a_; }
  const Mat2C& b() const noexcept { return b_; }
  const Mat2C& c() const noexcept { return c_; }
  const Mat2C& d() const noexcept { return d_; }
  Mat4C matrix() const { return assemble_blocks(a_, b_, c_, d_); }

  friend SU22Element operator*(const SU22Element& x, const SU22Element& y);

 private:
  SU22Element(const Mat2C& a, const Mat2C& b, const Mat2C& c, const Mat2C& d)
      : a_(a), b_(b), c_(c), d_(d) {}

  Mat2C a_, b_, c_, d_;
};

/// Z with ||Z|| < 1.
class DomainPoint {
 public:
  explicit DomainPoint(const Mat2C& z);
  static DomainPoint origin() { return DomainPoint(Mat2C::Zero()); }

  const Mat2C& z() const noexcept { return z_; }

 private:
  Mat2C z_;
};

/// Unitary U (U^*U = E within 1e-12): the Shilov boundary of D.
class ShilovPoint {
 public:
  explicit ShilovPoint(const Mat2C& u, double tol = 1e-12);

  const Mat2C& u() const noexcept { return u_; }

 private:
  Mat2C u_;
};

struct DensityWeight {
  int num = 1;
  int den = 4;
  friend bool operator==(const DensityWeight&, const DensityWeight&) = default;
};

/// Value of a weight-1/4 density in a given coordinate system.
class DensityValue {
 public:
  explicit DensityValue(Complex value) : value_(value) {}

  Complex value() const noexcept { return value_; }
  static constexpr DensityWeight weight() noexcept { return {1, 4}; }

 private:
  Complex value_;
};

/// Block residuals of A A^* - B B^* = E, D D^* - C C^* = E, A C^* - B D^* = 0,
/// combined with |det M - 1| by max.
double su22_membership_residual(const Mat4C& m);

/// Blocks (A^*, -C^*; -B^*, D^*).
SU22Element su22_inverse(const SU22Element& m);

/// det(A) det(D - C A^-1 B), falling back to det(D) det(A - B D^-1 C) when A
/// is ill conditioned. BlockSingular if both blocks have condition > 1e12.
Complex block_det(const Mat4C& m);
/// The D-pivot form, for cross-checks.
Complex block_det_via_d(const Mat4C& m);

/// (A Z + B)(C Z + D)^-1 for arbitrary Z; NumericalSingularity if C Z + D
/// has condition > 1e12.
Mat2C mobius(const Mat4C& m, const Mat2C& z);
Mat2C mobius(const SU22Element& m, const Mat2C& z);

DomainPoint frac_linear_act(const SU22Element& m, const DomainPoint& z);
ShilovPoint frac_linear_act(const SU22Element& m, const ShilovPoint& u, double tol = 1e-10);

/// det(C Z + D).
Complex automorphy_factor(const Mat4C& m, const Mat2C& z);
Complex automorphy_factor(const SU22Element& m, const Mat2C& z);

/// max |(E - Z1'^* Z2') - (C Z1 + D)^-1* (E - Z1^* Z2)(C Z2 + D)^-1|.
double euz_residual(const SU22Element& m, const DomainPoint& z1, const DomainPoint& z2);
double ezz_residual(const SU22Element& m, const DomainPoint& z);

/// Complex Jacobian determinant of Z -> Z' for arbitrary blocks:
/// det(M)^2 det(C Z + D)^-4.
Complex jacobian_det(const Mat4C& m, const Mat2C& z);
/// SU(2,2) case: det(C Z + D)^-4.
Complex jacobian_det(const SU22Element& m, const DomainPoint& z);

/// M_xi with A = (E - xi xi^*)^-1/2, D = (E - xi^* xi)^-1/2, C = xi^* A,
/// B = xi D; maps 0 to xi.
SU22Element build_coherent_frame(const DomainPoint& xi);

/// Closed form of M_xi^-1 = (A, -A xi; -D xi^*, D) built directly from xi.
Mat4C coherent_frame_inverse(const DomainPoint& xi);

/// Phi_xi(Z) = det(E - xi^* xi)^{1/2} / det(E - xi^* Z), positive real root
/// in the numerator. Z may lie on the closure of D; BoundaryPole if the
/// denominator vanishes.
DensityValue coherent_phi(const DomainPoint& xi, const Mat2C& z);

enum class DensitySlot {
  Holomorphic,  // multiply by j = det(C Z + D)
  Phase,        // multiply by conj(j) / |j|
};

/// Transformation of a weight-1/4 density value under a coordinate change
/// with automorphy factor j = det(C Z + D).
DensityValue density_transform(const DensityValue& phi, Complex automorphy, DensitySlot slot);

/// Bi-density transport of Phi_xi(Z) along a block map: the phase slot at xi
/// and the holomorphic slot at Z.
Complex bidensity_transport(const Mat4C& m, const Mat2C& xi, const Mat2C& z, Complex phi);

struct EquivarianceCheck {
  double residual = 0.0;             // |Phi_{xi'}(Z') - transported Phi_xi(Z)|
  double phase_modulus_error = 0.0;  // ||conj(j(xi)) / |j(xi)|| - 1|
};

EquivarianceCheck equivariance_check(const SU22Element& m, const DomainPoint& xi,
                                     const DomainPoint& z);

/// |Phi_{xi'}(Z') - (conj(j(xi)) / |j(xi)|) j(Z) Phi_xi(Z)|. Throws
/// NumericalSingularity if the phase factor strays from modulus 1 by > 1e-13.
double equivariance_residual(const SU22Element& m, const DomainPoint& xi, const DomainPoint& z);

}  // namespace conformal
