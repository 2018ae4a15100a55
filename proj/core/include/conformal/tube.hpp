#pragma once

// Four-dimensional Cayley transform between D and the future tube
// T = { W = X + iY : X = X^*, Y > 0 }, and coherent states in tube and
// Minkowski coordinates.

#include "conformal/matrix_core.hpp"
#include "conformal/su22.hpp"

namespace conformal {

/// W whose anti-Hermitian part Y = (W - W^*)/(2i) is positive definite.
class TubePoint {
 public:
  explicit TubePoint(const Mat2C& w);

  const Mat2C& w() const noexcept { return w_; }
  HermMat2 real_part() const { return hermitian_part(w_); }
  HermMat2 imag_part() const { return anti_hermitian_part(w_); }

 private:
  Mat2C w_;
};

/// zeta = (q^mu + i l^mu) sigma_mu with l in the open future cone.
class TubeStateParams {
 public:
  TubeStateParams(const MinkowskiVector& q, const MinkowskiVector& l);

  const MinkowskiVector& q() const noexcept { return q_; }
  const MinkowskiVector& l() const noexcept { return l_; }
  TubePoint zeta() const;

 private:
  MinkowskiVector q_;
  MinkowskiVector l_;
};

/// Block matrices of W = i(E - Z)(E + Z)^-1 and of its inverse
/// Z = (E + iW)(E - iW)^-1; both have determinant -4.
const Mat4C& cayley4_blocks();
const Mat4C& inverse_cayley4_blocks();

/// Unvalidated i(E - Z)(E + Z)^-1, e.g. for Shilov-boundary inputs.
Mat2C cayley4_matrix(const Mat2C& z);
Mat2C inverse_cayley4_matrix(const Mat2C& w);

TubePoint cayley4(const DomainPoint& z);
DomainPoint inverse_cayley4(const TubePoint& w);

/// Image of a unitary; lands on Hermitian matrices (the anti-Hermitian part is
/// returned by the raw matrix for inspection).
Mat2C cayley4_boundary(const ShilovPoint& u);

/// dZ/dW = 16 det(E - iW)^-4.
Complex cayley4_jacobian(const Mat2C& w);
/// dW/dZ = 16 det(E + Z)^-4.
Complex cayley4_forward_jacobian(const Mat2C& z);

/// det(zeta - zeta^*)^{1/2} / det(W - zeta^*). The numerator uses the branch
/// 2i sqrt(det Y_zeta) (principal root of the negative real determinant).
/// W may be any matrix off the pole (typically in T or Hermitian).
Complex phi_tube(const TubeStateParams& zeta, const Mat2C& w);

/// -4 l^2 ((x-q)^2 - l^2 - 2i l.(x-q)) / ((l^2 - (x-q)^2)^2 + 4 (l.(x-q))^2).
Complex phi_explicit(const TubeStateParams& params, const MinkowskiVector& x);

/// Rotationally invariant state q = 0, l = (L, 0, 0, 0).
Complex phi_rotational(double L, const MinkowskiVector& x);

/// coherent_phi(xi, Z) at xi = Z(zeta), Z = Z(W), carried to tube coordinates
/// by the bi-density law of the Cayley block matrix. Agrees with phi_tube up
/// to one global constant (see tube_transport_constant).
Complex transported_coherent_phi(const TubeStateParams& zeta, const Mat2C& w);

/// phi_tube / transported_coherent_phi at the reference zeta = W = iE.
Complex tube_transport_constant();

}  // namespace conformal
