#pragma once

// One-dimensional Cayley transform, the SU(1,1) <-> SL(2,R) intertwiner,
// the boundary circle metric and the h = 1/2 Berezin coherent states.

#include <span>

#include <Eigen/Core>

#include "conformal/halfplane.hpp"
#include "conformal/matrix_core.hpp"

namespace conformal {

/// w with |w| < 1.
class DiskPoint {
 public:
  explicit DiskPoint(Complex w);

  Complex w() const noexcept { return w_; }

 private:
  Complex w_;
};

/// m^* diag(1,-1) m = diag(1,-1) and det m = 1, both within 1e-12.
class SU11Element {
 public:
  explicit SU11Element(const Mat2C& m, double tol = 1e-12);

  const Mat2C& matrix() const noexcept { return m_; }

 private:
  Mat2C m_;
};

double su11_membership_residual(const Mat2C& m);

DiskPoint cayley(const HalfPlanePoint& z);
HalfPlanePoint inverse_cayley(const DiskPoint& w);

/// Real Jacobian of w = x + iy -> z(w) = q + ip, from the complex derivative
/// z'(w) = 2i / (1 - w)^2.
Eigen::Matrix2d inverse_cayley_jacobian(const DiskPoint& w);

/// 4 I / (1 - x^2 - y^2)^2.
Eigen::Matrix2d disk_metric(const DiskPoint& w);

/// Boundary parametrization: z(w(t)) = -cot(t/2) and its t-derivative.
double boundary_coordinate(double t);
double boundary_coordinate_derivative(double t);

const Mat2C& gamma_c();
const Mat2C& gamma_c_inverse();

/// gamma_c^-1 A gamma_c. NotInGroup if an entry keeps an imaginary part > 1e-10.
SL2RElement gamma_conjugate(const SU11Element& A);

/// gamma_c A gamma_c^-1, the inverse of gamma_conjugate.
SU11Element gamma_lift(const SL2RElement& A);

/// Fractional-linear action (a w + b) / (c w + d).
Complex mobius(const Mat2C& m, Complex w);

/// (1 - |xi|^2) / |1 - e^{it} conj(xi)|^2.
double circle_metric(const DiskPoint& xi, double t);

/// eta_v(z) = (1 - |v|^2) / (1 - z conj(v))^2, defined for |z| <= 1.
Complex coherent_eta(const DiskPoint& v, Complex z);

struct DiskQuadratureOptions {
  int radial_order = 32;
  int angular_points = 64;
  double tol = 1e-10;
};

/// (1/(2 pi i)) integral of f conj(g) dz ^ dz-bar over the unit disk, for
/// polynomials given by coefficients c_0 + c_1 z + ..., with the orientation
/// chosen so that (1, 1) = 1 and (z^n, z^n) = 1/(n+1).
Complex berezin_inner_product(std::span<const Complex> f, std::span<const Complex> g,
                              const DiskQuadratureOptions& opts = {});

}  // namespace conformal
