#include "conformal/numdiff.hpp"

#include "conformal/error.hpp"

namespace conformal {

Mat4C holomorphic_jacobian_fd(const MatrixMap& f, const Mat2C& z, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::StepTooSmall, "finite-difference step must be positive");
  Mat4C jac;
  for (int j = 0; j < 4; ++j) {
    Mat2C e = Mat2C::Zero();
    e(j / 2, j % 2) = 1.0;
    const Mat2C dx = (f(z + h * e) - f(z - h * e)) / (2.0 * h);
    const Mat2C dy = (f(z + kI * h * e) - f(z - kI * h * e)) / (2.0 * h);
    const Mat2C dz = 0.5 * (dx - kI * dy);
    for (int k = 0; k < 4; ++k) jac(k, j) = dz(k / 2, k % 2);
  }
  return jac;
}

Complex holomorphic_jacobian_det_fd(const MatrixMap& f, const Mat2C& z, double h) {
  return det4(holomorphic_jacobian_fd(f, z, h));
}

}  // namespace conformal
