#pragma once

// Central-difference derivatives used to cross-check analytic Jacobians.

#include <functional>

#include "conformal/matrix_core.hpp"

namespace conformal {

using MatrixMap = std::function<Mat2C(const Mat2C&)>;

/// 4x4 complex derivative dF_k/dZ_j of a holomorphic map on 2x2 matrices,
/// entries vectorized row-major. Each column is the Wirtinger combination
/// (d/dx - i d/dy)/2 of real and imaginary central differences of step h.
Mat4C holomorphic_jacobian_fd(const MatrixMap& f, const Mat2C& z, double h);

Complex holomorphic_jacobian_det_fd(const MatrixMap& f, const Mat2C& z, double h);

}  // namespace conformal
