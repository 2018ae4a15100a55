#pragma once

// Small fixed-size complex linear algebra used throughout the library.
// Storage is Eigen; the Hermitian spectral calculus is closed form.

#include <array>
#include <complex>

#include <Eigen/Core>

namespace conformal {

using Complex = std::complex<double>;
using Mat2C = Eigen::Matrix2cd;
using Mat4C = Eigen::Matrix4cd;

inline constexpr Complex kI{0.0, 1.0};

// Relative (to the trace) eigenvalue floor used by herm_inv_sqrt.
inline constexpr double kDefaultPdTolerance = 1e-10;

/// Hermitian 2x2 matrix. Construction symmetrizes the input, so
/// entries(i,j) == conj(entries(j,i)) holds exactly afterwards.
class HermMat2 {
 public:
  HermMat2() : m_(Mat2C::Zero()) {}
  explicit HermMat2(const Mat2C& m);

  const Mat2C& matrix() const noexcept { return m_; }
  operator const Mat2C&() const noexcept { return m_; }

  double trace() const noexcept { return m_(0, 0).real() + m_(1, 1).real(); }

 private:
  Mat2C m_;
};

/// Coordinates x^mu with the (+,-,-,-) signature convention.
struct MinkowskiVector {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  double operator[](int mu) const;

  friend MinkowskiVector operator+(const MinkowskiVector& a, const MinkowskiVector& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend MinkowskiVector operator-(const MinkowskiVector& a, const MinkowskiVector& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend bool operator==(const MinkowskiVector&, const MinkowskiVector&) = default;
};

/// eta(a, b) with eta = diag(+1, -1, -1, -1).
double minkowski_dot(const MinkowskiVector& a, const MinkowskiVector& b) noexcept;
inline double minkowski_square(const MinkowskiVector& a) noexcept { return minkowski_dot(a, a); }

struct HermitianEigen {
  double lower = 0.0;   // smaller eigenvalue
  double upper = 0.0;   // larger eigenvalue
  Mat2C vectors;        // unitary, columns are eigenvectors for (lower, upper)
};

Complex det2(const Mat2C& m) noexcept;
Complex det4(const Mat4C& m);

/// Closed-form inverse via the adjugate. Throws NumericalSingularity when the
/// 2-norm condition number exceeds max_condition.
Mat2C inverse2(const Mat2C& m, double max_condition = 1e12);
double condition_number(const Mat2C& m);

HermitianEigen hermitian_eigen(const HermMat2& m);

/// Unique positive-definite P with P m P = E. Rejects eigenvalues below
/// tol * trace(m) with NotPositiveDefinite.
Mat2C herm_inv_sqrt(const HermMat2& m, double tol = kDefaultPdTolerance);

/// Largest singular value.
double operator_norm(const Mat2C& m);

const std::array<Mat2C, 4>& pauli_basis();
HermMat2 pauli_compose(const MinkowskiVector& x);
MinkowskiVector pauli_decompose(const HermMat2& w);

Mat2C identity2();
Mat4C assemble_blocks(const Mat2C& a, const Mat2C& b, const Mat2C& c, const Mat2C& d);

/// Hermitian and anti-Hermitian parts: X = (W + W*)/2, Y = (W - W*)/(2i).
HermMat2 hermitian_part(const Mat2C& w);
HermMat2 anti_hermitian_part(const Mat2C& w);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const Mat2C& m) noexcept;

}  // namespace conformal
