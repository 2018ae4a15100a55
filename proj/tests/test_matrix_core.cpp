#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "conformal/error.hpp"
#include "conformal/matrix_core.hpp"
#include "conformal/sampling.hpp"
#include "oracles.hpp"

using namespace conformal;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Mat2C diag(Complex a, Complex b) {
  Mat2C m = Mat2C::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

HermMat2 random_pd(Sampler& s, double max_condition) {
  const Mat2C u = s.unitary(s.uniform(0.0, 6.0));
  const double hi = s.uniform(0.5, 2.0);
  const double lo = hi / s.uniform(1.0, max_condition);
  return HermMat2(u * diag(lo, hi) * u.adjoint());
}

}  // namespace

TEST(Det2, Examples) {
  EXPECT_EQ(det2(Mat2C::Identity()), Complex(1.0, 0.0));
  EXPECT_EQ(det2(diag(2.0, Complex(0.0, 3.0))), Complex(0.0, 6.0));
  Mat2C dup;
  dup << Complex(1, 2), Complex(3, -1), Complex(1, 2), Complex(3, -1);
  EXPECT_EQ(det2(dup), Complex(0.0, 0.0));
}

TEST(Det4, MatchesCofactorExpansion) {
  Sampler s(7);
  for (int i = 0; i < 20; ++i) {
    Mat4C m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = s.complex_box(1.0);
    EXPECT_LT(std::abs(det4(m) - oracle::cofactor_det4(m)), 1e-13);
  }
}

TEST(HermMat2, SymmetrizationIsExact) {
  Sampler s(3);
  for (int i = 0; i < 10; ++i) {
    const HermMat2 h(s.matrix());
    EXPECT_EQ(h.matrix()(0, 1), std::conj(h.matrix()(1, 0)));
    EXPECT_EQ(h.matrix()(0, 0).imag(), 0.0);
    EXPECT_EQ(h.matrix()(1, 1).imag(), 0.0);
  }
}

TEST(HermInvSqrt, IdentityAndDiagonal) {
  EXPECT_LT(max_abs((herm_inv_sqrt(HermMat2(Mat2C::Identity())) - Mat2C::Identity()).eval()), 4 * kEps);
  const Mat2C p = herm_inv_sqrt(HermMat2(diag(4.0, 1.0)));
  EXPECT_LT(max_abs((p - diag(0.5, 1.0)).eval()), 4 * kEps);
}

TEST(HermInvSqrt, ResidualOnWellConditionedInputs) {
  Sampler s(11);
  for (int i = 0; i < 200; ++i) {
    const HermMat2 m = random_pd(s, 10.0);
    const Mat2C p = herm_inv_sqrt(m);
    const Mat2C r = p * m.matrix() * p - Mat2C::Identity();
    EXPECT_LT(max_abs(r), 8 * kEps * 4) << "sample " << i;
    // Hermitian positive-definite branch.
    EXPECT_LT(max_abs((p - p.adjoint()).eval()), 1e-15);
    EXPECT_GT(hermitian_eigen(HermMat2(p)).lower, 0.0);
  }
}

TEST(HermInvSqrt, ResidualUpToConditionMillion) {
  Sampler s(12);
  for (int i = 0; i < 200; ++i) {
    const HermMat2 m = random_pd(s, 1e6);
    const Mat2C p = herm_inv_sqrt(m);
    EXPECT_LT(oracle::inv_sqrt_residual_extended(p, m.matrix()), 1e-12) << "sample " << i;
  }
}

TEST(HermInvSqrt, RejectsIndefinite) {
  try {
    herm_inv_sqrt(HermMat2(diag(1.0, -1e-3)));
    FAIL() << "expected NotPositiveDefinite";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
  }
  EXPECT_THROW(herm_inv_sqrt(HermMat2(diag(1.0, 1e-12))), Error);
  EXPECT_NO_THROW(herm_inv_sqrt(HermMat2(diag(1.0, 1e-12)), 1e-14));
}

TEST(OperatorNorm, Examples) {
  EXPECT_NEAR(operator_norm(Mat2C::Identity()), 1.0, kEps);
  EXPECT_NEAR(operator_norm(diag(0.5, 0.0)), 0.5, kEps);
}

TEST(OperatorNorm, MatchesCharacteristicPolynomial) {
  Sampler s(5);
  for (int i = 0; i < 100; ++i) {
    const Mat2C m = s.matrix(2.0);
    const double n = operator_norm(m);
    EXPECT_NEAR(n * n, oracle::max_eig_gram(m), 1e-12 * std::max(1.0, n * n));
  }
}

TEST(OperatorNorm, Submultiplicative) {
  Sampler s(6);
  for (int i = 0; i < 200; ++i) {
    const Mat2C a = s.matrix(2.0);
    const Mat2C b = s.matrix(2.0);
    EXPECT_LE(operator_norm(a * b), operator_norm(a) * operator_norm(b) + 1e-12);
  }
}

TEST(Pauli, BasisExamples) {
  EXPECT_EQ(pauli_compose({1, 0, 0, 0}).matrix(), Mat2C::Identity());
  EXPECT_EQ(pauli_compose({0, 0, 0, 1}).matrix(), diag(1.0, -1.0));
  EXPECT_EQ(pauli_decompose(HermMat2(Mat2C::Identity())), (MinkowskiVector{1, 0, 0, 0}));
  EXPECT_EQ(pauli_decompose(HermMat2(pauli_basis()[2])), (MinkowskiVector{0, 0, 1, 0}));
  for (int mu = 0; mu < 4; ++mu) {
    MinkowskiVector e{};
    e = {mu == 0 ? 1.0 : 0.0, mu == 1 ? 1.0 : 0.0, mu == 2 ? 1.0 : 0.0, mu == 3 ? 1.0 : 0.0};
    EXPECT_EQ(pauli_compose(e).matrix(), pauli_basis()[mu]);
  }
}

TEST(Pauli, RoundTripAndMinkowskiDeterminant) {
  Sampler s(9);
  for (int i = 0; i < 500; ++i) {
    const MinkowskiVector x = s.minkowski_box(10.0);
    const MinkowskiVector back = pauli_decompose(pauli_compose(x));
    // x0 and x3 share the diagonal, so each is recovered to one ulp of the
    // larger of the pair; x1 and x2 are stored verbatim.
    const double diag_scale = std::max(std::abs(x.x0), std::abs(x.x3));
    EXPECT_NEAR(back.x0, x.x0, diag_scale * kEps);
    EXPECT_NEAR(back.x3, x.x3, diag_scale * kEps);
    EXPECT_EQ(back.x1, x.x1);
    EXPECT_EQ(back.x2, x.x2);
    const Complex det = det2(pauli_compose(x).matrix());
    EXPECT_NEAR(det.real(), minkowski_square(x), 1e-13);
    EXPECT_EQ(det.imag(), 0.0);
  }
}

TEST(Inverse2, RejectsSingular) {
  Mat2C m;
  m << 1.0, 2.0, 2.0, 4.0;
  try {
    inverse2(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NumericalSingularity);
  }
}
