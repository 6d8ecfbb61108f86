#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hw/error.hpp"
#include "hw/linalg.hpp"
#include "hw/states.hpp"
#include "support/generators.hpp"

using namespace hw;

namespace {

ComplexMatrix diag(std::initializer_list<double> v) {
  ComplexMatrix m = ComplexMatrix::Zero(v.size(), v.size());
  int i = 0;
  for (double x : v) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

DensityMatrix bell_state() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return pure_state(psi, {2, 2});
}

}  // namespace

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs_diff(tensor(pauli::identity(), pauli::identity()), ComplexMatrix::Identity(4, 4)), 0.0);
}

TEST(Tensor, QubitMajorConvention) {
  EXPECT_EQ(max_abs_diff(tensor(pauli::z(), pauli::identity()), diag({1, 1, -1, -1})), 0.0);
  ComplexMatrix p0 = diag({1, 0});
  ComplexMatrix p1 = diag({0, 1});
  const ComplexMatrix t = tensor(p0, p1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(t(i, j), (i == 1 && j == 1) ? Complex(1.0) : Complex(0.0));
}

TEST(Tensor, AssociativeOnIntegerMatrices) {
  proptest::Gen g(11);
  auto integer = [&](int r, int c) {
    ComplexMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Complex(g.integer(-3, 3), g.integer(-3, 3));
    return m;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = integer(2, 2), b = integer(3, 2), c = integer(2, 3);
    EXPECT_EQ(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 0.0);
  }
}

TEST(PartialTrace, ProductState) {
  proptest::Gen g(3);
  const DensityMatrix q = g.density({2});
  const DensityMatrix b = g.density({5});
  const DensityMatrix rho = tensor(q, b);
  EXPECT_LT(max_abs_diff(partial_trace(rho, Subsystem::Qubit).matrix(), q.matrix()), 1e-12);
  EXPECT_LT(max_abs_diff(partial_trace(rho, Subsystem::Boson).matrix(), b.matrix()), 1e-12);
}

TEST(PartialTrace, RandomHermitianFactors) {
  proptest::Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    // Build a valid product state from arbitrary Hermitian factors by
    // comparing on the raw block sums, which partial_trace computes.
    const ComplexMatrix a = g.hermitian(2);
    const ComplexMatrix b = g.hermitian(4);
    const ComplexMatrix ab = tensor(a, b);
    ComplexMatrix reduced(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) reduced(i, j) = ab.block(i * 4, j * 4, 4, 4).trace();
    EXPECT_LT(max_abs_diff(reduced, a * b.trace()), 1e-12);
  }
}

TEST(PartialTrace, CatAtZeroAmplitudeIsPureQubit) {
  const DensityMatrix q = partial_trace(cat_hybrid(0.0, FockConfig(24)), Subsystem::Qubit);
  ComplexMatrix expect(2, 2);
  expect << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LT(max_abs_diff(q.matrix(), expect), 1e-12);
}

TEST(PartialTrace, CatOffDiagonalIsOverlap) {
  const DensityMatrix q = partial_trace(cat_hybrid(2.0, default_fock(2.0)), Subsystem::Qubit);
  EXPECT_NEAR(std::abs(q(0, 1)), 0.5 * std::exp(-8.0), 1e-12);
  EXPECT_NEAR(std::abs(q(0, 1)), 1.678e-4, 1e-7);
}

TEST(PartialTrace, RejectsSingleFactor) {
  EXPECT_THROW(partial_trace(maximally_mixed_qubit(), Subsystem::Qubit), ValidationError);
}

TEST(PartialTranspose, ProductState) {
  proptest::Gen g(9);
  const DensityMatrix q = g.density({2});
  const DensityMatrix b = g.density({3});
  const ComplexMatrix pt = partial_transpose_qubit(tensor(q, b));
  EXPECT_LT(max_abs_diff(pt, tensor(q.matrix().transpose(), b.matrix())), 1e-15);
}

TEST(PartialTranspose, BellSpectrum) {
  const auto ev = hermitian_eigenvalues(partial_transpose_qubit(bell_state()));
  EXPECT_NEAR(ev.front(), -0.5, 1e-12);
  EXPECT_NEAR(trace_norm(partial_transpose_qubit(bell_state())), 2.0, 1e-12);
}

TEST(PartialTranspose, HermitianInvolutionTracePreserving) {
  proptest::Gen g(13);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = g.density({2, g.integer(2, 6)});
    const ComplexMatrix pt = partial_transpose_qubit(rho);
    EXPECT_LT(hermiticity_defect(pt), 1e-12);
    EXPECT_NEAR(pt.trace().real(), 1.0, 1e-12);
    EXPECT_EQ(max_abs_diff(partial_transpose_qubit(pt, rho.fock_dim()), rho.matrix()), 0.0);
    EXPECT_GE(trace_norm(pt), 1.0 - 1e-12);
  }
}

TEST(PartialTranspose, RejectsBadShape) {
  EXPECT_THROW(partial_transpose_qubit(ComplexMatrix::Identity(5, 5), 2), ValidationError);
}

TEST(Eigenvalues, Examples) {
  const auto z = hermitian_eigenvalues(pauli::z());
  EXPECT_EQ(z, (std::vector<double>{-1.0, 1.0}));
  const auto d = hermitian_eigenvalues(diag({3, 1, 2}));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_NEAR(d[0], 1.0, 1e-15);
  EXPECT_NEAR(d[1], 2.0, 1e-15);
  EXPECT_NEAR(d[2], 3.0, 1e-15);
}

TEST(Eigenvalues, SumEqualsTraceAndDeterministic) {
  proptest::Gen g(17);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = g.hermitian(g.integer(2, 20));
    const auto ev = hermitian_eigenvalues(h);
    double s = 0.0;
    for (double x : ev) s += x;
    EXPECT_NEAR(s, h.trace().real(), 1e-10);
    EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
    EXPECT_EQ(ev, hermitian_eigenvalues(h));
  }
}

TEST(Eigenvalues, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(hermitian_eigenvalues(m), ValidationError);
  EXPECT_THROW(trace_norm(m), ValidationError);
}

TEST(TraceNorm, Examples) {
  EXPECT_NEAR(trace_norm(pauli::z()), 2.0, 1e-15);
  proptest::Gen g(19);
  for (int trial = 0; trial < 10; ++trial) EXPECT_NEAR(trace_norm(g.density({2, 4}).matrix()), 1.0, 1e-12);
}

TEST(UnitaryExp, Examples) {
  EXPECT_LT(max_abs_diff(unitary_exp(ComplexMatrix::Zero(3, 3)), ComplexMatrix::Identity(3, 3)), 1e-15);
  const ComplexMatrix u = unitary_exp(Complex(0.0, 0.5 * std::numbers::pi) * pauli::z());
  ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
  expect(0, 0) = Complex(0.0, 1.0);
  expect(1, 1) = Complex(0.0, -1.0);
  EXPECT_LT(max_abs_diff(u, expect), 1e-15);
}

TEST(UnitaryExp, DisplacedVacuumIsCoherent) {
  const int n = 30;
  const ComplexMatrix a = annihilation(n);
  const ComplexMatrix d = unitary_exp(a.adjoint() - a);
  double factorial = 1.0;
  for (int k = 0; k < 12; ++k) {
    if (k > 0) factorial *= k;
    EXPECT_NEAR(std::abs(d(k, 0) - std::exp(-0.5) / std::sqrt(factorial)), 0.0, 1e-10) << "n=" << k;
  }
}

TEST(UnitaryExp, UnitaryForRandomGenerators) {
  proptest::Gen g(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = g.integer(2, 30);
    const ComplexMatrix gen = Complex(0.0, 1.0) * g.hermitian(n);
    const ComplexMatrix u = unitary_exp(gen);
    EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(n, n)), kTolerances.unitarity);
  }
}

TEST(UnitaryExp, RejectsNonAntiHermitian) { EXPECT_THROW(unitary_exp(pauli::z()), ValidationError); }

TEST(DensityMatrix, ValidatesInvariants) {
  EXPECT_THROW(DensityMatrix(diag({0.6, 0.6}), {2}), ValidationError);
  EXPECT_THROW(DensityMatrix(diag({1.2, -0.2}), {2}), ValidationError);
  ComplexMatrix m(2, 2);
  m << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(DensityMatrix(m, {2}), ValidationError);
  EXPECT_THROW(DensityMatrix(diag({0.5, 0.5}), {3}), ValidationError);
  EXPECT_THROW(DensityMatrix(diag({0.25, 0.25, 0.25, 0.25}), {4, 1}), ValidationError);
  EXPECT_NO_THROW(DensityMatrix(diag({0.25, 0.25, 0.25, 0.25}), {2, 2}));
}
