// Tests for the numeric foundation: exact root-of-unity scalars, sparse
// tensors with contraction, dense complex matrices, linear solving with
// nullspace extraction, and the Hermitian Jacobi eigensolver.
//
// Expected values in the FROZEN_* tests were computed by hand and must not be
// regenerated from the code under test.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cqg/linalg.hpp"
#include "cqg/scalar.hpp"
#include "cqg/tensor.hpp"

namespace {

using cqg::Complex;
using cqg::DenseMatrix;
using cqg::Error;
using cqg::Errc;
using cqg::RootOfUnity;
using cqg::SparseTensor;

constexpr double kTight = 1e-12;

// ---------------------------------------------------------------------------
// RootOfUnity: exact rational-phase arithmetic.
// ---------------------------------------------------------------------------

TEST(RootOfUnity, FROZEN_NormalizationReducesAndWraps) {
  RootOfUnity r = RootOfUnity::of(3, 6);  // 3/6 -> 1/2
  EXPECT_EQ(r.num, 1);
  EXPECT_EQ(r.den, 2);

  RootOfUnity s = RootOfUnity::of(-1, 4);  // -1/4 -> 3/4
  EXPECT_EQ(s.num, 3);
  EXPECT_EQ(s.den, 4);

  RootOfUnity t = RootOfUnity::of(10, 5);  // 2 full turns -> 0/1
  EXPECT_EQ(t.num, 0);
  EXPECT_EQ(t.den, 1);
}

TEST(RootOfUnity, FROZEN_QuarterTurnValuesAreExact) {
  // These four values must be bit-exact, not sin/cos approximations.
  EXPECT_EQ(RootOfUnity::of(0, 1).value(), Complex(1.0, 0.0));
  EXPECT_EQ(RootOfUnity::of(1, 4).value(), Complex(0.0, 1.0));
  EXPECT_EQ(RootOfUnity::of(1, 2).value(), Complex(-1.0, 0.0));
  EXPECT_EQ(RootOfUnity::of(3, 4).value(), Complex(0.0, -1.0));
}

TEST(RootOfUnity, FROZEN_ThirdRootValue) {
  const Complex z = RootOfUnity::of(1, 3).value();
  EXPECT_NEAR(z.real(), -0.5, kTight);
  EXPECT_NEAR(z.imag(), std::sqrt(3.0) / 2.0, kTight);
}

TEST(RootOfUnity, ProductAndPowerStayExact) {
  const RootOfUnity zeta = RootOfUnity::of(1, 3);
  RootOfUnity acc = RootOfUnity::of(0, 1);
  for (int k = 0; k < 3; ++k) acc = acc * zeta;
  EXPECT_TRUE(acc.is_one());
  EXPECT_EQ(acc.value(), Complex(1.0, 0.0));

  EXPECT_EQ(zeta.pow(-1).num, 2);
  EXPECT_EQ(zeta.pow(-1).den, 3);
  EXPECT_TRUE((zeta * zeta.inverse()).is_one());

  // conj(exp(2*pi*i/5)) = exp(2*pi*i*4/5)
  EXPECT_EQ(RootOfUnity::of(1, 5).conjugate().num, 4);
}

TEST(ExactScalar, ProductTracksExactnessAndValue) {
  const cqg::ExactScalar a = cqg::ExactScalar::from_root(RootOfUnity::of(1, 8));
  const cqg::ExactScalar b = cqg::ExactScalar::from_root(RootOfUnity::of(3, 8));
  const cqg::ExactScalar ab = a * b;
  ASSERT_TRUE(ab.root.has_value());
  EXPECT_EQ(ab.root->num, 1);
  EXPECT_EQ(ab.root->den, 2);
  EXPECT_EQ(ab.value, Complex(-1.0, 0.0));

  const cqg::ExactScalar c = cqg::ExactScalar::from_complex(Complex(2.0, 0.0));
  const cqg::ExactScalar ac = a * c;
  EXPECT_FALSE(ac.root.has_value());
  EXPECT_NEAR(std::abs(ac.value - 2.0 * a.value), 0.0, kTight);
}

// ---------------------------------------------------------------------------
// SparseTensor and contraction.
// ---------------------------------------------------------------------------

// Multiplication tensor of the group algebra C[C2]: basis {1, g},
// m[i][j][k] = 1 iff e_i e_j = e_k under i XOR j = k.
SparseTensor GroupC2Mult() {
  SparseTensor m({2, 2, 2});
  m.add({0, 0, 0}, 1.0);
  m.add({0, 1, 1}, 1.0);
  m.add({1, 0, 1}, 1.0);
  m.add({1, 1, 0}, 1.0);
  return m;
}

TEST(SparseTensor, FROZEN_UnitContractionOfGroupMultIsIdentity) {
  // Contract the unit vector (1,0) into axis 0 of m: the result must be the
  // 2x2 identity (left unit law), computed here entry by entry.
  SparseTensor unit({2});
  unit.add({0}, 1.0);
  const SparseTensor left = cqg::contract(unit, GroupC2Mult(), {{0, 0}});
  ASSERT_EQ(left.arity(), 2u);
  EXPECT_EQ(left.at({0, 0}), Complex(1.0, 0.0));
  EXPECT_EQ(left.at({0, 1}), Complex(0.0, 0.0));
  EXPECT_EQ(left.at({1, 0}), Complex(0.0, 0.0));
  EXPECT_EQ(left.at({1, 1}), Complex(1.0, 0.0));
}

TEST(SparseTensor, AdditionAccumulatesAndPrunes) {
  SparseTensor t({3});
  t.add({1}, Complex(0.5, 0.0));
  t.add({1}, Complex(-0.5, 1e-16));  // cancels below the pruning threshold
  t.prune();
  EXPECT_EQ(t.nonzero_count(), 0u);
}

TEST(SparseTensor, DimensionMismatchIsRejected) {
  SparseTensor a({2, 3});
  SparseTensor b({4, 2});
  a.add({0, 0}, 1.0);
  b.add({0, 0}, 1.0);
  EXPECT_THROW(
      {
        try {
          cqg::contract(a, b, {{1, 0}});  // 3 vs 4
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
          throw;
        }
      },
      Error);
}

TEST(SparseTensor, ChainContractionMatchesDenseMatrixProduct) {
  // Independent oracle: multiply three random 4x4 matrices with a plain
  // triple loop, then compare against contract()-based composition.
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const uint32_t n = 4;
  std::vector<std::vector<Complex>> mats(3,
                                         std::vector<Complex>(n * n));
  std::vector<SparseTensor> tens;
  for (auto& m : mats) {
    SparseTensor t({n, n});
    for (uint32_t r = 0; r < n; ++r)
      for (uint32_t c = 0; c < n; ++c) {
        m[r * n + c] = Complex(dist(rng), dist(rng));
        t.add({r, c}, m[r * n + c]);
      }
    tens.push_back(t);
  }
  // Dense reference product mats[0]*mats[1]*mats[2].
  auto mul = [n](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(n * n, Complex(0.0, 0.0));
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t k = 0; k < n; ++k)
        for (uint32_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
    return out;
  };
  const std::vector<Complex> ref = mul(mul(mats[0], mats[1]), mats[2]);

  const SparseTensor ab = cqg::contract(tens[0], tens[1], {{1, 0}});
  const SparseTensor abc = cqg::contract(ab, tens[2], {{1, 0}});
  for (uint32_t r = 0; r < n; ++r)
    for (uint32_t c = 0; c < n; ++c)
      EXPECT_NEAR(std::abs(abc.at({r, c}) - ref[r * n + c]), 0.0, 1e-12);
}

TEST(SparseTensor, ContractIsBilinear) {
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto random_tensor = [&](std::vector<uint32_t> dims) {
    SparseTensor t(dims);
    std::vector<uint32_t> idx(dims.size(), 0);
    // Fill ~half the entries.
    for (uint32_t i = 0; i < dims[0]; ++i)
      for (uint32_t j = 0; j < dims[1]; ++j)
        if (dist(rng) > 0.0) t.add({i, j}, Complex(dist(rng), dist(rng)));
    return t;
  };
  const SparseTensor a1 = random_tensor({3, 4});
  const SparseTensor a2 = random_tensor({3, 4});
  const SparseTensor b = random_tensor({4, 5});
  const Complex lambda(0.7, -0.3);

  const SparseTensor lhs =
      cqg::contract(a1.scaled(lambda).plus(a2), b, {{1, 0}});
  const SparseTensor rhs =
      cqg::contract(a1, b, {{1, 0}}).scaled(lambda).plus(cqg::contract(a2, b, {{1, 0}}));
  EXPECT_LT(lhs.max_abs_diff(rhs), 1e-12);
}

// ---------------------------------------------------------------------------
// solve_linear.
// ---------------------------------------------------------------------------

TEST(SolveLinear, FROZEN_RankDeficientConsistentSystem) {
  // [[1,2],[2,4]] x = (3,6): rank 1, particular solution with free variable
  // set to zero is (3,0), nullspace spanned by (-2,1).
  DenseMatrix a(2, 2);
  a(0, 0) = 1.0; a(0, 1) = 2.0;
  a(1, 0) = 2.0; a(1, 1) = 4.0;
  const cqg::LinearSolution sol = cqg::solve_linear(a, {Complex(3.0, 0.0), Complex(6.0, 0.0)});
  EXPECT_EQ(sol.rank, 1u);
  ASSERT_EQ(sol.particular.size(), 2u);
  EXPECT_NEAR(std::abs(sol.particular[0] - 3.0), 0.0, kTight);
  EXPECT_NEAR(std::abs(sol.particular[1]), 0.0, kTight);
  ASSERT_EQ(sol.nullspace.size(), 1u);
  // Normalize so the second coordinate is 1.
  const Complex scale = sol.nullspace[0][1];
  ASSERT_GT(std::abs(scale), 1e-10);
  EXPECT_NEAR(std::abs(sol.nullspace[0][0] / scale - Complex(-2.0, 0.0)), 0.0, kTight);
}

TEST(SolveLinear, FROZEN_InconsistentSystemThrows) {
  DenseMatrix a(2, 2);
  a(0, 0) = 1.0; a(0, 1) = 2.0;
  a(1, 0) = 2.0; a(1, 1) = 4.0;
  EXPECT_THROW(
      {
        try {
          cqg::solve_linear(a, {Complex(3.0, 0.0), Complex(7.0, 0.0)});
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::kNoSolution);
          throw;
        }
      },
      Error);
}

TEST(SolveLinear, FROZEN_ComplexOneByOne) {
  DenseMatrix a(1, 1);
  a(0, 0) = Complex(0.0, 1.0);
  const cqg::LinearSolution sol = cqg::solve_linear(a, {Complex(1.0, 0.0)});
  EXPECT_EQ(sol.rank, 1u);
  EXPECT_TRUE(sol.nullspace.empty());
  EXPECT_NEAR(std::abs(sol.particular[0] - Complex(0.0, -1.0)), 0.0, kTight);
}

TEST(SolveLinear, TallConsistentAndWideSystems) {
  // Overdetermined consistent: [[1],[2]] x = (5,10).
  DenseMatrix tall(2, 1);
  tall(0, 0) = 1.0;
  tall(1, 0) = 2.0;
  const cqg::LinearSolution s1 = cqg::solve_linear(tall, {Complex(5.0, 0.0), Complex(10.0, 0.0)});
  EXPECT_NEAR(std::abs(s1.particular[0] - 5.0), 0.0, kTight);

  // Underdetermined: [1 1 1] x = (6): nullspace has dimension 2.
  DenseMatrix wide(1, 3);
  wide(0, 0) = wide(0, 1) = wide(0, 2) = 1.0;
  const cqg::LinearSolution s2 = cqg::solve_linear(wide, {Complex(6.0, 0.0)});
  EXPECT_EQ(s2.rank, 1u);
  EXPECT_EQ(s2.nullspace.size(), 2u);
  for (const auto& v : s2.nullspace) {
    Complex dot = v[0] + v[1] + v[2];
    EXPECT_NEAR(std::abs(dot), 0.0, kTight);
  }
}

TEST(SolveLinear, RandomSquareSystemsSolveToResidualZero) {
  std::mt19937 rng(424242u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 12);
    DenseMatrix a(n, n);
    std::vector<Complex> b(n);
    for (uint32_t i = 0; i < n; ++i) {
      b[i] = Complex(dist(rng), dist(rng));
      for (uint32_t j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
    }
    cqg::LinearSolution sol;
    try {
      sol = cqg::solve_linear(a, b);
    } catch (const Error&) {
      continue;  // a singular draw is legitimate, just rare
    }
    // Residual check against the original data.
    for (uint32_t i = 0; i < n; ++i) {
      Complex r = -b[i];
      for (uint32_t j = 0; j < n; ++j) r += a(i, j) * sol.particular[j];
      EXPECT_NEAR(std::abs(r), 0.0, 1e-9);
    }
    for (const auto& v : sol.nullspace) {
      for (uint32_t i = 0; i < n; ++i) {
        Complex r(0.0, 0.0);
        for (uint32_t j = 0; j < n; ++j) r += a(i, j) * v[j];
        EXPECT_NEAR(std::abs(r), 0.0, 1e-9);
      }
    }
  }
}

TEST(DenseMatrix, InverseRoundTrip) {
  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const uint32_t n = 7;
  DenseMatrix a(n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
  const DenseMatrix ainv = cqg::invert(a);
  EXPECT_LT((a * ainv).max_abs_diff(DenseMatrix::identity(n)), 1e-10);
  EXPECT_LT((ainv * a).max_abs_diff(DenseMatrix::identity(n)), 1e-10);
}

// ---------------------------------------------------------------------------
// Hermitian Jacobi eigensolver.
// ---------------------------------------------------------------------------

TEST(HermitianEigen, FROZEN_ThreeByThreeSpectrum) {
  // M = [[2, i, 0], [-i, 2, 0], [0, 0, 5]]: the 2x2 block [[2,i],[-i,2]] has
  // eigenvalues 2 +/- 1, so the spectrum is {1, 3, 5}.
  DenseMatrix m(3, 3);
  m(0, 0) = 2.0; m(0, 1) = Complex(0.0, 1.0);
  m(1, 0) = Complex(0.0, -1.0); m(1, 1) = 2.0;
  m(2, 2) = 5.0;
  const cqg::HermitianEigen eig = cqg::hermitian_eigensystem(m);
  ASSERT_EQ(eig.values.size(), 3u);
  EXPECT_NEAR(eig.values[0], 1.0, 1e-10);
  EXPECT_NEAR(eig.values[1], 3.0, 1e-10);
  EXPECT_NEAR(eig.values[2], 5.0, 1e-10);
  EXPECT_NEAR(cqg::hermitian_min_eigenvalue(m), 1.0, 1e-10);
}

TEST(HermitianEigen, FROZEN_NonHermitianInputRejected) {
  DenseMatrix m(2, 2);
  m(0, 1) = 1.0;  // [[0,1],[0,0]]
  EXPECT_THROW(
      {
        try {
          cqg::hermitian_eigensystem(m);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::kNotHermitian);
          throw;
        }
      },
      Error);
}

TEST(HermitianEigen, RandomHermitianDiagonalization) {
  std::mt19937 rng(31337u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const uint32_t n = 2 + static_cast<uint32_t>(rng() % 9);
    DenseMatrix m(n, n);
    for (uint32_t i = 0; i < n; ++i) {
      m(i, i) = dist(rng);
      for (uint32_t j = i + 1; j < n; ++j) {
        m(i, j) = Complex(dist(rng), dist(rng));
        m(j, i) = std::conj(m(i, j));
      }
    }
    const cqg::HermitianEigen eig = cqg::hermitian_eigensystem(m);
    // U is unitary.
    EXPECT_LT((eig.vectors.adjoint() * eig.vectors)
                  .max_abs_diff(DenseMatrix::identity(n)),
              1e-9);
    // M U = U diag(values).
    DenseMatrix d(n, n);
    for (uint32_t i = 0; i < n; ++i) d(i, i) = eig.values[i];
    EXPECT_LT((m * eig.vectors).max_abs_diff(eig.vectors * d), 1e-9);
    // Eigenvalues ascend.
    for (uint32_t i = 0; i + 1 < n; ++i) EXPECT_LE(eig.values[i], eig.values[i + 1]);
    // Trace identity.
    double tr = 0.0;
    for (uint32_t i = 0; i < n; ++i) tr += m(i, i).real();
    double sum = 0.0;
    for (double v : eig.values) sum += v;
    EXPECT_NEAR(tr, sum, 1e-9);
  }
}

}  // namespace
