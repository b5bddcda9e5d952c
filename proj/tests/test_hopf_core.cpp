// Tests for the Hopf-algebra core: axiom verification, antipode solving via
// convolution inversion, two-sided integrals, and the Nakayama automorphism.
//
// The FROZEN_* structure constants and expected values below were worked out
// by hand (group algebra of C2, functions on C2, the 4-dimensional algebra
// with a grouplike g and a skew primitive x, and the 2-element monoid with an
// idempotent) and must not be regenerated from the code under test.

#include <gtest/gtest.h>

#include <complex>
#include <vector>

#include "cqg/hopf.hpp"
#include "cqg/integral.hpp"
#include "test_algebras.hpp"

namespace {

using cqg_test::FourDimNonCosemisimple;
using cqg_test::IdempotentMonoidBialgebra;

using cqg::Complex;
using cqg::DenseMatrix;
using cqg::Errc;
using cqg::Error;
using cqg::FiniteBialgebra;
using cqg::FiniteHopfAlgebra;
using cqg::Vec;

constexpr double kTight = 1e-12;

// Group algebra of C2: basis {1, g}, e_i e_j = e_{i xor j}, both grouplike.
FiniteBialgebra GroupAlgebraC2() {
  FiniteBialgebra b = FiniteBialgebra::with_dim(2);
  for (uint32_t i = 0; i < 2; ++i)
    for (uint32_t j = 0; j < 2; ++j) b.mult.add({i, j, i ^ j}, 1.0);
  for (uint32_t k = 0; k < 2; ++k) b.comult.add({k, k, k}, 1.0);
  b.unit = {1.0, 0.0};
  b.counit = {1.0, 1.0};
  return b;
}

// Functions on C2: basis of point evaluations {d_0, d_1}; pointwise product,
// Delta(d_k) = sum_{i+j=k} d_i (x) d_j, unit = d_0 + d_1, eps = evaluation
// at the identity.
FiniteBialgebra FunctionsOnC2() {
  FiniteBialgebra b = FiniteBialgebra::with_dim(2);
  for (uint32_t i = 0; i < 2; ++i) b.mult.add({i, i, i}, 1.0);
  for (uint32_t i = 0; i < 2; ++i)
    for (uint32_t j = 0; j < 2; ++j) b.comult.add({(i + j) % 2, i, j}, 1.0);
  b.unit = {1.0, 1.0};
  b.counit = {1.0, 0.0};
  return b;
}

// ---------------------------------------------------------------------------
// Axioms and antipode solving.
// ---------------------------------------------------------------------------

TEST(VerifyBialgebra, GroupAlgebraAndFunctionAlgebraPass) {
  for (const FiniteBialgebra& b : {GroupAlgebraC2(), FunctionsOnC2()}) {
    const cqg::CheckReport rep = cqg::verify_bialgebra(b);
    EXPECT_TRUE(rep.pass()) << rep.worst();
    EXPECT_EQ(rep.residuals.size(), 8u);
  }
}

TEST(VerifyBialgebra, BrokenAssociativityIsCaught) {
  FiniteBialgebra b = GroupAlgebraC2();
  b.mult.add({1, 1, 1}, 0.5);  // spoil g*g
  const cqg::CheckReport rep = cqg::verify_bialgebra(b);
  EXPECT_FALSE(rep.pass());
  EXPECT_GT(rep.residuals.at("comult_multiplicative"), 1e-3);
}

TEST(SolveAntipode, FROZEN_GroupAlgebraC2HasIdentityAntipode) {
  // S(g) = g^{-1} = g, so S is the identity matrix here.
  const DenseMatrix s = cqg::solve_antipode(GroupAlgebraC2());
  EXPECT_LT(s.max_abs_diff(DenseMatrix::identity(2)), kTight);
}

TEST(SolveAntipode, FROZEN_FourDimAntipode) {
  // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x.
  const DenseMatrix s = cqg::solve_antipode(FourDimNonCosemisimple());
  DenseMatrix expect(4, 4);
  expect(0, 0) = 1.0;
  expect(1, 1) = 1.0;
  expect(3, 2) = -1.0;  // S(e_2) = -e_3
  expect(2, 3) = 1.0;   // S(e_3) = e_2
  EXPECT_LT(s.max_abs_diff(expect), kTight);
}

TEST(SolveAntipode, FROZEN_IdempotentMonoidHasNoAntipode) {
  EXPECT_THROW(
      {
        try {
          cqg::solve_antipode(IdempotentMonoidBialgebra());
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::kNotAHopfAlgebra);
          throw;
        }
      },
      Error);
}

TEST(VerifyHopf, FourDimPassesAllAxioms) {
  const FiniteHopfAlgebra h = cqg::make_hopf(FourDimNonCosemisimple());
  const cqg::CheckReport rep = cqg::verify_hopf(h);
  EXPECT_TRUE(rep.pass()) << rep.worst();
  // S^2 != id here: S^2(x) = S(-gx) = -S(x)S(g) = gx g = -x.
  EXPECT_GT((h.antipode * h.antipode).max_abs_diff(DenseMatrix::identity(4)), 0.5);
}

TEST(VerifyHopf, ClaimedAntipodeCrossCheck) {
  FiniteBialgebra b = GroupAlgebraC2();
  EXPECT_NO_THROW(cqg::make_hopf_with_antipode(b, DenseMatrix::identity(2)));
  DenseMatrix wrong(2, 2);
  wrong(0, 0) = 1.0;
  wrong(1, 1) = -1.0;
  EXPECT_THROW(cqg::make_hopf_with_antipode(b, wrong), Error);
}

// ---------------------------------------------------------------------------
// Convolution calculus.
// ---------------------------------------------------------------------------

TEST(Convolution, AntipodeIsConvolutionInverseOfIdentity) {
  const FiniteBialgebra b = FourDimNonCosemisimple();
  const DenseMatrix id = DenseMatrix::identity(4);
  const DenseMatrix s = cqg::convolution_inverse(b, id);
  const DenseMatrix ue = cqg::convolution_unit(b, b);
  EXPECT_LT(cqg::convolution(b, s, id).max_abs_diff(ue), kTight);
  EXPECT_LT(cqg::convolution(b, id, s).max_abs_diff(ue), kTight);
}

TEST(Convolution, InverseOfAntipodeRoundTrips) {
  const FiniteHopfAlgebra h = cqg::make_hopf(FourDimNonCosemisimple());
  const DenseMatrix x = cqg::convolution_inverse(h, h.antipode);
  const DenseMatrix ue = cqg::convolution_unit(h, h);
  EXPECT_LT(cqg::convolution(h, x, h.antipode).max_abs_diff(ue), kTight);
  EXPECT_LT(cqg::convolution(h, h.antipode, x).max_abs_diff(ue), kTight);
}

TEST(Convolution, FunctionalInverseOnGroupAlgebra) {
  // On a group algebra a functional f with f(g) != 0 for all g inverts
  // pointwise: f^{-1}(g) = 1 / f(g), because Delta(g) = g (x) g.
  const FiniteBialgebra b = GroupAlgebraC2();
  const Vec f = {Complex(2.0, 0.0), Complex(0.0, 4.0)};
  const Vec finv = cqg::functional_convolution_inverse(b, f);
  EXPECT_NEAR(std::abs(finv[0] - Complex(0.5, 0.0)), 0.0, kTight);
  EXPECT_NEAR(std::abs(finv[1] - Complex(0.0, -0.25)), 0.0, kTight);
}

// ---------------------------------------------------------------------------
// Integrals.
// ---------------------------------------------------------------------------

TEST(Integrals, FROZEN_GroupAlgebraC2) {
  const FiniteHopfAlgebra h = cqg::make_hopf(GroupAlgebraC2());
  const cqg::HaarIntegrals haar = cqg::compute_integrals(h);
  EXPECT_EQ(haar.phi_nullity, 1u);
  EXPECT_EQ(haar.t_nullity, 1u);
  // phi(e_g) = [g == 1]; t = (1 + g)/2.
  EXPECT_NEAR(std::abs(haar.phi[0] - 1.0), 0.0, kTight);
  EXPECT_NEAR(std::abs(haar.phi[1]), 0.0, kTight);
  EXPECT_NEAR(std::abs(haar.integral_element[0] - 0.5), 0.0, kTight);
  EXPECT_NEAR(std::abs(haar.integral_element[1] - 0.5), 0.0, kTight);
  // Pairing matrix is the identity; Nakayama is the identity.
  const DenseMatrix a = cqg::integral_pairing(h, haar.phi);
  EXPECT_LT(a.max_abs_diff(DenseMatrix::identity(2)), kTight);
  EXPECT_LT(cqg::nakayama_automorphism(h, haar.phi).max_abs_diff(DenseMatrix::identity(2)),
            kTight);
  const cqg::CheckReport rep = cqg::check_integral_identities(h, haar);
  EXPECT_TRUE(rep.pass()) << rep.worst();
}

TEST(Integrals, FROZEN_FunctionsOnC2) {
  const FiniteHopfAlgebra h = cqg::make_hopf(FunctionsOnC2());
  const cqg::HaarIntegrals haar = cqg::compute_integrals(h);
  EXPECT_EQ(haar.phi_nullity, 1u);
  EXPECT_EQ(haar.t_nullity, 1u);
  // phi = uniform measure (1/2, 1/2); t = d_0 (indicator of the identity).
  EXPECT_NEAR(std::abs(haar.phi[0] - 0.5), 0.0, kTight);
  EXPECT_NEAR(std::abs(haar.phi[1] - 0.5), 0.0, kTight);
  EXPECT_NEAR(std::abs(haar.integral_element[0] - 1.0), 0.0, kTight);
  EXPECT_NEAR(std::abs(haar.integral_element[1]), 0.0, kTight);
  const DenseMatrix a = cqg::integral_pairing(h, haar.phi);
  EXPECT_LT(a.max_abs_diff(DenseMatrix::identity(2).scaled(0.5)), kTight);
  const cqg::CheckReport rep = cqg::check_integral_identities(h, haar);
  EXPECT_TRUE(rep.pass()) << rep.worst();
}

TEST(Integrals, FROZEN_FourDimIsNotCosemisimple) {
  EXPECT_THROW(
      {
        try {
          cqg::compute_integrals(FourDimNonCosemisimple());
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::kNotCosemisimple);
          throw;
        }
      },
      Error);
}

// ---------------------------------------------------------------------------
// Tensor products.
// ---------------------------------------------------------------------------

TEST(TensorProduct, C2TensorC2IsKleinFourGroupAlgebra) {
  const FiniteBialgebra t =
      cqg::tensor_product_bialgebra(GroupAlgebraC2(), GroupAlgebraC2());
  EXPECT_EQ(t.dim, 4u);
  EXPECT_TRUE(cqg::verify_bialgebra(t).pass());
  // Basis e_{(a,b)} with index 2a + b multiplies by componentwise xor.
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) {
      const uint32_t k = ((i >> 1) ^ (j >> 1)) * 2 + ((i & 1) ^ (j & 1));
      EXPECT_EQ(t.mult.at({i, j, k}), Complex(1.0, 0.0));
    }
  const FiniteHopfAlgebra h = cqg::make_hopf(t);
  EXPECT_LT(h.antipode.max_abs_diff(DenseMatrix::identity(4)), kTight);
  EXPECT_TRUE(cqg::verify_hopf(h).pass());
}

}  // namespace
