#pragma once

/// @file star.hpp
/// Star structures on finite Hopf algebras and their verification.
///
/// A star structure is stored as the matrix C with x^* = C * conj(coords x);
/// on basis vectors, star(e_j) is column j of C. The axioms checked here:
/// conjugate-linear involution, antimultiplicative, comultiplicative (no
/// flip), unital, eps(x^*) = conj(eps(x)), and (S o *)^2 = id.

#include <cstdint>

#include "cqg/hopf.hpp"

namespace cqg {

/// x^* in coordinates.
inline Vec star_apply(const DenseMatrix& star, const Vec& x) {
  Vec cx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cx[i] = std::conj(x[i]);
  return star.apply(cx);
}

inline Vec star_apply(const FiniteHopfAlgebra& h, const Vec& x) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  return star_apply(*h.star, x);
}

/// Left-multiplication matrices L_k = (e_k . -) for all k.
inline std::vector<DenseMatrix> left_mult_matrices(const FiniteBialgebra& h) {
  std::vector<DenseMatrix> l(h.dim, DenseMatrix(h.dim, h.dim));
  for (const auto& [idx, c] : h.mult.entries()) l[idx[0]](idx[2], idx[1]) += c;
  return l;
}

/// Right-multiplication matrices R_k = (- . e_k) for all k.
inline std::vector<DenseMatrix> right_mult_matrices(const FiniteBialgebra& h) {
  std::vector<DenseMatrix> r(h.dim, DenseMatrix(h.dim, h.dim));
  for (const auto& [idx, c] : h.mult.entries()) r[idx[1]](idx[2], idx[0]) += c;
  return r;
}

/// Verifies the star-Hopf axioms; every entry is a max-abs residual.
inline CheckReport verify_star_hopf(const FiniteHopfAlgebra& h,
                                    double tol = thresholds::kVerify) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  const DenseMatrix& c = *h.star;
  require(c.rows() == h.dim && c.cols() == h.dim, Errc::kDimensionMismatch,
          "star matrix shape");
  CheckReport rep;
  rep.subject = "star_hopf";
  rep.tol = tol;
  const std::uint32_t n = h.dim;
  const AlgebraIndex alg = AlgebraIndex::build(h);
  const CoalgebraIndex coa = CoalgebraIndex::build(h);

  // Involution: x^{**} = x reads C conj(C) = I on matrices.
  rep.set("star_involutive",
          (c * c.conjugate()).max_abs_diff(DenseMatrix::identity(n)));

  // Antimultiplicative: (e_i e_j)^* = e_j^* e_i^*.
  double antimult = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    Vec si(n, Complex(0.0, 0.0));
    for (std::uint32_t r = 0; r < n; ++r) si[r] = c(r, i);
    for (std::uint32_t j = 0; j < n; ++j) {
      Vec lhs(n, Complex(0.0, 0.0));
      for (const auto& [k, m] : alg.at(i, j)) {
        const Complex mc = std::conj(m);  // star is conjugate linear
        for (std::uint32_t r = 0; r < n; ++r) lhs[r] += mc * c(r, k);
      }
      Vec sj(n, Complex(0.0, 0.0));
      for (std::uint32_t r = 0; r < n; ++r) sj[r] = c(r, j);
      const Vec rhs = algebra_product(h, sj, si);
      for (std::uint32_t r = 0; r < n; ++r) lhs[r] -= rhs[r];
      antimult = std::max(antimult, max_abs(lhs));
    }
  }
  rep.set("star_antimultiplicative", antimult);

  // Comultiplicative with no flip: Delta(x^*) = (* (x) *) Delta(x).
  double comult = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> diff;
    for (std::uint32_t d = 0; d < n; ++d) {
      const Complex cdk = c(d, k);
      if (cdk == Complex(0.0, 0.0)) continue;
      for (const auto& [p, q, w] : coa.cop[d]) diff[{p, q}] += cdk * w;
    }
    for (const auto& [p, q, w] : coa.cop[k]) {
      const Complex wc = std::conj(w);
      for (std::uint32_t a = 0; a < n; ++a) {
        const Complex cap = c(a, p);
        if (cap == Complex(0.0, 0.0)) continue;
        for (std::uint32_t b = 0; b < n; ++b) {
          const Complex cbq = c(b, q);
          if (cbq == Complex(0.0, 0.0)) continue;
          diff[{a, b}] -= wc * cap * cbq;
        }
      }
    }
    for (const auto& [idx, v] : diff) comult = std::max(comult, std::abs(v));
  }
  rep.set("star_comultiplicative", comult);

  // 1^* = 1 and eps(x^*) = conj(eps(x)).
  {
    Vec s1 = star_apply(c, h.unit);
    for (std::uint32_t r = 0; r < n; ++r) s1[r] -= h.unit[r];
    rep.set("star_unital", max_abs(s1));
  }
  {
    double v = 0.0;
    for (std::uint32_t k = 0; k < n; ++k) {
      Complex acc(0.0, 0.0);
      for (std::uint32_t r = 0; r < n; ++r) acc += h.counit[r] * c(r, k);
      v = std::max(v, std::abs(acc - std::conj(h.counit[k])));
    }
    rep.set("star_counital", v);
  }

  // (S o *)^2 = id: with M = S C, this is M conj(M) = I.
  {
    const DenseMatrix m = h.antipode * c;
    rep.set("star_antipode_involutive",
            (m * m.conjugate()).max_abs_diff(DenseMatrix::identity(n)));
  }
  return rep;
}

/// The Gram matrix of the integral form, G_ij = <e_i, e_j>_phi =
/// phi(e_j^* e_i). With A_pq = phi(e_p e_q) this is G = A^T C.
inline DenseMatrix gram_form(const FiniteHopfAlgebra& h, const Vec& phi) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  DenseMatrix a(h.dim, h.dim);
  for (const auto& [idx, m] : h.mult.entries()) a(idx[0], idx[1]) += m * phi[idx[2]];
  return a.transpose() * (*h.star);
}

/// Structural identities of the integral form on a star Hopf algebra with
/// normalized integral phi. Residual names:
///   - gram_hermitian: G = G^dagger;
///   - gram_left_action:  <z x, y> = <x, z^* y>;
///   - gram_right_action: <x z, y> = <x, y z^*>;
///   - gram_star_flip:    <x^*, y^*> = <y, x>;
///   - gram_right_invariance: sum <x_1,y> S(x_2) = sum <x,y_1> y_2^*;
///   - gram_left_invariance:  sum S^{-1}(x_1) <x_2,y> = sum y_1^* <x,y_2>;
///   - antipode_star_commute: S o * = * o S (finite case).
inline CheckReport check_gram_identities(const FiniteHopfAlgebra& h, const Vec& phi,
                                         double tol = thresholds::kVerify) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  const DenseMatrix& c = *h.star;
  const std::uint32_t n = h.dim;
  CheckReport rep;
  rep.subject = "gram_identities";
  rep.tol = tol;

  const DenseMatrix g = gram_form(h, phi);
  rep.set("gram_hermitian", g.max_abs_diff(g.adjoint()));

  const std::vector<DenseMatrix> lmul = left_mult_matrices(h);
  const std::vector<DenseMatrix> rmul = right_mult_matrices(h);

  // <z x, y> = <x, z^* y> as matrices: L_k^T G = G sum_p conj(C_pk) conj(L_p).
  double left_action = 0.0, right_action = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    DenseMatrix lsum(n, n), rsum(n, n);
    for (std::uint32_t p = 0; p < n; ++p) {
      const Complex w = std::conj(c(p, k));
      if (w == Complex(0.0, 0.0)) continue;
      lsum = lsum + lmul[p].conjugate().scaled(w);
      rsum = rsum + rmul[p].conjugate().scaled(w);
    }
    left_action =
        std::max(left_action, (lmul[k].transpose() * g).max_abs_diff(g * lsum));
    right_action =
        std::max(right_action, (rmul[k].transpose() * g).max_abs_diff(g * rsum));
  }
  rep.set("gram_left_action", left_action);
  rep.set("gram_right_action", right_action);

  // <x^*, y^*> = <y, x>: C^T G conj(C) = G^T.
  rep.set("gram_star_flip",
          (c.transpose() * g * c.conjugate()).max_abs_diff(g.transpose()));

  // Invariance of the form on the regular comodules.
  const CoalgebraIndex coa = CoalgebraIndex::build(h);
  double right_inv = 0.0, left_inv = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      Vec rhs_r(n, Complex(0.0, 0.0)), lhs_r(n, Complex(0.0, 0.0));
      Vec rhs_l(n, Complex(0.0, 0.0)), lhs_l(n, Complex(0.0, 0.0));
      for (const auto& [p, q, w] : coa.cop[i]) {
        // sum <x_1, y> S(x_2) and sum S^{-1}(x_1) <x_2, y>, x = e_i, y = e_j.
        for (std::uint32_t r = 0; r < n; ++r) {
          lhs_r[r] += w * g(p, j) * h.antipode(r, q);
          lhs_l[r] += w * g(q, j) * h.antipode_inv(r, p);
        }
      }
      for (const auto& [p, q, w] : coa.cop[j]) {
        // sum <x, y_1> y_2^* and sum y_1^* <x, y_2>.
        const Complex wc = std::conj(w);
        for (std::uint32_t r = 0; r < n; ++r) {
          rhs_r[r] += wc * g(i, p) * c(r, q);
          rhs_l[r] += wc * g(i, q) * c(r, p);
        }
      }
      for (std::uint32_t r = 0; r < n; ++r) {
        lhs_r[r] -= rhs_r[r];
        lhs_l[r] -= rhs_l[r];
      }
      right_inv = std::max(right_inv, max_abs(lhs_r));
      left_inv = std::max(left_inv, max_abs(lhs_l));
    }
  }
  rep.set("gram_right_invariance", right_inv);
  rep.set("gram_left_invariance", left_inv);

  // S o * = * o S: S C = C conj(S).
  rep.set("antipode_star_commute",
          (h.antipode * c).max_abs_diff(c * h.antipode.conjugate()));
  return rep;
}

}  // namespace cqg
