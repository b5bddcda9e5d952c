#pragma once

/// @file comodule.hpp
/// Finite-dimensional comodules and modules over a star Hopf algebra:
/// structure verification, invariance of sesquilinear forms, the passage
/// from comodules to modules over the dual, unitarization by Haar
/// averaging, and tensor products.
///
/// Sesquilinear forms are stored as matrices F with
///   <u, v> = sum_{ij} F_ij u_i conj(v_j),   so <e_i, e_j> = F_ij.
/// Forms are linear in the first slot and conjugate-linear in the second.

#include <cstdint>
#include <vector>

#include "cqg/star.hpp"

namespace cqg {

/// A right H-comodule: delta(e_v) = sum coaction[v][w][h] e_w (x) e_h.
struct RightComodule {
  std::uint32_t dim = 0;       ///< dim V
  SparseTensor coaction;       ///< {dimV, dimV, dimH}

  static RightComodule with_dims(std::uint32_t dv, std::uint32_t dh) {
    RightComodule c;
    c.dim = dv;
    c.coaction = SparseTensor({dv, dv, dh});
    return c;
  }
};

/// A left H-comodule: delta(e_v) = sum coaction[v][h][w] e_h (x) e_w.
struct LeftComodule {
  std::uint32_t dim = 0;
  SparseTensor coaction;  ///< {dimV, dimH, dimV}

  static LeftComodule with_dims(std::uint32_t dv, std::uint32_t dh) {
    LeftComodule c;
    c.dim = dv;
    c.coaction = SparseTensor({dv, dh, dv});
    return c;
  }
};

/// A left module over an algebra, one action matrix per algebra basis
/// vector: act[k] is the matrix of (e_k . -) on V.
struct LeftModule {
  std::vector<DenseMatrix> act;
  std::uint32_t dim = 0;
};

/// Comodule axioms: coassociativity and counitality of the coaction.
inline CheckReport verify_comodule(const FiniteBialgebra& h, const RightComodule& v,
                                   double tol = thresholds::kVerify) {
  CheckReport rep;
  rep.subject = "right_comodule";
  rep.tol = tol;
  const CoalgebraIndex coa = CoalgebraIndex::build(h);

  // (delta (x) id_H) delta = (id_V (x) Delta) delta.
  double coassoc = 0.0;
  for (std::uint32_t i = 0; i < v.dim; ++i) {
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Complex> diff;
    for (const auto& [idx, c] : v.coaction.entries()) {
      if (idx[0] != i) continue;
      for (const auto& [jdx, d] : v.coaction.entries())
        if (jdx[0] == idx[1]) diff[{jdx[1], jdx[2], idx[2]}] += c * d;
      for (const auto& [p, q, d] : coa.cop[idx[2]]) diff[{idx[1], p, q}] -= c * d;
    }
    for (const auto& [k, val] : diff) coassoc = std::max(coassoc, std::abs(val));
  }
  rep.set("coaction_coassociative", coassoc);

  // (id (x) eps) delta = id.
  double counital = 0.0;
  for (std::uint32_t i = 0; i < v.dim; ++i) {
    Vec acc(v.dim, Complex(0.0, 0.0));
    for (const auto& [idx, c] : v.coaction.entries())
      if (idx[0] == i) acc[idx[1]] += c * h.counit[idx[2]];
    acc[i] -= Complex(1.0, 0.0);
    counital = std::max(counital, max_abs(acc));
  }
  rep.set("coaction_counital", counital);
  return rep;
}

inline CheckReport verify_comodule(const FiniteBialgebra& h, const LeftComodule& v,
                                   double tol = thresholds::kVerify) {
  CheckReport rep;
  rep.subject = "left_comodule";
  rep.tol = tol;
  const CoalgebraIndex coa = CoalgebraIndex::build(h);

  // (Delta (x) id_V) delta = (id_H (x) delta) delta.
  double coassoc = 0.0;
  for (std::uint32_t i = 0; i < v.dim; ++i) {
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Complex> diff;
    for (const auto& [idx, c] : v.coaction.entries()) {
      if (idx[0] != i) continue;
      for (const auto& [p, q, d] : coa.cop[idx[1]]) diff[{p, q, idx[2]}] += c * d;
      for (const auto& [jdx, d] : v.coaction.entries())
        if (jdx[0] == idx[2]) diff[{idx[1], jdx[1], jdx[2]}] -= c * d;
    }
    for (const auto& [k, val] : diff) coassoc = std::max(coassoc, std::abs(val));
  }
  rep.set("coaction_coassociative", coassoc);

  double counital = 0.0;
  for (std::uint32_t i = 0; i < v.dim; ++i) {
    Vec acc(v.dim, Complex(0.0, 0.0));
    for (const auto& [idx, c] : v.coaction.entries())
      if (idx[0] == i) acc[idx[2]] += c * h.counit[idx[1]];
    acc[i] -= Complex(1.0, 0.0);
    counital = std::max(counital, max_abs(acc));
  }
  rep.set("coaction_counital", counital);
  return rep;
}

/// Module axioms: (e_i e_j) . v = e_i . (e_j . v) and 1 . v = v.
inline CheckReport verify_module(const FiniteBialgebra& h, const LeftModule& m,
                                 double tol = thresholds::kVerify) {
  CheckReport rep;
  rep.subject = "left_module";
  rep.tol = tol;
  require(m.act.size() == h.dim, Errc::kDimensionMismatch, "module action count");
  const AlgebraIndex alg = AlgebraIndex::build(h);
  double assoc = 0.0;
  for (std::uint32_t i = 0; i < h.dim; ++i)
    for (std::uint32_t j = 0; j < h.dim; ++j) {
      DenseMatrix lhs(m.dim, m.dim);
      for (const auto& [k, c] : alg.at(i, j)) lhs = lhs + m.act[k].scaled(c);
      assoc = std::max(assoc, lhs.max_abs_diff(m.act[i] * m.act[j]));
    }
  rep.set("action_multiplicative", assoc);
  DenseMatrix unit_act(m.dim, m.dim);
  for (std::uint32_t i = 0; i < h.dim; ++i)
    if (h.unit[i] != Complex(0.0, 0.0)) unit_act = unit_act + m.act[i].scaled(h.unit[i]);
  rep.set("action_unital", unit_act.max_abs_diff(DenseMatrix::identity(m.dim)));
  return rep;
}

// ---------------------------------------------------------------------------
// Invariance of sesquilinear forms.
// ---------------------------------------------------------------------------

/// Residual of right-comodule invariance:
/// sum <u_0, v> S(u_1) = sum <u, v_0> v_1^*.
inline double comodule_invariance_residual(const FiniteHopfAlgebra& h,
                                           const RightComodule& v,
                                           const DenseMatrix& form) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  require(form.rows() == v.dim && form.cols() == v.dim, Errc::kDimensionMismatch,
          "form shape");
  const DenseMatrix& c = *h.star;
  double worst = 0.0;
  for (std::uint32_t i = 0; i < v.dim; ++i) {
    for (std::uint32_t j = 0; j < v.dim; ++j) {
      Vec acc(h.dim, Complex(0.0, 0.0));
      for (const auto& [idx, w] : v.coaction.entries()) {
        if (idx[0] == i) {
          // + <e_w, e_j> S(e_h) with w = idx[1], h = idx[2].
          const Complex coef = w * form(idx[1], j);
          if (coef != Complex(0.0, 0.0))
            for (std::uint32_t r = 0; r < h.dim; ++r)
              acc[r] += coef * h.antipode(r, idx[2]);
        }
        if (idx[0] == j) {
          // - <e_i, e_w> (e_h)^*, coefficient conjugated (second slot).
          const Complex coef = std::conj(w) * form(i, idx[1]);
          if (coef != Complex(0.0, 0.0))
            for (std::uint32_t r = 0; r < h.dim; ++r) acc[r] -= coef * c(r, idx[2]);
        }
      }
      worst = std::max(worst, max_abs(acc));
    }
  }
  return worst;
}

/// Residual of left-comodule invariance:
/// sum S^{-1}(u_{-1}) <u_0, v> = sum v_{-1}^* <u, v_0>.
inline double comodule_invariance_residual(const FiniteHopfAlgebra& h,
                                           const LeftComodule& v,
                                           const DenseMatrix& form) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  require(form.rows() == v.dim && form.cols() == v.dim, Errc::kDimensionMismatch,
          "form shape");
  const DenseMatrix& c = *h.star;
  double worst = 0.0;
  for (std::uint32_t i = 0; i < v.dim; ++i) {
    for (std::uint32_t j = 0; j < v.dim; ++j) {
      Vec acc(h.dim, Complex(0.0, 0.0));
      for (const auto& [idx, w] : v.coaction.entries()) {
        if (idx[0] == i) {
          // + S^{-1}(e_h) <e_w, e_j>, h = idx[1], w = idx[2].
          const Complex coef = w * form(idx[2], j);
          if (coef != Complex(0.0, 0.0))
            for (std::uint32_t r = 0; r < h.dim; ++r)
              acc[r] += coef * h.antipode_inv(r, idx[1]);
        }
        if (idx[0] == j) {
          // - (e_h)^* <e_i, e_w>.
          const Complex coef = std::conj(w) * form(i, idx[2]);
          if (coef != Complex(0.0, 0.0))
            for (std::uint32_t r = 0; r < h.dim; ++r) acc[r] -= coef * c(r, idx[1]);
        }
      }
      worst = std::max(worst, max_abs(acc));
    }
  }
  return worst;
}

/// Residual of the star-representation property <x.u, v> = <u, x^*.v>.
inline double module_star_representation_residual(const FiniteHopfAlgebra& h,
                                                  const LeftModule& m,
                                                  const DenseMatrix& form) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  const DenseMatrix& c = *h.star;
  double worst = 0.0;
  for (std::uint32_t k = 0; k < h.dim; ++k) {
    // T_k^T F = F sum_p conj(C_pk) conj(T_p).
    DenseMatrix rhs(m.dim, m.dim);
    for (std::uint32_t p = 0; p < h.dim; ++p) {
      const Complex w = std::conj(c(p, k));
      if (w == Complex(0.0, 0.0)) continue;
      rhs = rhs + m.act[p].conjugate().scaled(w);
    }
    worst = std::max(worst, (m.act[k].transpose() * form).max_abs_diff(form * rhs));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Comodules versus modules over the dual.
// ---------------------------------------------------------------------------

/// Turns a left H-comodule into a left module over the dual Hopf algebra,
/// via alpha . v = sum alpha(S_H^{-1}(v_{-1})) v_0. (Plain evaluation
/// alpha(v_{-1}) v_0 is only a right dual-module; composing with S^{-1}
/// makes it a left action.) The dual basis index equals the H basis index.
inline LeftModule comodule_to_dual_module(const FiniteHopfAlgebra& h,
                                          const LeftComodule& v) {
  LeftModule m;
  m.dim = v.dim;
  m.act.assign(h.dim, DenseMatrix(v.dim, v.dim));
  for (const auto& [idx, c] : v.coaction.entries()) {
    // idx = (v, h, w): contributes alpha(S^{-1} e_h) to e_w component.
    for (std::uint32_t k = 0; k < h.dim; ++k) {
      const Complex s = h.antipode_inv(k, idx[1]);
      if (s == Complex(0.0, 0.0)) continue;
      m.act[k](idx[2], idx[0]) += c * s;
    }
  }
  return m;
}

/// Reconstructs a left comodule from a dual module: delta(v) =
/// sum_h e_h (x) T_{S(e^h)} v, inverting comodule_to_dual_module.
inline LeftComodule dual_module_to_comodule(const FiniteHopfAlgebra& h,
                                            const LeftModule& m) {
  LeftComodule v = LeftComodule::with_dims(m.dim, h.dim);
  // S(e^k) as a functional is row k of S applied on the left:
  // S(e^k)(e_j) = e^k(S e_j) = S_kj; so T_{S(e^k)} = sum_j S_kj T_{e^j}.
  for (std::uint32_t hidx = 0; hidx < h.dim; ++hidx) {
    DenseMatrix t(m.dim, m.dim);
    for (std::uint32_t j = 0; j < h.dim; ++j) {
      const Complex s = h.antipode(hidx, j);
      if (s == Complex(0.0, 0.0)) continue;
      t = t + m.act[j].scaled(s);
    }
    for (std::uint32_t vv = 0; vv < m.dim; ++vv)
      for (std::uint32_t w = 0; w < m.dim; ++w)
        if (t(w, vv) != Complex(0.0, 0.0)) v.coaction.add({vv, hidx, w}, t(w, vv));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Unitarization by Haar averaging.
// ---------------------------------------------------------------------------

/// Produces an invariant inner product on a right comodule by averaging a
/// seed inner product with the Haar integral:
///   B(u, v) = sum <u_0, v_0>_seed phi(v_1^* u_1),
/// i.e. B = <delta(u), delta(v)> under seed (x) integral-form. B is positive
/// definite whenever the seed is and the algebra is a compact quantum group.
inline DenseMatrix unitarize_comodule(const FiniteHopfAlgebra& h, const Vec& phi,
                                      const RightComodule& v,
                                      const DenseMatrix& seed) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  require(seed.rows() == v.dim && seed.cols() == v.dim, Errc::kDimensionMismatch,
          "seed form shape");
  const DenseMatrix gram = gram_form(h, phi);  // <x,y>_phi on H
  DenseMatrix b(v.dim, v.dim);
  for (const auto& [iu, cu] : v.coaction.entries()) {
    for (const auto& [iv, cv] : v.coaction.entries()) {
      // u = e_{iu[0]}, v = e_{iv[0]}; terms (e_w (x) e_h), (e_w' (x) e_h').
      const Complex coef = cu * std::conj(cv) * seed(iu[1], iv[1]) *
                           gram(iu[2], iv[2]);
      if (coef != Complex(0.0, 0.0)) b(iu[0], iv[0]) += coef;
    }
  }
  return b;
}

/// Same for left comodules, by viewing the flipped coaction as a right
/// comodule over the co-opposite algebra (handled inline: the flipped Haar
/// average uses phi(u_{-1} v_{-1}^*) with the left legs).
inline DenseMatrix unitarize_comodule(const FiniteHopfAlgebra& h, const Vec& phi,
                                      const LeftComodule& v,
                                      const DenseMatrix& seed) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  const DenseMatrix gram = gram_form(h, phi);
  // For the co-opposite algebra the integral is the same phi; right-comodule
  // averaging over H^cop with delta'(u) = u_0 (x) u_{-1} gives
  // B(u,v) = sum seed(u_0, v_0) phi(v_{-1}^* u_{-1}).
  DenseMatrix b(v.dim, v.dim);
  for (const auto& [iu, cu] : v.coaction.entries()) {
    for (const auto& [iv, cv] : v.coaction.entries()) {
      const Complex coef = cu * std::conj(cv) * seed(iu[2], iv[2]) *
                           gram(iu[1], iv[1]);
      if (coef != Complex(0.0, 0.0)) b(iu[0], iv[0]) += coef;
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// Tensor products of comodules.
// ---------------------------------------------------------------------------

/// Diagonal right-comodule structure on V (x) W:
/// delta(v (x) w) = sum (v_0 (x) w_0) (x) v_1 w_1.
inline RightComodule tensor_product_comodule(const FiniteBialgebra& h,
                                             const RightComodule& v,
                                             const RightComodule& w) {
  const AlgebraIndex alg = AlgebraIndex::build(h);
  RightComodule t = RightComodule::with_dims(v.dim * w.dim, h.dim);
  for (const auto& [iv, cv] : v.coaction.entries()) {
    for (const auto& [iw, cw] : w.coaction.entries()) {
      const Complex c = cv * cw;
      for (const auto& [r, m] : alg.at(iv[2], iw[2])) {
        t.coaction.add({tensor_index(iv[0], iw[0], w.dim),
                        tensor_index(iv[1], iw[1], w.dim), r},
                       c * m);
      }
    }
  }
  return t;
}

/// The regular right comodule (V = H, coaction Delta).
inline RightComodule regular_right_comodule(const FiniteBialgebra& h) {
  RightComodule v = RightComodule::with_dims(h.dim, h.dim);
  for (const auto& [idx, c] : h.comult.entries())
    v.coaction.add({idx[0], idx[1], idx[2]}, c);
  return v;
}

/// The regular left comodule (V = H, coaction Delta read as x_1 (x) x_2
/// with the first leg in H).
inline LeftComodule regular_left_comodule(const FiniteBialgebra& h) {
  LeftComodule v = LeftComodule::with_dims(h.dim, h.dim);
  for (const auto& [idx, c] : h.comult.entries())
    v.coaction.add({idx[0], idx[1], idx[2]}, c);
  return v;
}

}  // namespace cqg
