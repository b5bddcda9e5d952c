#pragma once

/// @file integral.hpp
/// Two-sided integrals of a finite-dimensional Hopf algebra: the normalized
/// integral functional (Haar state candidate), the integral element, the
/// Nakayama automorphism of the integral pairing, and the identity battery
/// that a cosemisimple Hopf algebra must satisfy.

#include <cstdint>
#include <string>
#include <vector>

#include "cqg/hopf.hpp"

namespace cqg {

/// The two-sided integral data of a cosemisimple (hence, in characteristic
/// zero, semisimple) Hopf algebra.
struct HaarIntegrals {
  Vec phi;                     ///< integral functional, phi(1) = 1
  Vec integral_element;        ///< two-sided integral element t, eps(t) = 1
  std::uint32_t phi_nullity = 0;  ///< dim of the two-sided integral functional space
  std::uint32_t t_nullity = 0;    ///< dim of the two-sided integral element space
};

namespace detail {

/// Nullspace of the joint "two-sided invariance" system for a functional:
/// (phi (x) id) Delta(x) = phi(x) 1 and (id (x) phi) Delta(x) = phi(x) 1.
inline std::vector<Vec> integral_functional_space(const FiniteBialgebra& h,
                                                  double pivot_tol) {
  const std::uint32_t n = h.dim;
  const CoalgebraIndex coa = CoalgebraIndex::build(h);
  // 2 n^2 homogeneous equations in the n unknowns phi_i.
  DenseMatrix a(2 * n * n, n);
  for (std::uint32_t k = 0; k < n; ++k) {
    for (const auto& [p, q, w] : coa.cop[k]) {
      // Left leg integrated, component q: sum_p d^k_{pq} phi_p = phi_k 1_q.
      a(k * n + q, p) += w;
      // Right leg integrated, component p.
      a(n * n + k * n + p, q) += w;
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      a(k * n + r, k) -= h.unit[r];
      a(n * n + k * n + r, k) -= h.unit[r];
    }
  }
  const LinearSolution sol = solve_linear(a, Vec(2 * std::size_t{n} * n, Complex(0.0, 0.0)), pivot_tol);
  return sol.nullspace;
}

/// Nullspace of the joint system for a two-sided integral element:
/// x t = eps(x) t = t x for all basis x.
inline std::vector<Vec> integral_element_space(const FiniteBialgebra& h,
                                               double pivot_tol) {
  const std::uint32_t n = h.dim;
  DenseMatrix a(2 * n * n, n);
  for (const auto& [idx, m] : h.mult.entries()) {
    const std::uint32_t i = idx[0], j = idx[1], r = idx[2];
    // e_i * t: coefficient of t_j in component r of e_i t.
    a(std::size_t{i} * n + r, j) += m;
    // t * e_j: coefficient of t_i in component r of t e_j.
    a(std::size_t{n} * n + j * n + r, i) += m;
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t r = 0; r < n; ++r) {
      a(std::size_t{i} * n + r, r) -= h.counit[i];
      a(std::size_t{n} * n + i * n + r, r) -= h.counit[i];
    }
  const LinearSolution sol = solve_linear(a, Vec(2 * std::size_t{n} * n, Complex(0.0, 0.0)), pivot_tol);
  return sol.nullspace;
}

/// Picks the vector in the span of @p basis maximizing |f(v)| over the basis
/// vectors and normalizes f(v) = 1; returns false if every candidate
/// evaluates to (numerically) zero.
inline bool normalize_against(const std::vector<Vec>& basis, const Vec& f, Vec* out) {
  double best = 0.0;
  const Vec* pick = nullptr;
  Complex pick_val(0.0, 0.0);
  for (const Vec& v : basis) {
    const Complex val = pair_functional(f, v);
    if (std::abs(val) > best) {
      best = std::abs(val);
      pick = &v;
      pick_val = val;
    }
  }
  // Scale-aware cutoff: basis vectors from solve_linear have entries of
  // order one, so a normalization pairing below the pivot threshold means
  // the functional vanishes on the whole space.
  if (pick == nullptr || best <= thresholds::kPivot) return false;
  out->assign(pick->size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < pick->size(); ++i) (*out)[i] = (*pick)[i] / pick_val;
  return true;
}

}  // namespace detail

/// Computes the normalized two-sided integral functional (phi(1) = 1) and
/// integral element (eps(t) = 1). Throws Error(kNotCosemisimple) when either
/// normalization is impossible; the nullities of the two joint systems are
/// reported in the result and are both 1 exactly in the cosemisimple case.
inline HaarIntegrals compute_integrals(const FiniteBialgebra& h,
                                       double pivot_tol = thresholds::kPivot) {
  validate_shape(h);
  HaarIntegrals out;

  const std::vector<Vec> phis = detail::integral_functional_space(h, pivot_tol);
  out.phi_nullity = static_cast<std::uint32_t>(phis.size());
  if (!detail::normalize_against(phis, h.unit, &out.phi))
    fail(Errc::kNotCosemisimple,
         "no two-sided integral functional with phi(1) = 1 (nullity " +
             std::to_string(phis.size()) + ")");

  const std::vector<Vec> ts = detail::integral_element_space(h, pivot_tol);
  out.t_nullity = static_cast<std::uint32_t>(ts.size());
  if (!detail::normalize_against(ts, h.counit, &out.integral_element))
    fail(Errc::kNotCosemisimple,
         "no two-sided integral element with eps(t) = 1 (nullity " +
             std::to_string(ts.size()) + ")");
  return out;
}

/// The integral pairing matrix A_ij = phi(e_i e_j).
inline DenseMatrix integral_pairing(const FiniteBialgebra& h, const Vec& phi) {
  const std::uint32_t n = h.dim;
  DenseMatrix a(n, n);
  for (const auto& [idx, m] : h.mult.entries())
    a(idx[0], idx[1]) += m * phi[idx[2]];
  return a;
}

/// The Nakayama automorphism N of the integral pairing, defined by
/// phi(x y) = phi(y N(x)). With A_ij = phi(e_i e_j) and matrices acting on
/// coordinate columns this reads A N = A^T, so N = A^{-1} A^T. Throws
/// Error(kSingularGramForm) when the pairing is degenerate.
inline DenseMatrix nakayama_automorphism(const FiniteBialgebra& h, const Vec& phi,
                                         double pivot_tol = thresholds::kPivot) {
  const DenseMatrix a = integral_pairing(h, phi);
  try {
    return invert(a, pivot_tol) * a.transpose();
  } catch (const Error&) {
    fail(Errc::kSingularGramForm, "integral pairing matrix is singular");
  }
}

/// The modular-type functional alpha = eps o N.
inline Vec modular_functional(const FiniteBialgebra& h, const DenseMatrix& nakayama) {
  Vec alpha(h.dim, Complex(0.0, 0.0));
  for (std::uint32_t j = 0; j < h.dim; ++j)
    for (std::uint32_t r = 0; r < h.dim; ++r)
      alpha[j] += h.counit[r] * nakayama(r, j);
  return alpha;
}

/// Residual battery for the structural identities a cosemisimple Hopf
/// algebra's integrals satisfy. Every entry is a max-abs residual:
///   - integral_phi_left/right: the defining invariances of phi;
///   - integral_t_left/right: the defining invariances of t;
///   - integral_phi_normalized / integral_t_normalized;
///   - integral_nullity: |nullity - 1| for both joint systems;
///   - antipode_from_integral: S(x) = dim * sum phi(t_1 x) t_2;
///   - antipode_fixes_t: S(t) = t;
///   - phi_antipode_invariant: phi o S = phi;
///   - comult_t_symmetric: Delta(t) = flip Delta(t);
///   - phi_tracial: phi(x y) = phi(y x);
///   - nakayama_defining: phi(e_i e_j) = phi(e_j N(e_i));
///   - nakayama_unital: N(1) = 1;
///   - nakayama_inverse: N^{-1}(x) = sum S^{-2}(x_1) (alpha o S)(x_2).
inline CheckReport check_integral_identities(const FiniteHopfAlgebra& h,
                                             const HaarIntegrals& integrals,
                                             double tol = thresholds::kVerify) {
  CheckReport rep;
  rep.subject = "integral_identities";
  rep.tol = tol;
  const std::uint32_t n = h.dim;
  const Vec& phi = integrals.phi;
  const Vec& t = integrals.integral_element;
  const CoalgebraIndex coa = CoalgebraIndex::build(h);
  const AlgebraIndex alg = AlgebraIndex::build(h);

  // Defining invariances.
  double phi_left = 0.0, phi_right = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    Vec l(n, Complex(0.0, 0.0)), r(n, Complex(0.0, 0.0));
    for (const auto& [p, q, w] : coa.cop[k]) {
      l[q] += w * phi[p];
      r[p] += w * phi[q];
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      l[i] -= phi[k] * h.unit[i];
      r[i] -= phi[k] * h.unit[i];
    }
    phi_left = std::max(phi_left, max_abs(l));
    phi_right = std::max(phi_right, max_abs(r));
  }
  rep.set("integral_phi_left", phi_left);
  rep.set("integral_phi_right", phi_right);

  double t_left = 0.0, t_right = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    Vec ei(n, Complex(0.0, 0.0));
    ei[i] = Complex(1.0, 0.0);
    Vec l = algebra_product(h, ei, t);
    Vec r = algebra_product(h, t, ei);
    for (std::uint32_t k = 0; k < n; ++k) {
      l[k] -= h.counit[i] * t[k];
      r[k] -= h.counit[i] * t[k];
    }
    t_left = std::max(t_left, max_abs(l));
    t_right = std::max(t_right, max_abs(r));
  }
  rep.set("integral_t_left", t_left);
  rep.set("integral_t_right", t_right);

  rep.set("integral_phi_normalized",
          std::abs(pair_functional(phi, h.unit) - Complex(1.0, 0.0)));
  rep.set("integral_t_normalized",
          std::abs(pair_functional(h.counit, t) - Complex(1.0, 0.0)));
  rep.set("integral_nullity",
          std::abs(static_cast<double>(integrals.phi_nullity) - 1.0) +
              std::abs(static_cast<double>(integrals.t_nullity) - 1.0));

  // S(x) = dim * sum phi(t_1 x) t_2 for basis x.
  const SparseTensor dt = coproduct(h, t);
  double s_from_integral = 0.0;
  for (std::uint32_t c = 0; c < n; ++c) {
    Vec rhs(n, Complex(0.0, 0.0));
    for (const auto& [pq, w] : dt.entries()) {
      // phi(e_{pq[0]} e_c) * e_{pq[1]}
      Complex val(0.0, 0.0);
      for (const auto& [k, m] : alg.at(pq[0], c)) val += m * phi[k];
      rhs[pq[1]] += static_cast<double>(n) * w * val;
    }
    for (std::uint32_t r = 0; r < n; ++r) rhs[r] -= h.antipode(r, c);
    s_from_integral = std::max(s_from_integral, max_abs(rhs));
  }
  rep.set("antipode_from_integral", s_from_integral);

  // S(t) = t.
  {
    Vec st = h.antipode.apply(t);
    for (std::uint32_t r = 0; r < n; ++r) st[r] -= t[r];
    rep.set("antipode_fixes_t", max_abs(st));
  }

  // phi o S = phi.
  {
    double v = 0.0;
    for (std::uint32_t c = 0; c < n; ++c) {
      Complex acc(0.0, 0.0);
      for (std::uint32_t r = 0; r < n; ++r) acc += phi[r] * h.antipode(r, c);
      v = std::max(v, std::abs(acc - phi[c]));
    }
    rep.set("phi_antipode_invariant", v);
  }

  // Delta(t) symmetric under the flip.
  {
    double v = 0.0;
    for (const auto& [pq, w] : dt.entries())
      v = std::max(v, std::abs(w - dt.at({pq[1], pq[0]})));
    rep.set("comult_t_symmetric", v);
  }

  // phi tracial: A = A^T.
  const DenseMatrix a = integral_pairing(h, phi);
  rep.set("phi_tracial", a.max_abs_diff(a.transpose()));

  // Nakayama battery.
  const DenseMatrix nak = nakayama_automorphism(h, phi);
  {
    double v = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
      // phi(e_j N(e_i)) as a function of j, compared with A_ij.
      for (std::uint32_t j = 0; j < n; ++j) {
        Complex acc(0.0, 0.0);
        for (std::uint32_t r = 0; r < n; ++r) {
          const Complex nri = nak(r, i);
          if (nri == Complex(0.0, 0.0)) continue;
          for (const auto& [k, m] : alg.at(j, r)) acc += nri * m * phi[k];
        }
        v = std::max(v, std::abs(acc - a(i, j)));
      }
    }
    rep.set("nakayama_defining", v);
  }
  {
    Vec n1 = nak.apply(h.unit);
    for (std::uint32_t r = 0; r < n; ++r) n1[r] -= h.unit[r];
    rep.set("nakayama_unital", max_abs(n1));
  }
  {
    // N^{-1}(x) = sum S^{-2}(x_1) (alpha o S)(x_2), alpha = eps o N.
    const Vec alpha = modular_functional(h, nak);
    Vec alpha_s(n, Complex(0.0, 0.0));
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t r = 0; r < n; ++r) alpha_s[c] += alpha[r] * h.antipode(r, c);
    const DenseMatrix s2inv = h.antipode_inv * h.antipode_inv;
    const DenseMatrix nak_inv = invert(nak);
    double v = 0.0;
    for (std::uint32_t c = 0; c < n; ++c) {
      Vec rhs(n, Complex(0.0, 0.0));
      for (const auto& [p, q, w] : coa.cop[c]) {
        const Complex coef = w * alpha_s[q];
        if (coef == Complex(0.0, 0.0)) continue;
        for (std::uint32_t r = 0; r < n; ++r) rhs[r] += coef * s2inv(r, p);
      }
      for (std::uint32_t r = 0; r < n; ++r) rhs[r] -= nak_inv(r, c);
      v = std::max(v, max_abs(rhs));
    }
    rep.set("nakayama_inverse", v);
  }
  return rep;
}

}  // namespace cqg
