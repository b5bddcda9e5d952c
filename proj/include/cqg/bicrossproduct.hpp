#pragma once

/// @file bicrossproduct.hpp
/// Matched pairs of Hopf algebras (A, H, |>, <|) and their bicrossproduct
/// A |><| H on A (x) H:
///   (a (x) x)(b (x) y) = sum a (x_1 |> b_1) (x) (x_2 <| b_2) y,
///   Delta(a (x) x)     = sum (a_1 (x) x_1) (x) (a_2 (x) x_2),
///   S(a (x) x)         = sum (S(x_2) |> S(a_2)) (x) (S(x_1) <| S(a_1)),
/// with star (a (x) x)^* = sum (x_1^* |> a_1^*) (x) (x_2^* <| a_2^*) when
/// the two star-compatibility conditions on the actions hold.

#include <cstdint>
#include <map>
#include <utility>

#include "cqg/hopf.hpp"

namespace cqg {

/// A matched pair: H acts on A from the left (|>, tensor {dimH, dimA, dimA})
/// and A acts on H from the right (<|, tensor {dimH, dimA, dimH}; entry
/// [x][a][y] is the coefficient of e_y in e_x <| e_a).
struct MatchedPairHopf {
  FiniteHopfAlgebra a;
  FiniteHopfAlgebra h;
  SparseTensor left_action;
  SparseTensor right_action;
};

namespace detail {

inline SparseVec matrix_column(const DenseMatrix& m, std::uint32_t j) {
  SparseVec v;
  for (std::uint32_t r = 0; r < m.rows(); ++r)
    if (std::abs(m(r, j)) > thresholds::kPrune) v.push_back({r, m(r, j)});
  return v;
}

/// Star of a sparse vector: coordinates C * conj(u).
inline SparseVec star_sparse(const DenseMatrix& c, const SparseVec& u) {
  std::map<std::uint32_t, Complex> acc;
  for (const auto& [i, w] : u) {
    const Complex wc = std::conj(w);
    for (std::uint32_t r = 0; r < c.rows(); ++r)
      if (c(r, i) != Complex(0.0, 0.0)) acc[r] += c(r, i) * wc;
  }
  SparseVec out;
  for (const auto& [k, w] : acc)
    if (std::abs(w) > thresholds::kPrune) out.push_back({k, w});
  return out;
}

inline SparseVec basis_sparse(std::uint32_t i) { return {{i, Complex(1.0, 0.0)}}; }

inline SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::uint32_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > thresholds::kPrune) out.push_back({i, v[i]});
  return out;
}

inline void add_scaled(Vec* acc, const SparseVec& v, Complex w) {
  for (const auto& [i, c] : v) (*acc)[i] += w * c;
}

}  // namespace detail

inline void validate_shape(const MatchedPairHopf& p) {
  validate_shape(p.a);
  validate_shape(p.h);
  const std::vector<std::uint32_t> lshape = {p.h.dim, p.a.dim, p.a.dim};
  const std::vector<std::uint32_t> rshape = {p.h.dim, p.a.dim, p.h.dim};
  require(p.left_action.dims() == lshape, Errc::kDimensionMismatch,
          "left action tensor shape");
  require(p.right_action.dims() == rshape, Errc::kDimensionMismatch,
          "right action tensor shape");
}

/// All compatibility axioms of a matched pair. Residuals:
///   left_action_module / _module_unital: (xy) |> a = x |> (y |> a), 1 |> a = a;
///   left_action_comult / _counit: |> is a coalgebra map in both slots;
///   left_action_product: x |> ab = sum (x_1 |> a_1)((x_2 <| a_2) |> b);
///   left_action_unit: x |> 1 = eps(x) 1;
///   right_action_module / _module_unital: x <| (ab) = (x <| a) <| b, x <| 1 = x;
///   right_action_comult / _counit;
///   right_action_product: (xy) <| a = sum (x <| (y_1 |> a_1))(y_2 <| a_2);
///   right_action_unit: 1 <| a = eps(a) 1;
///   actions_compatibility: sum (x_1 <| a_1) (x) (x_2 |> a_2) =
///                          sum (x_2 <| a_2) (x) (x_1 |> a_1).
inline CheckReport verify_matched_pair(const MatchedPairHopf& p,
                                       double tol = thresholds::kVerify) {
  validate_shape(p);
  CheckReport rep;
  rep.subject = "matched_pair";
  rep.tol = tol;
  const std::uint32_t na = p.a.dim, nh = p.h.dim;
  const ActionIndex lact = ActionIndex::build(p.left_action);
  const ActionIndex ract = ActionIndex::build(p.right_action);
  const AlgebraIndex ma = AlgebraIndex::build(p.a);
  const AlgebraIndex mh = AlgebraIndex::build(p.h);
  const CoalgebraIndex da = CoalgebraIndex::build(p.a);
  const CoalgebraIndex dh = CoalgebraIndex::build(p.h);
  const SparseVec unit_a = detail::to_sparse(p.a.unit);
  const SparseVec unit_h = detail::to_sparse(p.h.unit);

  // Module structures.
  double lmod = 0.0, rmod = 0.0;
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t y = 0; y < nh; ++y) {
      for (std::uint32_t al = 0; al < na; ++al) {
        Vec acc(na, Complex(0.0, 0.0));
        for (const auto& [pm, c] : lact.at(y, al))
          detail::add_scaled(&acc, lact.at(x, pm), c);
        for (const auto& [z, m] : mh.at(x, y))
          detail::add_scaled(&acc, lact.at(z, al), -m);
        lmod = std::max(lmod, max_abs(acc));
      }
    }
  }
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t al = 0; al < na; ++al) {
      for (std::uint32_t be = 0; be < na; ++be) {
        Vec acc(nh, Complex(0.0, 0.0));
        for (const auto& [ym, c] : ract.at(x, al))
          detail::add_scaled(&acc, ract.at(ym, be), c);
        for (const auto& [pm, m] : ma.at(al, be))
          detail::add_scaled(&acc, ract.at(x, pm), -m);
        rmod = std::max(rmod, max_abs(acc));
      }
    }
  }
  rep.set("left_action_module", lmod);
  rep.set("right_action_module", rmod);

  double lmu = 0.0, rmu = 0.0;
  for (std::uint32_t al = 0; al < na; ++al) {
    Vec acc(na, Complex(0.0, 0.0));
    detail::add_scaled(&acc, apply_action(lact, unit_h, detail::basis_sparse(al)),
                       Complex(1.0, 0.0));
    acc[al] -= Complex(1.0, 0.0);
    lmu = std::max(lmu, max_abs(acc));
  }
  for (std::uint32_t x = 0; x < nh; ++x) {
    Vec acc(nh, Complex(0.0, 0.0));
    detail::add_scaled(&acc, apply_action(ract, detail::basis_sparse(x), unit_a),
                       Complex(1.0, 0.0));
    acc[x] -= Complex(1.0, 0.0);
    rmu = std::max(rmu, max_abs(acc));
  }
  rep.set("left_action_module_unital", lmu);
  rep.set("right_action_module_unital", rmu);

  // Actions are coalgebra maps.
  double lco = 0.0, lcu = 0.0, rco = 0.0, rcu = 0.0;
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t al = 0; al < na; ++al) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> dl, dr;
      Complex el(0.0, 0.0), er(0.0, 0.0);
      for (const auto& [b, c] : lact.at(x, al)) {
        for (const auto& [b1, b2, w] : da.cop[b]) dl[{b1, b2}] += c * w;
        el += c * p.a.counit[b];
      }
      for (const auto& [y, c] : ract.at(x, al)) {
        for (const auto& [y1, y2, w] : dh.cop[y]) dr[{y1, y2}] += c * w;
        er += c * p.h.counit[y];
      }
      for (const auto& [x1, x2, wh] : dh.cop[x]) {
        for (const auto& [a1, a2, wa] : da.cop[al]) {
          const Complex w = wh * wa;
          for (const auto& [b1, c1] : lact.at(x1, a1))
            for (const auto& [b2, c2] : lact.at(x2, a2)) dl[{b1, b2}] -= w * c1 * c2;
          for (const auto& [y1, c1] : ract.at(x1, a1))
            for (const auto& [y2, c2] : ract.at(x2, a2)) dr[{y1, y2}] -= w * c1 * c2;
        }
      }
      for (const auto& [k, v] : dl) lco = std::max(lco, std::abs(v));
      for (const auto& [k, v] : dr) rco = std::max(rco, std::abs(v));
      const Complex ee = p.h.counit[x] * p.a.counit[al];
      lcu = std::max(lcu, std::abs(el - ee));
      rcu = std::max(rcu, std::abs(er - ee));
    }
  }
  rep.set("left_action_comult", lco);
  rep.set("left_action_counit", lcu);
  rep.set("right_action_comult", rco);
  rep.set("right_action_counit", rcu);

  // x |> ab = sum (x_1 |> a_1)((x_2 <| a_2) |> b).
  double lprod = 0.0;
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t al = 0; al < na; ++al) {
      for (std::uint32_t be = 0; be < na; ++be) {
        Vec acc(na, Complex(0.0, 0.0));
        for (const auto& [pm, m] : ma.at(al, be))
          detail::add_scaled(&acc, lact.at(x, pm), m);
        for (const auto& [x1, x2, wh] : dh.cop[x]) {
          for (const auto& [a1, a2, wa] : da.cop[al]) {
            const SparseVec inner = apply_action(
                lact, ract.at(x2, a2), detail::basis_sparse(be));
            const SparseVec outer = apply_action(
                ma_to_action(ma), lact.at(x1, a1), inner);
            detail::add_scaled(&acc, outer, -wh * wa);
          }
        }
        lprod = std::max(lprod, max_abs(acc));
      }
    }
  }
  rep.set("left_action_product", lprod);

  // x |> 1 = eps(x) 1.
  double lunit = 0.0;
  for (std::uint32_t x = 0; x < nh; ++x) {
    Vec acc(na, Complex(0.0, 0.0));
    detail::add_scaled(&acc, apply_action(lact, detail::basis_sparse(x), unit_a),
                       Complex(1.0, 0.0));
    for (std::uint32_t r = 0; r < na; ++r) acc[r] -= p.h.counit[x] * p.a.unit[r];
    lunit = std::max(lunit, max_abs(acc));
  }
  rep.set("left_action_unit", lunit);

  // (xy) <| a = sum (x <| (y_1 |> a_1))(y_2 <| a_2).
  double rprod = 0.0;
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t y = 0; y < nh; ++y) {
      for (std::uint32_t al = 0; al < na; ++al) {
        Vec acc(nh, Complex(0.0, 0.0));
        for (const auto& [z, m] : mh.at(x, y))
          detail::add_scaled(&acc, ract.at(z, al), m);
        for (const auto& [y1, y2, wh] : dh.cop[y]) {
          for (const auto& [a1, a2, wa] : da.cop[al]) {
            const SparseVec first = apply_action(
                ract, detail::basis_sparse(x), lact.at(y1, a1));
            const SparseVec prod = apply_action(
                mh_to_action(mh), first, ract.at(y2, a2));
            detail::add_scaled(&acc, prod, -wh * wa);
          }
        }
        rprod = std::max(rprod, max_abs(acc));
      }
    }
  }
  rep.set("right_action_product", rprod);

  // 1 <| a = eps(a) 1.
  double runit = 0.0;
  for (std::uint32_t al = 0; al < na; ++al) {
    Vec acc(nh, Complex(0.0, 0.0));
    detail::add_scaled(&acc, apply_action(ract, unit_h, detail::basis_sparse(al)),
                       Complex(1.0, 0.0));
    for (std::uint32_t r = 0; r < nh; ++r) acc[r] -= p.a.counit[al] * p.h.unit[r];
    runit = std::max(runit, max_abs(acc));
  }
  rep.set("right_action_unit", runit);

  // sum (x_1 <| a_1) (x) (x_2 |> a_2) = sum (x_2 <| a_2) (x) (x_1 |> a_1).
  double flip = 0.0;
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t al = 0; al < na; ++al) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> diff;
      for (const auto& [x1, x2, wh] : dh.cop[x]) {
        for (const auto& [a1, a2, wa] : da.cop[al]) {
          const Complex w = wh * wa;
          for (const auto& [y, cy] : ract.at(x1, a1))
            for (const auto& [b, cb] : lact.at(x2, a2)) diff[{y, b}] += w * cy * cb;
          for (const auto& [y, cy] : ract.at(x2, a2))
            for (const auto& [b, cb] : lact.at(x1, a1)) diff[{y, b}] -= w * cy * cb;
        }
      }
      for (const auto& [k, v] : diff) flip = std::max(flip, std::abs(v));
    }
  }
  rep.set("actions_compatibility", flip);
  return rep;
}

/// The candidate star matrix of the bicrossproduct,
/// (a (x) x)^* = sum (x_1^* |> a_1^*) (x) (x_2^* <| a_2^*).
inline DenseMatrix bicrossproduct_star_matrix(const MatchedPairHopf& p) {
  require(p.a.star.has_value() && p.h.star.has_value(), Errc::kInvalidArgument,
          "both factors need star structures");
  const std::uint32_t na = p.a.dim, nh = p.h.dim, n = na * nh;
  const ActionIndex lact = ActionIndex::build(p.left_action);
  const ActionIndex ract = ActionIndex::build(p.right_action);
  const CoalgebraIndex da = CoalgebraIndex::build(p.a);
  const CoalgebraIndex dh = CoalgebraIndex::build(p.h);
  const DenseMatrix& ca = *p.a.star;
  const DenseMatrix& ch = *p.h.star;
  DenseMatrix c(n, n);
  for (std::uint32_t al = 0; al < na; ++al) {
    for (std::uint32_t x = 0; x < nh; ++x) {
      const std::uint32_t col = tensor_index(al, x, nh);
      for (const auto& [a1, a2, wa] : da.cop[al]) {
        for (const auto& [x1, x2, wh] : dh.cop[x]) {
          const Complex w = std::conj(wa * wh);
          const SparseVec u = apply_action(lact, detail::matrix_column(ch, x1),
                                           detail::matrix_column(ca, a1));
          const SparseVec v = apply_action(ract, detail::matrix_column(ch, x2),
                                           detail::matrix_column(ca, a2));
          for (const auto& [ua, cu] : u)
            for (const auto& [vh, cv] : v)
              c(tensor_index(ua, vh, nh), col) += w * cu * cv;
        }
      }
    }
  }
  return c;
}

/// The two star-compatibility conditions on a matched pair of star Hopf
/// algebras. When both hold, bicrossproduct_star_matrix defines a star Hopf
/// structure on the bicrossproduct. Residuals:
///   star_condition_a: a^* eps(x^*) 1 = sum (x_2 <| a_2)^* |> (x_1 |> a_1)^*;
///   star_condition_h: eps(a^*) x^*   = sum (x_2 <| a_2)^* <| (x_1 |> a_1)^*.
inline CheckReport check_bicrossproduct_star_conditions(
    const MatchedPairHopf& p, double tol = thresholds::kVerify) {
  require(p.a.star.has_value() && p.h.star.has_value(), Errc::kInvalidArgument,
          "both factors need star structures");
  validate_shape(p);
  CheckReport rep;
  rep.subject = "bicrossproduct_star_conditions";
  rep.tol = tol;
  const std::uint32_t na = p.a.dim, nh = p.h.dim;
  const ActionIndex lact = ActionIndex::build(p.left_action);
  const ActionIndex ract = ActionIndex::build(p.right_action);
  const CoalgebraIndex da = CoalgebraIndex::build(p.a);
  const CoalgebraIndex dh = CoalgebraIndex::build(p.h);
  const DenseMatrix& ca = *p.a.star;
  const DenseMatrix& ch = *p.h.star;
  double cond_a = 0.0, cond_h = 0.0;
  for (std::uint32_t al = 0; al < na; ++al) {
    for (std::uint32_t x = 0; x < nh; ++x) {
      Vec rhs_a(na, Complex(0.0, 0.0)), rhs_h(nh, Complex(0.0, 0.0));
      for (const auto& [x1, x2, wh] : dh.cop[x]) {
        for (const auto& [a1, a2, wa] : da.cop[al]) {
          const Complex w = std::conj(wh * wa);
          const SparseVec us = detail::star_sparse(
              ch, apply_action(ract, detail::basis_sparse(x2),
                               detail::basis_sparse(a2)));
          const SparseVec ws = detail::star_sparse(
              ca, apply_action(lact, detail::basis_sparse(x1),
                               detail::basis_sparse(a1)));
          detail::add_scaled(&rhs_a, apply_action(lact, us, ws), w);
          detail::add_scaled(&rhs_h, apply_action(ract, us, ws), w);
        }
      }
      Complex eps_xstar(0.0, 0.0), eps_astar(0.0, 0.0);
      for (std::uint32_t q = 0; q < nh; ++q) eps_xstar += p.h.counit[q] * ch(q, x);
      for (std::uint32_t q = 0; q < na; ++q) eps_astar += p.a.counit[q] * ca(q, al);
      Vec lhs_a(na, Complex(0.0, 0.0)), lhs_h(nh, Complex(0.0, 0.0));
      for (std::uint32_t r = 0; r < na; ++r) lhs_a[r] = ca(r, al) * eps_xstar;
      for (std::uint32_t r = 0; r < nh; ++r) lhs_h[r] = ch(r, x) * eps_astar;
      for (std::uint32_t r = 0; r < na; ++r) lhs_a[r] -= rhs_a[r];
      for (std::uint32_t r = 0; r < nh; ++r) lhs_h[r] -= rhs_h[r];
      cond_a = std::max(cond_a, max_abs(lhs_a));
      cond_h = std::max(cond_h, max_abs(lhs_h));
    }
  }
  rep.set("star_condition_a", cond_a);
  rep.set("star_condition_h", cond_h);
  return rep;
}

/// Builds the bicrossproduct Hopf algebra A |><| H on A (x) H (basis index
/// tensor_index(a, x, dim H)). The antipode is solved from the structure
/// constants and cross-checked against the closed form; if both factors
/// carry stars, the star-compatibility conditions are checked and the star
/// is attached (Error(kStarCompatFailed) if they fail).
inline FiniteHopfAlgebra bicrossproduct(const MatchedPairHopf& p,
                                        double tol = thresholds::kVerify) {
  validate_shape(p);
  const std::uint32_t na = p.a.dim, nh = p.h.dim, n = na * nh;
  FiniteBialgebra b = tensor_product_bialgebra(p.a, p.h);
  b.mult = SparseTensor({n, n, n});

  const ActionIndex lact = ActionIndex::build(p.left_action);
  const ActionIndex ract = ActionIndex::build(p.right_action);
  const AlgebraIndex ma = AlgebraIndex::build(p.a);
  const AlgebraIndex mh = AlgebraIndex::build(p.h);
  const CoalgebraIndex da = CoalgebraIndex::build(p.a);
  const CoalgebraIndex dh = CoalgebraIndex::build(p.h);

  // (e_al (x) e_x)(e_be (x) e_y): the crossed middle depends only on (x, be).
  for (std::uint32_t x = 0; x < nh; ++x) {
    for (std::uint32_t be = 0; be < na; ++be) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> cross;
      for (const auto& [x1, x2, wh] : dh.cop[x])
        for (const auto& [b1, b2, wb] : da.cop[be])
          for (const auto& [bb, cb] : lact.at(x1, b1))
            for (const auto& [yy, cy] : ract.at(x2, b2))
              cross[{bb, yy}] += wh * wb * cb * cy;
      for (std::uint32_t al = 0; al < na; ++al) {
        for (std::uint32_t y = 0; y < nh; ++y) {
          const std::uint32_t row = tensor_index(al, x, nh);
          const std::uint32_t colr = tensor_index(be, y, nh);
          for (const auto& [key, w] : cross) {
            for (const auto& [pp, mp] : ma.at(al, key.first))
              for (const auto& [qq, mq] : mh.at(key.second, y))
                b.mult.add({row, colr, tensor_index(pp, qq, nh)}, w * mp * mq);
          }
        }
      }
    }
  }

  // Closed-form antipode.
  DenseMatrix s_closed(n, n);
  for (std::uint32_t al = 0; al < na; ++al) {
    for (std::uint32_t x = 0; x < nh; ++x) {
      const std::uint32_t col = tensor_index(al, x, nh);
      for (const auto& [a1, a2, wa] : da.cop[al]) {
        for (const auto& [x1, x2, wh] : dh.cop[x]) {
          const Complex w = wa * wh;
          const SparseVec u =
              apply_action(lact, detail::matrix_column(p.h.antipode, x2),
                           detail::matrix_column(p.a.antipode, a2));
          const SparseVec v =
              apply_action(ract, detail::matrix_column(p.h.antipode, x1),
                           detail::matrix_column(p.a.antipode, a1));
          for (const auto& [ua, cu] : u)
            for (const auto& [vh, cv] : v)
              s_closed(tensor_index(ua, vh, nh), col) += w * cu * cv;
        }
      }
    }
  }

  std::optional<DenseMatrix> star;
  if (p.a.star.has_value() && p.h.star.has_value()) {
    const CheckReport cond = check_bicrossproduct_star_conditions(p, tol);
    require(cond.pass(), Errc::kStarCompatFailed,
            "star-compatibility conditions fail (worst residual " +
                std::to_string(cond.worst()) + ")");
    star = bicrossproduct_star_matrix(p);
  }
  return make_hopf_with_antipode(std::move(b), s_closed, std::move(star), tol);
}

}  // namespace cqg
