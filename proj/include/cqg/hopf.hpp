#pragma once

/// @file hopf.hpp
/// Finite-dimensional bialgebras and Hopf algebras over the complex numbers,
/// given by explicit structure constants, together with the convolution
/// calculus used to solve for antipodes and to verify the defining axioms.
///
/// Conventions (used consistently everywhere):
///  * mult has shape {n,n,n} with mult[i][j][k] = coefficient of e_k in
///    e_i * e_j;
///  * comult has shape {n,n,n} with comult[k][i][j] = coefficient of
///    e_i (x) e_j in Delta(e_k);
///  * unit is the coordinate vector of 1, counit the value vector of eps;
///  * structure maps (antipode, star, ...) are matrices acting on coordinate
///    columns from the left;
///  * the basis of a tensor product orders the left factor as the major
///    index: e_a (x) e_h has index a * dim(right) + h.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cqg/linalg.hpp"
#include "cqg/tensor.hpp"

namespace cqg {

/// A finite-dimensional bialgebra given by structure constants.
struct FiniteBialgebra {
  std::uint32_t dim = 0;
  std::vector<std::string> labels;  ///< optional basis labels (empty or size dim)
  SparseTensor mult;                ///< {n,n,n}: [i,j,k] |-> coeff of e_k in e_i e_j
  SparseTensor comult;              ///< {n,n,n}: [k,i,j] |-> coeff of e_i (x) e_j in D(e_k)
  Vec unit;                         ///< coordinates of the unit element
  Vec counit;                       ///< values of the counit on the basis

  static FiniteBialgebra with_dim(std::uint32_t n) {
    FiniteBialgebra b;
    b.dim = n;
    b.mult = SparseTensor({n, n, n});
    b.comult = SparseTensor({n, n, n});
    b.unit.assign(n, Complex(0.0, 0.0));
    b.counit.assign(n, Complex(0.0, 0.0));
    return b;
  }
};

/// Shape sanity for hand-assembled data.
inline void validate_shape(const FiniteBialgebra& b) {
  const std::uint32_t n = b.dim;
  require(n > 0, Errc::kInvalidArgument, "bialgebra must have positive dimension");
  const std::vector<std::uint32_t> expect{n, n, n};
  require(b.mult.dims() == expect, Errc::kDimensionMismatch, "mult tensor shape");
  require(b.comult.dims() == expect, Errc::kDimensionMismatch, "comult tensor shape");
  require(b.unit.size() == n, Errc::kDimensionMismatch, "unit vector length");
  require(b.counit.size() == n, Errc::kDimensionMismatch, "counit vector length");
  require(b.labels.empty() || b.labels.size() == n, Errc::kDimensionMismatch,
          "label list length");
}

/// A finite-dimensional Hopf algebra: a bialgebra with (invertible) antipode
/// and, optionally, a star structure. The star is stored as the matrix C
/// with x^* having coordinates C * conj(coords of x).
struct FiniteHopfAlgebra : FiniteBialgebra {
  DenseMatrix antipode;      ///< S
  DenseMatrix antipode_inv;  ///< S^{-1}
  std::optional<DenseMatrix> star;
};

// ---------------------------------------------------------------------------
// Elementwise operations.
// ---------------------------------------------------------------------------

/// x * y in coordinates.
inline Vec algebra_product(const FiniteBialgebra& h, const Vec& x, const Vec& y) {
  require(x.size() == h.dim && y.size() == h.dim, Errc::kDimensionMismatch,
          "product operand length");
  Vec out(h.dim, Complex(0.0, 0.0));
  for (const auto& [idx, c] : h.mult.entries()) {
    const Complex xi = x[idx[0]];
    if (xi == Complex(0.0, 0.0)) continue;
    const Complex yj = y[idx[1]];
    if (yj == Complex(0.0, 0.0)) continue;
    out[idx[2]] += c * xi * yj;
  }
  return out;
}

/// Delta(x) as an arity-2 sparse tensor.
inline SparseTensor coproduct(const FiniteBialgebra& h, const Vec& x) {
  require(x.size() == h.dim, Errc::kDimensionMismatch, "coproduct operand length");
  SparseTensor out({h.dim, h.dim});
  for (const auto& [idx, c] : h.comult.entries()) {
    const Complex xk = x[idx[0]];
    if (xk == Complex(0.0, 0.0)) continue;
    out.add({idx[1], idx[2]}, c * xk);
  }
  return out;
}

/// eps(x) (or any functional given by its value vector).
inline Complex pair_functional(const Vec& f, const Vec& x) {
  require(f.size() == x.size(), Errc::kDimensionMismatch, "functional pairing length");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * x[i];
  return acc;
}

/// Precomputed basis products: prod[i*n+j] lists (k, coeff) of e_i e_j.
struct AlgebraIndex {
  std::uint32_t n = 0;
  std::vector<SparseVec> prod;

  static AlgebraIndex build(const FiniteBialgebra& h) {
    AlgebraIndex ix;
    ix.n = h.dim;
    ix.prod.assign(std::size_t{h.dim} * h.dim, {});
    for (const auto& [idx, c] : h.mult.entries())
      ix.prod[std::size_t{idx[0]} * h.dim + idx[1]].push_back({idx[2], c});
    return ix;
  }

  const SparseVec& at(std::uint32_t i, std::uint32_t j) const {
    return prod[std::size_t{i} * n + j];
  }
};

/// Adjacency view of an arity-3 tensor read as a bilinear map
/// e_i (x) e_j |-> sum t[i][j][k] e_k: at(i, j) lists the (k, coeff) pairs.
struct ActionIndex {
  std::uint32_t n0 = 0, n1 = 0;
  std::vector<SparseVec> out;

  static ActionIndex build(const SparseTensor& t) {
    require(t.arity() == 3, Errc::kDimensionMismatch,
            "action tensor must have arity 3");
    ActionIndex ix;
    ix.n0 = t.dims()[0];
    ix.n1 = t.dims()[1];
    ix.out.assign(std::size_t{ix.n0} * ix.n1, {});
    for (const auto& [idx, c] : t.entries())
      ix.out[std::size_t{idx[0]} * ix.n1 + idx[1]].push_back({idx[2], c});
    return ix;
  }

  const SparseVec& at(std::uint32_t i, std::uint32_t j) const {
    return out[std::size_t{i} * n1 + j];
  }
};

/// Applies a bilinear map given as an ActionIndex to two sparse vectors.
inline SparseVec apply_action(const ActionIndex& act, const SparseVec& u,
                              const SparseVec& v) {
  std::map<std::uint32_t, Complex> acc;
  for (const auto& [i, cu] : u)
    for (const auto& [j, cv] : v)
      for (const auto& [k, c] : act.at(i, j)) acc[k] += cu * cv * c;
  SparseVec out;
  for (const auto& [k, c] : acc)
    if (std::abs(c) > thresholds::kPrune) out.push_back({k, c});
  return out;
}

/// Precomputed coproducts: cop[k] lists (i, j, coeff) of Delta(e_k).
struct CoalgebraIndex {
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Complex>>> cop;

  static CoalgebraIndex build(const FiniteBialgebra& h) {
    CoalgebraIndex ix;
    ix.cop.assign(h.dim, {});
    for (const auto& [idx, c] : h.comult.entries())
      ix.cop[idx[0]].push_back({idx[1], idx[2], c});
    return ix;
  }
};

// ---------------------------------------------------------------------------
// Verification reports.
// ---------------------------------------------------------------------------

/// Named residuals from one verification pass. A check passes when every
/// residual is at most the tolerance it was run with.
struct CheckReport {
  std::string subject;
  double tol = thresholds::kVerify;
  std::map<std::string, double> residuals;
  std::vector<std::string> notes;

  void set(const std::string& name, double value) {
    auto [it, inserted] = residuals.try_emplace(name, value);
    if (!inserted) it->second = std::max(it->second, value);
  }

  /// Merges another report, prefixing its residual names.
  void absorb(const CheckReport& other, const std::string& prefix) {
    for (const auto& [k, v] : other.residuals) set(prefix + k, v);
    for (const auto& n : other.notes) notes.push_back(prefix + n);
  }

  double worst() const {
    double m = 0.0;
    for (const auto& [k, v] : residuals) m = std::max(m, v);
    return m;
  }

  bool pass() const { return worst() <= tol; }
};

/// Checks all bialgebra axioms and returns the max residual of each.
inline CheckReport verify_bialgebra(const FiniteBialgebra& h,
                                    double tol = thresholds::kVerify) {
  validate_shape(h);
  CheckReport rep;
  rep.subject = "bialgebra";
  rep.tol = tol;
  const std::uint32_t n = h.dim;
  const AlgebraIndex alg = AlgebraIndex::build(h);
  const CoalgebraIndex coa = CoalgebraIndex::build(h);

  // Associativity: (e_i e_j) e_k = e_i (e_j e_k).
  double assoc = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const SparseVec& ij = alg.at(i, j);
      for (std::uint32_t k = 0; k < n; ++k) {
        Vec lhs(n, Complex(0.0, 0.0));
        for (const auto& [p, c] : ij)
          for (const auto& [r, d] : alg.at(p, k)) lhs[r] += c * d;
        for (const auto& [q, c] : alg.at(j, k))
          for (const auto& [r, d] : alg.at(i, q)) lhs[r] -= c * d;
        assoc = std::max(assoc, max_abs(lhs));
      }
    }
  }
  rep.set("associativity", assoc);

  // Unit laws.
  double unit_res = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    Vec ei(n, Complex(0.0, 0.0));
    ei[i] = Complex(1.0, 0.0);
    Vec l = algebra_product(h, h.unit, ei);
    Vec r = algebra_product(h, ei, h.unit);
    for (std::uint32_t k = 0; k < n; ++k) {
      l[k] -= ei[k];
      r[k] -= ei[k];
    }
    unit_res = std::max({unit_res, max_abs(l), max_abs(r)});
  }
  rep.set("unit", unit_res);

  // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
  double coassoc = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Complex> diff;
    for (const auto& [p, q, c] : coa.cop[k]) {
      for (const auto& [a, b, d] : coa.cop[p]) diff[{a, b, q}] += c * d;
      for (const auto& [a, b, d] : coa.cop[q]) diff[{p, a, b}] -= c * d;
    }
    for (const auto& [idx, v] : diff) coassoc = std::max(coassoc, std::abs(v));
  }
  rep.set("coassociativity", coassoc);

  // Counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta.
  double counit_res = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    Vec l(n, Complex(0.0, 0.0));
    Vec r(n, Complex(0.0, 0.0));
    for (const auto& [p, q, c] : coa.cop[k]) {
      l[q] += c * h.counit[p];
      r[p] += c * h.counit[q];
    }
    l[k] -= Complex(1.0, 0.0);
    r[k] -= Complex(1.0, 0.0);
    counit_res = std::max({counit_res, max_abs(l), max_abs(r)});
  }
  rep.set("counit", counit_res);

  // Delta is an algebra map: Delta(e_i e_j) = Delta(e_i) Delta(e_j).
  double comult_mult = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> diff;
      for (const auto& [k, c] : alg.at(i, j))
        for (const auto& [p, q, d] : coa.cop[k]) diff[{p, q}] += c * d;
      for (const auto& [p1, q1, c1] : coa.cop[i]) {
        for (const auto& [p2, q2, c2] : coa.cop[j]) {
          const Complex c12 = c1 * c2;
          for (const auto& [a, da] : alg.at(p1, p2))
            for (const auto& [b, db] : alg.at(q1, q2)) diff[{a, b}] -= c12 * da * db;
        }
      }
      for (const auto& [idx, v] : diff) comult_mult = std::max(comult_mult, std::abs(v));
    }
  }
  rep.set("comult_multiplicative", comult_mult);

  // Delta(1) = 1 (x) 1.
  {
    SparseTensor d1 = coproduct(h, h.unit);
    SparseTensor expect({n, n});
    for (std::uint32_t p = 0; p < n; ++p) {
      if (h.unit[p] == Complex(0.0, 0.0)) continue;
      for (std::uint32_t q = 0; q < n; ++q) {
        if (h.unit[q] == Complex(0.0, 0.0)) continue;
        expect.add({p, q}, h.unit[p] * h.unit[q]);
      }
    }
    rep.set("comult_unital", d1.max_abs_diff(expect));
  }

  // eps is an algebra map.
  double counit_mult = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      Complex lhs(0.0, 0.0);
      for (const auto& [k, c] : alg.at(i, j)) lhs += c * h.counit[k];
      counit_mult = std::max(counit_mult,
                             std::abs(lhs - h.counit[i] * h.counit[j]));
    }
  }
  rep.set("counit_multiplicative", counit_mult);
  rep.set("counit_unital",
          std::abs(pair_functional(h.counit, h.unit) - Complex(1.0, 0.0)));
  return rep;
}

// ---------------------------------------------------------------------------
// Convolution calculus. Maps C -> A between a coalgebra C and an algebra A
// are stored as dim(A) x dim(C) matrices; (F * G)(x) = sum F(x_1) G(x_2).
// ---------------------------------------------------------------------------

/// Convolution product of two maps C -> A.
inline DenseMatrix map_convolution(const FiniteBialgebra& c, const FiniteBialgebra& a,
                                   const DenseMatrix& f, const DenseMatrix& g) {
  require(f.rows() == a.dim && f.cols() == c.dim, Errc::kDimensionMismatch,
          "convolution: left map shape");
  require(g.rows() == a.dim && g.cols() == c.dim, Errc::kDimensionMismatch,
          "convolution: right map shape");
  DenseMatrix out(a.dim, c.dim);
  const AlgebraIndex alg = AlgebraIndex::build(a);
  const CoalgebraIndex coa = CoalgebraIndex::build(c);
  for (std::uint32_t k = 0; k < c.dim; ++k) {
    for (const auto& [p, q, w] : coa.cop[k]) {
      for (std::uint32_t i = 0; i < a.dim; ++i) {
        const Complex fip = f(i, p);
        if (fip == Complex(0.0, 0.0)) continue;
        for (std::uint32_t j = 0; j < a.dim; ++j) {
          const Complex gjq = g(j, q);
          if (gjq == Complex(0.0, 0.0)) continue;
          const Complex coef = w * fip * gjq;
          for (const auto& [r, m] : alg.at(i, j)) out(r, k) += coef * m;
        }
      }
    }
  }
  return out;
}

/// The convolution identity u_A o eps_C as a matrix.
inline DenseMatrix convolution_unit(const FiniteBialgebra& c, const FiniteBialgebra& a) {
  DenseMatrix out(a.dim, c.dim);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t k = 0; k < c.dim; ++k) out(i, k) = a.unit[i] * c.counit[k];
  return out;
}

/// Two-sided convolution inverse of F in Hom(C, A): solves
/// X * F = u eps = F * X as one joint sparse linear system (split into
/// independent blocks before dense elimination). Throws kNoSolution when F
/// is not convolution-invertible.
inline DenseMatrix map_convolution_inverse(const FiniteBialgebra& c,
                                           const FiniteBialgebra& a,
                                           const DenseMatrix& f,
                                           double pivot_tol = thresholds::kPivot) {
  require(f.rows() == a.dim && f.cols() == c.dim, Errc::kDimensionMismatch,
          "convolution inverse: map shape");
  const std::uint32_t na = a.dim;
  const std::uint32_t nc = c.dim;
  const CoalgebraIndex coa = CoalgebraIndex::build(c);

  // mult of A addressed by one fixed leg: by_left[i] and by_right[j] list the
  // entries of the product tensor with that leg fixed.
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Complex>>>
      by_right(na);  // j -> [(i, r, m)]
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Complex>>>
      by_left(na);  // i -> [(j, r, m)]
  for (const auto& [idx, m] : a.mult.entries()) {
    by_right[idx[1]].push_back({idx[0], idx[2], m});
    by_left[idx[0]].push_back({idx[1], idx[2], m});
  }

  // Unknown X(i, p) has flat index i * nc + p. Equations:
  //  left:  for (k, r):  sum_{(p,q)} sum_i [ sum_j d^k_{pq} F(j,q) m_{i j r} ] X(i,p)
  //  right: for (k, r):  sum_{(p,q)} sum_j [ sum_i d^k_{pq} F(i,p) m_{i j r} ] X(j,q)
  SparseLinearSystem sys;
  sys.unknowns = na * nc;
  const DenseMatrix ue = convolution_unit(c, a);
  std::map<std::uint32_t, Complex> acc;
  for (std::uint32_t k = 0; k < nc; ++k) {
    for (std::uint32_t r = 0; r < na; ++r) {
      // X * F = u eps.
      acc.clear();
      for (const auto& [p, q, w] : coa.cop[k]) {
        for (std::uint32_t j = 0; j < na; ++j) {
          const Complex fjq = f(j, q);
          if (fjq == Complex(0.0, 0.0)) continue;
          const Complex coef = w * fjq;
          for (const auto& [i, rr, m] : by_right[j])
            if (rr == r) acc[i * nc + p] += coef * m;
        }
      }
      SparseLinearSystem::Equation eq;
      eq.rhs = ue(r, k);
      for (const auto& [u, v] : acc)
        if (std::abs(v) > thresholds::kPrune) eq.coeffs.push_back({u, v});
      sys.equations.push_back(std::move(eq));

      // F * X = u eps.
      acc.clear();
      for (const auto& [p, q, w] : coa.cop[k]) {
        for (std::uint32_t i = 0; i < na; ++i) {
          const Complex fip = f(i, p);
          if (fip == Complex(0.0, 0.0)) continue;
          const Complex coef = w * fip;
          for (const auto& [j, rr, m] : by_left[i])
            if (rr == r) acc[j * nc + q] += coef * m;
        }
      }
      SparseLinearSystem::Equation eq2;
      eq2.rhs = ue(r, k);
      for (const auto& [u, v] : acc)
        if (std::abs(v) > thresholds::kPrune) eq2.coeffs.push_back({u, v});
      sys.equations.push_back(std::move(eq2));
    }
  }

  const SparseSolve sol = solve_sparse_system(sys, pivot_tol);
  require(sol.unique, Errc::kNoSolution,
          "convolution inverse is not unique (degenerate system)");
  DenseMatrix x(na, nc);
  for (std::uint32_t i = 0; i < na; ++i)
    for (std::uint32_t p = 0; p < nc; ++p) x(i, p) = sol.solution[std::size_t{i} * nc + p];
  return x;
}

/// Convolution of two endomaps of one bialgebra.
inline DenseMatrix convolution(const FiniteBialgebra& h, const DenseMatrix& f,
                               const DenseMatrix& g) {
  return map_convolution(h, h, f, g);
}

/// Convolution inverse of an endomap.
inline DenseMatrix convolution_inverse(const FiniteBialgebra& h, const DenseMatrix& f,
                                       double pivot_tol = thresholds::kPivot) {
  return map_convolution_inverse(h, h, f, pivot_tol);
}

/// Solves for the antipode (the convolution inverse of the identity).
/// Throws Error(kNotAHopfAlgebra) when the bialgebra has none.
inline DenseMatrix solve_antipode(const FiniteBialgebra& h,
                                  double pivot_tol = thresholds::kPivot) {
  try {
    return convolution_inverse(h, DenseMatrix::identity(h.dim), pivot_tol);
  } catch (const Error& e) {
    if (e.code() == Errc::kNoSolution)
      fail(Errc::kNotAHopfAlgebra,
           "bialgebra admits no antipode: " + std::string(e.what()));
    throw;
  }
}

/// Checks the Hopf axioms (bialgebra + antipode identities) plus the derived
/// antipode properties, all as residuals.
inline CheckReport verify_hopf(const FiniteHopfAlgebra& h,
                               double tol = thresholds::kVerify) {
  CheckReport rep = verify_bialgebra(h, tol);
  rep.subject = "hopf";
  const std::uint32_t n = h.dim;
  require(h.antipode.rows() == n && h.antipode.cols() == n, Errc::kDimensionMismatch,
          "antipode shape");
  require(h.antipode_inv.rows() == n && h.antipode_inv.cols() == n,
          Errc::kDimensionMismatch, "antipode inverse shape");

  const DenseMatrix ue = convolution_unit(h, h);
  const DenseMatrix id = DenseMatrix::identity(n);
  rep.set("antipode_left", convolution(h, h.antipode, id).max_abs_diff(ue));
  rep.set("antipode_right", convolution(h, id, h.antipode).max_abs_diff(ue));
  rep.set("antipode_invertible",
          std::max((h.antipode * h.antipode_inv).max_abs_diff(id),
                   (h.antipode_inv * h.antipode).max_abs_diff(id)));

  // Derived properties: S is an algebra antihomomorphism ...
  const AlgebraIndex alg = AlgebraIndex::build(h);
  double antimult = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    Vec si(n, Complex(0.0, 0.0));
    for (std::uint32_t r = 0; r < n; ++r) si[r] = h.antipode(r, i);
    for (std::uint32_t j = 0; j < n; ++j) {
      Vec lhs(n, Complex(0.0, 0.0));
      for (const auto& [k, c] : alg.at(i, j))
        for (std::uint32_t r = 0; r < n; ++r) lhs[r] += c * h.antipode(r, k);
      Vec sj(n, Complex(0.0, 0.0));
      for (std::uint32_t r = 0; r < n; ++r) sj[r] = h.antipode(r, j);
      const Vec rhs = algebra_product(h, sj, si);
      for (std::uint32_t r = 0; r < n; ++r) lhs[r] -= rhs[r];
      antimult = std::max(antimult, max_abs(lhs));
    }
  }
  rep.set("antipode_antimultiplicative", antimult);
  {
    Vec s1 = h.antipode.apply(h.unit);
    for (std::uint32_t r = 0; r < n; ++r) s1[r] -= h.unit[r];
    rep.set("antipode_unital", max_abs(s1));
  }

  // ... and a coalgebra antihomomorphism: Delta(S x) = (S (x) S) flip Delta(x).
  const CoalgebraIndex coa = CoalgebraIndex::build(h);
  double anticomult = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> diff;
    for (std::uint32_t c = 0; c < n; ++c) {
      const Complex sck = h.antipode(c, k);
      if (sck == Complex(0.0, 0.0)) continue;
      for (const auto& [p, q, w] : coa.cop[c]) diff[{p, q}] += sck * w;
    }
    for (const auto& [p, q, w] : coa.cop[k]) {
      for (std::uint32_t a = 0; a < n; ++a) {
        const Complex saq = h.antipode(a, q);
        if (saq == Complex(0.0, 0.0)) continue;
        for (std::uint32_t b = 0; b < n; ++b) {
          const Complex sbp = h.antipode(b, p);
          if (sbp == Complex(0.0, 0.0)) continue;
          diff[{a, b}] -= w * saq * sbp;
        }
      }
    }
    for (const auto& [idx, v] : diff) anticomult = std::max(anticomult, std::abs(v));
  }
  rep.set("antipode_anticomultiplicative", anticomult);
  {
    double v = 0.0;
    for (std::uint32_t k = 0; k < n; ++k) {
      Complex acc(0.0, 0.0);
      for (std::uint32_t r = 0; r < n; ++r) acc += h.counit[r] * h.antipode(r, k);
      v = std::max(v, std::abs(acc - h.counit[k]));
    }
    rep.set("antipode_counital", v);
  }
  return rep;
}

/// Promotes a bialgebra to a Hopf algebra by solving for its antipode.
/// @p star, if given, is attached as-is; verifying it is a separate step.
inline FiniteHopfAlgebra make_hopf(FiniteBialgebra b,
                                   std::optional<DenseMatrix> star = std::nullopt) {
  validate_shape(b);
  FiniteHopfAlgebra h;
  static_cast<FiniteBialgebra&>(h) = std::move(b);
  h.antipode = solve_antipode(h);
  try {
    h.antipode_inv = invert(h.antipode);
  } catch (const Error&) {
    fail(Errc::kNotAHopfAlgebra, "antipode is not invertible");
  }
  if (star) {
    require(star->rows() == h.dim && star->cols() == h.dim, Errc::kDimensionMismatch,
            "star matrix shape");
    h.star = std::move(star);
  }
  return h;
}

/// Builds a Hopf algebra from data that already carries an antipode,
/// verifying the supplied matrix against the solved one.
inline FiniteHopfAlgebra make_hopf_with_antipode(FiniteBialgebra b,
                                                 const DenseMatrix& claimed,
                                                 std::optional<DenseMatrix> star = std::nullopt,
                                                 double tol = thresholds::kVerify) {
  FiniteHopfAlgebra h = make_hopf(std::move(b), std::move(star));
  const double dev = h.antipode.max_abs_diff(claimed);
  require(dev <= tol, Errc::kNotAHopfAlgebra,
          "claimed antipode disagrees with the solved one by " + std::to_string(dev));
  return h;
}

// ---------------------------------------------------------------------------
// Tensor products.
// ---------------------------------------------------------------------------

/// Index of e_a (x) e_h in the tensor-product basis.
inline std::uint32_t tensor_index(std::uint32_t a, std::uint32_t h,
                                  std::uint32_t right_dim) {
  return a * right_dim + h;
}

/// A (x) B with componentwise product and coproduct (middle flip is the
/// plain vector-space one, no braiding).
inline FiniteBialgebra tensor_product_bialgebra(const FiniteBialgebra& a,
                                                const FiniteBialgebra& b) {
  validate_shape(a);
  validate_shape(b);
  const std::uint32_t n = a.dim * b.dim;
  FiniteBialgebra t = FiniteBialgebra::with_dim(n);
  for (const auto& [ia, ca] : a.mult.entries())
    for (const auto& [ib, cb] : b.mult.entries())
      t.mult.add({tensor_index(ia[0], ib[0], b.dim), tensor_index(ia[1], ib[1], b.dim),
                  tensor_index(ia[2], ib[2], b.dim)},
                 ca * cb);
  for (const auto& [ia, ca] : a.comult.entries())
    for (const auto& [ib, cb] : b.comult.entries())
      t.comult.add({tensor_index(ia[0], ib[0], b.dim), tensor_index(ia[1], ib[1], b.dim),
                    tensor_index(ia[2], ib[2], b.dim)},
                   ca * cb);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < b.dim; ++j) {
      t.unit[tensor_index(i, j, b.dim)] = a.unit[i] * b.unit[j];
      t.counit[tensor_index(i, j, b.dim)] = a.counit[i] * b.counit[j];
    }
  if (!a.labels.empty() && !b.labels.empty()) {
    t.labels.resize(n);
    for (std::uint32_t i = 0; i < a.dim; ++i)
      for (std::uint32_t j = 0; j < b.dim; ++j)
        t.labels[tensor_index(i, j, b.dim)] = a.labels[i] + "(x)" + b.labels[j];
  }
  return t;
}

/// The one-dimensional bialgebra C (used as the target algebra when treating
/// functionals as maps into it).
inline FiniteBialgebra scalar_bialgebra() {
  FiniteBialgebra c = FiniteBialgebra::with_dim(1);
  c.mult.add({0, 0, 0}, 1.0);
  c.comult.add({0, 0, 0}, 1.0);
  c.unit[0] = Complex(1.0, 0.0);
  c.counit[0] = Complex(1.0, 0.0);
  return c;
}

/// Functional values as a 1 x n matrix (a map into the scalar bialgebra).
inline DenseMatrix functional_as_map(const Vec& f) {
  DenseMatrix m(1, static_cast<std::uint32_t>(f.size()));
  for (std::uint32_t j = 0; j < f.size(); ++j) m(0, j) = f[j];
  return m;
}

/// Convolution inverse of a functional on h (values vector in, values out).
inline Vec functional_convolution_inverse(const FiniteBialgebra& h, const Vec& f,
                                          double pivot_tol = thresholds::kPivot) {
  const DenseMatrix x =
      map_convolution_inverse(h, scalar_bialgebra(), functional_as_map(f), pivot_tol);
  Vec out(h.dim);
  for (std::uint32_t j = 0; j < h.dim; ++j) out[j] = x(0, j);
  return out;
}

}  // namespace cqg
