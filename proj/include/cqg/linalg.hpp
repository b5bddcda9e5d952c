#pragma once

/// @file linalg.hpp
/// Dense complex linear algebra: Gaussian elimination with partial pivoting
/// (particular solution + nullspace basis), matrix inversion, and a cyclic
/// Jacobi eigensolver for Hermitian matrices.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cqg/tensor.hpp"

namespace cqg {

/// Result of solving A x = b.
struct LinearSolution {
  Vec particular;                 ///< one solution (free variables set to 0)
  std::vector<Vec> nullspace;     ///< basis of ker A
  std::uint32_t rank = 0;
};

/// Solves A x = b by Gaussian elimination with partial pivoting.
///
/// A pivot candidate counts as zero when its modulus is at most
/// @p pivot_tol times the largest modulus occurring in A (relative
/// threshold). Throws Error(kNoSolution) if the system is inconsistent at
/// that scale. Returns one particular solution (free variables zero), a
/// basis of the nullspace, and the numerical rank.
inline LinearSolution solve_linear(const DenseMatrix& a, const Vec& b,
                                   double pivot_tol = thresholds::kPivot) {
  const std::uint32_t m = a.rows();
  const std::uint32_t n = a.cols();
  require(b.size() == m, Errc::kDimensionMismatch,
          "right-hand side length does not match row count");

  const double scale = std::max(a.max_abs(), 1e-300);
  const double zero_at = pivot_tol * scale;
  const double rhs_scale = std::max(scale, max_abs(b));

  // Augmented row-major working copy [A | b], width n + 1.
  const std::uint32_t w = n + 1;
  std::vector<Complex> t(std::size_t{m} * w);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) t[std::size_t{i} * w + j] = a(i, j);
    t[std::size_t{i} * w + n] = b[i];
  }

  std::vector<std::uint32_t> pivot_col;  // pivot column of each pivot row
  pivot_col.reserve(std::min(m, n));
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < n && row < m; ++col) {
    // Partial pivoting: largest modulus in this column at or below `row`.
    std::uint32_t best = row;
    double best_abs = std::abs(t[std::size_t{row} * w + col]);
    for (std::uint32_t r = row + 1; r < m; ++r) {
      const double v = std::abs(t[std::size_t{r} * w + col]);
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best_abs <= zero_at) continue;  // no pivot in this column
    if (best != row) {
      std::swap_ranges(t.begin() + std::size_t{row} * w,
                       t.begin() + std::size_t{row + 1} * w,
                       t.begin() + std::size_t{best} * w);
    }
    const Complex piv = t[std::size_t{row} * w + col];
    // Eliminate below.
    for (std::uint32_t r = row + 1; r < m; ++r) {
      Complex* rr = &t[std::size_t{r} * w];
      const Complex factor = rr[col] / piv;
      if (factor == Complex(0.0, 0.0)) continue;
      rr[col] = Complex(0.0, 0.0);
      const Complex* pr = &t[std::size_t{row} * w];
      for (std::uint32_t c = col + 1; c < w; ++c) rr[c] -= factor * pr[c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  const std::uint32_t rank = row;

  // Consistency: any remaining all-zero coefficient row must also have a
  // (numerically) zero right-hand side.
  for (std::uint32_t r = rank; r < m; ++r) {
    if (std::abs(t[std::size_t{r} * w + n]) > pivot_tol * std::max(rhs_scale, 1e-300))
      fail(Errc::kNoSolution, "linear system is inconsistent");
  }

  // Back substitution for the particular solution, free variables = 0.
  LinearSolution sol;
  sol.rank = rank;
  sol.particular.assign(n, Complex(0.0, 0.0));
  for (std::uint32_t k = rank; k-- > 0;) {
    const std::uint32_t col = pivot_col[k];
    const Complex* rr = &t[std::size_t{k} * w];
    Complex acc = rr[n];
    for (std::uint32_t c = col + 1; c < n; ++c) acc -= rr[c] * sol.particular[c];
    sol.particular[col] = acc / rr[col];
  }

  // Nullspace: one basis vector per free column.
  std::vector<bool> is_pivot(n, false);
  for (const std::uint32_t c : pivot_col) is_pivot[c] = true;
  for (std::uint32_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(n, Complex(0.0, 0.0));
    v[free_col] = Complex(1.0, 0.0);
    for (std::uint32_t k = rank; k-- > 0;) {
      const std::uint32_t col = pivot_col[k];
      if (col > free_col) continue;  // upper-triangular: no dependence
      const Complex* rr = &t[std::size_t{k} * w];
      Complex acc(0.0, 0.0);
      for (std::uint32_t c = col + 1; c < n; ++c) acc -= rr[c] * v[c];
      v[col] = acc / rr[col];
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

/// Inverts a square matrix via elimination on [A | I]. Throws
/// Error(kNoSolution) when A is singular at the pivot threshold.
inline DenseMatrix invert(const DenseMatrix& a,
                          double pivot_tol = thresholds::kPivot) {
  require(a.is_square(), Errc::kDimensionMismatch, "inverse of non-square matrix");
  const std::uint32_t n = a.rows();
  const double zero_at = pivot_tol * std::max(a.max_abs(), 1e-300);

  const std::uint32_t w = 2 * n;
  std::vector<Complex> t(std::size_t{n} * w, Complex(0.0, 0.0));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) t[std::size_t{i} * w + j] = a(i, j);
    t[std::size_t{i} * w + n + i] = Complex(1.0, 0.0);
  }
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t best = col;
    double best_abs = std::abs(t[std::size_t{col} * w + col]);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      const double v = std::abs(t[std::size_t{r} * w + col]);
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best_abs <= zero_at) fail(Errc::kNoSolution, "matrix is singular");
    if (best != col) {
      std::swap_ranges(t.begin() + std::size_t{col} * w,
                       t.begin() + std::size_t{col + 1} * w,
                       t.begin() + std::size_t{best} * w);
    }
    // Normalize the pivot row, then clear the column everywhere else
    // (Gauss-Jordan keeps the back substitution trivial).
    Complex* pr = &t[std::size_t{col} * w];
    const Complex piv = pr[col];
    for (std::uint32_t c = col; c < w; ++c) pr[c] /= piv;
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Complex* rr = &t[std::size_t{r} * w];
      const Complex factor = rr[col];
      if (factor == Complex(0.0, 0.0)) continue;
      rr[col] = Complex(0.0, 0.0);
      for (std::uint32_t c = col + 1; c < w; ++c) rr[c] -= factor * pr[c];
    }
  }
  DenseMatrix out(n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) out(i, j) = t[std::size_t{i} * w + n + j];
  return out;
}

/// Eigen decomposition of a Hermitian matrix.
struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< unitary; column k pairs with values[k]
};

/// Diagonalizes a Hermitian matrix with cyclic-by-rows complex Jacobi
/// rotations. The input must satisfy max|M - M^dagger| <= herm_tol * scale;
/// otherwise Error(kNotHermitian) is thrown. Sweeps run until the
/// off-diagonal Frobenius norm drops below conv_tol times the Frobenius
/// norm of M.
inline HermitianEigen hermitian_eigensystem(const DenseMatrix& m,
                                            double herm_tol = 1e-10,
                                            double conv_tol = 1e-14) {
  require(m.is_square(), Errc::kDimensionMismatch,
          "eigensolver requires a square matrix");
  const std::uint32_t n = m.rows();
  const double scale = std::max(m.max_abs(), 1e-300);
  double dev = 0.0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  require(dev <= herm_tol * scale, Errc::kNotHermitian,
          "matrix is not Hermitian within tolerance");

  // Work on the exactly Hermitian average (M + M^dagger)/2.
  DenseMatrix a(n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  DenseMatrix v = DenseMatrix::identity(n);

  double fro = 0.0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) fro += std::norm(a(i, j));
  fro = std::sqrt(fro);
  const double target = std::max(conv_tol * fro, 1e-300);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  const int kMaxSweeps = 64;
  int sweep = 0;
  while (off_norm() > target) {
    require(sweep++ < kMaxSweeps, Errc::kNoConvergence,
            "Jacobi iteration did not converge");
    for (std::uint32_t p = 0; p + 1 < n; ++p) {
      for (std::uint32_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= target / (std::max<std::uint32_t>(n, 1) * n)) continue;
        // Phase factor w with a(p,q) = |a(p,q)| * w; the unitary
        //   J = [[c, s], [-s*conj(w), c*conj(w)]]
        // (acting on coordinates p, q) zeroes the (p,q) entry, where (c, s)
        // is the classical real rotation for [[app, mag], [mag, aqq]].
        const Complex w = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double tt = (tau >= 0.0 ? 1.0 : -1.0) /
                          (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + tt * tt);
        const double s = tt * c;

        // Columns: col_p' = c*col_p - s*conj(w)*col_q,
        //          col_q' = s*col_p + c*conj(w)*col_q.
        const Complex wc = std::conj(w);
        for (std::uint32_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * wc * aiq;
          a(i, q) = s * aip + c * wc * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * wc * viq;
          v(i, q) = s * vip + c * wc * viq;
        }
        // Rows (J^dagger from the left): row_p' = c*row_p - s*w*row_q,
        //                                row_q' = s*row_p + c*w*row_q.
        for (std::uint32_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * w * aqj;
          a(q, j) = s * apj + c * w * aqj;
        }
        // The rotation is exact at (p,q); pin it and keep the diagonal real.
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
  }

  // Sort eigenvalues ascending, permuting eigenvector columns to match.
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::uint32_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::uint32_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Smallest eigenvalue of a Hermitian matrix.
inline double hermitian_min_eigenvalue(const DenseMatrix& m,
                                       double herm_tol = 1e-10) {
  const HermitianEigen eig = hermitian_eigensystem(m, herm_tol);
  require(!eig.values.empty(), Errc::kInvalidArgument, "empty matrix");
  return eig.values.front();
}

/// A sparse linear system given equation by equation.
struct SparseLinearSystem {
  struct Equation {
    SparseVec coeffs;  ///< (unknown index, coefficient) pairs
    Complex rhs{0.0, 0.0};
  };
  std::uint32_t unknowns = 0;
  std::vector<Equation> equations;
};

/// Solution of a sparse system expected to pin every unknown.
struct SparseSolve {
  Vec solution;        ///< unconstrained unknowns are returned as 0
  bool unique = true;  ///< false if any unknown was free or any block had a kernel
};

/// Solves a sparse linear system by splitting it into independent blocks:
/// two unknowns belong to the same block when some equation mentions both.
/// Each block is solved densely with solve_linear. This changes nothing
/// semantically — it is plain Gaussian elimination after a permutation —
/// but keeps large convolution systems fast. Throws Error(kNoSolution) on
/// inconsistency.
inline SparseSolve solve_sparse_system(const SparseLinearSystem& sys,
                                       double pivot_tol = thresholds::kPivot) {
  const std::uint32_t n = sys.unknowns;

  // Union-find over unknowns.
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  const auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  double coeff_scale = 0.0;
  double rhs_scale = 0.0;
  for (const auto& eq : sys.equations) {
    rhs_scale = std::max(rhs_scale, std::abs(eq.rhs));
    for (const auto& [u, c] : eq.coeffs) coeff_scale = std::max(coeff_scale, std::abs(c));
    for (std::size_t i = 1; i < eq.coeffs.size(); ++i) {
      const std::uint32_t a = find(eq.coeffs[0].first);
      const std::uint32_t b = find(eq.coeffs[i].first);
      if (a != b) parent[b] = a;
    }
  }
  const double zero_rhs_at = pivot_tol * std::max({coeff_scale, rhs_scale, 1e-300});

  // Group unknowns and equations by component representative.
  std::map<std::uint32_t, std::vector<std::uint32_t>> comp_unknowns;
  for (std::uint32_t u = 0; u < n; ++u) comp_unknowns[find(u)].push_back(u);
  std::map<std::uint32_t, std::vector<const SparseLinearSystem::Equation*>> comp_eqs;
  for (const auto& eq : sys.equations) {
    if (eq.coeffs.empty()) {
      // 0 = rhs: consistency only.
      if (std::abs(eq.rhs) > zero_rhs_at)
        fail(Errc::kNoSolution, "sparse system has an unsatisfiable empty equation");
      continue;
    }
    comp_eqs[find(eq.coeffs[0].first)].push_back(&eq);
  }

  SparseSolve out;
  out.solution.assign(n, Complex(0.0, 0.0));
  for (const auto& [rep, unknowns] : comp_unknowns) {
    const auto it = comp_eqs.find(rep);
    if (it == comp_eqs.end()) {
      // No equation mentions these unknowns at all: they are free.
      out.unique = false;
      continue;
    }
    const auto& eqs = it->second;
    std::map<std::uint32_t, std::uint32_t> col_of;
    for (std::uint32_t i = 0; i < unknowns.size(); ++i) col_of[unknowns[i]] = i;
    DenseMatrix a(static_cast<std::uint32_t>(eqs.size()),
                  static_cast<std::uint32_t>(unknowns.size()));
    Vec b(eqs.size());
    for (std::uint32_t r = 0; r < eqs.size(); ++r) {
      b[r] = eqs[r]->rhs;
      for (const auto& [u, c] : eqs[r]->coeffs) a(r, col_of.at(u)) += c;
    }
    const LinearSolution sol = solve_linear(a, b, pivot_tol);
    if (!sol.nullspace.empty()) out.unique = false;
    for (std::uint32_t i = 0; i < unknowns.size(); ++i)
      out.solution[unknowns[i]] = sol.particular[i];
  }
  return out;
}

}  // namespace cqg
