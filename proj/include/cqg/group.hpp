#pragma once

/// @file group.hpp
/// Finite groups given by multiplication tables, and the two Hopf algebras
/// attached to a finite group: the group algebra CG (cocommutative, star
/// g^* = g^{-1}) and the function algebra C^G (commutative, star
/// (e_g)^* = e_g). Both are compact quantum groups with these stars.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cqg/hopf.hpp"

namespace cqg {

/// A finite group as a validated multiplication table.
struct FiniteGroup {
  std::uint32_t order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table;  ///< table[a][b] = a b
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> inverse;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }

  /// Validates a table (closure, associativity, identity, inverses) and
  /// fills in identity and inverse data. Throws Error(kInvalidArgument) if
  /// the table is not a group.
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<std::uint32_t>> table) {
    FiniteGroup g;
    g.order = static_cast<std::uint32_t>(table.size());
    require(g.order > 0, Errc::kInvalidArgument, "empty group table");
    if (labels.empty()) {
      for (std::uint32_t i = 0; i < g.order; ++i)
        labels.push_back("g" + std::to_string(i));
    }
    require(labels.size() == g.order, Errc::kInvalidArgument,
            "label count does not match group order");
    for (const auto& row : table) {
      require(row.size() == g.order, Errc::kInvalidArgument,
              "group table is not square");
      for (std::uint32_t v : row)
        require(v < g.order, Errc::kInvalidArgument,
                "group table entry out of range");
    }
    g.labels = std::move(labels);
    g.table = std::move(table);
    for (std::uint32_t a = 0; a < g.order; ++a)
      for (std::uint32_t b = 0; b < g.order; ++b)
        for (std::uint32_t c = 0; c < g.order; ++c)
          require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)),
                  Errc::kInvalidArgument, "group table is not associative");
    bool found = false;
    for (std::uint32_t e = 0; e < g.order && !found; ++e) {
      bool ok = true;
      for (std::uint32_t a = 0; a < g.order; ++a)
        ok = ok && g.mul(e, a) == a && g.mul(a, e) == a;
      if (ok) {
        g.identity = e;
        found = true;
      }
    }
    require(found, Errc::kInvalidArgument, "group table has no identity");
    g.inverse.assign(g.order, 0);
    for (std::uint32_t a = 0; a < g.order; ++a) {
      bool ok = false;
      for (std::uint32_t b = 0; b < g.order; ++b)
        if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
          g.inverse[a] = b;
          ok = true;
          break;
        }
      require(ok, Errc::kInvalidArgument, "group table element has no inverse");
    }
    return g;
  }

  /// The cyclic group of order n, generator written g.
  static FiniteGroup cyclic(std::uint32_t n) {
    require(n > 0, Errc::kInvalidArgument, "cyclic group order must be positive");
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
      for (std::uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return from_table(std::move(labels), std::move(table));
  }

  /// Direct product, indexed left-factor major: (a, b) -> a * |B| + b.
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::uint32_t n = a.order * b.order;
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t ia = i / b.order, ib = i % b.order;
      labels.push_back("(" + a.labels[ia] + "," + b.labels[ib] + ")");
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t ja = j / b.order, jb = j % b.order;
        table[i][j] = a.mul(ia, ja) * b.order + b.mul(ib, jb);
      }
    }
    return from_table(std::move(labels), std::move(table));
  }

  /// The symmetric group on {0,1,2}, composition (p q)(x) = p(q(x)).
  static FiniteGroup symmetric3() {
    const std::vector<std::array<std::uint32_t, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels = {"e",    "(01)",  "(02)",
                                             "(12)", "(012)", "(021)"};
    auto find = [&](const std::array<std::uint32_t, 3>& p) -> std::uint32_t {
      for (std::uint32_t i = 0; i < 6; ++i)
        if (perms[i] == p) return i;
      fail(Errc::kInvalidArgument, "permutation lookup failed");
    };
    std::vector<std::vector<std::uint32_t>> table(6, std::vector<std::uint32_t>(6));
    for (std::uint32_t i = 0; i < 6; ++i)
      for (std::uint32_t j = 0; j < 6; ++j) {
        std::array<std::uint32_t, 3> comp;
        for (std::uint32_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
        table[i][j] = find(comp);
      }
    return from_table(labels, std::move(table));
  }
};

/// The permutation matrix of group inversion, column a = e_{a^{-1}}.
inline DenseMatrix inversion_matrix(const FiniteGroup& g) {
  DenseMatrix p(g.order, g.order);
  for (std::uint32_t a = 0; a < g.order; ++a) p(g.inv(a), a) = Complex(1.0, 0.0);
  return p;
}

/// The group algebra CG: basis {e_g}, e_a e_b = e_{ab}, every basis vector
/// grouplike, S(e_a) = e_{a^{-1}}, star e_a^* = e_{a^{-1}}.
inline FiniteHopfAlgebra group_algebra(const FiniteGroup& g) {
  FiniteBialgebra b = FiniteBialgebra::with_dim(g.order);
  b.labels = g.labels;
  for (std::uint32_t i = 0; i < g.order; ++i)
    for (std::uint32_t j = 0; j < g.order; ++j)
      b.mult.add({i, j, g.mul(i, j)}, 1.0);
  for (std::uint32_t k = 0; k < g.order; ++k) b.comult.add({k, k, k}, 1.0);
  b.unit.assign(g.order, Complex(0.0, 0.0));
  b.unit[g.identity] = Complex(1.0, 0.0);
  b.counit.assign(g.order, Complex(1.0, 0.0));
  return make_hopf_with_antipode(b, inversion_matrix(g), inversion_matrix(g));
}

/// The function algebra C^G: basis of point evaluations {e_g} with the
/// pointwise product, Delta(e_c) = sum_{ab=c} e_a (x) e_b, S(e_a) =
/// e_{a^{-1}}, star e_a^* = e_a.
inline FiniteHopfAlgebra function_algebra(const FiniteGroup& g) {
  FiniteBialgebra b = FiniteBialgebra::with_dim(g.order);
  b.labels.reserve(g.order);
  for (const std::string& l : g.labels) b.labels.push_back("e_" + l);
  for (std::uint32_t i = 0; i < g.order; ++i) b.mult.add({i, i, i}, 1.0);
  for (std::uint32_t i = 0; i < g.order; ++i)
    for (std::uint32_t j = 0; j < g.order; ++j)
      b.comult.add({g.mul(i, j), i, j}, 1.0);
  b.unit.assign(g.order, Complex(1.0, 0.0));
  b.counit.assign(g.order, Complex(0.0, 0.0));
  b.counit[g.identity] = Complex(1.0, 0.0);
  return make_hopf_with_antipode(b, inversion_matrix(g),
                                 DenseMatrix::identity(g.order));
}

}  // namespace cqg
