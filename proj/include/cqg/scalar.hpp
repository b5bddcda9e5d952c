#pragma once

/// @file scalar.hpp
/// Exact scalar arithmetic for roots of unity.
///
/// Group-level input data (2-cocycles, coboundary weights) consists of
/// complex numbers of modulus one that are honest roots of unity. Storing
/// them as reduced rational phases keeps every product, inverse, and
/// conjugate exact; the lossy conversion to a complex double happens exactly
/// once, when structure constants are assembled.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>

#include "cqg/core.hpp"

namespace cqg {

/// The root of unity exp(2*pi*i * num/den), stored as a reduced fraction
/// with 0 <= num < den. Multiplication is addition of phases, so the group
/// of roots of unity is represented with no rounding at all.
struct RootOfUnity {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Builds exp(2*pi*i * n/d), reducing the fraction and wrapping the phase
  /// into [0, 1). @p d must be nonzero.
  static RootOfUnity of(std::int64_t n, std::int64_t d) {
    require(d != 0, Errc::kInvalidArgument, "root of unity with zero order");
    if (d < 0) {
      d = -d;
      n = -n;
    }
    n %= d;
    if (n < 0) n += d;
    const std::int64_t g = std::gcd(n, d);
    return RootOfUnity{n / g, d / g};
  }

  static RootOfUnity one() { return RootOfUnity{0, 1}; }

  bool is_one() const { return num == 0; }

  /// Numeric value. Quarter turns are emitted as exact literals so that
  /// serialized data built from them is bit-stable.
  Complex value() const {
    if (den == 1) return Complex(1.0, 0.0);
    if (den == 2) return Complex(-1.0, 0.0);
    if (den == 4) return num == 1 ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return Complex(std::cos(theta), std::sin(theta));
  }

  RootOfUnity operator*(const RootOfUnity& o) const {
    // num/den + o.num/o.den over the common denominator, then reduce.
    return of(num * o.den + o.num * den, den * o.den);
  }

  RootOfUnity pow(std::int64_t k) const { return of(num * k, den); }

  RootOfUnity inverse() const { return of(-num, den); }

  /// Complex conjugate; for a modulus-one number this is the inverse.
  RootOfUnity conjugate() const { return inverse(); }

  bool operator==(const RootOfUnity& o) const {
    return num == o.num && den == o.den;
  }
};

/// A complex scalar that remembers when it is exactly a root of unity.
/// Arithmetic keeps the exact representation alive as long as both operands
/// have one; mixed arithmetic falls back to plain doubles.
struct ExactScalar {
  std::optional<RootOfUnity> root;  ///< engaged iff the value is exactly this root
  Complex value{0.0, 0.0};

  static ExactScalar zero() { return ExactScalar{}; }

  static ExactScalar one() { return from_root(RootOfUnity::one()); }

  static ExactScalar from_root(RootOfUnity r) {
    return ExactScalar{r, r.value()};
  }

  static ExactScalar from_complex(Complex z) {
    return ExactScalar{std::nullopt, z};
  }

  bool is_zero() const { return !root.has_value() && value == Complex(0.0, 0.0); }

  ExactScalar operator*(const ExactScalar& o) const {
    if (is_zero() || o.is_zero()) return zero();
    if (root && o.root) return from_root(*root * *o.root);
    return from_complex(value * o.value);
  }

  ExactScalar conjugate() const {
    if (root) return from_root(root->conjugate());
    return from_complex(std::conj(value));
  }

  ExactScalar inverse() const {
    require(!is_zero(), Errc::kInvalidArgument, "inverse of zero scalar");
    if (root) return from_root(root->inverse());
    return from_complex(Complex(1.0, 0.0) / value);
  }
};

}  // namespace cqg
