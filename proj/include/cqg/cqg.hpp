#pragma once

/// @file cqg.hpp
/// The compactness check: a finite star Hopf algebra is a compact quantum
/// group exactly when it is cosemisimple and the integral form
/// <x,y> = phi(y^* x) is positive definite.

#include <cmath>
#include <limits>
#include <string>

#include "cqg/integral.hpp"
#include "cqg/star.hpp"

namespace cqg {

/// Outcome of the compactness check.
struct CqgVerdict {
  bool is_cqg = false;
  bool cosemisimple = false;
  double gram_min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  CheckReport star_report;        ///< star axioms (when a star is attached)
  CheckReport gram_report;        ///< Gram/antipode identities (when cosemisimple)
  std::string reason = "";        ///< first obstruction, empty when is_cqg
  HaarIntegrals integrals;        ///< populated when cosemisimple
  DenseMatrix gram;               ///< populated when cosemisimple
};

/// Decides compactness. Never throws for structural failures of the input's
/// CQG-ness; the verdict carries the obstruction instead. (Shape errors on
/// malformed data still throw.)
inline CqgVerdict check_cqg(const FiniteHopfAlgebra& h,
                            double tol = thresholds::kVerify) {
  CqgVerdict v;
  if (!h.star.has_value()) {
    v.reason = "no star structure attached";
    return v;
  }
  v.star_report = verify_star_hopf(h, tol);
  if (!v.star_report.pass()) {
    v.reason = "star axioms fail (worst residual " +
               std::to_string(v.star_report.worst()) + ")";
    return v;
  }
  try {
    v.integrals = compute_integrals(h);
    v.cosemisimple = true;
  } catch (const Error& e) {
    if (e.code() != Errc::kNotCosemisimple) throw;
    v.reason = e.what();
    return v;
  }
  v.gram = gram_form(h, v.integrals.phi);
  v.gram_report = check_gram_identities(h, v.integrals.phi, tol);
  const double herm = v.gram.max_abs_diff(v.gram.adjoint());
  if (herm > tol * std::max(1.0, v.gram.max_abs())) {
    v.reason = "integral form is not Hermitian (deviation " + std::to_string(herm) + ")";
    return v;
  }
  // Work with the exactly Hermitian average for the spectrum.
  const DenseMatrix avg = (v.gram + v.gram.adjoint()).scaled(Complex(0.5, 0.0));
  v.gram_min_eigenvalue = hermitian_min_eigenvalue(avg);
  if (!(v.gram_min_eigenvalue > tol)) {
    v.reason = "integral form is not positive definite (min eigenvalue " +
               std::to_string(v.gram_min_eigenvalue) + ")";
    return v;
  }
  if (!v.gram_report.pass()) {
    v.reason = "integral-form identities fail (worst residual " +
               std::to_string(v.gram_report.worst()) + ")";
    return v;
  }
  v.is_cqg = true;
  return v;
}

}  // namespace cqg
