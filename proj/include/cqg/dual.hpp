#pragma once

/// @file dual.hpp
/// The dual Hopf algebra on the dual basis, opposite and co-opposite
/// variants, and the compatibility of duality with integrals.
///
/// On the dual basis {e^i} the structure tensors transpose into each other:
///   (e^i e^j)(e_k)  = (Delta e_k)(e_i (x) e_j),
///   (Delta e^k)(e_i (x) e_j) = e^k(e_i e_j),
/// the unit of the dual is the counit, S' = S^T, and the star is
///   alpha^*(x) = conj(alpha(S(x)^*)),  as a matrix C' = S^T C^dagger.

#include <cstdint>
#include <string>
#include <utility>

#include "cqg/integral.hpp"
#include "cqg/star.hpp"

namespace cqg {

/// The dual Hopf algebra. Applying it twice returns the original structure
/// (exactly, including the star: S C conj(S) = C follows from the star
/// axioms).
inline FiniteHopfAlgebra dual_hopf(const FiniteHopfAlgebra& h) {
  FiniteHopfAlgebra d;
  d.dim = h.dim;
  d.labels.reserve(h.labels.size());
  for (const std::string& l : h.labels) d.labels.push_back(l + "'");
  d.mult = SparseTensor({h.dim, h.dim, h.dim});
  d.comult = SparseTensor({h.dim, h.dim, h.dim});
  for (const auto& [idx, c] : h.comult.entries())
    d.mult.add({idx[1], idx[2], idx[0]}, c);
  for (const auto& [idx, c] : h.mult.entries())
    d.comult.add({idx[2], idx[0], idx[1]}, c);
  d.unit = h.counit;
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  d.antipode_inv = h.antipode_inv.transpose();
  if (h.star.has_value())
    d.star = h.antipode.transpose() * h.star->adjoint();
  return d;
}

/// The opposite algebra H^op: reversed product, same coproduct, antipode
/// S^{-1}, same star.
inline FiniteHopfAlgebra opposite_hopf(const FiniteHopfAlgebra& h) {
  FiniteHopfAlgebra o = h;
  o.mult = SparseTensor({h.dim, h.dim, h.dim});
  for (const auto& [idx, c] : h.mult.entries())
    o.mult.add({idx[1], idx[0], idx[2]}, c);
  o.antipode = h.antipode_inv;
  o.antipode_inv = h.antipode;
  return o;
}

/// The co-opposite coalgebra H^cop: same product, flipped coproduct,
/// antipode S^{-1}, same star.
inline FiniteHopfAlgebra co_opposite_hopf(const FiniteHopfAlgebra& h) {
  FiniteHopfAlgebra o = h;
  o.comult = SparseTensor({h.dim, h.dim, h.dim});
  for (const auto& [idx, c] : h.comult.entries())
    o.comult.add({idx[0], idx[2], idx[1]}, c);
  o.antipode = h.antipode_inv;
  o.antipode_inv = h.antipode;
  return o;
}

/// The integral data of the dual: the dual integral functional is
/// evaluation at the integral element t, and the dual integral element is
/// phi read as an element. (Both in dual-basis coordinates.)
inline HaarIntegrals dual_integrals(const HaarIntegrals& in) {
  HaarIntegrals out;
  out.phi = in.integral_element;
  out.integral_element = in.phi;
  out.phi_nullity = in.t_nullity;
  out.t_nullity = in.phi_nullity;
  return out;
}

/// Residual of the duality scaling of integral forms: with P the map
/// x |-> (x -> phi) (matrix A_qp = phi(e_q e_p)) and G, G' the integral
/// forms of H and its dual,
///   <P x, P y>_{G'} = (1/dim) <x, y>_G,
/// i.e. A^T G' conj(A) = G / dim. Both H and its dual must carry stars.
inline double dual_integral_scaling_residual(const FiniteHopfAlgebra& h) {
  require(h.star.has_value(), Errc::kInvalidArgument, "no star structure attached");
  const FiniteHopfAlgebra d = dual_hopf(h);
  const HaarIntegrals ints = compute_integrals(h);
  const DenseMatrix g = gram_form(h, ints.phi);
  const DenseMatrix gd = gram_form(d, dual_integrals(ints).phi);
  const DenseMatrix a = integral_pairing(h, ints.phi);
  const DenseMatrix lhs = a.transpose() * gd * a.conjugate();
  const DenseMatrix rhs = g.scaled(Complex(1.0 / h.dim, 0.0));
  return lhs.max_abs_diff(rhs);
}

}  // namespace cqg
