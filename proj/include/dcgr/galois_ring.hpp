#pragma once

#include <utility>

#include "dcgr/polynomial.hpp"
#include "dcgr/quotient_ring.hpp"

namespace dcgr {

enum class ArithOp { add, sub, mul };

RingElement gr_arith(const RingElement& x, const RingElement& y, ArithOp op);

/// Units are exactly the elements with nonzero residue. Throws NotAUnit otherwise.
RingElement gr_inverse(const RingElement& x);

bool is_unit(const RingElement& x);

/// Reduction mod p into the residue field F_{p^m}.
FieldElement residue(const RingElement& x);
FieldElement residue(const RingElement& x, const FieldPtr& field);

/// The element of the ring whose coefficients are the residue's digits in [0, p).
RingElement naive_lift(const FieldElement& r, const RingPtr& ring);

/// Base-p decomposition x = t0 + p*t1 with t0, t1 in the Teichmuller set.
struct TeichmullerPair {
  RingElement t0;
  RingElement t1;
};

bool is_teichmuller(const RingElement& x);

/// The unique Teichmuller element congruent to x modulo p.
RingElement teichmuller_lift(const RingElement& x);

TeichmullerPair teichmuller_decompose(const RingElement& x);

/// F^k(b) where F(a + p*b) = a^{p^2} + p*b^{p^2} on Teichmuller digits.
RingElement frobenius_power(const RingElement& b, unsigned k);

using RingPair = std::pair<RingElement, RingElement>;

/// x1*F^k(y1) + x2*F^k(y2).
RingElement hermitian_pairing(const RingPair& x, const RingPair& y, unsigned conj_power);

/// The Teichmuller p-th root A^{1/p} = A^{p^{m-1}}.
RingElement teichmuller_pth_root(const RingElement& a);

/// P_p(A, B) with p*P_p(A, B) = sum_{0<i<p} C(p,i) A^i B^{p-i}, evaluated with
/// the integral coefficients C(p,i)/p.
RingElement carry_polynomial(const RingElement& a, const RingElement& b);

/// Normal form of a sum of two Teichmuller elements: A + B = T1 + p*T2.
TeichmullerPair yamada_add(const RingElement& a, const RingElement& b);

/// The two square roots of -1 in a degree-2 Galois ring, ordered by index.
std::pair<RingElement, RingElement> sqrt_minus_one(const RingPtr& ring);

/// All p^m Teichmuller elements, ordered by the index of their residue.
std::vector<RingElement> teichmuller_set(const RingPtr& ring);

}  // namespace dcgr
