#include "dcgr/galois_ring.hpp"

#include <algorithm>

#include "dcgr/residue_field.hpp"

namespace dcgr {

RingElement gr_arith(const RingElement& x, const RingElement& y, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return x + y;
    case ArithOp::sub:
      return x - y;
    case ArithOp::mul:
      return x * y;
  }
  throw DomainError("unknown ring operation");
}

FieldElement residue(const RingElement& x, const FieldPtr& field) {
  std::vector<Coeff> c(x.coeffs().begin(), x.coeffs().end());
  for (auto& v : c) v %= x.context()->p();
  return FieldElement(field, std::move(c));
}

FieldElement residue(const RingElement& x) { return residue(x, ResidueField::of(*x.context())); }

RingElement naive_lift(const FieldElement& r, const RingPtr& ring) {
  return RingElement(ring, std::vector<Coeff>(r.coeffs().begin(), r.coeffs().end()));
}

bool is_unit(const RingElement& x) {
  const auto p = x.context()->p();
  return std::any_of(x.coeffs().begin(), x.coeffs().end(), [p](Coeff v) { return v % p != 0; });
}

RingElement gr_inverse(const RingElement& x) {
  if (!is_unit(x)) throw NotAUnit("element is divisible by p");
  const RingElement v = naive_lift(field_inverse(residue(x)), x.context());
  return v * (RingElement::constant(x.context(), 2) - x * v);
}

RingElement inverse(const RingElement& x) { return gr_inverse(x); }

RingElement teichmuller_lift(const RingElement& x) { return x.pth_power(x.context()->degree()); }

bool is_teichmuller(const RingElement& x) { return teichmuller_lift(x) == x; }

TeichmullerPair teichmuller_decompose(const RingElement& x) {
  RingElement t0 = teichmuller_lift(x);
  RingElement diff = x - t0;
  const auto p = x.context()->p();
  std::vector<Coeff> w(diff.coeffs().begin(), diff.coeffs().end());
  for (auto& v : w) v /= p;
  return {std::move(t0), teichmuller_lift(RingElement(x.context(), std::move(w)))};
}

RingElement frobenius_power(const RingElement& b, unsigned k) {
  const auto m = b.context()->degree();
  const std::size_t shift = (2 * static_cast<std::size_t>(k)) % m;
  if (shift == 0) return b;
  const auto [alpha, beta] = teichmuller_decompose(b);
  return alpha.pth_power(shift) + beta.pth_power(shift).scaled(b.context()->p());
}

RingElement hermitian_pairing(const RingPair& x, const RingPair& y, unsigned conj_power) {
  return x.first * frobenius_power(y.first, conj_power) + x.second * frobenius_power(y.second, conj_power);
}

RingElement teichmuller_pth_root(const RingElement& a) { return a.pth_power(a.context()->degree() - 1); }

RingElement carry_polynomial(const RingElement& a, const RingElement& b) {
  a.check(b);
  const unsigned p = a.context()->p();
  RingElement acc = RingElement::zero(a.context());
  for (unsigned i = 1; i < p; ++i) {
    const auto c = static_cast<long long>(binomial(p, i) / p);
    acc += (a.pow(i) * b.pow(p - i)).scaled(c);
  }
  return acc;
}

TeichmullerPair yamada_add(const RingElement& a, const RingElement& b) {
  a.check(b);
  if (!is_teichmuller(a) || !is_teichmuller(b)) {
    throw DomainError("yamada_add: operands must be Teichmuller elements");
  }
  const RingElement ar = teichmuller_pth_root(a);
  const RingElement br = teichmuller_pth_root(b);
  RingElement t1 = (ar + br).pow(a.context()->p());
  RingElement t2 = teichmuller_lift(-carry_polynomial(ar, br));
  return {std::move(t1), std::move(t2)};
}

std::vector<RingElement> teichmuller_set(const RingPtr& ring) {
  const auto field = ResidueField::of(*ring);
  const auto count = field->order_u64();
  std::vector<RingElement> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(teichmuller_lift(naive_lift(FieldElement::from_index(field, i), ring)));
  }
  return out;
}

std::pair<RingElement, RingElement> sqrt_minus_one(const RingPtr& ring) {
  if (ring->degree() != 2) throw DomainError("sqrt_minus_one requires a degree-2 Galois ring");
  const RingElement minus_one = RingElement::constant(ring, -1);
  std::vector<RingElement> roots;
  for (auto& t : teichmuller_set(ring)) {
    if (t * t == minus_one) roots.push_back(t);
  }
  if (roots.size() != 2) throw ConstructionError("expected exactly two square roots of -1");
  std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.index() < r.index(); });
  return {roots[0], roots[1]};
}

}  // namespace dcgr
