#include "dcgr/polynomial.hpp"

namespace dcgr {

FieldPoly gcd(FieldPoly a, FieldPoly b) {
  while (!b.is_zero()) {
    FieldPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Bezout xgcd(const FieldPoly& a, const FieldPoly& b) {
  const auto& ctx = a.context();
  FieldPoly r0 = a, r1 = b;
  FieldPoly s0 = FieldPoly::constant(FieldElement::one(ctx)), s1(ctx);
  FieldPoly t0(ctx), t1 = FieldPoly::constant(FieldElement::one(ctx));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FieldPoly s2 = s0 - q * s1;
    FieldPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement li = inverse(r0.leading());
  return {r0 * li, s0 * li, t0 * li};
}

bool is_irreducible(const FieldPoly& f_in) {
  const int d = f_in.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const FieldPoly f = f_in.monic();
  const auto& ctx = f.context();
  const BigInt q = ctx->order();
  const FieldPoly x = FieldPoly::monomial(FieldElement::one(ctx), 1);

  // frob[k] = x^{q^k} mod f for k = 0..d
  std::vector<FieldPoly> frob{x % f};
  for (int k = 1; k <= d; ++k) frob.push_back(frob.back().pow_mod(q, f));
  if (!(frob[d] == x % f)) return false;
  for (auto r : prime_divisors(static_cast<std::uint64_t>(d))) {
    const FieldPoly g = gcd(frob[d / r] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace dcgr
