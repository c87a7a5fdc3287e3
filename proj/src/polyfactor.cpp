#include "dcgr/polyfactor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dcgr/residue_field.hpp"

namespace dcgr {

CycPartition cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
  if (n == 0 || std::gcd(n, q) != 1) throw DomainError("cyclotomic_cosets: gcd(n, q) must be 1");
  CycPartition out{n, q, {}};
  std::vector<bool> seen(n, false);
  for (std::uint64_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint64_t> coset;
    std::uint64_t j = s;
    do {
      seen[j] = true;
      coset.push_back(j);
      j = mulmod(j, q, n);
    } while (j != s);
    std::sort(coset.begin(), coset.end());
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

std::string_view to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::linear:
      return "linear";
    case FactorKind::self_reciprocal:
      return "self_reciprocal";
    case FactorKind::pair_first:
      return "pair_first";
    case FactorKind::pair_second:
      return "pair_second";
  }
  return "unknown";
}

RingPoly FactorSet::product() const {
  RingPoly acc = RingPoly::constant(unit);
  for (const auto& f : factors) acc = acc * f.poly;
  return acc;
}

FieldPoly reduce_mod_p(const RingPoly& f, const FieldPtr& field) {
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(residue(v, field));
  return FieldPoly(field, std::move(c));
}

RingPoly naive_lift(const FieldPoly& f, const RingPtr& ring) {
  std::vector<RingElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(naive_lift(v, ring));
  return RingPoly(ring, std::move(c));
}

namespace {

FieldElement from_prime_field_value(const FieldPtr& field, Coeff v) { return FieldElement::constant(field, v); }

// Element of `big` whose multiplicative order is exactly `order`; order | |big| - 1.
FieldElement element_of_exact_order(const FieldPtr& big, std::uint64_t order) {
  const BigInt cofactor = (big->order() - 1) / order;
  const auto primes = prime_divisors(order);
  for (std::uint64_t idx = 1;; ++idx) {
    const FieldElement w = FieldElement::from_index(big, idx);
    const FieldElement g = w.pow(cofactor);
    bool exact = true;
    for (auto r : primes) {
      if (g.pow(order / r) == FieldElement::one(big)) {
        exact = false;
        break;
      }
    }
    if (exact) return g;
  }
}

}  // namespace

std::vector<FieldPoly> residue_factors(const FieldPtr& base, const CycPartition& part) {
  const std::uint64_t n = part.n;
  const unsigned p = base->p();
  const std::size_t mb = base->degree();
  if (n == 1) {
    return {FieldPoly::x_pow_minus_one(base, 1)};
  }
  const std::uint64_t t = multiplicative_order(part.q % n, n);
  const auto big = ResidueField::create(p, first_irreducible(p, mb * t));

  // Embed the base field: images of 1, Y, ..., Y^{mb-1} with f_base(Y) = 0.
  std::vector<FieldElement> basis{FieldElement::one(big)};
  if (mb > 1) {
    const std::uint64_t sub_order = *checked_pow(p, static_cast<unsigned>(mb)) - 1;
    const FieldElement g = element_of_exact_order(big, sub_order);
    FieldElement cand = FieldElement::one(big);
    bool found = false;
    for (std::uint64_t j = 0; j < sub_order && !found; ++j, cand *= g) {
      FieldElement acc = FieldElement::zero(big);
      for (std::size_t i = base->degree() + 1; i-- > 0;) {
        acc = acc * cand + from_prime_field_value(big, base->modulus()[i]);
      }
      if (acc.is_zero()) {
        found = true;
        for (std::size_t i = 1; i < mb; ++i) basis.push_back(basis.back() * cand);
      }
    }
    if (!found) throw ConstructionError("residue field does not embed in splitting field");
  }
  const auto embed = [&](const FieldElement& c) {
    FieldElement acc = FieldElement::zero(big);
    for (std::size_t i = 0; i < mb; ++i) acc += basis[i].scaled(c[i]);
    return acc;
  };
  std::map<std::vector<Coeff>, FieldElement> back;
  for (std::uint64_t i = 0; i < base->order_u64(); ++i) {
    const FieldElement c = FieldElement::from_index(base, i);
    const FieldElement e = embed(c);
    back.emplace(std::vector<Coeff>(e.coeffs().begin(), e.coeffs().end()), c);
  }

  const FieldElement zeta = element_of_exact_order(big, n);
  std::vector<FieldPoly> out;
  for (const auto& coset : part.cosets) {
    FieldPoly acc = FieldPoly::constant(FieldElement::one(big));
    for (auto j : coset) {
      acc = acc * FieldPoly(big, {-zeta.pow(j), FieldElement::one(big)});
    }
    std::vector<FieldElement> c;
    for (const auto& v : acc.coeffs()) {
      auto it = back.find(std::vector<Coeff>(v.coeffs().begin(), v.coeffs().end()));
      if (it == back.end()) throw ConstructionError("minimal polynomial left the residue field");
      c.push_back(it->second);
    }
    out.emplace_back(base, std::move(c));
  }
  return out;
}

FactorSet factor_xn_minus_1(const RingPtr& ring, std::uint64_t n) {
  const unsigned p = ring->p();
  if (n == 0 || std::gcd<std::uint64_t>(n, p) != 1) throw DomainError("factor_xn_minus_1: gcd(n, p) must be 1");
  const auto field = ResidueField::of(*ring);
  const std::uint64_t q = field->order_u64();
  const CycPartition part = cyclotomic_cosets(n, q);
  const std::vector<FieldPoly> bar = residue_factors(field, part);

  const RingPoly target = RingPoly::x_pow_minus_one(ring, n);
  std::vector<RingPoly> lifted;
  RingPoly prod = RingPoly::constant(RingElement::one(ring));
  for (const auto& g : bar) {
    lifted.push_back(naive_lift(g, ring));
    prod = prod * lifted.back();
  }
  // target - prod = p * delta; solve sum_i delta_i * prod_{j != i} g_j = delta mod p.
  const RingPoly diff = target - prod;
  std::vector<FieldElement> dc;
  for (const auto& c : diff.coeffs()) {
    std::vector<Coeff> v(c.coeffs().begin(), c.coeffs().end());
    for (auto& x : v) {
      if (x % p != 0) throw ConstructionError("residue factorization does not multiply to x^n - 1");
      x /= p;
    }
    dc.emplace_back(field, std::move(v));
  }
  const FieldPoly delta(field, std::move(dc));
  const FieldPoly target_bar = FieldPoly::x_pow_minus_one(field, n);
  for (std::size_t i = 0; i < bar.size(); ++i) {
    const FieldPoly cofactor = target_bar / bar[i];
    const Bezout bz = xgcd(cofactor % bar[i], bar[i]);
    if (bz.g.degree() != 0) throw ConstructionError("factors are not coprime");
    const FieldPoly di = (delta * bz.s) % bar[i];
    lifted[i] += naive_lift(di, ring) * RingElement::constant(ring, p);
  }

  FactorSet out{ring, n, {}, RingElement::one(ring)};
  std::map<std::vector<std::uint64_t>, std::size_t> by_coset;
  for (std::size_t i = 0; i < part.cosets.size(); ++i) by_coset[part.cosets[i]] = i;
  for (std::size_t i = 0; i < part.cosets.size(); ++i) {
    const auto& coset = part.cosets[i];
    std::vector<std::uint64_t> neg;
    for (auto j : coset) neg.push_back((n - j) % n);
    std::sort(neg.begin(), neg.end());
    Factor f{lifted[i], FactorKind::self_reciprocal, std::nullopt, coset};
    if (coset == std::vector<std::uint64_t>{0}) {
      f.kind = FactorKind::linear;
    } else if (neg != coset) {
      const std::size_t partner = by_coset.at(neg);
      f.partner = partner;
      f.kind = coset.front() < neg.front() ? FactorKind::pair_first : FactorKind::pair_second;
    }
    out.factors.push_back(std::move(f));
  }
  if (!(out.product() == target)) throw ConstructionError("Hensel lift failed to reproduce x^n - 1");
  return out;
}

RingPoly reciprocal(const RingPoly& f) {
  if (f.is_zero() || !is_unit(f.coeff(0))) throw DomainError("reciprocal: constant term must be a unit");
  std::vector<RingElement> c(f.coeffs().rbegin(), f.coeffs().rend());
  return RingPoly(f.context(), std::move(c)).monic();
}

bool primitive_root_check(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(n)) throw DomainError("primitive_root_check: n must be prime");
  if (n == p) throw DomainError("primitive_root_check: n must differ from p");
  return multiplicative_order(p % n, n) == n - 1;
}

std::vector<std::uint64_t> find_good_primes(std::uint64_t p, int eps, std::size_t count, std::uint64_t limit) {
  if (eps != 1 && eps != -1) throw DomainError("find_good_primes: eps must be +1 or -1");
  const std::uint64_t residue4 = eps == 1 ? 1 : 3;
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; n <= limit && out.size() < count; n += 2) {
    if (n % 4 != residue4 || n == p || !is_prime(n)) continue;
    if (primitive_root_check(p, n)) out.push_back(n);
  }
  return out;
}

}  // namespace dcgr
