#include "dcgr/residue_field.hpp"

namespace dcgr {

FieldElement field_inverse(const FieldElement& x) {
  if (x.is_zero()) throw NotAUnit("zero has no inverse in a field");
  return x.pow(x.context()->order() - 2);
}

FieldElement inverse(const FieldElement& x) { return field_inverse(x); }

FieldElement field_trace(const FieldElement& z, unsigned r, unsigned s) {
  const auto m = z.context()->degree();
  if (r == 0 || s == 0 || m % r != 0 || static_cast<std::size_t>(r) * s != m) {
    throw DomainError("field_trace: r*s must equal the field degree");
  }
  FieldElement acc = FieldElement::zero(z.context());
  FieldElement term = z;
  for (unsigned i = 0; i < s; ++i) {
    acc += term;
    term = term.pth_power(r);
  }
  return acc;
}

FieldPtr prime_field(unsigned p) { return ResidueField::create(p, {0, 1}); }

bool is_irreducible_mod_p(unsigned p, std::span<const Coeff> f) {
  auto fp = prime_field(p);
  std::vector<FieldElement> c;
  c.reserve(f.size());
  for (auto v : f) c.push_back(FieldElement::constant(fp, v));
  FieldPoly poly(fp, std::move(c));
  if (poly.degree() != static_cast<int>(f.size()) - 1) return false;
  return is_irreducible(poly);
}

std::vector<Coeff> first_irreducible(unsigned p, std::size_t m) {
  if (m == 1) return {0, 1};
  std::vector<Coeff> f(m + 1, 0);
  f[m] = 1;
  while (true) {
    if (is_irreducible_mod_p(p, f)) return f;
    std::size_t i = 0;
    while (i < m && ++f[i] == p) f[i++] = 0;
    if (i == m) break;
  }
  throw ConstructionError("no irreducible polynomial found");
}

}  // namespace dcgr
