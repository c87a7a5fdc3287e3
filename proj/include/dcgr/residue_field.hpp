#pragma once

#include "dcgr/polynomial.hpp"
#include "dcgr/quotient_ring.hpp"

namespace dcgr {

FieldElement field_inverse(const FieldElement& x);

/// Tr from F_{p^{rs}} down to F_{p^r}: z + z^{p^r} + ... + z^{p^{r(s-1)}}.
/// Requires r*s equal to the field degree.
FieldElement field_trace(const FieldElement& z, unsigned r, unsigned s);

/// Prime field F_p as a ResidueField of degree 1.
FieldPtr prime_field(unsigned p);

/// First monic irreducible of degree m over F_p, scanning candidates in
/// increasing order of sum c_i p^i over the non-leading coefficients.
std::vector<Coeff> first_irreducible(unsigned p, std::size_t m);

/// Whether the integer polynomial f (constant first) is irreducible mod p.
bool is_irreducible_mod_p(unsigned p, std::span<const Coeff> f);

}  // namespace dcgr
