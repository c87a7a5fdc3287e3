#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dcgr/galois_ring.hpp"
#include "dcgr/polynomial.hpp"

namespace dcgr {

/// q-cyclotomic cosets modulo n, each sorted, ordered by smallest element.
struct CycPartition {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::vector<std::vector<std::uint64_t>> cosets;
};

CycPartition cyclotomic_cosets(std::uint64_t n, std::uint64_t q);

enum class FactorKind { linear, self_reciprocal, pair_first, pair_second };

std::string_view to_string(FactorKind kind);

struct Factor {
  RingPoly poly;
  FactorKind kind;
  std::optional<std::size_t> partner;
  /// Exponents j such that zeta^j is a root of the residue of poly.
  std::vector<std::uint64_t> coset;

  std::size_t degree() const { return static_cast<std::size_t>(poly.degree()); }
};

/// Monic basic irreducible factorization x^n - 1 = unit * prod(factors) over R.
struct FactorSet {
  RingPtr ring;
  std::uint64_t n = 0;
  std::vector<Factor> factors;
  RingElement unit;

  RingPoly product() const;
};

/// Factors x^n - 1 over the degree-m residue field of `ring` with p^m-cyclotomic
/// cosets, then Hensel-lifts the factorization to the ring.
FactorSet factor_xn_minus_1(const RingPtr& ring, std::uint64_t n);

/// Residue-field factorization, one monic factor per p^m-cyclotomic coset.
std::vector<FieldPoly> residue_factors(const FieldPtr& field, const CycPartition& cosets);

/// x^{deg f} f(1/x), normalized monic. Requires f(0) to be a unit.
RingPoly reciprocal(const RingPoly& f);

FieldPoly reduce_mod_p(const RingPoly& f, const FieldPtr& field);
RingPoly naive_lift(const FieldPoly& f, const RingPtr& ring);

/// Whether p generates (Z/n)^*. n must be prime and different from p.
bool primitive_root_check(std::uint64_t p, std::uint64_t n);

/// First `count` primes n <= limit with n = eps (mod 4) and p primitive mod n.
std::vector<std::uint64_t> find_good_primes(std::uint64_t p, int eps, std::size_t count, std::uint64_t limit);

}  // namespace dcgr
