#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dcgr/galois_ring.hpp"
#include "dcgr/polynomial.hpp"

namespace dcgr {

/// Square matrix over Z_q stored row-major.
struct ModMatrix {
  std::size_t size = 0;
  unsigned q = 0;
  std::vector<Coeff> a;

  Coeff& at(std::size_t r, std::size_t c) { return a[r * size + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return a[r * size + c]; }
  std::vector<Coeff> apply(std::span<const Coeff> v) const;
};

/// Inverse over Z_q (q = p or p^2) when the matrix is invertible mod p.
std::optional<ModMatrix> invert(const ModMatrix& m, unsigned p);

/// The constituent ring R[x]/(g) for a monic basic irreducible g over R.
///
/// Elements have two presentations: polynomials over R of degree < deg g, and
/// elements of a Galois ring Z_{p^2}[z]/(F) with deg F = deg R * deg g, where z is
/// a primitive element x + c*y found by search and F its minimal polynomial. The
/// second presentation gives access to Teichmuller digits and Frobenius.
class LocalRing {
 public:
  LocalRing(RingPtr base, RingPoly modulus);

  const RingPtr& base() const noexcept { return base_; }
  const RingPoly& modulus() const noexcept { return g_; }
  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t factor_degree() const noexcept { return static_cast<std::size_t>(g_.degree()); }

  /// a mod g, in the Galois ring presentation.
  RingElement to_local(const RingPoly& a) const;
  /// Inverse of to_local on reduced polynomials.
  RingPoly from_local(const RingElement& b) const;

  RingPoly reduce(const RingPoly& a) const { return a % g_; }

 private:
  std::vector<Coeff> flatten(const RingPoly& reduced) const;

  RingPtr base_;
  RingPoly g_;
  RingPtr ring_;
  ModMatrix to_tower_;
  ModMatrix from_tower_;
};

}  // namespace dcgr
