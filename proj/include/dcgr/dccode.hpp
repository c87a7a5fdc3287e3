#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcgr/galois_ring.hpp"
#include "dcgr/local_ring.hpp"
#include "dcgr/polyfactor.hpp"
#include "dcgr/polynomial.hpp"

namespace dcgr {

/// Addition and multiplication tables for a ring whose elements fit in 16-bit indices.
class ElementTables {
 public:
  explicit ElementTables(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * order_ + b]; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * order_ + b]; }
  std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
  std::uint16_t index(const RingElement& x) const { return static_cast<std::uint16_t>(x.index()); }
  RingElement element(std::uint16_t i) const { return RingElement::from_index(ring_, i); }

 private:
  RingPtr ring_;
  std::uint32_t order_;
  std::vector<std::uint16_t> add_, mul_, neg_;
};

/// Double circulant code over R generated by (1, a(x)) in (R[x]/(x^n - 1))^2.
/// Any n >= 1 is accepted; the CRT machinery additionally needs gcd(n, p) = 1.
class DCCode {
 public:
  /// a holds a_0, ..., a_{n-1}; n = a.size().
  DCCode(RingPtr ring, std::vector<RingElement> a);
  static DCCode from_polynomial(RingPtr ring, std::size_t n, const RingPoly& a);
  /// Table literal: a(x) = a0(x) + y*a1(x), coefficients in decreasing powers of x.
  /// Plain digit strings ("41") or comma lists ("4,1") when p^2 > 10.
  static DCCode from_digits(RingPtr ring, std::string_view a1, std::string_view a0);

  /// Inverse of from_digits: {a1, a0}.
  std::pair<std::string, std::string> to_digits() const;

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return a_.size(); }
  const std::vector<RingElement>& coefficients() const noexcept { return a_; }
  RingPoly polynomial() const { return RingPoly(ring_, a_); }

  friend bool operator==(const DCCode& l, const DCCode& r) { return l.a_ == r.a_; }

 private:
  RingPtr ring_;
  std::vector<RingElement> a_;
};

using RingMatrix = std::vector<std::vector<RingElement>>;

/// (I_n | A) with A[i][j] = a_{(j - i) mod n}.
RingMatrix generator_matrix(const DCCode& code);
/// (-A^T | I_n).
RingMatrix dual_generator(const DCCode& code);
/// M * N^T under the Euclidean product.
RingMatrix gram(const RingMatrix& m, const RingMatrix& n);
/// Rank of the matrix reduced modulo p.
std::size_t residue_rank(const RingMatrix& m);

/// 1 + a(x) a(x^{-1}) in R[x]/(x^n - 1).
RingPoly one_plus_aastar(const DCCode& code);

struct Classification {
  bool self_dual = false;
  bool lcd = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// G G^T = 0 for self-duality, G G^T invertible for LCD.
Classification classify_by_matrix(const DCCode& code);
/// 1 + a a* = 0 for self-duality, 1 + a a* a unit of R[x]/(x^n - 1) for LCD.
Classification classify_by_polynomial(const DCCode& code);

bool is_self_dual(const DCCode& code);
bool is_lcd(const DCCode& code);

/// The factorization of x^n - 1 over R together with everything needed to move
/// between a(x) and its CRT constituents.
class CrtContext {
 public:
  static std::shared_ptr<const CrtContext> create(RingPtr ring, std::size_t n);

  const RingPtr& ring() const noexcept { return factors_.ring; }
  std::size_t n() const noexcept { return factors_.n; }
  const FactorSet& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return locals_.size(); }
  const LocalRing& local(std::size_t i) const { return *locals_[i]; }
  const RingPoly& idempotent(std::size_t i) const { return idempotents_[i]; }

  /// k such that x -> x^{-1} acts on a self-reciprocal constituent as F^k.
  unsigned conj_power(std::size_t i) const;

  /// Image of a local element of constituent `from` under x -> x^{-1}, landing in
  /// constituent `to` (its partner, or itself when self-reciprocal).
  RingElement transport_inverse(std::size_t from, std::size_t to, const RingElement& b) const;

 private:
  CrtContext(FactorSet factors);

  FactorSet factors_;
  std::vector<std::shared_ptr<const LocalRing>> locals_;
  std::vector<RingPoly> idempotents_;
};

using CrtPtr = std::shared_ptr<const CrtContext>;

struct ConstituentDecomp {
  CrtPtr crt;
  /// Local generator b_i = a mod g_i in the Galois ring presentation of constituent i.
  std::vector<RingElement> locals;
};

ConstituentDecomp crt_decompose(const DCCode& code, const CrtPtr& crt);
ConstituentDecomp crt_decompose(const DCCode& code);
DCCode crt_recombine(const ConstituentDecomp& d);

/// Per-constituent self-duality and LCD tests (Euclidean on x +- 1, Hermitian on
/// self-reciprocal factors, cross pairing on reciprocal pairs).
Classification classify_by_constituents(const ConstituentDecomp& d);

struct ConstituentVerdict {
  std::size_t factor = 0;
  /// 1 + b*conj(b), 1 + b*b, or 1 + b'c', depending on the factor kind.
  RingElement pairing;
  bool self_dual = false;
  bool lcd = false;
};
std::vector<ConstituentVerdict> constituent_verdicts(const ConstituentDecomp& d);

/// |C intersect C^perp| by enumerating all |R|^n codewords.
std::uint64_t hull_size(const DCCode& code, std::uint64_t budget = 10'000'000);

}  // namespace dcgr
