#include "dcgr/quotient_ring.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "dcgr/residue_field.hpp"

namespace dcgr {
namespace detail {

QuotientArithmetic::QuotientArithmetic(unsigned p, unsigned char_exponent, std::vector<Coeff> modulus)
    : p_(p), n_(char_exponent == 1 ? p : p * p), m_(modulus.empty() ? 0 : modulus.size() - 1), f_(std::move(modulus)) {
  if (p < 3 || !is_prime(p)) throw DomainError("characteristic base must be an odd prime");
  if (m_ == 0) throw DomainError("modulus must have degree at least 1");
  for (auto& v : f_) v %= n_;
  if (f_.back() != 1) throw DomainError("modulus must be monic");
}

BigInt QuotientArithmetic::order() const { return big_pow(n_, static_cast<unsigned>(m_)); }

std::uint64_t QuotientArithmetic::order_u64() const {
  auto v = checked_pow(n_, static_cast<unsigned>(m_));
  if (!v) throw BudgetError("ring order exceeds 64 bits: " + describe(), UINT64_MAX, UINT64_MAX);
  return *v;
}

bool QuotientArithmetic::same_as(const QuotientArithmetic& other) const noexcept {
  return this == &other || (n_ == other.n_ && f_ == other.f_);
}

void QuotientArithmetic::add(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const {
  for (std::size_t i = 0; i < m_; ++i) {
    Coeff s = a[i] + b[i];
    out[i] = s >= n_ ? s - n_ : s;
  }
}

void QuotientArithmetic::sub(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const {
  for (std::size_t i = 0; i < m_; ++i) {
    out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + n_ - b[i];
  }
}

void QuotientArithmetic::neg(std::span<const Coeff> a, std::span<Coeff> out) const {
  for (std::size_t i = 0; i < m_; ++i) out[i] = a[i] == 0 ? 0 : n_ - a[i];
}

void QuotientArithmetic::scale(std::span<const Coeff> a, std::uint64_t k, std::span<Coeff> out) const {
  k %= n_;
  for (std::size_t i = 0; i < m_; ++i) out[i] = static_cast<Coeff>(a[i] * k % n_);
}

void QuotientArithmetic::mul(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const {
  const std::size_t len = 2 * m_ - 1;
  std::array<std::uint64_t, 64> small{};
  std::vector<std::uint64_t> large;
  std::uint64_t* t = small.data();
  if (len > small.size()) {
    large.assign(len, 0);
    t = large.data();
  }
  for (std::size_t i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m_; ++j) t[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  for (std::size_t k = len; k-- > m_;) {
    const std::uint64_t c = t[k] % n_;
    if (c == 0) continue;
    for (std::size_t j = 0; j < m_; ++j) {
      t[k - m_ + j] += c * (f_[j] == 0 ? 0 : n_ - f_[j]);
    }
  }
  for (std::size_t i = 0; i < m_; ++i) out[i] = static_cast<Coeff>(t[i] % n_);
}

void QuotientArithmetic::unpack(std::uint64_t index, std::span<Coeff> out) const {
  for (std::size_t i = 0; i < m_; ++i) {
    out[i] = static_cast<Coeff>(index % n_);
    index /= n_;
  }
}

std::uint64_t QuotientArithmetic::pack(std::span<const Coeff> a) const {
  std::uint64_t r = 0;
  for (std::size_t i = m_; i-- > 0;) r = r * n_ + a[i];
  return r;
}

std::string QuotientArithmetic::describe() const {
  std::ostringstream os;
  os << (n_ == p_ ? "F(" : "GR(") << n_ << "," << p_ << "^" << (n_ == p_ ? m_ : 2 * m_) << ")[f=";
  for (std::size_t i = f_.size(); i-- > 0;) {
    os << f_[i] << (i == 0 ? "]" : ",");
  }
  return os.str();
}

}  // namespace detail

GaloisRing::GaloisRing(unsigned p, std::vector<Coeff> modulus) : QuotientArithmetic(p, 2, std::move(modulus)) {}

std::shared_ptr<const GaloisRing> GaloisRing::create(unsigned p, std::vector<Coeff> modulus) {
  auto ring = std::shared_ptr<const GaloisRing>(new GaloisRing(p, std::move(modulus)));
  if (ring->degree() > 1 && !is_irreducible_mod_p(p, ring->modulus())) {
    throw DomainError("modulus is not basic irreducible: " + ring->describe());
  }
  if (ring->degree() == 1 && ring->modulus()[0] != 0) {
    throw DomainError("degree-1 Galois ring must use f = x");
  }
  return ring;
}

std::shared_ptr<const GaloisRing> GaloisRing::integers(unsigned p) { return create(p, {0, 1}); }

std::shared_ptr<const GaloisRing> GaloisRing::quadratic(unsigned p) {
  if (p % 4 == 3) return create(p, {1, 0, 1});
  return with_degree(p, 2);
}

std::shared_ptr<const GaloisRing> GaloisRing::with_degree(unsigned p, std::size_t m) {
  if (m == 1) return integers(p);
  return create(p, first_irreducible(p, m));
}

ResidueField::ResidueField(unsigned p, std::vector<Coeff> modulus) : QuotientArithmetic(p, 1, std::move(modulus)) {}

std::shared_ptr<const ResidueField> ResidueField::create(unsigned p, std::vector<Coeff> modulus) {
  auto field = std::shared_ptr<const ResidueField>(new ResidueField(p, std::move(modulus)));
  if (field->degree() > 1 && !is_irreducible_mod_p(p, field->modulus())) {
    throw DomainError("field modulus is reducible: " + field->describe());
  }
  return field;
}

std::shared_ptr<const ResidueField> ResidueField::of(const GaloisRing& ring) {
  std::vector<Coeff> f(ring.modulus().begin(), ring.modulus().end());
  for (auto& v : f) v %= ring.p();
  return std::shared_ptr<const ResidueField>(new ResidueField(ring.p(), std::move(f)));
}

}  // namespace dcgr
