#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dcgr/errors.hpp"
#include "dcgr/integers.hpp"

namespace dcgr {

using Coeff = std::uint32_t;

namespace detail {

// Z_N[x]/(f) for a monic f of degree m, N = p or p^2. Elements are dense
// coefficient vectors of length m, constant term first. All kernels accept
// aliasing between inputs and output.
class QuotientArithmetic {
 public:
  QuotientArithmetic(unsigned p, unsigned char_exponent, std::vector<Coeff> modulus);

  unsigned p() const noexcept { return p_; }
  unsigned characteristic() const noexcept { return n_; }
  std::size_t degree() const noexcept { return m_; }
  /// Monic modulus f, constant term first, size degree()+1.
  std::span<const Coeff> modulus() const noexcept { return f_; }

  BigInt order() const;
  /// order() when it fits in 64 bits, else throws BudgetError.
  std::uint64_t order_u64() const;

  bool same_as(const QuotientArithmetic& other) const noexcept;

  void add(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const;
  void sub(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const;
  void neg(std::span<const Coeff> a, std::span<Coeff> out) const;
  void scale(std::span<const Coeff> a, std::uint64_t k, std::span<Coeff> out) const;
  void mul(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const;

  /// Base-N digits of index, least significant first.
  void unpack(std::uint64_t index, std::span<Coeff> out) const;
  std::uint64_t pack(std::span<const Coeff> a) const;

  std::string describe() const;

 private:
  unsigned p_;
  unsigned n_;
  std::size_t m_;
  std::vector<Coeff> f_;
};

}  // namespace detail

/// Galois ring GR(p^2, p^{2m}) = Z_{p^2}[x]/(f), f monic with f mod p irreducible.
class GaloisRing : public detail::QuotientArithmetic {
 public:
  static std::shared_ptr<const GaloisRing> create(unsigned p, std::vector<Coeff> modulus);
  /// Z_{p^2} itself (m = 1, f = x).
  static std::shared_ptr<const GaloisRing> integers(unsigned p);
  /// GR(p^2, p^4): y^2+1 for p = 3 (mod 4), otherwise the first monic quadratic
  /// irreducible mod p in lexicographic order of (c0, c1).
  static std::shared_ptr<const GaloisRing> quadratic(unsigned p);
  /// Lifts the first monic degree-m irreducible over F_p coefficientwise.
  static std::shared_ptr<const GaloisRing> with_degree(unsigned p, std::size_t m);

  unsigned q() const noexcept { return characteristic(); }

 private:
  GaloisRing(unsigned p, std::vector<Coeff> modulus);
};

/// Residue field F_{p^m} = F_p[x]/(f).
class ResidueField : public detail::QuotientArithmetic {
 public:
  static std::shared_ptr<const ResidueField> create(unsigned p, std::vector<Coeff> modulus);
  static std::shared_ptr<const ResidueField> of(const GaloisRing& ring);

 private:
  ResidueField(unsigned p, std::vector<Coeff> modulus);
};

using RingPtr = std::shared_ptr<const GaloisRing>;
using FieldPtr = std::shared_ptr<const ResidueField>;

template <class Ctx>
class QuotientElement {
 public:
  using Context = Ctx;
  using ContextPtr = std::shared_ptr<const Ctx>;

  QuotientElement(ContextPtr ctx, std::vector<Coeff> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    const auto m = ctx_->degree();
    if (c_.size() > m) {
      throw DomainError("element has more coefficients than the ring degree");
    }
    c_.resize(m, 0);
    for (auto& v : c_) v %= ctx_->characteristic();
  }

  static QuotientElement zero(ContextPtr ctx) { return QuotientElement(ctx, {}); }
  static QuotientElement one(ContextPtr ctx) { return constant(std::move(ctx), 1); }
  static QuotientElement constant(ContextPtr ctx, long long v) {
    const long long n = ctx->characteristic();
    const long long r = ((v % n) + n) % n;
    return QuotientElement(ctx, {static_cast<Coeff>(r)});
  }
  /// The class of the indeterminate (x mod f).
  static QuotientElement variable(ContextPtr ctx) {
    if (ctx->degree() == 1) {
      auto f = ctx->modulus();
      return constant(ctx, -static_cast<long long>(f[0]));
    }
    return QuotientElement(ctx, {0, 1});
  }
  static QuotientElement from_index(ContextPtr ctx, std::uint64_t index) {
    std::vector<Coeff> c(ctx->degree());
    ctx->unpack(index, c);
    return QuotientElement(ctx, std::move(c));
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const Coeff> coeffs() const noexcept { return c_; }
  std::span<Coeff> mutable_coeffs() noexcept { return c_; }
  Coeff operator[](std::size_t i) const { return c_[i]; }
  std::uint64_t index() const { return ctx_->pack(c_); }

  bool is_zero() const noexcept {
    for (auto v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  QuotientElement& operator+=(const QuotientElement& o) {
    check(o);
    ctx_->add(c_, o.c_, c_);
    return *this;
  }
  QuotientElement& operator-=(const QuotientElement& o) {
    check(o);
    ctx_->sub(c_, o.c_, c_);
    return *this;
  }
  QuotientElement& operator*=(const QuotientElement& o) {
    check(o);
    ctx_->mul(c_, o.c_, c_);
    return *this;
  }
  friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
  friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }
  friend QuotientElement operator*(QuotientElement a, const QuotientElement& b) { return a *= b; }
  QuotientElement operator-() const {
    QuotientElement r = *this;
    ctx_->neg(r.c_, r.c_);
    return r;
  }
  /// Multiplication by an integer.
  QuotientElement scaled(long long k) const {
    const long long n = ctx_->characteristic();
    QuotientElement r = *this;
    ctx_->scale(r.c_, static_cast<std::uint64_t>(((k % n) + n) % n), r.c_);
    return r;
  }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.ctx_->same_as(*b.ctx_) && a.c_ == b.c_;
  }

  QuotientElement pow(std::uint64_t e) const {
    QuotientElement r = one(ctx_);
    QuotientElement b = *this;
    while (e != 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e != 0) b *= b;
    }
    return r;
  }
  QuotientElement pow(const BigInt& e) const {
    QuotientElement r = one(ctx_);
    const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
      r *= r;
      if (boost::multiprecision::bit_test(e, i)) r *= *this;
    }
    return r;
  }
  /// this^(p^times).
  QuotientElement pth_power(std::size_t times = 1) const {
    QuotientElement r = *this;
    for (std::size_t i = 0; i < times; ++i) r = r.pow(ctx_->p());
    return r;
  }

  void check(const QuotientElement& o) const {
    if (ctx_.get() != o.ctx_.get() && !ctx_->same_as(*o.ctx_)) {
      throw ContextError("operands live in different rings: " + ctx_->describe() + " vs " +
                         o.ctx_->describe());
    }
  }

 private:
  ContextPtr ctx_;
  std::vector<Coeff> c_;
};

using RingElement = QuotientElement<GaloisRing>;
using FieldElement = QuotientElement<ResidueField>;

}  // namespace dcgr
