#pragma once

#include <utility>
#include <vector>

#include "dcgr/quotient_ring.hpp"

namespace dcgr {

RingElement inverse(const RingElement& x);
FieldElement inverse(const FieldElement& x);

/// Dense univariate polynomial over a quotient ring element type, constant term
/// first. The zero polynomial has no coefficients and degree -1.
template <class E>
class Polynomial {
 public:
  using Element = E;
  using ContextPtr = typename E::ContextPtr;

  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Polynomial(ContextPtr ctx, std::vector<E> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const E& c) { return Polynomial(c.context(), {c}); }
  static Polynomial monomial(const E& c, std::size_t deg) {
    std::vector<E> v(deg + 1, E::zero(c.context()));
    v[deg] = c;
    return Polynomial(c.context(), std::move(v));
  }
  /// x^n - 1.
  static Polynomial x_pow_minus_one(ContextPtr ctx, std::size_t n) {
    std::vector<E> v(n + 1, E::zero(ctx));
    v[n] = E::one(ctx);
    v[0] = -E::one(ctx);
    return Polynomial(ctx, std::move(v));
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<E>& coeffs() const noexcept { return c_; }
  E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : E::zero(ctx_); }
  const E& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == E::one(ctx_); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), E::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), E::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
    std::vector<E> out(a.c_.size() + b.c_.size() - 1, E::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.ctx_, std::move(out));
  }
  Polynomial operator*(const E& s) const {
    std::vector<E> out = c_;
    for (auto& v : out) v *= s;
    return Polynomial(ctx_, std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; the divisor's leading coefficient must be a unit.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    const E lead_inv = inverse(d.leading());
    std::vector<E> r = c_;
    const std::size_t dn = d.c_.size();
    if (r.size() < dn) return {Polynomial(ctx_), *this};
    std::vector<E> q(r.size() - dn + 1, E::zero(ctx_));
    for (std::size_t k = r.size(); k-- >= dn;) {
      const E t = r[k] * lead_inv;
      q[k - dn + 1] = t;
      if (t.is_zero()) continue;
      for (std::size_t j = 0; j < dn; ++j) r[k - dn + 1 + j] -= t * d.c_[j];
    }
    r.resize(dn - 1, E::zero(ctx_));
    return {Polynomial(ctx_, std::move(q)), Polynomial(ctx_, std::move(r))};
  }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }

  E eval(const E& x) const {
    E acc = E::zero(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Scaled so the leading coefficient is 1 (leading coefficient must be a unit).
  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * inverse(leading());
  }

  /// this^e mod m.
  Polynomial pow_mod(const BigInt& e, const Polynomial& m) const {
    Polynomial r = Polynomial::constant(E::one(ctx_)) % m;
    Polynomial b = *this % m;
    const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
      r = (r * r) % m;
      if (boost::multiprecision::bit_test(e, i)) r = (r * b) % m;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  ContextPtr ctx_;
  std::vector<E> c_;
};

using RingPoly = Polynomial<RingElement>;
using FieldPoly = Polynomial<FieldElement>;

/// Monic gcd over a field.
FieldPoly gcd(FieldPoly a, FieldPoly b);

/// Returns (g, s, t) with s*a + t*b = g monic gcd.
struct Bezout {
  FieldPoly g, s, t;
};
Bezout xgcd(const FieldPoly& a, const FieldPoly& b);

/// Rabin's irreducibility test over the coefficient field.
bool is_irreducible(const FieldPoly& f);

}  // namespace dcgr
