#include "dcgr/dccode.hpp"

#include <algorithm>
#include <numeric>

#include "dcgr/residue_field.hpp"

namespace dcgr {

ElementTables::ElementTables(RingPtr ring) : ring_(std::move(ring)) {
  constexpr std::uint64_t kMaxOrder = 4096;
  if (ring_->order() > kMaxOrder) {
    throw BudgetError("element tables: ring too large", static_cast<std::uint64_t>(ring_->order() * ring_->order()),
                      kMaxOrder * kMaxOrder);
  }
  order_ = static_cast<std::uint32_t>(ring_->order_u64());
  std::vector<RingElement> el;
  el.reserve(order_);
  for (std::uint32_t i = 0; i < order_; ++i) el.push_back(RingElement::from_index(ring_, i));
  add_.resize(static_cast<std::size_t>(order_) * order_);
  mul_.resize(add_.size());
  neg_.resize(order_);
  for (std::uint32_t i = 0; i < order_; ++i) {
    neg_[i] = static_cast<std::uint16_t>((-el[i]).index());
    for (std::uint32_t j = 0; j < order_; ++j) {
      add_[i * order_ + j] = static_cast<std::uint16_t>((el[i] + el[j]).index());
      mul_[i * order_ + j] = static_cast<std::uint16_t>((el[i] * el[j]).index());
    }
  }
}

DCCode::DCCode(RingPtr ring, std::vector<RingElement> a) : ring_(std::move(ring)), a_(std::move(a)) {
  if (ring_->degree() != 2) throw DomainError("DCCode: base ring must have degree 2 over Z_{p^2}");
  if (a_.empty()) throw DomainError("DCCode: n must be positive");
  for (const auto& c : a_) {
    if (!c.context()->same_as(*ring_)) throw ContextError("DCCode: coefficient from another ring");
  }
}

DCCode DCCode::from_polynomial(RingPtr ring, std::size_t n, const RingPoly& a) {
  std::vector<RingElement> c(n, RingElement::zero(ring));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i % n] += a.coeffs()[i];
  return DCCode(std::move(ring), std::move(c));
}

namespace {

std::vector<Coeff> parse_digits(std::string_view s, unsigned q) {
  std::vector<Coeff> out;
  const bool comma = s.find(',') != std::string_view::npos;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = comma ? std::min(s.find(',', i), s.size()) : i + 1;
    const std::string_view tok = s.substr(i, j - i);
    if (tok.empty()) throw DomainError("code literal: empty coefficient");
    Coeff v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw DomainError("code literal: not a digit string");
      v = v * 10 + static_cast<Coeff>(ch - '0');
    }
    if (v >= q) throw DomainError("code literal: coefficient out of range");
    out.push_back(v);
    i = comma ? j + 1 : j;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string format_digits(const std::vector<Coeff>& c, unsigned q) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (q > 10 && k + 1 != c.size()) out += ',';
    out += std::to_string(c[k]);
  }
  return out;
}

}  // namespace

DCCode DCCode::from_digits(RingPtr ring, std::string_view a1, std::string_view a0) {
  const unsigned q = ring->characteristic();
  const auto c1 = parse_digits(a1, q), c0 = parse_digits(a0, q);
  const std::size_t n = std::max(c1.size(), c0.size());
  std::vector<RingElement> a;
  for (std::size_t i = 0; i < n; ++i) {
    a.emplace_back(ring, std::vector<Coeff>{i < c0.size() ? c0[i] : 0, i < c1.size() ? c1[i] : 0});
  }
  return DCCode(std::move(ring), std::move(a));
}

std::pair<std::string, std::string> DCCode::to_digits() const {
  const unsigned q = ring_->characteristic();
  std::vector<Coeff> c1, c0;
  for (const auto& v : a_) {
    c0.push_back(v[0]);
    c1.push_back(v[1]);
  }
  return {format_digits(c1, q), format_digits(c0, q)};
}

RingMatrix generator_matrix(const DCCode& code) {
  const std::size_t n = code.n();
  const auto& R = code.ring();
  RingMatrix g(n, std::vector<RingElement>(2 * n, RingElement::zero(R)));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = RingElement::one(R);
    for (std::size_t j = 0; j < n; ++j) g[i][n + j] = code.coefficients()[(j + n - i) % n];
  }
  return g;
}

RingMatrix dual_generator(const DCCode& code) {
  const std::size_t n = code.n();
  const auto& R = code.ring();
  RingMatrix h(n, std::vector<RingElement>(2 * n, RingElement::zero(R)));
  for (std::size_t i = 0; i < n; ++i) {
    // (A^T)[i][j] = A[j][i] = a_{(i - j) mod n}
    for (std::size_t j = 0; j < n; ++j) h[i][j] = -code.coefficients()[(i + n - j) % n];
    h[i][n + i] = RingElement::one(R);
  }
  return h;
}

RingMatrix gram(const RingMatrix& m, const RingMatrix& n) {
  RingMatrix out;
  for (const auto& u : m) {
    std::vector<RingElement> row;
    for (const auto& v : n) {
      if (u.size() != v.size()) throw DomainError("gram: row lengths differ");
      RingElement acc = RingElement::zero(u.front().context());
      for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * v[k];
      row.push_back(acc);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t residue_rank(const RingMatrix& m) {
  if (m.empty()) return 0;
  const auto field = ResidueField::of(*m.front().front().context());
  std::vector<std::vector<FieldElement>> w;
  for (const auto& row : m) {
    std::vector<FieldElement> r;
    for (const auto& v : row) r.push_back(residue(v, field));
    w.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = w.front().size();
  for (std::size_t c = 0; c < cols && rank < w.size(); ++c) {
    std::size_t piv = rank;
    while (piv < w.size() && w[piv][c].is_zero()) ++piv;
    if (piv == w.size()) continue;
    std::swap(w[piv], w[rank]);
    const FieldElement s = field_inverse(w[rank][c]);
    for (auto& v : w[rank]) v *= s;
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (r == rank || w[r][c].is_zero()) continue;
      const FieldElement f = w[r][c];
      for (std::size_t k = 0; k < cols; ++k) w[r][k] -= f * w[rank][k];
    }
    ++rank;
  }
  return rank;
}

RingPoly one_plus_aastar(const DCCode& code) {
  const std::size_t n = code.n();
  const auto& a = code.coefficients();
  std::vector<RingElement> c(n, RingElement::zero(code.ring()));
  c[0] = RingElement::one(code.ring());
  // a(x) a(x^{-1}) = sum_{i,j} a_i a_j x^{i-j}
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) c[(i + n - j) % n] += a[i] * a[j];
  }
  return RingPoly(code.ring(), std::move(c));
}

Classification classify_by_matrix(const DCCode& code) {
  const RingMatrix g = generator_matrix(code);
  const RingMatrix gg = gram(g, g);
  bool zero = true;
  for (const auto& row : gg) {
    for (const auto& v : row) zero = zero && v.is_zero();
  }
  return {zero, residue_rank(gg) == code.n()};
}

namespace {

bool is_unit_mod_xn_minus_1(const RingPoly& u, std::size_t n) {
  const auto field = ResidueField::of(*u.context());
  const FieldPoly ub = reduce_mod_p(u, field);
  if (ub.is_zero()) return false;
  return gcd(ub, FieldPoly::x_pow_minus_one(field, n)).degree() == 0;
}

}  // namespace

Classification classify_by_polynomial(const DCCode& code) {
  const RingPoly u = one_plus_aastar(code);
  return {u.is_zero(), is_unit_mod_xn_minus_1(u, code.n())};
}

bool is_self_dual(const DCCode& code) { return one_plus_aastar(code).is_zero(); }
bool is_lcd(const DCCode& code) { return is_unit_mod_xn_minus_1(one_plus_aastar(code), code.n()); }

std::shared_ptr<const CrtContext> CrtContext::create(RingPtr ring, std::size_t n) {
  return std::shared_ptr<const CrtContext>(new CrtContext(factor_xn_minus_1(ring, n)));
}

CrtContext::CrtContext(FactorSet factors) : factors_(std::move(factors)) {
  const auto& R = factors_.ring;
  const std::size_t n = factors_.n;
  const auto field = ResidueField::of(*R);
  const RingPoly xn1 = RingPoly::x_pow_minus_one(R, n);
  const FieldPoly xn1_bar = FieldPoly::x_pow_minus_one(field, n);
  const RingElement three = RingElement::constant(R, 3), two = RingElement::constant(R, 2);
  for (const auto& f : factors_.factors) {
    locals_.push_back(std::make_shared<const LocalRing>(R, f.poly));
    const FieldPoly g = reduce_mod_p(f.poly, field);
    const FieldPoly cof = xn1_bar / g;
    const Bezout bz = xgcd(cof % g, g);
    const RingPoly e = naive_lift((cof * bz.s) % xn1_bar, R);
    const RingPoly e2 = (e * e) % xn1;
    RingPoly lifted = (e2 * three - ((e2 * e) % xn1) * two) % xn1;
    if (!(((lifted * lifted) % xn1) == lifted)) throw ConstructionError("idempotent lift failed");
    idempotents_.push_back(std::move(lifted));
  }
}

unsigned CrtContext::conj_power(std::size_t i) const {
  const auto& f = factors_.factors.at(i);
  if (f.kind != FactorKind::linear && f.kind != FactorKind::self_reciprocal) {
    throw DomainError("conj_power: factor is not self-reciprocal");
  }
  const std::size_t d = f.degree();
  return d == 1 ? 0u : static_cast<unsigned>(d / 2);
}

RingElement CrtContext::transport_inverse(std::size_t from, std::size_t to, const RingElement& b) const {
  const auto& target = *locals_.at(to);
  const RingPoly src = locals_.at(from)->from_local(b);
  const RingPoly xinv = target.reduce(RingPoly::monomial(RingElement::one(ring()), n() - 1));
  RingPoly acc(ring());
  for (std::size_t k = src.coeffs().size(); k-- > 0;) {
    acc = target.reduce(acc * xinv + RingPoly::constant(src.coeffs()[k]));
  }
  return target.to_local(acc);
}

ConstituentDecomp crt_decompose(const DCCode& code, const CrtPtr& crt) {
  if (!crt || crt->n() != code.n() || !crt->ring()->same_as(*code.ring())) {
    throw ContextError("crt_decompose: factor set does not match the code");
  }
  ConstituentDecomp d{crt, {}};
  const RingPoly a = code.polynomial();
  for (std::size_t i = 0; i < crt->size(); ++i) d.locals.push_back(crt->local(i).to_local(a));
  return d;
}

ConstituentDecomp crt_decompose(const DCCode& code) {
  return crt_decompose(code, CrtContext::create(code.ring(), code.n()));
}

DCCode crt_recombine(const ConstituentDecomp& d) {
  const auto& crt = *d.crt;
  if (d.locals.size() != crt.size()) throw ContextError("crt_recombine: wrong number of constituents");
  const RingPoly xn1 = RingPoly::x_pow_minus_one(crt.ring(), crt.n());
  RingPoly acc(crt.ring());
  for (std::size_t i = 0; i < crt.size(); ++i) {
    acc += (crt.idempotent(i) * crt.local(i).from_local(d.locals[i])) % xn1;
  }
  return DCCode::from_polynomial(crt.ring(), crt.n(), acc % xn1);
}

std::vector<ConstituentVerdict> constituent_verdicts(const ConstituentDecomp& d) {
  const auto& crt = *d.crt;
  std::vector<ConstituentVerdict> out;
  for (std::size_t i = 0; i < crt.size(); ++i) {
    const auto& f = crt.factors().factors[i];
    const RingElement& b = d.locals[i];
    const RingElement one = RingElement::one(b.context());
    RingElement pairing = one;
    switch (f.kind) {
      case FactorKind::linear:
      case FactorKind::self_reciprocal:
        pairing = one + b * frobenius_power(b, crt.conj_power(i));
        break;
      case FactorKind::pair_first:
        pairing = one + b * crt.transport_inverse(*f.partner, i, d.locals[*f.partner]);
        break;
      case FactorKind::pair_second:
        continue;
    }
    out.push_back({i, pairing, pairing.is_zero(), is_unit(pairing)});
  }
  return out;
}

Classification classify_by_constituents(const ConstituentDecomp& d) {
  Classification c{true, true};
  for (const auto& v : constituent_verdicts(d)) {
    c.self_dual = c.self_dual && v.self_dual;
    c.lcd = c.lcd && v.lcd;
  }
  return c;
}

std::uint64_t hull_size(const DCCode& code, std::uint64_t budget) {
  const std::size_t n = code.n();
  const std::uint64_t q = code.ring()->order_u64();
  const auto total = checked_pow(q, static_cast<unsigned>(n));
  if (!total || *total > budget) {
    throw BudgetError("hull_size: message space exceeds budget", total.value_or(UINT64_MAX), budget);
  }
  // m G is orthogonal to every row of G iff m (G G^T) = 0.
  const ElementTables t(code.ring());
  const RingMatrix g = generator_matrix(code);
  const RingMatrix gg = gram(g, g);
  std::vector<std::uint16_t> mat;
  for (const auto& row : gg) {
    for (const auto& v : row) mat.push_back(t.index(v));
  }
  std::vector<std::uint16_t> m(n, 0);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    bool ok = true;
    for (std::size_t col = 0; col < n && ok; ++col) {
      std::uint16_t acc = 0;
      for (std::size_t r = 0; r < n; ++r) acc = t.add(acc, t.mul(m[r], mat[r * n + col]));
      ok = acc == 0;
    }
    count += ok;
    for (std::size_t k = 0; k < n && ++m[k] == q; ++k) m[k] = 0;
  }
  return count;
}

}  // namespace dcgr
