#include "dcgr/local_ring.hpp"

#include <numeric>
#include <utility>

namespace dcgr {

namespace {

Coeff inverse_mod(Coeff a, unsigned q) {
  long long t = 0, new_t = 1, r = q, new_r = a % q;
  while (new_r != 0) {
    const long long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return static_cast<Coeff>(((t % static_cast<long long>(q)) + q) % q);
}

}  // namespace

std::vector<Coeff> ModMatrix::apply(std::span<const Coeff> v) const {
  std::vector<Coeff> out(size, 0);
  for (std::size_t r = 0; r < size; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < size; ++c) acc += static_cast<std::uint64_t>(at(r, c)) * v[c];
    out[r] = static_cast<Coeff>(acc % q);
  }
  return out;
}

std::optional<ModMatrix> invert(const ModMatrix& m, unsigned p) {
  const std::size_t n = m.size;
  const unsigned q = m.q;
  ModMatrix work = m;
  ModMatrix inv{n, q, std::vector<Coeff>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
  auto swap_rows = [n](ModMatrix& x, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) std::swap(x.at(a, c), x.at(b, c));
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work.at(piv, col) % p == 0) ++piv;
    if (piv == n) return std::nullopt;
    swap_rows(work, piv, col);
    swap_rows(inv, piv, col);
    const std::uint64_t s = inverse_mod(work.at(col, col), q);
    for (std::size_t c = 0; c < n; ++c) {
      work.at(col, c) = static_cast<Coeff>(work.at(col, c) * s % q);
      inv.at(col, c) = static_cast<Coeff>(inv.at(col, c) * s % q);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const std::uint64_t f = q - work.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work.at(r, c) = static_cast<Coeff>((work.at(r, c) + f * work.at(col, c)) % q);
        inv.at(r, c) = static_cast<Coeff>((inv.at(r, c) + f * inv.at(col, c)) % q);
      }
    }
  }
  return inv;
}

LocalRing::LocalRing(RingPtr base, RingPoly modulus) : base_(std::move(base)), g_(std::move(modulus)) {
  if (!g_.is_monic() || g_.degree() < 1) throw DomainError("LocalRing: modulus must be monic of positive degree");
  const std::size_t mb = base_->degree();
  const std::size_t dim = mb * factor_degree();
  const unsigned q = base_->q();
  const RingElement one = RingElement::one(base_);
  const RingPoly x = RingPoly::monomial(one, 1);
  const RingElement y = RingElement::variable(base_);

  auto try_candidate = [&](const RingPoly& z) -> bool {
    std::vector<std::vector<Coeff>> powers;
    RingPoly acc = RingPoly::constant(one) % g_;
    for (std::size_t k = 0; k <= dim; ++k) {
      powers.push_back(flatten(acc));
      acc = (acc * z) % g_;
    }
    ModMatrix m{dim, q, std::vector<Coeff>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = powers[c][r];
    }
    auto inv = invert(m, base_->p());
    if (!inv) return false;
    const std::vector<Coeff> rel = inv->apply(powers[dim]);
    std::vector<Coeff> f(dim + 1, 1);
    for (std::size_t k = 0; k < dim; ++k) f[k] = (q - rel[k]) % q;
    ring_ = GaloisRing::create(base_->p(), std::move(f));
    to_tower_ = std::move(m);
    from_tower_ = std::move(*inv);
    return true;
  };

  for (unsigned c = 0; c < q; ++c) {
    if (try_candidate((x + RingPoly::constant(y.scaled(c))) % g_)) return;
  }
  for (unsigned c0 = 1; c0 < q; ++c0) {
    for (unsigned c1 = 0; c1 < q; ++c1) {
      const RingPoly z = x * (one + y.scaled(c0)) + RingPoly::constant(y.scaled(c1));
      if (try_candidate(z % g_)) return;
    }
  }
  throw ConstructionError("no primitive element found for constituent ring");
}

std::vector<Coeff> LocalRing::flatten(const RingPoly& reduced) const {
  const std::size_t mb = base_->degree();
  std::vector<Coeff> v(mb * factor_degree(), 0);
  for (std::size_t j = 0; j < reduced.coeffs().size(); ++j) {
    for (std::size_t i = 0; i < mb; ++i) v[j * mb + i] = reduced.coeffs()[j][i];
  }
  return v;
}

RingElement LocalRing::to_local(const RingPoly& a) const {
  return RingElement(ring_, from_tower_.apply(flatten(reduce(a))));
}

RingPoly LocalRing::from_local(const RingElement& b) const {
  if (!b.context()->same_as(*ring_)) throw ContextError("element does not belong to this constituent ring");
  const std::vector<Coeff> v = to_tower_.apply(b.coeffs());
  const std::size_t mb = base_->degree();
  std::vector<RingElement> c;
  for (std::size_t j = 0; j < factor_degree(); ++j) {
    c.emplace_back(base_, std::vector<Coeff>(v.begin() + j * mb, v.begin() + (j + 1) * mb));
  }
  return RingPoly(base_, std::move(c));
}

}  // namespace dcgr
