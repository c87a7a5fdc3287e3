#include "dcgr/graymaps.hpp"

#include <algorithm>
#include <cmath>

namespace dcgr {

std::vector<FourSquare> four_square_decompositions(unsigned p) {
  const unsigned target = 3 * p * p;
  const unsigned q = p * p;
  std::vector<FourSquare> out;
  const auto top = static_cast<unsigned>(std::sqrt(static_cast<double>(target))) + 1;
  for (unsigned k = 0; k <= top; ++k) {
    for (unsigned s = 0; s <= k; ++s) {
      for (unsigned t = 0; t <= s; ++t) {
        for (unsigned r = 0; r <= t; ++r) {
          if (k * k + s * s + t * t + r * r != target) continue;
          const long long det = (static_cast<long long>(k) * r - static_cast<long long>(t) * s) % q;
          out.push_back({{k, s, t, r}, static_cast<unsigned>((det + q) % q)});
        }
      }
    }
  }
  return out;
}

GrayParams four_square_params(unsigned p) {
  if (!is_prime(p) || p % 4 != 3) throw DomainError("four_square_params: p must be a prime = 3 mod 4");
  GrayParams g;
  g.p = p;
  g.all_decompositions = four_square_decompositions(p);
  for (const auto& d : g.all_decompositions) {
    if (d.det % p == 0) continue;
    g.k = d.ksrt[0];
    g.s = d.ksrt[1];
    g.t = d.ksrt[2];
    g.r = d.ksrt[3];
    g.det = d.det;
    return g;
  }
  throw ConstructionError("no four-square decomposition of 3p^2 with unit determinant");
}

namespace {

void check_ring(const RingPtr& ring, const GrayParams& g) {
  const auto f = ring->modulus();
  if (ring->degree() != 2 || f[0] != 1 || f[1] != 0 || ring->p() != g.p) {
    throw ContextError("phi: ring must be Z_{p^2}[y]/(y^2 + 1) with matching p");
  }
}

RingElement times_y(const RingElement& x) { return RingElement(x.context(), {x[1] == 0 ? 0 : x.context()->q() - x[1], x[0]}); }

}  // namespace

std::pair<Coeff, Coeff> phi(const RingElement& x, const GrayParams& g) {
  check_ring(x.context(), g);
  const std::uint64_t q = g.p * g.p;
  return {static_cast<Coeff>((std::uint64_t{g.k} * x[0] + std::uint64_t{g.s} * x[1]) % q),
          static_cast<Coeff>((std::uint64_t{g.t} * x[0] + std::uint64_t{g.r} * x[1]) % q)};
}

ZVector phi(const std::vector<RingElement>& v, const GrayParams& g, std::size_t block) {
  if (block == 0) block = v.size();
  if (block == 0 || v.size() % block != 0) throw DomainError("phi: length is not a multiple of the block size");
  ZVector out(2 * v.size());
  for (std::size_t b = 0; b < v.size(); b += block) {
    for (std::size_t i = 0; i < block; ++i) {
      const auto [u, w] = phi(v[b + i], g);
      out[2 * b + i] = u;
      out[2 * b + block + i] = w;
    }
  }
  return out;
}

ZMatrix phi_matrix(const RingMatrix& m, const GrayParams& g, std::size_t block) {
  ZMatrix out;
  for (const auto& row : m) out.push_back(phi(row, g, block));
  for (const auto& row : m) {
    std::vector<RingElement> yr;
    for (const auto& v : row) yr.push_back(times_y(v));
    out.push_back(phi(yr, g, block));
  }
  return out;
}

ZMatrix phi_generator_matrix(const DCCode& code, const GrayParams& g) {
  return phi_matrix(generator_matrix(code), g, code.n());
}

std::vector<ZVector> row_space(const ZMatrix& m, unsigned q, std::uint64_t budget) {
  if (m.empty()) return {ZVector{}};
  const auto total = checked_pow(q, static_cast<unsigned>(m.size()));
  if (!total || *total > budget) throw BudgetError("row_space: too many combinations", total.value_or(UINT64_MAX), budget);
  const std::size_t cols = m.front().size();
  std::vector<ZVector> out;
  out.reserve(*total);
  std::vector<Coeff> coef(m.size(), 0);
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    ZVector w(cols, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) w[c] = static_cast<Coeff>((w[c] + coef[i] * m[i][c]) % q);
    }
    out.push_back(std::move(w));
    for (std::size_t k = 0; k < m.size() && ++coef[k] == q; ++k) coef[k] = 0;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DualityCheck check_duality_preservation(const DCCode& code, const GrayParams& g, std::uint64_t budget) {
  const unsigned q = g.p * g.p;
  const ZMatrix gc = phi_generator_matrix(code, g);
  const ZMatrix gd = phi_matrix(dual_generator(code), g, code.n());
  DualityCheck out;
  out.orthogonal = true;
  for (const auto& u : gc) {
    for (const auto& v : gd) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < u.size(); ++i) acc += std::uint64_t{u[i]} * v[i];
      out.orthogonal = out.orthogonal && acc % q == 0;
    }
  }
  out.size_code = row_space(gc, q, budget).size();
  out.size_dual = row_space(gd, q, budget).size();
  const auto full = checked_pow(q, static_cast<unsigned>(4 * code.n()));
  out.cardinality = full && out.size_code * out.size_dual == *full;
  return out;
}

std::vector<Coeff> lb_gray(Coeff x, unsigned p) {
  const unsigned r0 = x % p, r1 = (x / p) % p;
  std::vector<Coeff> out(p);
  for (unsigned i = 0; i < p; ++i) out[i] = (r1 + i * r0) % p;
  return out;
}

unsigned lb_weight(Coeff x, unsigned p) {
  x %= p * p;
  if (x == 0) return 0;
  return x % p == 0 ? p : p - 1;
}

}  // namespace dcgr
