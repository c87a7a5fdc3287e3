#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dcgr/dccode.hpp"

namespace dcgr {

/// Integer vector over Z_{p^2}, entries in [0, p^2).
using ZVector = std::vector<Coeff>;
using ZMatrix = std::vector<ZVector>;

struct FourSquare {
  std::array<unsigned, 4> ksrt;
  unsigned det;  // (k*r - t*s) mod p^2
};

struct GrayParams {
  unsigned p = 0;
  unsigned k = 0, s = 0, t = 0, r = 0;
  unsigned det = 0;
  /// Every non-increasing k >= s >= t >= r >= 0 with sum of squares 3p^2.
  std::vector<FourSquare> all_decompositions;
};

std::vector<FourSquare> four_square_decompositions(unsigned p);

/// First non-increasing decomposition of 3p^2 in lexicographic order whose
/// determinant is a unit mod p. Requires p = 3 mod 4.
GrayParams four_square_params(unsigned p);

/// a + b*y -> (k*a + s*b, t*a + r*b).
std::pair<Coeff, Coeff> phi(const RingElement& x, const GrayParams& g);

/// Images of consecutive blocks of `block` coordinates, each laid out as all
/// first components then all second components. block = 0 means one block.
ZVector phi(const std::vector<RingElement>& v, const GrayParams& g, std::size_t block = 0);

/// Rows phi(row) followed by rows phi(y*row); a Z_{p^2} generating set for phi(<M>).
ZMatrix phi_matrix(const RingMatrix& m, const GrayParams& g, std::size_t block);

/// 2n x 4n generator matrix of phi(C), component-major inside each n-block.
ZMatrix phi_generator_matrix(const DCCode& code, const GrayParams& g);

/// All distinct Z_{q} combinations of the rows; throws BudgetError past `budget` combinations.
std::vector<ZVector> row_space(const ZMatrix& m, unsigned q, std::uint64_t budget = 10'000'000);

struct DualityCheck {
  bool orthogonal = false;       // phi(C) . phi(C^perp) = 0
  std::uint64_t size_code = 0;   // |phi(C)|
  std::uint64_t size_dual = 0;   // |phi(C^perp)|
  bool cardinality = false;      // |phi(C)| * |phi(C^perp)| = p^{8n}
  bool holds() const { return orthogonal && cardinality; }
};
DualityCheck check_duality_preservation(const DCCode& code, const GrayParams& g, std::uint64_t budget = 10'000'000);

/// x = r0 + p*r1 -> (r1 + i*r0 mod p) for i = 0..p-1.
std::vector<Coeff> lb_gray(Coeff x, unsigned p);
/// Hamming weight of lb_gray(x, p).
unsigned lb_weight(Coeff x, unsigned p);

}  // namespace dcgr
