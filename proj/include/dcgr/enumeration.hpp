#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcgr/dccode.hpp"
#include "dcgr/integers.hpp"

namespace dcgr {

struct OracleOptions {
  /// Largest constituent ring the oracles will scan.
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

/// Exhaustive scan of b = alpha + p*beta over a constituent ring with conjugation F^k.
struct SelfDualOracle {
  std::uint64_t count = 0;         // 1 + b*conj(b) = 0
  std::uint64_t system_count = 0;  // 1 + B' = 0 and beta*F^k(alpha) + F^k(beta)*alpha - P_p(1, B') = 0 mod p
  bool sets_equal = false;
};
SelfDualOracle oracle_constituent_selfdual(const RingPtr& local, unsigned conj_power, const OracleOptions& opt = {});

struct LcdOracle {
  std::uint64_t count = 0;            // 1 + b*conj(b) a unit
  std::uint64_t non_lcd = 0;          // 1 + b*conj(b) in pR
  std::uint64_t alpha_solutions = 0;  // Teichmuller alpha with 1 + B' = 0 mod p
  bool sets_equal = false;            // non-LCD set = {alpha solutions} x {all beta}
};
LcdOracle oracle_constituent_lcd(const RingPtr& local, unsigned conj_power, const OracleOptions& opt = {});

/// Pairs (b', c') over the constituent ring of one half of a reciprocal pair.
struct PairOracle {
  BigInt units;            // dual pairs: c' = -1/b'
  BigInt lcd_nonunit_class;  // b' in pR': every c' qualifies
  BigInt lcd_unit_class;     // b' a unit: c' avoids one residue class
  BigInt lcd_pairs;
  std::size_t spot_checks = 0;
  bool spot_checks_agree = false;
};
PairOracle oracle_pair_constituents(const RingPtr& local, const OracleOptions& opt = {}, std::uint64_t seed = 1,
                                    std::size_t spot_checks = 100);

struct ConstituentCount {
  std::size_t factor = 0;
  FactorKind kind = FactorKind::linear;
  std::size_t degree = 0;
  BigInt u;  // p^d on self-reciprocal factors, p^{2e} on pairs, p^2 on x -+ 1
  BigInt formula;
  std::optional<BigInt> oracle;
};

struct CountReport {
  unsigned p = 0;
  std::uint64_t n = 0;
  std::string quantity;    // "self_dual" or "lcd"
  std::string provenance;  // formula family used for formula_value
  BigInt formula_value;
  BigInt general_value;  // product over constituents, for every factorization shape
  std::optional<BigInt> oracle_value;
  std::string oracle_status;  // "match", "mismatch" or "skipped"
  std::optional<BigInt> statement_variant;
  std::vector<ConstituentCount> constituents;
  std::vector<std::string> notes;
};

CountReport count_self_dual(unsigned p, std::uint64_t n, const OracleOptions& opt = {}, bool run_oracle = true);
CountReport count_lcd(unsigned p, std::uint64_t n, const OracleOptions& opt = {}, bool run_oracle = true);

/// Self-dual codes indexed by one solution per constituent (or reciprocal pair).
/// Requires gcd(n, p) = 1.
class SelfDualSampler {
 public:
  SelfDualSampler(unsigned p, std::uint64_t n);

  /// Number of self-dual codes; fits in 64 bits for every n this class is built for.
  std::uint64_t size() const noexcept { return total_; }
  DCCode code(std::uint64_t index) const;

 private:
  using Option = std::vector<std::pair<std::size_t, RingElement>>;
  CrtPtr crt_;
  std::vector<std::vector<Option>> slots_;
  std::uint64_t total_ = 1;
};

/// Every self-dual double circulant code of length 2n, built by CRT from the
/// per-constituent solution sets.
std::vector<DCCode> generate_all_self_dual(unsigned p, std::uint64_t n, std::uint64_t budget = 10'000'000,
                                           unsigned threads = 1);

/// q-ary entropy on [0, (q-1)/q].
double entropy(unsigned q, double y);
/// The preimage of target in (0, (q-1)/q), by bisection.
double entropy_inverse(unsigned q, double target);

enum class CodeKind { self_dual, lcd };
/// H_p^{-1}(1/(8p)) for self-dual families, H_p^{-1}(1/(4p)) for LCD.
double asymptotic_delta(unsigned p, CodeKind kind);

std::string to_string(CodeKind kind);
CodeKind parse_code_kind(const std::string& s);

}  // namespace dcgr
