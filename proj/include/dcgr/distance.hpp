#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcgr/enumeration.hpp"
#include "dcgr/graymaps.hpp"

namespace dcgr {

/// phi: Hamming distance of phi(C) over Z_{p^2}. phi_then_lb: Hamming distance of Phi(phi(C)) over F_p.
enum class DistanceTarget { phi, phi_then_lb };

std::string to_string(DistanceTarget t);
/// "phi", "lb" or "phi_then_lb".
DistanceTarget parse_distance_target(const std::string& s);

/// DC_BUDGET from the environment (e.g. "1e8"), else 1e8.
std::uint64_t default_budget();

struct DistanceOptions {
  std::uint64_t budget = default_budget();
  unsigned threads = 1;
  bool histogram = false;
  /// Bound-only mode: stop once some codeword has target weight <= stop_at.
  std::optional<unsigned> stop_at;
};

struct DistanceReport {
  std::string a1, a0;
  unsigned p = 0;
  std::size_t n = 0;
  DistanceTarget target = DistanceTarget::phi;
  std::string alphabet;      // "Z_p2" or "F_p"
  std::size_t length = 0;    // 4n over Z_{p^2}, 4np over F_p
  std::uint64_t codewords = 0;
  std::uint64_t enumerated = 0;  // nonzero messages visited
  std::optional<unsigned> min_distance;
  bool exact = false;
  /// Set in bound-only mode when a word of weight <= stop_at exists.
  bool below_stop = false;
  std::vector<std::uint64_t> histogram;  // histogram[w] = number of codewords of weight w
  double seconds = 0.0;
  std::uint64_t budget = 0;
};

/// The message space exceeded the budget. The first `budget` messages were
/// still scanned; their minimum is an upper bound on the distance.
class DistanceBudgetError : public BudgetError {
 public:
  DistanceBudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget,
                      std::optional<unsigned> upper_bound)
      : BudgetError(what, required, budget), upper_bound_(upper_bound) {}
  std::optional<unsigned> upper_bound() const noexcept { return upper_bound_; }

 private:
  std::optional<unsigned> upper_bound_;
};

/// Minimum over all nonzero codewords m(x)(1, a(x)) of the weight of the requested image.
DistanceReport enumerate_min_distance(const DCCode& code, const GrayParams& g, DistanceTarget target,
                                      const DistanceOptions& opt = {});

struct DistancePair {
  unsigned d_phi = 0;
  unsigned d_lb = 0;
};
/// Both minima in one pass.
DistancePair min_distances(const DCCode& code, const GrayParams& g, const DistanceOptions& opt = {});

struct SearchHit {
  std::string a1, a0;
  bool self_dual = false;
  bool lcd = false;
  unsigned d_phi = 0;
  unsigned d_lb = 0;
};

/// Random codes of the given kind; returns the Pareto front on (d_phi, d_lb),
/// best d_lb first. Deterministic in seed.
std::vector<SearchHit> random_search(unsigned p, std::size_t n, CodeKind kind, std::uint64_t seed,
                                     std::uint64_t iterations, const DistanceOptions& opt = {});

}  // namespace dcgr
