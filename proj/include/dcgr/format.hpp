#pragma once

#include <string>

#include "json.hpp"

#include "dcgr/distance.hpp"

namespace dcgr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dc/1";

/// Numbers below 2^53 as JSON numbers, larger values as decimal strings.
Json big_json(const BigInt& v);

/// Ring element a + b*y as [a, b].
Json element_json(const RingElement& x);
/// Constant term first.
Json poly_json(const RingPoly& f);

Json to_json(const FactorSet& f);
Json to_json(const CountReport& r);
Json to_json(const GrayParams& g);
/// Timing is left out when with_timing is false, for reproducible output.
Json to_json(const DistanceReport& r, bool with_timing = true);
Json to_json(const SearchHit& h);

/// Phi table for Z_{p^2}: x, r0, r1, image, weight.
Json lb_table_json(unsigned p);

/// "weight,count" lines.
std::string histogram_csv(const DistanceReport& r);
/// One row per line, comma separated.
std::string matrix_csv(const ZMatrix& m);

}  // namespace dcgr
