#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcgr {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Order of a in (Z/n)^*. Requires gcd(a, n) = 1 and n >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

BigInt big_pow(std::uint64_t base, unsigned exp);

/// base^exp if it fits in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace dcgr
