#pragma once

// Overflow-checked integer helpers shared by every module.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclic {

using Int = std::int64_t;

/// Group orders are capped at 2^32 by contract.
inline constexpr Int kMaxGroupOrder = Int{1} << 32;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, unsigned exp);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Positive divisors of n in increasing order (n >= 1).
std::vector<Int> divisors(Int n);

bool is_prime(Int n);

/// Distinct prime factors in increasing order.
std::vector<Int> prime_factors(Int n);

/// If n = p^k with p prime and k >= 1 returns (p, k).
std::optional<std::pair<Int, unsigned>> prime_power(Int n);

}  // namespace cyclic
