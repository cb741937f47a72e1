#pragma once

// Small deterministic generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "cyclic/arith.hpp"

namespace testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  cyclic::Int uniform(cyclic::Int lo, cyclic::Int hi) {
    return std::uniform_int_distribution<cyclic::Int>(lo, hi)(rng_);
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(
        uniform(0, static_cast<cyclic::Int>(items.size()) - 1))];
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kTrials = 500;

}  // namespace testgen
