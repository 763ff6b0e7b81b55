// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

#include "wheelsep/cobweb.hpp"
#include "wheelsep/graph.hpp"
#include "wheelsep/minor_oracle.hpp"
#include "wheelsep/weights.hpp"

namespace wheelsep {

// SplitMix64: state += 0x9e3779b97f4a7c15, then the usual xor-shift-multiply
// finaliser (30/0xbf58476d1ce4e5b9, 27/0x94d049bb133111eb, 31).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound), bound > 0, by the high half of a 128-bit product.
    std::uint64_t below(std::uint64_t bound);
    // True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den);

  private:
    std::uint64_t state_;
};

inline constexpr std::size_t kRejectionBudget = 10000;

enum class Excluded { Wheel, Fan };

// Connected K4-minor-free graph on vertices 0..n-1 grown from K2 by
// subdividing an edge, adding a vertex adjacent to both ends of an edge, or
// adding a pendant vertex. n >= 1.
Graph gen_series_parallel(std::size_t n, std::uint64_t seed);

// Connected G(n, num/den) samples rejected until the oracle finds no W_ell
// (or F_ell) induced minor. Throws when n exceeds `cap` or the budget runs out.
Graph gen_oracle_filtered(std::size_t n, std::size_t ell, std::uint64_t num, std::uint64_t den, std::uint64_t seed,
                          Excluded excluded = Excluded::Wheel, std::size_t cap = kDefaultOracleCap,
                          std::size_t budget = kRejectionBudget);

// Connected G(n, num/den) sample with no filtering.
Graph gen_random_connected(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed,
                           std::size_t budget = kRejectionBudget);

// Cycle 0..m-1 plus k outside vertices m..m+k-1, each joined to a random set
// of at least two cycle vertices, resampled until it is a valid cobweb.
Cobweb gen_cobweb(std::size_t m, std::size_t k, std::uint64_t seed, std::size_t budget = kRejectionBudget);

// p/q per vertex with 1 <= q <= max_denominator and 0 <= p <= q. Unless
// `allow_trivial`, an all-zero draw gives the least vertex weight 1. `unit`
// ignores the rest and returns all ones.
Weighting gen_weighting(const Graph& g, std::uint64_t seed, std::uint64_t max_denominator, bool unit = false,
                        bool allow_trivial = false);

} // namespace wheelsep
