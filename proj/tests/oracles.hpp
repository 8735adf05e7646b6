// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "k3cliff/lattice.hpp"

namespace k3cliff::test {

// Intersection pairing evaluated through the Gram matrix entry by entry,
// v1^T G v2, as an independent route to the closed formula.
inline Int gram_pairing(const Int& g, const Int& d, const DivisorClass& a,
                        const DivisorClass& b) {
  const Int gram[2][2] = {{2 * (g - 1), d}, {d, Int(0)}};
  const Int va[2] = {a.x, a.y};
  const Int vb[2] = {b.x, b.y};
  Int total = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) total += va[i] * gram[i][j] * vb[j];
  return total;
}

// Box scan collecting every class with B^2 = -2. Plain int64 is exact for
// the |x|,|y| <= 1000 boxes at grid-sized g, d.
inline std::vector<std::pair<std::int64_t, std::int64_t>> scan_roots(
    std::int64_t g, std::int64_t d, std::int64_t radius) {
  std::vector<std::pair<std::int64_t, std::int64_t>> hits;
  for (std::int64_t x = -radius; x <= radius; ++x)
    for (std::int64_t y = -radius; y <= radius; ++y)
      if (2 * x * ((g - 1) * x + d * y) == -2) hits.emplace_back(x, y);
  return hits;
}

// Box scan for base-point-freeness obstructions B^2 = 0, B.L = 1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> scan_bpf_obstructions(
    std::int64_t g, std::int64_t d, std::int64_t radius) {
  std::vector<std::pair<std::int64_t, std::int64_t>> hits;
  for (std::int64_t x = -radius; x <= radius; ++x)
    for (std::int64_t y = -radius; y <= radius; ++y)
      if (2 * x * ((g - 1) * x + d * y) == 0 && 2 * (g - 1) * x + d * y == 1)
        hits.emplace_back(x, y);
  return hits;
}

// Ten fixed surfaces for randomized property suites: a mix of d | g and
// d -| g, both range boundaries, and the smallest legal models.
inline std::vector<std::pair<int, int>> property_surfaces() {
  return {{3, 2}, {3, 3}, {4, 2}, {5, 3}, {6, 3},
          {7, 4}, {9, 4}, {10, 6}, {20, 11}, {60, 31}};
}

// Deterministic grid points for the box-scan cross-checks; 24 >= 20 pairs
// covering corners, range boundaries and divisible cases.
inline std::vector<std::pair<int, int>> scan_grid_points() {
  return {{3, 2},  {3, 3},   {4, 2},  {4, 3},  {5, 3},  {6, 3},
          {6, 4},  {7, 4},   {8, 3},  {9, 4},  {10, 6}, {12, 6},
          {15, 8}, {18, 9},  {20, 11}, {24, 13}, {30, 16}, {36, 18},
          {40, 21}, {45, 24}, {50, 26}, {55, 29}, {59, 31}, {60, 31}};
}

// Random classes in the documented coordinate envelope.
class ClassGenerator {
 public:
  explicit ClassGenerator(std::uint64_t seed) : rng_(seed), coord_(-1000000, 1000000) {}
  DivisorClass next() { return {Int(coord_(rng_)), Int(coord_(rng_))}; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<std::int64_t> coord_;
};

}  // namespace k3cliff::test
