#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rdg {

using Seed = std::uint64_t;
using Engine = std::mt19937_64;

/// SplitMix64 finalizer (Steele, Lea & Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for one trial of one grid point. Depends only on the three indices, so
/// results do not depend on the order trials are executed in. For fixed
/// (master, grid) the map trial -> seed is a bijection.
constexpr Seed derive_trial_seed(Seed master, std::uint64_t grid_index, std::uint64_t trial_index) {
  const std::uint64_t level = mix64(mix64(master) ^ grid_index);
  return mix64(level ^ trial_index);
}

/// Counter-based uniform in [0, 1) for a (seed, key) pair. Used for coupled
/// sampling, where every model must see the same draw for the same vertex pair.
constexpr double keyed_uniform(Seed seed, std::uint64_t key) {
  const std::uint64_t bits = mix64(mix64(seed) ^ mix64(key ^ 0x5851f42d4c957f2dULL));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline Engine make_engine(Seed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return Engine(seq);
}

// std::uniform_real_distribution output is implementation defined; this is not.
inline double uniform01(Engine& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

}  // namespace rdg

namespace rdg {

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);  // multiple of bound
  std::uint64_t x = eng();
  while (x >= limit) x = eng();
  return x % bound;
}

/// Binomial(trials, p) by geometric skipping over the rarer outcome. Cost is
/// proportional to trials * min(p, 1-p); the value is exact.
inline std::uint64_t binomial(Engine& eng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  const bool flip = p > 0.5;
  const double q = flip ? 1.0 - p : p;
  const double log_miss = std::log1p(-q);
  std::uint64_t hits = 0;
  // Position of the next hit, counting from 0.
  std::uint64_t pos = 0;
  for (;;) {
    const double u = 1.0 - uniform01(eng);  // (0, 1]
    const double gap = std::floor(std::log(u) / log_miss);
    if (gap >= static_cast<double>(trials - pos)) break;
    pos += static_cast<std::uint64_t>(gap);
    ++hits;
    if (++pos >= trials) break;
  }
  return flip ? trials - hits : hits;
}

}  // namespace rdg
