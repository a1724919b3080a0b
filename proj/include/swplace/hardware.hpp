#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "swplace/errors.hpp"

// Hierarchical router-tree hardware model. Cores sit on the leaves of a
// complete b-ary tree of depth L; R0 is the intra-core broadcast, router
// level l >= 1 connects b subtrees of level l-1. The fan-in a core may
// accept from one source core halves with every extra router level.

namespace swplace {

using SlotId = std::uint32_t;

struct HardwareConfig {
  std::uint32_t neurons_per_core = 16; // n
  std::uint32_t branching = 4;         // b, children per router
  std::uint32_t levels = 2;            // L, router levels above R0

  std::uint64_t total_slots() const {
    std::uint64_t slots = 1;
    for (std::uint32_t l = 0; l < levels; ++l) slots *= branching;
    return slots;
  }

  void validate() const {
    if (neurons_per_core < 2)
      throw std::invalid_argument("hardware: neurons_per_core must be >= 2");
    if (branching < 2)
      throw std::invalid_argument("hardware: branching must be >= 2");
    if (levels < 1)
      throw std::invalid_argument("hardware: levels must be >= 1");
    if (levels > 32)
      throw std::invalid_argument("hardware: levels out of range");
  }
};

namespace detail {

// Smallest l with a/b^l == c/b^l; 0 when equal. No range check.
inline std::uint32_t tree_level(std::uint64_t a, std::uint64_t c,
                                std::uint64_t branching) {
  std::uint32_t level = 0;
  while (a != c) {
    a /= branching;
    c /= branching;
    ++level;
  }
  return level;
}

inline std::uint32_t ceil_log(std::uint64_t base, std::uint64_t value) {
  std::uint32_t l = 0;
  std::uint64_t reach = 1;
  while (reach < value) {
    reach *= base;
    ++l;
  }
  return l;
}

} // namespace detail

// Router level at which the two slots first share an ancestor.
inline std::uint32_t tree_distance(SlotId a, SlotId b, const HardwareConfig& cfg) {
  const std::uint64_t slots = cfg.total_slots();
  if (a >= slots || b >= slots)
    throw std::invalid_argument("tree_distance: slot out of range");
  return detail::tree_level(a, b, cfg.branching);
}

// Distinct source neurons one core may accept from one source core at the
// given tree distance: n-1 locally (all-to-all without self), floor(n/2^l)
// through level-l routers.
inline std::uint32_t fan_in_allowance(std::uint32_t level, const HardwareConfig& cfg) {
  if (level > cfg.levels)
    throw std::invalid_argument("fan_in_allowance: level " + std::to_string(level) +
                                " exceeds hardware levels");
  if (level == 0) return cfg.neurons_per_core - 1;
  if (level >= 32) return 0;
  return cfg.neurons_per_core >> level;
}

// Router level implied by a quasi-metric distance dist = floor(n/e)+1.
// A pair saturating the level-l allowance (e = n/2^l) has dist = 2^l + 1,
// so the inverse is ceil(log2(dist-1)). dist = 1 (e > n, denser than one
// core) maps to level 0 by convention.
inline std::uint32_t level_from_dist(std::int64_t dist) {
  if (dist < 1)
    throw std::invalid_argument("level_from_dist: dist must be >= 1");
  if (dist == 1) return 0;
  const std::uint64_t y = static_cast<std::uint64_t>(dist - 1);
  return y == 1 ? 0u : static_cast<std::uint32_t>(std::bit_width(y - 1));
}

// Largest possible fan-in of a single neuron when every allowance in the
// whole slot grid is saturated: (b-1)*b^(l-1) cores sit at distance l.
inline std::uint64_t max_fan_in(const HardwareConfig& cfg) {
  std::uint64_t total = cfg.neurons_per_core - 1;
  std::uint64_t cores_at_level = 1; // b^(l-1)
  for (std::uint32_t level = 1; level <= cfg.levels; ++level) {
    total += (cfg.branching - 1) * cores_at_level *
             static_cast<std::uint64_t>(fan_in_allowance(level, cfg));
    cores_at_level *= cfg.branching;
  }
  return total;
}

} // namespace swplace
