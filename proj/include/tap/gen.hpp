#pragma once

#include <cstdint>

#include "tap/instance.hpp"

namespace tap {

// The 2-level instance behind the builtin "tight-example" case: a root with
// two leaf children and one internal child carrying four leaves, six links,
// unit costs except the zero-cost l6.
TapInstance tight_example();

// A k-level instance whose per-level link costs follow the equalizing vector
// from worst_case_costs(k).
TapInstance worst_case_instance(int k);

struct GenParams {
  int levels = 2;
  int branching = 2;
  double link_density = 0.3;
  int cost_max = 10;
  uint64_t seed = 0;
};

// Deterministic random instance: a tree with internal nodes through exactly
// `levels` levels, leaf-to-leaf links sampled with the given density, then
// zero-cost covering links until every tree edge is coverable.
TapInstance generate_instance(const GenParams& params);

}  // namespace tap
