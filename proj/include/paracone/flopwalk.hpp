#pragma once

#include <random>

#include "paracone/cones.hpp"

namespace paracone {

/// One wall crossing of a chamber walk.
struct TwistRecord {
  int from = -1, to = -1;
  int vertex = 0;  // facet label on the `from` side
  TwistKind kind = TwistKind::SecondDivisorial;
  FlopLabel flop;
};

struct WalkTrace {
  std::vector<TwistRecord> steps;
  int start = -1;
  int final = -1;
  CharacterVector chi;
};

/// Crosses violated walls until the character is nef on the current
/// chamber: among facets pairing strictly negatively the smallest
/// standardized vertex index is crossed. Characters on walls stop without
/// crossing. Termination is guaranteed by finiteness; a revisit is an
/// internal error.
WalkTrace walk(const ChamberComplex& complex, int start_id, const CharacterVector& chi);

struct FiberStep {
  int index = 0;
  bool mukai_flop = false;  // first-kind or small second-kind central fiber
  std::string label;
};

/// Per-step central-fiber behavior: flop or divisorial crossing, and
/// whether the whole trace stays inside the S^* reachable set.
struct FiberSummary {
  std::vector<FiberStep> steps;
  bool stays_in_sstar = true;
};

FiberSummary central_fiber_summary(const WalkTrace& trace);

struct MovableWalkReport {
  int samples = 0;
  int failures = 0;
  std::optional<CharacterVector> witness;
};

/// Samples characters interior to the S^* cone union and asserts that the
/// walk from the start chamber never crosses a divisorial wall.
MovableWalkReport movable_walk_property(const ChamberComplex& complex, int start_id,
                                        int samples, uint64_t seed);

/// Seeded random character supported on the marked vertices (small exact
/// rationals).
CharacterVector random_character(const ChamberComplex& complex, std::mt19937_64& rng);

/// Seeded random character interior to the given chamber (a positive
/// integer combination of its rays).
CharacterVector random_interior_character(const ChamberComplex& complex, int id,
                                          std::mt19937_64& rng);

}  // namespace paracone
