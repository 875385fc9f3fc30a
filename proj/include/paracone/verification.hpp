#pragma once

#include <memory>

#include "paracone/flopwalk.hpp"
#include "paracone/normalizer.hpp"
#include "paracone/orbits.hpp"

namespace paracone {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

/// One instance = (family, rank, marked vertex set). Owns the root system
/// and its chamber complex; the complex construction already cross-checks
/// the twist closure against the chamber oracle.
class Instance {
 public:
  Instance(Family family, int rank, std::vector<int> marked);

  const RootSystem& system() const { return *sys_; }
  const ChamberComplex& complex() const { return *complex_; }
  const std::vector<int>& marked() const { return marked_; }
  std::string label() const;

  bool classical() const;

  // Per-instance checks. Each returns pass/fail plus a short summary.
  CheckResult check_counting() const;              // |S| = N*q, classes all of size q
  CheckResult check_oracle_equivalence() const;    // fresh oracle run vs chambers
  CheckResult check_antipodal() const;             // opposite <-> negated nef cone
  CheckResult check_cover(int samples, uint64_t seed) const;
  CheckResult check_equivariance() const;          // coset transport of cones
  CheckResult check_adjacency_twist() const;       // walls exchanged by their twists
  CheckResult check_walk_agreement(int samples, uint64_t seed) const;
  CheckResult check_movable_property(int samples, uint64_t seed) const;
  CheckResult check_dimension_identity() const;    // classical: dim = 2|nilradical|

 private:
  std::unique_ptr<RootSystem> sys_;
  std::unique_ptr<ChamberComplex> complex_;
  std::vector<int> marked_;
};

/// Closed-form Jordan types of the small B/C flags and their
/// codimension-2 neighbors, for all admissible parameters up to the given
/// rank.
CheckResult check_collapse_vectors(int max_n);

/// Borel counts: |S(h)| equals the Weyl group order generated by BFS.
CheckResult check_borel_counts();

/// Curated Springer-degree table for the fundamental-domain checks; the
/// engine never computes degrees itself.
std::optional<bool> curated_birational(Family family, int rank, const std::vector<int>& marked);

/// All valid (family, rank <= max_rank) pairs.
std::vector<std::pair<Family, int>> families_up_to(int max_rank);

/// All nonempty marked subsets of 1..rank in deterministic order.
std::vector<std::vector<int>> all_markings(int rank);

}  // namespace paracone
