#pragma once

#include <optional>

#include "paracone/parabolics.hpp"

namespace paracone {

/// A nilpotent orbit of a classical Lie algebra, as the partition of its
/// Jordan block sizes. B/D partitions have even parts with even
/// multiplicity, C partitions odd parts with even multiplicity.
struct JordanType {
  std::vector<int> parts;  // weakly decreasing, positive
  Family family = Family::A;
  int m = 0;               // ambient matrix size
  bool very_even = false;  // type D with all parts even (two orbits, one label)

  std::string str() const;
  friend bool operator==(const JordanType& a, const JordanType& b) {
    return a.parts == b.parts && a.family == b.family && a.m == b.m;
  }
};

/// Block sizes of the (isotropic) flag stabilized by a parabolic; for B/C/D
/// the composition is palindromic.
struct FlagType {
  std::vector<int> blocks;
  bool isotropic = false;

  int total() const;
  std::string str() const;
};

FlagType flag_type_of(const MarkedDiagram& diagram);
FlagType flag_type_of(const Parabolic& p);

/// Jordan type of the Richardson orbit: transpose of the sorted flag type,
/// collapsed to the nearest valid orthogonal/symplectic partition.
JordanType richardson_jordan_type(Family family, const FlagType& flag);

long long orbit_dimension(const JordanType& jt);

/// The unique partition directly below in dominance order with orbit
/// codimension exactly 2, when it exists. More than one is an error.
std::optional<JordanType> codim2_neighbor(const JordanType& jt);

// Partition toolkit (exposed for tests and the verification suite).
std::vector<int> transpose_partition(const std::vector<int>& parts);
bool partition_valid_for(Family family, const std::vector<int>& parts);
std::vector<int> collapse_partition(Family family, std::vector<int> parts);
bool dominates(const std::vector<int>& a, const std::vector<int>& b);
std::vector<std::vector<int>> partitions_of(int m);

}  // namespace paracone
