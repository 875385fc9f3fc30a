#pragma once

#include <map>

#include "paracone/parabolics.hpp"

namespace paracone {

/// A rational point of the character space in fundamental-weight
/// coordinates (full rank; members of M(L0) vanish on unmarked vertices).
struct CharacterVector {
  RatVec fw;
};

CharacterVector character_on_marked(const RootSystem& sys, const std::vector<int>& marked,
                                    const RatVec& coords);

/// A rational simplicial cone inside M(L0), in coordinates indexed by the
/// instance's marked vertices (ascending). Facet normals are primitive
/// integer covectors, rays the dual primitive generators, and facet i is
/// labeled by a marked vertex of the owner's standardized diagram.
struct PolyhedralCone {
  std::vector<IntVec> normals;
  std::vector<IntVec> rays;
  std::vector<int> facet_vertices;
};

/// Nef cone of a parabolic: the characters pairing nonnegatively with every
/// nilradical coroot, reduced to its facet normals by exact extremal-ray
/// detection in the dual cone.
PolyhedralCone nef_cone(const Parabolic& p, const Standardization& info,
                        const std::vector<int>& marked);
PolyhedralCone nef_cone(const Parabolic& p);

struct Chamber {
  Parabolic parabolic;
  Standardization standardization;
  PolyhedralCone cone;
  int opposite = -1;
};

struct Wall {
  int a = -1, b = -1;     // chamber ids
  int va = 0, vb = 0;     // twist vertex on each side (standardized labels)
  TwistKind kind = TwistKind::SecondDivisorial;
  FlopLabel flop;
  IntVec normal_from_a;   // primitive normal of the shared hyperplane, >= 0 on a
};

/// The chamber decomposition of M(L0)_R into the nef cones of S(l0), with
/// every wall paired to the twist that crosses it.
class ChamberComplex {
 public:
  static ChamberComplex build(const RootSystem& sys, const std::vector<int>& levi_unmarked);

  const RootSystem& system() const { return *sys_; }
  const std::vector<int>& levi_unmarked() const { return levi_unmarked_; }
  const std::vector<int>& marked() const { return marked_; }
  int size() const { return (int)chambers_.size(); }
  const Chamber& chamber(int id) const { return chambers_[id]; }
  const std::vector<Wall>& walls() const { return walls_; }
  int standard_id() const { return standard_id_; }

  int chamber_of(const Parabolic& p) const;

  /// Coordinates of a character restricted to the marked vertices; rejects
  /// characters outside M(L0).
  RatVec restrict(const CharacterVector& chi) const;
  /// Same point with denominators cleared (positive scaling), for integer
  /// sign tests.
  IntVec restrict_scaled(const CharacterVector& chi) const;

  bool closed_contains(int id, const RatVec& chi_marked) const;
  bool interior_contains(int id, const RatVec& chi_marked) const;
  bool closed_contains(int id, const IntVec& chi_scaled) const;
  bool interior_contains(int id, const IntVec& chi_scaled) const;

  /// The chamber whose closed cone contains chi, minimal in the canonical
  /// order when chi lies on walls. The cover theorem guarantees existence;
  /// absence is an internal error.
  int locate(const CharacterVector& chi) const;
  std::vector<int> all_closed_containing(const CharacterVector& chi) const;
  std::vector<int> all_interior_containing(const CharacterVector& chi) const;

  /// Wall crossed from chamber id at the given facet label.
  const Wall& wall_at(int id, int vertex) const;
  int neighbor(int id, int vertex) const;

 private:
  const RootSystem* sys_ = nullptr;
  std::vector<int> levi_unmarked_;
  std::vector<int> marked_;
  std::vector<Chamber> chambers_;
  std::vector<Wall> walls_;
  std::map<std::vector<Root>, int> index_;
  std::vector<std::map<int, int>> wall_index_;
  int standard_id_ = -1;
};

enum class MovableMode { FirstKindOnly, FirstAndSmall };

/// Chambers reachable from the start through first-kind walls (S^1) or
/// first-kind plus small second-kind walls (S^*), as a cone union with an
/// exact membership test.
struct MovableUnion {
  MovableMode mode;
  std::vector<int> ids;  // sorted chamber ids
  bool member(int id) const;
};

MovableUnion movable_union(const ChamberComplex& complex, MovableMode mode, int start_id);

bool union_contains(const ChamberComplex& complex, const MovableUnion& u,
                    const CharacterVector& chi);

}  // namespace paracone
