#pragma once

#include <optional>
#include <set>
#include <string>

#include "paracone/rootsys.hpp"

namespace paracone {

/// A Dynkin diagram with a distinguished (black) vertex set; the white
/// complement generates the Levi.
struct MarkedDiagram {
  Family family;
  int rank = 0;
  std::set<int> marked;  // 1-based Bourbaki indices

  std::set<int> unmarked() const;
  std::string str() const;

  friend bool operator==(const MarkedDiagram& a, const MarkedDiagram& b) {
    return a.family == b.family && a.rank == b.rank && a.marked == b.marked;
  }
  friend bool operator<(const MarkedDiagram& a, const MarkedDiagram& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.marked < b.marked;
  }
};

enum class TwistKind { FirstKind, SecondSmall, SecondDivisorial };

std::string twist_kind_str(TwistKind k);

/// Mukai flop label attached to a wall crossing; DivisorialNoFlop marks
/// divisorial walls that carry no flop.
struct FlopLabel {
  enum class Type { A, Dfork, E6_I, E6_II, B, C, Dchain, DivisorialNoFlop };
  Type type = Type::DivisorialNoFlop;
  int n = 0;  // family parameter (A(n,k): n = vertex count + 1)
  int k = 0;
  std::optional<std::string> canonical_alias;

  std::string str() const;
  friend bool operator==(const FlopLabel& a, const FlopLabel& b) {
    return a.type == b.type && a.n == b.n && a.k == b.k;
  }
};

/// Classification of a single marked diagram into first kind (dual-diagram
/// flop), small second kind (2-s) or divisorial second kind (2-d).
struct SingleMarkedClass {
  TwistKind kind = TwistKind::SecondDivisorial;
  FlopLabel label;
  std::optional<MarkedDiagram> dual;  // present exactly for the first kind
};

/// The maximal connected single marked subdiagram containing marked vertex
/// v: v together with the component of v inside unmarked + {v}, identified
/// as an abstract marked diagram in its own Bourbaki numbering. Among the
/// valid numberings the one giving the marked vertex the smallest index is
/// chosen.
MarkedDiagram single_marked_subdiagram(const MarkedDiagram& d, int v);

SingleMarkedClass classify(const MarkedDiagram& single);

FlopLabel flop_label(const SingleMarkedClass& cls);

}  // namespace paracone
