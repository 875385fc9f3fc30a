#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "paracone/linalg.hpp"

namespace paracone {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_char(Family f);

/// Rank constraints of the irreducible families
/// (A: n>=1, B: n>=2, C: n>=3, D: n>=4, E: 6..8, F: 4, G: 2).
bool valid_family_rank(Family f, int rank);

/// Cartan matrix in Bourbaki numbering, 0-based internally.
/// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so the simple
/// reflection acts by s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i.
IntMat cartan_matrix(Family f, int rank);

/// Squared root lengths per vertex, normalized so short roots have length
/// squared 2 (simply laced: all 2; B: long 4 / short 2; G: long 6).
std::vector<int> length_table(Family f, int rank);

int expected_root_count(Family f, int rank);

/// A root in integer simple-root coordinates (0-based array, vertex i at
/// index i-1).
struct Root {
  std::vector<int> coords;

  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
  friend bool operator<(const Root& a, const Root& b) { return a.coords < b.coords; }
  Root negated() const;
  std::string str() const;
};

/// A Weyl group element as an integer matrix on simple-root coordinates.
/// Column j is the coordinate vector of the image of alpha_{j+1}.
struct WeylElement {
  IntMat mat;
  std::vector<int> word;  // reduced word in 1-based simple reflections, may be empty

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.mat == b.mat; }
};

class RootSystem {
 public:
  static RootSystem build(Family f, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  const IntMat& cartan() const { return cartan_; }
  const std::vector<int>& length_sq() const { return len_sq_; }

  const std::vector<Root>& all_roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positives_; }
  bool is_root(const Root& r) const;
  bool is_positive(const Root& r) const;
  int root_length_sq(const Root& r) const;

  /// <x, alpha_i^vee> for x given in simple-root coordinates (1-based i).
  long long simple_pairing(int i, const Root& x) const;

  /// Integer coordinates of beta^vee in the simple coroot basis.
  IntVec coroot(const Root& beta) const;

  /// <chi, beta^vee> for chi in fundamental-weight coordinates.
  Rat pairing(const RatVec& chi_fw, const Root& beta) const;

  Root reflect(int i, const Root& r) const;  // 1-based simple reflection

  WeylElement identity_element() const;
  WeylElement simple_reflection(int i) const;  // 1-based
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;  // a after b
  WeylElement inverse(const WeylElement& w) const;
  Root apply(const WeylElement& w, const Root& r) const;

  /// Action of w on fundamental-weight coordinates (the same linear map on
  /// the character space, written in the weight basis; always integral).
  IntMat weight_action(const WeylElement& w) const;
  RatVec apply_to_character(const WeylElement& w, const RatVec& chi_fw) const;

  /// The unique w with w(standard base) = base as unordered sets.
  /// Greedy descent through simple reflections; errors when the input is
  /// not a base of the root system.
  WeylElement weyl_to_standard(const std::vector<Root>& base) const;

  /// Permutation of a connected subdiagram induced by -w0 of its
  /// sub-root-system; identity when -1 lies in that Weyl group.
  /// Vertices 1-based; errors on a disconnected component.
  std::map<int, int> minus_w0_vertex_permutation(const std::vector<int>& component) const;

  /// Order of the Weyl group by breadth-first generation, capped: requests
  /// whose BFS exceeds the limit fail loudly.
  long long weyl_group_order(long long limit = 1000000) const;

  bool adjacent(int i, int j) const;  // 1-based diagram adjacency
  /// Connected component of v inside the induced subdiagram on `allowed`.
  std::vector<int> component_of(int v, const std::set<int>& allowed) const;
  /// Splits a vertex set into connected components (each sorted).
  std::vector<std::vector<int>> components(const std::set<int>& vertices) const;

  /// All roots whose support lies in the given vertex set.
  std::vector<Root> subsystem_roots(const std::set<int>& vertices) const;

  /// Simple system of a positive system given as a set of roots: the
  /// elements that are not sums of two others.
  std::vector<Root> simple_system_of(const std::vector<Root>& positive_system) const;

  long long height(const Root& r) const;

 private:
  Family family_;
  int rank_ = 0;
  IntMat cartan_;
  std::vector<int> len_sq_;
  std::vector<Root> roots_;
  std::vector<Root> positives_;
  std::map<std::vector<int>, int> root_index_;
  RatMat cartan_inv_;
};

}  // namespace paracone
