#pragma once

#include "paracone/diagrams.hpp"
#include "paracone/rootsys.hpp"

namespace paracone {

/// A parabolic subalgebra containing the fixed Cartan, encoded by its
/// nilradical root set. All members of one S(l0) share levi_unmarked, the
/// vertex set whose span carries the Levi roots.
struct Parabolic {
  const RootSystem* sys = nullptr;
  std::vector<int> levi_unmarked;  // I, sorted 1-based vertices
  std::vector<Root> nilradical;    // sorted

  friend bool operator==(const Parabolic& a, const Parabolic& b) {
    return a.levi_unmarked == b.levi_unmarked && a.nilradical == b.nilradical;
  }
  friend bool operator<(const Parabolic& a, const Parabolic& b) {
    return a.nilradical < b.nilradical;
  }
};

Parabolic standard_parabolic(const RootSystem& sys, const std::vector<int>& levi_unmarked);

/// Checks the nilradical axioms: disjoint from the Levi roots, one of each
/// +/- pair outside the Levi, and closed under root addition within
/// nilradical + Levi. Throws InternalError on violation.
void validate_parabolic(const Parabolic& p);

/// Standard form of a parabolic: the marked Dynkin diagram it is conjugate
/// to, and the Weyl element carrying the standard parabolic of that diagram
/// onto it.
struct Standardization {
  MarkedDiagram diagram;
  WeylElement to_standard;  // w with apply_weyl(w, standard(diagram)) = p
};

/// Computes the adapted base of the positive system nilradical + Levi
/// positives and reads off the standard marked diagram.
Standardization marked_diagram_of(const Parabolic& p);

Parabolic opposite(const Parabolic& p);

/// w(N) with the Levi vertex set recomputed; the image must again be a
/// standard-Levi parabolic (guaranteed for w normalizing the Levi).
Parabolic apply_weyl(const WeylElement& w, const Parabolic& p);

/// The twist at a marked vertex v of p's standardized diagram: negates the
/// nilradical inside the sub-root-system spanned by the component of v in
/// unmarked + {v}, transported to p's frame.
Parabolic twist(const Parabolic& p, int v);
Parabolic twist_with(const Parabolic& p, const Standardization& info, int v);

/// Breadth-first closure of the seed under twists at every marked vertex,
/// cross-checked against the sign-vector chamber oracle; a mismatch is a
/// hard error. Returns the set sorted by nilradical.
std::vector<Parabolic> enumerate_S(const Parabolic& seed);

/// Independent enumeration of S(l0): chambers of the hyperplane arrangement
/// that the non-Levi roots cut out of the character subspace, found by sign
/// vectors realized over exact rational points.
std::vector<Parabolic> chamber_oracle(const RootSystem& sys,
                                      const std::vector<int>& levi_unmarked);

struct ConjugacyClasses {
  std::vector<MarkedDiagram> diagrams;        // one per class
  std::vector<std::vector<int>> members;      // indices into the input set
};

/// Groups S(l0) by standardized diagram (conjugacy = equal diagram).
ConjugacyClasses conjugacy_classes(const std::vector<Parabolic>& s);

}  // namespace paracone
