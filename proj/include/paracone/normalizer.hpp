#pragma once

#include "paracone/cones.hpp"

namespace paracone {

/// A coset of N_W(L0)/W(L0), represented by an element carrying the
/// standard parabolic to one of its conjugates in S(l0). Cosets are equal
/// exactly when they act equally on M(L0).
struct CosetRep {
  WeylElement element;
  IntMat action_on_m;  // rho x rho, marked-weight coordinates

  bool is_identity() const;
};

/// Mines the quotient from S(l0): the conjugates of the standard parabolic
/// biject with N_W(L0)/W(L0), no enumeration of W involved.
std::vector<CosetRep> quotient_reps(const ChamberComplex& complex);

/// Action of a coset on a chamber, as a chamber id.
int act_on_chamber(const ChamberComplex& complex, const CosetRep& rep, int id);

struct CountReport {
  long long s = 0;  // |S(l0)|
  long long n = 0;  // conjugacy classes
  long long q = 0;  // quotient order
  bool ok = false;  // s == n * q
};

CountReport verify_count(const ChamberComplex& complex);

struct DomainReport {
  bool birational = false;
  bool cond_ii = true;                         // every chamber moves into S^1
  std::vector<std::pair<int, bool>> cond_iii;  // (rep index, images disjoint from S^1)
  bool all_nontrivial_disjoint = true;
  std::vector<int> s1_ids;
};

/// Fundamental-domain bookkeeping for the quotient action: (ii) every
/// chamber is carried into the first-kind reachable set by some coset, and
/// (iii) every nontrivial coset moves that set completely off itself.
/// The birational flag is caller-supplied; with a non-birational Springer
/// map (iii) may legitimately fail.
DomainReport fundamental_domain_check(const ChamberComplex& complex, int start_id,
                                      bool birational);

}  // namespace paracone
