#include "paracone/lp.hpp"

namespace paracone {

namespace {

// Tableau simplex, phase 1 only. Rows are equality constraints with b >= 0,
// columns are the structural variables followed by one artificial variable
// per row. Minimizes the sum of artificials; the system is feasible iff the
// optimum is zero.
class Phase1 {
 public:
  Phase1(const RatMat& a, const RatVec& b) {
    rows_ = (int)a.size();
    cols_ = rows_ ? (int)a[0].size() : 0;
    tab_ = RatMat(rows_, RatVec(cols_ + 1, Rat(0)));
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) {
      bool neg = b[i].sign() < 0;
      for (int j = 0; j < cols_; ++j) tab_[i][j] = neg ? -a[i][j] : a[i][j];
      tab_[i][cols_] = neg ? -b[i] : b[i];
      basis_[i] = cols_ + i;  // artificial
    }
    // reduced cost of column j for min sum(artificials): -sum_i tab[i][j]
    cost_ = RatVec(cols_ + 1, Rat(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j <= cols_; ++j) cost_[j] -= tab_[i][j];
  }

  bool solve() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j)
        if (cost_[j].sign() < 0) {
          enter = j;
          break;  // Bland: smallest index
        }
      if (enter < 0) break;
      int leave = -1;
      Rat best(0);
      for (int i = 0; i < rows_; ++i) {
        if (tab_[i][enter].sign() <= 0) continue;
        Rat ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      internal_check(leave >= 0, "phase-1 objective unbounded");
      pivot(leave, enter);
    }
    return (-cost_[cols_]).is_zero();
  }

  RatVec extract(int nvars) const {
    RatVec x(nvars, Rat(0));
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] < nvars) x[basis_[i]] = tab_[i][cols_];
    return x;
  }

 private:
  void pivot(int r, int c) {
    Rat f = tab_[r][c];
    for (int j = 0; j <= cols_; ++j) tab_[r][j] /= f;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || tab_[i][c].is_zero()) continue;
      Rat g = tab_[i][c];
      for (int j = 0; j <= cols_; ++j) tab_[i][j] -= g * tab_[r][j];
    }
    if (!cost_[c].is_zero()) {
      Rat g = cost_[c];
      for (int j = 0; j <= cols_; ++j) cost_[j] -= g * tab_[r][j];
    }
    basis_[r] = c;
  }

  int rows_ = 0, cols_ = 0;
  RatMat tab_;
  RatVec cost_;
  std::vector<int> basis_;
};

}  // namespace

std::optional<RatVec> lp_feasible_point_eq(const RatMat& a, const RatVec& b) {
  if (a.empty()) return RatVec{};
  Phase1 s(a, b);
  if (!s.solve()) return std::nullopt;
  return s.extract((int)a[0].size());
}

std::optional<RatVec> lp_feasible_point_ineq(const RatMat& g, const RatVec& b) {
  if (g.empty()) return RatVec{};
  int m = (int)g.size();
  int d = (int)g[0].size();
  // t = u - w with u, w >= 0; slack s >= 0 turns G t >= b into equalities.
  RatMat a(m, RatVec(2 * d + m, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      a[i][j] = g[i][j];
      a[i][d + j] = -g[i][j];
    }
    a[i][2 * d + i] = Rat(-1);
  }
  auto x = lp_feasible_point_eq(a, b);
  if (!x) return std::nullopt;
  RatVec t(d);
  for (int j = 0; j < d; ++j) t[j] = (*x)[j] - (*x)[d + j];
  return t;
}

bool lp_in_cone(const std::vector<IntVec>& gens, const IntVec& target) {
  size_t d = target.size();
  bool zero = true;
  for (long long x : target)
    if (x != 0) zero = false;
  if (zero) return true;
  if (gens.empty()) return false;
  RatMat a(d, RatVec(gens.size(), Rat(0)));
  RatVec b(d, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < gens.size(); ++j) a[i][j] = Rat(gens[j][i]);
    b[i] = Rat(target[i]);
  }
  return lp_feasible_point_eq(a, b).has_value();
}

}  // namespace paracone
