#include "paracone/orbits.hpp"

#include <algorithm>

namespace paracone {

std::string JordanType::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

int FlagType::total() const {
  int t = 0;
  for (int b : blocks) t += b;
  return t;
}

std::string FlagType::str() const {
  std::string s = "(";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(blocks[i]);
  }
  return s + ")";
}

FlagType flag_type_of(const MarkedDiagram& d) {
  require(d.family == Family::A || d.family == Family::B || d.family == Family::C ||
              d.family == Family::D,
          "flag types exist for classical families only");
  require(!d.marked.empty(), "flag type needs a marked vertex");
  FlagType flag;
  int n = d.rank;
  if (d.family == Family::A) {
    int m = n + 1;
    int prev = 0;
    for (int k : d.marked) {
      flag.blocks.push_back(k - prev);
      prev = k;
    }
    flag.blocks.push_back(m - prev);
    flag.isotropic = false;
    return flag;
  }
  int m = d.family == Family::B ? 2 * n + 1 : 2 * n;
  // Isotropic subspace dimensions cut out by the marked vertices. In type D
  // a single fork tip gives an n-dimensional subspace while both tips give
  // the pair (n-1, n).
  std::set<int> dims;
  if (d.family == Family::D) {
    bool tip1 = d.marked.count(n - 1) > 0, tip2 = d.marked.count(n) > 0;
    for (int k : d.marked)
      if (k <= n - 2) dims.insert(k);
    if (tip1 && tip2) {
      dims.insert(n - 1);
      dims.insert(n);
    } else if (tip1 || tip2) {
      dims.insert(n);
    }
  } else {
    for (int k : d.marked) dims.insert(k);
  }
  std::set<int> cuts = dims;
  for (int k : dims) cuts.insert(m - k);
  int prev = 0;
  for (int k : cuts) {
    if (k > prev) flag.blocks.push_back(k - prev);
    prev = k;
  }
  if (m > prev) flag.blocks.push_back(m - prev);
  flag.isotropic = true;
  // F_i^perp = F_{s-i}: the composition must read the same both ways.
  std::vector<int> rev(flag.blocks.rbegin(), flag.blocks.rend());
  internal_check(rev == flag.blocks, "isotropic flag type is not palindromic");
  internal_check(flag.total() == m, "flag blocks do not fill the space");
  return flag;
}

FlagType flag_type_of(const Parabolic& p) {
  return flag_type_of(marked_diagram_of(p).diagram);
}

std::vector<int> transpose_partition(const std::vector<int>& parts) {
  std::vector<int> out;
  if (parts.empty()) return out;
  for (int col = 1; col <= parts[0]; ++col) {
    int cnt = 0;
    for (int p : parts)
      if (p >= col) ++cnt;
    out.push_back(cnt);
  }
  return out;
}

bool partition_valid_for(Family family, const std::vector<int>& parts) {
  if (family == Family::A) return true;
  int forbidden = family == Family::C ? 1 : 0;  // parity of restricted parts
  std::map<int, int> mult;
  for (int p : parts) mult[p]++;
  for (const auto& [p, c] : mult)
    if (p % 2 == forbidden && c % 2 != 0) return false;
  return true;
}

std::vector<int> collapse_partition(Family family, std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  if (family == Family::A) return parts;
  int forbidden = family == Family::C ? 1 : 0;
  int guard = 0;
  int total = 0;
  for (int p : parts) total += p;
  for (;;) {
    internal_check(++guard <= total * total + 4, "collapse failed to terminate");
    // Largest part of forbidden parity with odd multiplicity.
    int q = 0;
    std::map<int, int> mult;
    for (int p : parts) mult[p]++;
    for (const auto& [p, c] : mult)
      if (p % 2 == forbidden && c % 2 != 0) q = std::max(q, p);
    if (q == 0) break;
    int j = -1;
    for (int i = 0; i < (int)parts.size(); ++i)
      if (parts[i] == q) j = i;
    parts[j] -= 1;
    // Move the unit to the next slot that keeps the weak decrease.
    bool placed = false;
    for (int i = j + 1; i <= (int)parts.size(); ++i) {
      int cur = i < (int)parts.size() ? parts[i] : 0;
      if (cur + 1 <= parts[i - 1]) {
        if (i < (int)parts.size())
          parts[i] += 1;
        else
          parts.push_back(1);
        placed = true;
        break;
      }
    }
    internal_check(placed, "collapse could not rebalance");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }
  internal_check(partition_valid_for(family, parts), "collapse output fails parity");
  return parts;
}

JordanType richardson_jordan_type(Family family, const FlagType& flag) {
  require(family == Family::A || family == Family::B || family == Family::C ||
              family == Family::D,
          "Richardson Jordan types exist for classical families only");
  std::vector<int> sorted = flag.blocks;
  std::sort(sorted.rbegin(), sorted.rend());
  while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
  std::vector<int> lam = transpose_partition(sorted);
  lam = collapse_partition(family, std::move(lam));
  JordanType jt;
  jt.family = family;
  jt.m = flag.total();
  jt.parts = std::move(lam);
  if (family == Family::D) {
    jt.very_even = true;
    for (int p : jt.parts)
      if (p % 2 != 0) jt.very_even = false;
  }
  return jt;
}

long long orbit_dimension(const JordanType& jt) {
  require(partition_valid_for(jt.family, jt.parts), "parity-invalid Jordan type");
  int total = 0;
  for (int p : jt.parts) total += p;
  require(total == jt.m, "Jordan type does not fill the matrix size");
  std::vector<int> t = transpose_partition(jt.parts);
  long long sq = 0;
  for (int x : t) sq += (long long)x * x;
  long long odd = 0;
  for (int p : jt.parts)
    if (p % 2 == 1) ++odd;
  long long m = jt.m;
  switch (jt.family) {
    case Family::A:
      return m * m - sq;
    case Family::B:
    case Family::D:
      return (m * m - m) / 2 - (sq - odd) / 2;
    case Family::C:
      return (m * m + m) / 2 - (sq + odd) / 2;
    default:
      throw ConfigError("orbit dimensions exist for classical families only");
  }
}

std::optional<JordanType> codim2_neighbor(const JordanType& jt) {
  long long dim = orbit_dimension(jt);
  std::vector<JordanType> hits;
  for (auto& mu : partitions_of(jt.m)) {
    if (!partition_valid_for(jt.family, mu)) continue;
    if (mu == jt.parts || !dominates(jt.parts, mu)) continue;
    JordanType cand{mu, jt.family, jt.m, false};
    if (orbit_dimension(cand) == dim - 2) hits.push_back(std::move(cand));
  }
  if (hits.empty()) return std::nullopt;
  internal_check(hits.size() == 1, "multiple codimension-2 neighbors");
  return hits.front();
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  long long sa = 0, sb = 0, ta = 0, tb = 0;
  for (int x : a) ta += x;
  for (int x : b) tb += x;
  if (ta != tb) return false;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<std::vector<int>> partitions_of(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Descending lexicographic generation.
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

}  // namespace paracone
