#include "paracone/linalg.hpp"

#include <cstdlib>

namespace paracone {

Rat parse_rat(const std::string& s) {
  require(!s.empty(), "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    require(d != 0, "zero denominator in '" + s + "'");
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad rational literal '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ConfigError("rational literal out of range '" + s + "'");
  }
}

IntMat identity_mat(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  int n = (int)a.size(), k = (int)b.size(), p = (int)b[0].size();
  IntMat c(n, IntVec(p, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      long long av = a[i][t];
      if (av == 0) continue;
      for (int j = 0; j < p; ++j) c[i][j] += av * b[t][j];
    }
  return c;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
  IntVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), p = b[0].size();
  RatMat c(n, RatVec(p, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    r[i] = RatVec(m[i].begin(), m[i].end());
  return r;
}

std::optional<RatMat> rat_inverse(const RatMat& m) {
  int n = (int)m.size();
  RatMat a = m;
  RatMat inv = to_rat(identity_mat(n));
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= f;
      inv[col][j] /= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat g = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  int n = (int)a.size();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat f = a[col][col];
    for (int j = col; j < n; ++j) a[col][j] /= f;
    b[col] /= f;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat g = a[r][col];
      for (int j = col; j < n; ++j) a[r][j] -= g * a[col][j];
      b[r] -= g * b[col];
    }
  }
  return b;
}

Rat rat_det(RatMat m) {
  int n = (int)m.size();
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat f = m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat g = m[r][col] / f;
      for (int j = col; j < n; ++j) m[r][j] -= g * m[col][j];
    }
  }
  return det;
}

bool is_integral(const RatMat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x.den != 1) return false;
  return true;
}

IntMat to_int(const RatMat& m) {
  internal_check(is_integral(m), "expected integral matrix");
  IntMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& x : m[i]) r[i].push_back(x.num);
  }
  return r;
}

IntVec primitive(IntVec v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (long long& x : v) x /= g;
  return v;
}

IntVec primitive_of(const RatVec& v) {
  long long l = 1;
  for (const auto& x : v) l = std::lcm(l, x.den);
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    r[i] = detail::narrow((__int128)v[i].num * (l / v[i].den));
  return primitive(std::move(r));
}

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && !b[i].is_zero()) s += Rat(a[i]) * b[i];
  return s;
}

}  // namespace paracone
