#pragma once

// Test-side reference computations, written without the library's own
// algorithms: Pascal recurrences, naive long division, naive mod-p linear
// algebra, closed-form counts.

#include "qschur/laurent.hpp"
#include "qschur/theta.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

namespace oracle {

using qschur::Integer;
using qschur::LaurentPoly;

// Dense Laurent polynomial: coefficient map exponent -> integer.
using Dense = std::map<int, Integer>;

inline Dense dense(const LaurentPoly& x) {
  Dense d;
  for (const auto& [e, c] : x.terms()) d[e] = c;
  return d;
}

inline Dense trim(Dense d) {
  for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
  return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  return trim(out);
}

inline Dense add(Dense a, const Dense& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  return trim(a);
}

inline Dense mono(int e, Integer c = 1) { return trim(Dense{{e, c}}); }

// q-Pascal: [m, k] = v^k [m-1, k] + v^{-(m-k)} [m-1, k-1], in v^d.
inline Dense binom(int m, int k, int d = 1) {
  static std::map<std::tuple<int, int, int>, Dense> memo;
  if (k < 0 || k > m) return {};
  if (k == 0 || k == m) return mono(0);
  auto key = std::tuple{m, k, d};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Dense r = add(mul(mono(d * k), binom(m - 1, k, d)), mul(mono(-d * (m - k)), binom(m - 1, k - 1, d)));
  return memo[key] = r;
}

inline Integer choose(int m, int k) {
  if (k < 0 || k > m) return 0;
  Integer c = 1;
  for (int j = 0; j < k; ++j) c = c * (m - j) / (j + 1);
  return c;
}

// Phi_l by dividing v^l - 1 by every Phi_d, d | l, d < l. Coefficients,
// constant term first.
inline std::vector<Integer> phi(int l) {
  std::vector<Integer> num(static_cast<std::size_t>(l + 1), 0);
  num[0] = -1;
  num[l] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d) continue;
    const auto den = phi(d);
    std::vector<Integer> q(num.size() - den.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = num[k + den.size() - 1];
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
    }
    num = q;
  }
  return num;
}

// Remainder of x modulo Phi_l, using v^l = 1 to clear negative powers.
inline std::vector<Integer> reduce(const Dense& x, int l) {
  const auto f = phi(l);
  const int deg = static_cast<int>(f.size()) - 1;
  int lo = 0;
  for (const auto& [e, c] : x) lo = std::min(lo, e);
  const int shift = ((-lo + l - 1) / l) * l;
  int hi = 0;
  for (const auto& [e, c] : x) hi = std::max(hi, e + shift);
  std::vector<Integer> p(static_cast<std::size_t>(std::max(hi + 1, deg)), 0);
  for (const auto& [e, c] : x) p[e + shift] += c;
  for (int k = static_cast<int>(p.size()) - 1; k >= deg; --k) {
    const Integer c = p[k];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) p[k - deg + j] -= c * f[j];
  }
  p.resize(static_cast<std::size_t>(deg));
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Number of k-dimensional subspaces of F_q^r, by the product formula.
inline std::uint64_t subspaces(int q, int r, int k) {
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(Integer(q), r - i) - 1;
    den *= boost::multiprecision::pow(Integer(q), k - i) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

// ---- naive linear algebra over a prime field ----

using Mat = std::vector<std::vector<int>>;

inline int rank_mod(Mat m, int p) {
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(m.size()); ++i)
      if (m[i][c] % p) piv = i;
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    int inv = 1;
    while ((m[rank][c] * inv) % p != 1) ++inv;
    for (auto& x : m[rank]) x = (x * inv) % p;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const int f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// dim(U cap W) = dim U + dim W - dim(U + W), for spanning sets.
inline int meet_dim(const Mat& u, const Mat& w, int p) {
  Mat both = u;
  both.insert(both.end(), w.begin(), w.end());
  return rank_mod(u, p) + rank_mod(w, p) - rank_mod(both, p);
}

// Orbit matrix of two flags (prefix spans), each given by per-step spanning rows.
inline qschur::ThetaMatrix invariant(const std::vector<Mat>& f, const std::vector<Mat>& g, int p) {
  const int n = static_cast<int>(f.size());
  auto dim = [&](int i, int j) {
    if (i == 0 || j == 0) return 0;
    return meet_dim(f[i - 1], g[j - 1], p);
  };
  std::vector<int> e;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) e.push_back(dim(i, j) - dim(i - 1, j) - dim(i, j - 1) + dim(i - 1, j - 1));
  return qschur::ThetaMatrix(n, e);
}

// ---- representation theory ----

// dim of the irreducible gl_n module of highest weight lambda (a partition),
// by the hook content formula with n rows.
inline Integer weyl_dim(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

// The Fayers-Martin formula, entry by entry.
inline std::map<qschur::ThetaMatrix, int> fm(const qschur::ThetaMatrix& a, int p) {
  std::map<qschur::ThetaMatrix, int> out;
  const int x = a.at(0, 0), b = a.at(0, 1), c = a.at(1, 0), d = a.at(1, 1);
  if (b == 0 || c == 0) {
    out[qschur::ThetaMatrix(2, {p * x, p * b, p * c, p * d})] = 1;
    return out;
  }
  for (int e = 0; e < p; ++e) out[qschur::ThetaMatrix(2, {p * x + e, p * b - e, p * c - e, p * d + e})] += 1;
  return out;
}

// ---- generators for property tests ----

inline LaurentPoly random_laurent(std::mt19937_64& rng, int span = 4, int coeff = 5) {
  std::uniform_int_distribution<int> e(-span, span), c(-coeff, coeff), terms(0, 4);
  LaurentPoly x;
  for (int k = terms(rng); k > 0; --k) x += LaurentPoly::monomial(e(rng), c(rng));
  return x;
}

inline qschur::ThetaMatrix random_theta(std::mt19937_64& rng, int n, int r) {
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  std::uniform_int_distribution<int> cell(0, n * n - 1);
  for (int k = 0; k < r; ++k) ++e[cell(rng)];
  return qschur::ThetaMatrix(n, e);
}

}  // namespace oracle
