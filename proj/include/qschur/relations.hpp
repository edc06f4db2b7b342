#pragma once

// The defining relations of the modified quantum group, checked on the
// generator operators of a Schur algebra over any coefficient ring.

#include "qschur/schur.hpp"

#include <string>
#include <vector>

namespace qschur {

struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void record(bool pass, const std::string& what) {
    ++checked;
    if (!pass) failures.push_back(what);
  }
};

// Binomials at a root of unity, in A_l = Z[v,v^-1]/(Phi_l), for m <= m_max
// and 0 <= k <= m:
//   [m, k] = 0 when ell | m and ell does not divide k;
//   [m1 ell + s, k1 ell + t] = v^{ell(k1 s - m1 t) + (m1+1) k1 ell^2} C(m1, k1) [s, t].
// Also records v^{2 ell} = 1 and v^{2t} != 1 for 0 < t < ell.
RelationReport check_binomial_lemma(int ell, int l, int m_max = 40);

// The table against direct flag counts. For each generator G and all B, C the
// interpolated coefficient of [C] in [G][B] is compared, at a q that was not
// used to interpolate G, with the number of middle flags. With full_products
// every product [A][B] is also compared with brute_oracle_product at each q in qs.
RelationReport check_oracle(int n, int r, bool full_products = false, const std::vector<int>& qs = {2, 3, 4, 5});

// The count N_C(q) encoded by a structure coefficient: the coefficient of [C]
// in [A][B] is v^{d_C - d_A - d_B} N_C(v^2). nullopt when not of that shape.
std::optional<Integer> count_from_coefficient(const LaurentPoly& coeff, int shift, int q);

// Every composition of r into n nonnegative parts.
std::vector<std::vector<int>> realizable_weights(int n, int r);

std::string weight_label(const std::vector<int>& d);

template <class R>
class RelationChecker {
 public:
  // coef maps the generic binomial coefficients into R.
  RelationChecker(const SchurAlgebra<R>& s, std::function<R(const LaurentPoly&)> coef)
      : s_(s), coef_(std::move(coef)), zero_(s.dim(), s.dim()) {}

  // Product of steps (leftmost first) acting on 1_d; zero if a factor vanishes.
  SparseMatrix<R> word(const std::vector<GenStep>& steps, std::vector<int> d) const {
    const SparseMatrix<R>* base = s_.generator(GeneratorKind::Idempotent, 0, 0, d);
    if (!base) return zero_;
    SparseMatrix<R> m = *base;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (it->power == 0) continue;
      const SparseMatrix<R>* g = s_.generator(it->kind, it->index, it->power, d);
      if (!g) return zero_;
      m = compose(*g, m);
      d = step_weight(*it, d);
    }
    return m;
  }

  RelationReport run() const {
    RelationReport rep;
    const int n = s_.data().n();
    const int r = s_.data().r();
    const auto weights = realizable_weights(n, r);
    const auto E = GeneratorKind::E;
    const auto F = GeneratorKind::F;

    for (const auto& d : weights)
      for (const auto& e : weights) {
        const SparseMatrix<R> p = compose(word({}, d), word({}, e));
        rep.record(p == (d == e ? word({}, d) : zero_), "1_" + weight_label(d) + " 1_" + weight_label(e));
      }

    for (const auto& d : weights)
      for (int i = 1; i < n; ++i)
        for (auto kind : {E, F}) {
          const GenStep g{kind, i, 1};
          const SparseMatrix<R> x = word({g}, d);
          const SparseMatrix<R> left = word({}, step_weight(g, d));
          const bool pass = compose(x, word({}, d)) == x && (x.is_zero() || compose(left, x) == x);
          rep.record(pass, std::string(kind == E ? "E" : "F") + std::to_string(i) + " weight shift at " +
                               weight_label(d));
        }

    for (const auto& d : weights)
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          for (int a = 1; a <= r; ++a)
            for (int b = 1; b <= r; ++b) {
              const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ",a=" +
                                      std::to_string(a) + ",b=" + std::to_string(b) + ") at " + weight_label(d);
              if (i != j) {
                rep.record(word({{E, i, a}, {F, j, b}}, d) == word({{F, j, b}, {E, i, a}}, d), "EF commute " + tag);
                continue;
              }
              const int h = d[i - 1] - d[i];
              SparseMatrix<R> rhs = zero_;
              for (int t = 0; t <= std::min(a, b); ++t) {
                const R c = coef_(gauss_binomial_general(a - b + h, t));
                if (!ring_is_zero(c)) rhs = add(rhs, word({{F, i, b - t}, {E, i, a - t}}, d), c);
              }
              rep.record(word({{E, i, a}, {F, i, b}}, d) == rhs, "E^(a)F^(b) " + tag);
              SparseMatrix<R> rhs2 = zero_;
              for (int t = 0; t <= std::min(a, b); ++t) {
                const R c = coef_(gauss_binomial_general(b - a - h, t));
                if (!ring_is_zero(c)) rhs2 = add(rhs2, word({{E, i, a - t}, {F, i, b - t}}, d), c);
              }
              rep.record(word({{F, i, b}, {E, i, a}}, d) == rhs2, "F^(b)E^(a) " + tag);
            }
        }

    for (const auto& d : weights)
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          if (std::abs(i - j) != 1) continue;
          for (auto kind : {E, F}) {
            SparseMatrix<R> sum = word({{kind, i, 2}, {kind, j, 1}}, d);
            sum = add(sum, word({{kind, i, 1}, {kind, j, 1}, {kind, i, 1}}, d), s_.map(LaurentPoly(-1)));
            sum = add(sum, word({{kind, j, 1}, {kind, i, 2}}, d), s_.one());
            rep.record(sum.is_zero(), std::string("Serre ") + (kind == E ? "E" : "F") + std::to_string(i) + "," +
                                          std::to_string(j) + " at " + weight_label(d));
          }
        }

    for (const auto& d : weights)
      for (int i = 1; i < n; ++i)
        for (auto kind : {E, F})
          for (int a = 2; a <= r; ++a) {
            const std::vector<GenStep> ones(static_cast<std::size_t>(a), GenStep{kind, i, 1});
            const SparseMatrix<R> lhs = word(ones, d);
            const SparseMatrix<R> rhs = scaled(word({{kind, i, a}}, d), coef_(quantum_factorial(a)));
            rep.record(lhs == rhs, std::string(kind == E ? "E" : "F") + std::to_string(i) + "^" + std::to_string(a) +
                                       " = [a]! divided power at " + weight_label(d));
          }
    return rep;
  }

 private:
  const SchurAlgebra<R>& s_;
  std::function<R(const LaurentPoly&)> coef_;
  SparseMatrix<R> zero_;
};

// Generic check over Z[v, v^-1].
RelationReport check_presentation(int n, int r);

}  // namespace qschur
