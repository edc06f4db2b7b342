#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qschur/flaggeom.hpp"
#include "qschur/relations.hpp"

#include <random>
#include <set>

using namespace qschur;

namespace {

ThetaMatrix m2(int a, int b, int c, int d) { return ThetaMatrix(2, {a, b, c, d}); }

FVec vec(std::vector<int> x) { return FVec(x.begin(), x.end()); }

// Flag from prefix spanning rows; the last step is the whole space.
Flag flag_of(const PrimePowerField& k, int r, const std::vector<oracle::Mat>& prefix) {
  std::vector<Subspace> steps;
  for (const auto& rows : prefix) {
    std::vector<FVec> span;
    for (const auto& row : rows) span.push_back(vec(row));
    steps.emplace_back(k, r, span);
  }
  return Flag(k, steps);
}

oracle::Mat random_rows(std::mt19937_64& rng, int count, int r, int p) {
  std::uniform_int_distribution<int> e(0, p - 1);
  oracle::Mat m(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(r)));
  for (auto& row : m)
    for (auto& x : row) x = e(rng);
  return m;
}

oracle::Mat identity_rows(int r) {
  oracle::Mat m(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const PrimePowerField k(q);
    CHECK(k.verify_axioms());
    int p = 0, e = 0;
    CHECK(is_prime_power(q, &p, &e));
    CHECK(k.p() == p);
    CHECK(k.degree() == e);
    for (int a = 1; a < q; ++a) CHECK(k.mul(static_cast<PrimePowerField::Elem>(a), k.inv(static_cast<PrimePowerField::Elem>(a))) == 1);
    CHECK_THROWS(k.inv(0));
  }
  CHECK_THROWS(PrimePowerField(6));
  CHECK_FALSE(is_prime_power(12));
  CHECK(prime_powers(8) == std::vector<int>{2, 3, 4, 5, 7, 8, 9, 11});
}

TEST_CASE("enumerate_subspaces examples") {
  auto count = [](int q, int r, int k) {
    std::uint64_t c = 0;
    std::set<Subspace> seen;
    enumerate_subspaces(PrimePowerField(q), r, k, [&](const Subspace& s) {
      ++c;
      CHECK(s.dim() == k);
      seen.insert(s);
    });
    CHECK(seen.size() == c);
    return c;
  };
  CHECK(count(2, 2, 1) == 3);
  CHECK(count(3, 3, 1) == 13);
  for (int r = 0; r <= 3; ++r) CHECK(count(2, r, 0) == 1);
}

TEST_CASE("subspace counts agree with the product formula") {
  for (int q : {2, 3, 4, 5})
    for (int r = 0; r <= 4; ++r)
      for (int k = 0; k <= r; ++k) {
        if (oracle::subspaces(q, r, k) > 2000) continue;
        std::uint64_t c = 0;
        enumerate_subspaces(PrimePowerField(q), r, k, [&](const Subspace&) { ++c; });
        CHECK(c == oracle::subspaces(q, r, k));
        CHECK(subspace_count(q, r, k) == oracle::subspaces(q, r, k));
      }
  CHECK_THROWS_AS(enumerate_subspaces(PrimePowerField(2), 12, 6, [](const Subspace&) {}, 1000), BudgetExceeded);
}

TEST_CASE("orbit invariant examples") {
  const PrimePowerField k(2);
  // identical flags give the diagonal of step dimensions
  const Flag f = flag_of(k, 3, {{{1, 0, 0}}, {{1, 0, 0}, {0, 1, 1}}, identity_rows(3)});
  CHECK(orbit_invariant(k, f, f) == ThetaMatrix(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  // r = 1: F1 = V, F1' = 0
  const Flag a = flag_of(k, 1, {{{1}}, {{1}}});
  const Flag b = flag_of(k, 1, {{}, {{1}}});
  CHECK(orbit_invariant(k, a, b) == m2(0, 1, 0, 0));
  const Flag full = flag_of(k, 2, {identity_rows(2), identity_rows(2)});
  CHECK(orbit_invariant(k, full, full) == m2(2, 0, 0, 0));
}

TEST_CASE("orbit invariant against the naive oracle, and GL invariance") {
  std::mt19937_64 rng(99);
  for (int p : {2, 3, 5}) {
    const PrimePowerField k(p);
    for (int trial = 0; trial < 60; ++trial) {
      const int r = 2 + trial % 3, n = 2 + trial % 2;
      std::vector<oracle::Mat> fp, gp;
      oracle::Mat facc, gacc;
      for (int i = 1; i < n; ++i) {
        const auto fr = random_rows(rng, 1, r, p), gr = random_rows(rng, 1, r, p);
        facc.insert(facc.end(), fr.begin(), fr.end());
        gacc.insert(gacc.end(), gr.begin(), gr.end());
        fp.push_back(facc);
        gp.push_back(gacc);
      }
      fp.push_back(identity_rows(r));
      gp.push_back(identity_rows(r));
      const Flag f = flag_of(k, r, fp), g = flag_of(k, r, gp);
      const ThetaMatrix inv = orbit_invariant(k, f, g);
      CHECK(inv == oracle::invariant(fp, gp, p));
      CHECK(inv.degree() == r);
      CHECK(inv.row_sums() == f.type());
      CHECK(inv.col_sums() == g.type());
      const auto tw = random_invertible(k, r, rng);
      CHECK(orbit_invariant(k, twist(k, f, tw), twist(k, g, tw)) == inv);
      CHECK(orbit_invariant(k, g, f) == inv.transposed());
    }
  }
}

TEST_CASE("representative pairs realize their invariant") {
  const PrimePowerField k(3);
  const auto rep = representative_pair(k, m2(0, 1, 1, 0));
  CHECK(rep.first.step(1) == Subspace(k, 2, {vec({0, 1})}));
  CHECK(rep.second.step(1) == Subspace(k, 2, {vec({1, 0})}));
  CHECK(orbit_invariant(k, rep.first, rep.second) == m2(0, 1, 1, 0));
  const auto diag = representative_pair(k, ThetaMatrix::diagonal({2, 1}));
  CHECK(diag.first == diag.second);
  CHECK(diag.first.type() == std::vector<int>{2, 1});
  for (int n : {2, 3})
    for (int r = 0; r <= 3; ++r)
      for (const auto& c : theta_enumerate(n, r)) {
        const auto pr = representative_pair(k, c);
        CHECK(pr.invariant == c);
        CHECK(orbit_invariant(k, pr.first, pr.second) == c);
      }
}

TEST_CASE("count_middle examples") {
  const PrimePowerField f2(2), f3(3);
  CHECK(count_middle(f2, m2(0, 1, 0, 0), m2(0, 0, 1, 0), m2(1, 0, 0, 0)) == 1);
  CHECK(count_middle(f2, m2(1, 1, 0, 0), m2(1, 0, 1, 0), m2(2, 0, 0, 0)) == 3);
  CHECK(count_middle(f3, m2(1, 1, 0, 0), m2(1, 0, 1, 0), m2(2, 0, 0, 0)) == 4);
  // c(A) != r(B)
  CHECK(count_middle(f2, m2(1, 1, 0, 0), m2(2, 0, 0, 0), m2(2, 0, 0, 0)) == 0);
  // r(C) != r(A)
  CHECK(count_middle(f2, m2(1, 1, 0, 0), m2(1, 0, 1, 0), m2(0, 0, 0, 2)) == 0);
  CHECK(count_middle_generator(f2, m2(0, 1, 0, 0), m2(0, 0, 1, 0), m2(1, 0, 0, 0)) == 1);
  CHECK(count_middle_generator(f2, m2(1, 1, 0, 0), m2(1, 0, 1, 0), m2(2, 0, 0, 0)) == 3);
  CHECK(count_middle_generator(f3, m2(1, 1, 0, 0), m2(1, 0, 1, 0), m2(2, 0, 0, 0)) == 4);
  CHECK(count_middle_generator(f2, m2(1, 1, 0, 0), m2(2, 0, 0, 0), m2(2, 0, 0, 0)) == 0);
  // E^(2) on weight (0,2): a unique middle flag
  CHECK(count_middle_generator(f3, m2(0, 2, 0, 0), ThetaMatrix::diagonal({0, 2}), m2(0, 2, 0, 0)) == 1);
}

TEST_CASE("the generator fast path agrees with full enumeration") {
  for (int q : {2, 3}) {
    const PrimePowerField k(q);
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
      const auto basis = theta_enumerate(n, r);
      for (const auto& g : basis) {
        if (!generator_shape(g)) continue;
        for (const auto& c : basis) {
          const auto all = count_middle_generator_all(k, g, c);
          for (const auto& b : basis) {
            const auto full = count_middle(k, g, b, c);
            CHECK(count_middle_generator(k, g, b, c) == full);
            const auto it = all.find(b);
            CHECK((it == all.end() ? 0 : it->second) == full);
          }
        }
      }
    }
  }
  CHECK_THROWS(count_middle_generator(PrimePowerField(2), m2(1, 1, 1, 0), m2(1, 1, 1, 0), m2(1, 1, 1, 0)));
}

TEST_CASE("counts do not depend on the chosen pair") {
  std::mt19937_64 rng(5);
  const PrimePowerField k(3);
  const auto basis = theta_enumerate(2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = basis[pick(rng)];
    const auto& b = basis[pick(rng)];
    const auto& c = basis[pick(rng)];
    const auto rep = representative_pair(k, c);
    const auto g = random_invertible(k, 2, rng);
    const FlagPair moved{twist(k, rep.first, g), twist(k, rep.second, g), c};
    CHECK(count_middle_at(k, a, b, moved) == count_middle(k, a, b, c));
  }
}

TEST_CASE("every middle flag lies in exactly one pair of orbits") {
  // For (F, F') in O_C and a middle type mu, summing N(A, B, C) over all A
  // with r(A) = r(C), c(A) = mu and B with r(B) = mu, c(B) = c(C) counts
  // every flag of type mu once.
  for (int q : {2, 3}) {
    const PrimePowerField k(q);
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
      const auto basis = theta_enumerate(n, r);
      for (const auto& c : basis)
        for (const auto& mu : realizable_weights(n, r)) {
          std::uint64_t total = 0;
          for (const auto& a : basis) {
            if (a.row_sums() != c.row_sums() || a.col_sums() != mu) continue;
            for (const auto& b : basis)
              if (b.row_sums() == mu && b.col_sums() == c.col_sums()) total += count_middle(k, a, b, c);
          }
          // flags of type mu: product of subspace counts along the chain
          std::uint64_t flags = 1;
          int remaining = r;
          for (int part : mu) {
            flags *= oracle::subspaces(q, remaining, remaining - part);
            remaining -= part;
          }
          CHECK(total == flags);
        }
    }
  }
}
