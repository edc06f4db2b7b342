#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qschur/gschur.hpp"

using namespace qschur;

namespace {

// Kostka number: semistandard tableaux of shape lambda and content mu, as
// chains of horizontal strips.
int kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const std::size_t n = lambda.size();
  std::function<int(std::size_t, std::vector<int>)> go = [&](std::size_t step, std::vector<int> shape) -> int {
    if (step == mu.size()) return shape == lambda ? 1 : 0;
    int total = 0;
    // add mu[step] boxes, at most one per column: new row k length in
    // [shape[k], min(lambda[k], previous old row length)]
    std::function<void(std::size_t, int, std::vector<int>&)> strip = [&](std::size_t k, int left, std::vector<int>& cur) {
      if (k == n) {
        if (left == 0) total += go(step + 1, cur);
        return;
      }
      const int cap = std::min(lambda[k], k == 0 ? lambda[0] : shape[k - 1]);
      for (int len = shape[k]; len <= cap && len - shape[k] <= left; ++len) {
        cur[k] = len;
        strip(k + 1, left - (len - shape[k]), cur);
      }
      cur[k] = shape[k];
    };
    std::vector<int> cur = shape;
    strip(0, mu[step], cur);
    return total;
  };
  return go(0, std::vector<int>(n, 0));
}

SaturatedSet complement_of(int n, std::vector<std::vector<int>> ws) {
  std::vector<Weight> c;
  for (auto& w : ws) c.emplace_back(w);
  return SaturatedSet(n, c);
}

const std::vector<Domain> kDomains{Domain::generic(), Domain::cyclotomic(2, 4)};

}  // namespace

TEST_CASE("Kostka oracle sanity") {
  CHECK(kostka({2, 1, 0}, {1, 1, 1}) == 2);
  CHECK(kostka({2, 0}, {1, 1}) == 1);
  CHECK(kostka({1, 1}, {2, 0}) == 0);
}

TEST_CASE("Weyl module examples") {
  CHECK(weyl_module_summary({2, 0}, 2, 2, Domain::generic()).dim == 3);
  CHECK(weyl_module_summary({1, 1}, 2, 2, Domain::generic()).dim == 1);
  const auto s = generic_field_algebra(2, 2);
  CHECK_THROWS_AS(weyl_module(s, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_module(s, {3, 0}), std::invalid_argument);
}

TEST_CASE("Weyl modules: dimensions and weight multiplicities") {
  std::vector<Domain> doms = kDomains;
  doms.push_back(Domain::cyclotomic(3, 3));
  doms.push_back(Domain::prime_field(2, 4, 2));
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
    for (const auto& dom : doms) {
      long total = 0;
      for (const auto& lam : dominant_diagonals(n, r)) {
        const auto w = weyl_module_summary(lam, n, r, dom);
        CHECK(w.dim == static_cast<int>(oracle::weyl_dim(lam)));
        int sum = 0;
        for (const auto& [mu, k] : w.weight_multiplicities) {
          CHECK(k == kostka(lam, mu));
          sum += k;
        }
        CHECK(sum == w.dim);
        total += static_cast<long>(w.dim) * w.dim;
      }
      // semisimple bookkeeping: dim S = sum of squares
      CHECK(total == static_cast<long>(theta_enumerate(n, r).size()));
    }
}

TEST_CASE("dimension bookkeeping") {
  CHECK(theta_enumerate(2, 2).size() == 10);
  CHECK(theta_enumerate(2, 4).size() == 35);
  CHECK(weyl_module_summary({4, 0}, 2, 4, Domain::generic()).dim == 5);
  CHECK(weyl_module_summary({3, 1}, 2, 4, Domain::generic()).dim == 3);
  CHECK(weyl_module_summary({2, 2}, 2, 4, Domain::generic()).dim == 1);
}

TEST_CASE("ideal examples") {
  const auto g = Domain::generic();
  CHECK(ideal_dimension(saturate(Weight({2, 0}), dominant_weights(2, 2)), 2, 2, g) == 9);
  CHECK(ideal_dimension(complement_of(2, {}), 2, 2, g) == 10);
  CHECK(ideal_dimension(complement_of(2, {{2, 0}, {1, 1}}), 2, 2, g) == 0);
  CHECK(ideal_dimension(complement_of(2, {{2, 2}}), 2, 4, g) == 34);
  CHECK(ideal_dimension(complement_of(2, {{3, 1}, {2, 2}}), 2, 4, g) == 25);
  CHECK_THROWS_AS(ideal_dimension(complement_of(2, {{1, 0}}), 2, 2, g), std::invalid_argument);
}

TEST_CASE("quotient examples") {
  const auto g = Domain::generic();
  auto u = [&](const SaturatedSet& p, int r) { return quotient_summary(p, 2, r, g).dim_u; };
  CHECK(u(saturate(Weight({2, 0}), dominant_weights(2, 2)), 2) == 1);
  CHECK(u(complement_of(2, {{2, 0}, {1, 1}}), 2) == 10);
  CHECK(u(saturate(Weight({3, 1}), dominant_weights(2, 4)), 4) == 1);
  CHECK(u(saturate(Weight({4, 0}), dominant_weights(2, 4)), 4) == 10);
  CHECK(u(saturate(Weight({2, 2}), dominant_weights(2, 4)), 4) == 0);
  CHECK(u(complement_of(2, {{4, 0}, {3, 1}, {2, 2}}), 4) == 35);
}

TEST_CASE("quotients over every saturated set") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}})
    for (const auto& dom : kDomains)
      for (const auto& p : all_saturated_sets(dominant_weights(n, r))) {
        const auto q = quotient_summary(p, n, r, dom);
        CHECK(q.dim_s == static_cast<int>(theta_enumerate(n, r).size()));
        CHECK(q.dim_i + q.dim_u == q.dim_s);
        CHECK(q.dim_u == q.block_sum);
        CHECK(q.ideal_closed);
        CHECK(q.projection_homomorphism);
        CHECK(q.identity);
      }
}

TEST_CASE("ideals equal annihilators") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}})
    for (const auto& dom : kDomains)
      for (const auto& p : all_saturated_sets(dominant_weights(n, r))) CHECK(annihilator_check(p, n, r, dom));
  CHECK(annihilator_check(complement_of(2, {}), 2, 2, Domain::generic()));
  CHECK_THROWS_AS(annihilator_check(complement_of(2, {}), 2, 2, Domain::prime_field(2, 4, 2)), DomainError);
}

TEST_CASE("the naive annihilator at a root of unity is too large") {
  const auto all = complement_of(2, {{2, 0}, {1, 1}});
  CHECK(ideal_dimension(all, 2, 2, Domain::cyclotomic(2, 4)) == 0);
  CHECK(naive_annihilator_dimension(all, 2, 2, Domain::cyclotomic(2, 4)) == 3);
  CHECK(naive_annihilator_dimension(all, 2, 2, Domain::generic()) == 0);
}

TEST_CASE("filtration: nested saturated sets give nested ideals") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}}) {
    const auto s = generic_field_algebra(n, r);
    const auto sets = all_saturated_sets(dominant_weights(n, r));
    for (const auto& p : sets)
      for (const auto& pp : sets) {
        const auto& cp = p.complement();
        const auto& cpp = pp.complement();
        // P <= P' iff complement(P') <= complement(P)
        if (!std::includes(cp.begin(), cp.end(), cpp.begin(), cpp.end())) continue;
        const auto ip = ideal_generated(s, p);
        const auto ipp = ideal_generated(s, pp);
        for (const auto& row : ip.rows()) CHECK(ipp.contains(row));
      }
  }
}

TEST_CASE("descent of Fr and c") {
  for (const auto& [r, ell] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
    const auto sets = all_saturated_sets(dominant_weights(2, ell * r));
    CHECK(sets.size() >= 2);
    for (const auto& p : sets) {
      const auto d = descend_maps(2, r, ell, 4, p);
      CHECK(d.c_preserves_ideal);
      CHECK(d.fr_maps_onto_ideal);
      CHECK(d.c_injective);
      CHECK(d.fr_surjective);
      CHECK(d.section_identity);
      CHECK(d.ok());
      CHECK(d.dim_i + d.dim_u == d.dim_s);
      CHECK(d.dim_star_i + d.dim_star_u == d.dim_star);
    }
  }
  // nothing quotiented: the maps are Fr and c themselves
  const auto none = descend_maps(2, 2, 2, 4, complement_of(2, {{4, 0}, {3, 1}, {2, 2}}));
  CHECK(none.ok());
  CHECK(none.dim_u == 35);
  CHECK(none.dim_star_u == 10);
  // P = saturation of (2,2) in the (2,4) algebra
  CHECK(descend_maps(2, 2, 2, 4, saturate(Weight({2, 2}), dominant_weights(2, 4))).ok());
  CHECK(descend_maps(2, 1, 2, 4, saturate(Weight({2, 0}), dominant_weights(2, 2))).ok());
  CHECK(descend_maps(2, 1, 3, 3, saturate(Weight({2, 1}), dominant_weights(2, 3))).ok());
}

TEST_CASE("report format") {
  const auto d = descend_maps(2, 2, 2, 4, saturate(Weight({3, 1}), dominant_weights(2, 4)));
  const auto j = gschur_report(d, true);
  CHECK(j["P_complement"] == nlohmann::json::parse("[[2,2]]"));
  CHECK(j["dims"]["S"] == 35);
  CHECK(j["dims"]["I_P"] == 34);
  CHECK(j["dims"]["U_P"] == 1);
  CHECK(j["checks"]["prop_qschur"] == true);
  CHECK(j["checks"]["embed"] == true);
  CHECK(j["checks"]["fr_surjective"] == true);
}
