#include "qschur/relations.hpp"

#include "qschur/flaggeom.hpp"

#include <map>
#include <mutex>

namespace qschur {

namespace {

void compositions(int remaining, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = remaining; x >= 0; --x) {
    cur.push_back(x);
    compositions(remaining - x, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> realizable_weights(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(r, n, cur, out);
  return out;
}

std::string weight_label(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

RelationReport check_binomial_lemma(int ell, int l, int m_max) {
  check_root_order(ell, l);
  RelationReport rep;
  const auto ring = [l](const LaurentPoly& x) { return reduce_mod(x, l); };
  const CycloElem one = CycloElem::constant(l, 1);
  rep.record(ring(LaurentPoly::monomial(2 * ell)) == one, "v^(2 ell) = 1");
  for (int t = 1; t < ell; ++t) rep.record(ring(LaurentPoly::monomial(2 * t)) != one, "v^" + std::to_string(2 * t) + " != 1");

  // shared across calls: every (ell, l) pair reuses the same generic binomials
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  static std::mutex mu;
  const auto binom = [](int m, int k) -> LaurentPoly {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, k});
    if (it == cache.end()) it = cache.emplace(std::pair{m, k}, gauss_binomial(m, k)).first;
    return it->second;
  };
  for (int m = 0; m <= m_max; ++m) {
    const int m1 = m / ell, s = m % ell;
    for (int k = 0; k <= m; ++k) {
      const int k1 = k / ell, t = k % ell;
      const CycloElem lhs = ring(binom(m, k));
      const std::string tag = "[" + std::to_string(m) + "," + std::to_string(k) + "]";
      if (s == 0 && t != 0) rep.record(lhs.is_zero(), tag + " vanishes");
      Integer choose = 1;
      for (int j = 0; j < k1; ++j) choose = choose * (m1 - j) / (j + 1);
      const int e = ell * (k1 * s - m1 * t) + (m1 + 1) * k1 * ell * ell;
      const CycloElem rhs = ring(LaurentPoly::monomial(e, choose) * binom(s, t));
      rep.record(lhs == rhs, tag + " factorizes");
    }
  }
  return rep;
}

std::optional<Integer> count_from_coefficient(const LaurentPoly& coeff, int shift, int q) {
  Integer total = 0;
  const LaurentPoly n = coeff.shifted(shift);
  for (const auto& [e, c] : n.terms()) {
    if (e < 0 || e % 2 != 0) return std::nullopt;
    total += c * boost::multiprecision::pow(Integer(q), e / 2);
  }
  return total;
}

RelationReport check_oracle(int n, int r, bool full_products, const std::vector<int>& qs) {
  const SchurData& data = SchurData::get(n, r);
  const StructureTable& table = data.table();
  RelationReport rep;
  for (const auto& [g, op] : table.ops) {
    const auto& prov = table.provenance.generators.at(g);
    int q = 0;
    if (!prov.held_out.empty()) {
      q = prov.held_out.front();
    } else {
      for (q = 2; !is_prime_power(q) || std::count(prov.q_samples.begin(), prov.q_samples.end(), q); ++q) {
      }
    }
    const PrimePowerField field(q);
    for (const auto& c : data.basis()) {
      if (c.row_sums() != g.row_sums()) continue;
      const auto counts = count_middle_generator_all(field, g, c);
      for (const auto& b : data.basis()) {
        if (b.row_sums() != g.col_sums() || b.col_sums() != c.col_sums()) continue;
        Integer expect = 0;
        if (auto it = counts.find(b); it != counts.end()) expect = it->second;
        LaurentPoly coeff;
        if (auto ib = op.find(b); ib != op.end())
          if (auto ic = ib->second.find(c); ic != ib->second.end()) coeff = ic->second;
        const auto got = count_from_coefficient(coeff, codim_d(g) + codim_d(b) - codim_d(c), q);
        rep.record(got && *got == expect, "[" + g.key() + "][" + b.key() + "] at [" + c.key() + "], q=" + std::to_string(q));
      }
    }
  }
  if (!full_products) return rep;
  for (int ia = 0; ia < data.dim(); ++ia) {
    const ThetaMatrix& a = data.basis()[ia];
    for (int ib = 0; ib < data.dim(); ++ib) {
      const ThetaMatrix& b = data.basis()[ib];
      if (a.col_sums() != b.row_sums()) continue;
      const auto brute = brute_oracle_product(a, b, qs);
      const DenseVec<LaurentPoly> prod = data.left(ia).column(ib);
      for (int ic = 0; ic < data.dim(); ++ic) {
        const ThetaMatrix& c = data.basis()[ic];
        if (c.row_sums() != a.row_sums() || c.col_sums() != b.col_sums()) continue;
        const auto it = brute.find(c);
        for (std::size_t k = 0; k < qs.size(); ++k) {
          const Integer expect = it == brute.end() ? Integer(0) : Integer(it->second[k]);
          const auto got = count_from_coefficient(prod[ic], codim_d(a) + codim_d(b) - codim_d(c), qs[k]);
          rep.record(got && *got == expect, "[" + a.key() + "][" + b.key() + "] at [" + c.key() + "], q=" + std::to_string(qs[k]));
        }
      }
    }
  }
  return rep;
}

RelationReport check_presentation(int n, int r) {
  const SchurAlgebra<LaurentPoly> s(SchurData::get(n, r), [](const LaurentPoly& x) { return x; });
  return RelationChecker<LaurentPoly>(s, [](const LaurentPoly& x) { return x; }).run();
}

}  // namespace qschur
