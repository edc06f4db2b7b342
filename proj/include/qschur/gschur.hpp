#pragma once

// Weyl modules, the ideals I_P generated by idempotents 1_nu (nu in P), the
// quotients S / I_P, and the descent of Fr and c to them.
//
// Everything is linear algebra inside S_v(n,r) over a field: Q(v), the
// cyclotomic field Q[v]/(Phi_l), or F_p.

#include "qschur/cartan.hpp"
#include "qschur/frob.hpp"
#include "qschur/relations.hpp"
#include "qschur/schur.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace qschur {

enum class FieldKind { Generic, Cyclotomic, PrimeField };

struct Domain {
  FieldKind kind = FieldKind::Generic;
  int ell = 0, l = 0;
  std::uint32_t p = 0;

  static Domain generic() { return {}; }
  static Domain cyclotomic(int ell, int l);
  static Domain prime_field(int ell, int l, std::uint32_t p);
  std::string label() const;
};

SchurAlgebra<RatFunc> generic_field_algebra(int n, int r);
SchurAlgebra<CycloField> cyclotomic_field_algebra(int n, int r, int l);
SchurAlgebra<Fp> prime_field_algebra(int n, int r, int ell, int l, std::uint32_t p);

// Dominant weights realizable in degree r, as diagonals (partitions).
std::vector<std::vector<int>> dominant_diagonals(int n, int r);
// Throws std::invalid_argument when the complement of P holds a weight with
// no realization in degree r.
void check_realizable(const SaturatedSet& p, int r);
// Does the dominant conjugate of the weight of d lie in P?
bool weight_in(const SaturatedSet& p, const std::vector<int>& d);

template <class K>
struct WeylModule {
  std::vector<int> highest;
  std::vector<int> cols;      // basis indices A with c(A) = lambda: a basis of S 1_lambda
  Echelon<K> relations{0};    // the submodule, in coordinates over cols
  std::vector<int> basis;     // indices A whose images form a basis of the module

  int dim() const { return static_cast<int>(basis.size()); }
  DenseVec<K> restrict(const DenseVec<K>& full) const {
    DenseVec<K> v;
    for (int c : cols) v.push_back(full[c]);
    return v;
  }
  DenseVec<K> coords(const DenseVec<K>& full) const { return relations.quotient_coords(restrict(full)); }
};

template <class K>
WeylModule<K> weyl_module(const SchurAlgebra<K>& s, const std::vector<int>& lambda) {
  const SchurData& d = s.data();
  const int n = d.n();
  for (int k = 0; k + 1 < n; ++k)
    if (lambda[k] < lambda[k + 1]) throw std::invalid_argument("weyl_module: weight " + weight_label(lambda) + " is not dominant");
  int total = 0;
  for (int x : lambda) total += x;
  if (total != d.r()) throw std::invalid_argument("weyl_module: weight " + weight_label(lambda) + " is not realizable");

  WeylModule<K> m;
  m.highest = lambda;
  for (int a = 0; a < d.dim(); ++a)
    if (d.basis()[a].col_sums() == lambda) m.cols.push_back(a);
  m.relations = Echelon<K>(static_cast<int>(m.cols.size()));
  std::vector<ThetaMatrix> seeds;
  for (int i = 1; i < n; ++i) {
    // all divided powers: at a root of unity E^(a) is not a multiple of E^a
    const int h = lambda[i - 1] - lambda[i];
    for (int a = 1; a <= d.r(); ++a) {
      if (auto g = generator_matrix(GeneratorKind::E, i, a, lambda)) seeds.push_back(*g);
      if (a > h)
        if (auto g = generator_matrix(GeneratorKind::F, i, a, lambda)) seeds.push_back(*g);
    }
  }
  for (const auto& g : seeds) {
    const int ig = d.index(g);
    for (int x = 0; x < d.dim(); ++x) m.relations.insert(m.restrict(s.multiply_basis(x, ig)));
  }
  for (int k : m.relations.free_positions()) m.basis.push_back(m.cols[k]);
  return m;
}

// Basis (echelon) of I_P inside S, where the seeds are 1_nu for realizable
// dominant nu in P.
template <class K>
Echelon<K> ideal_generated(const SchurAlgebra<K>& s, const SaturatedSet& p) {
  const SchurData& d = s.data();
  check_realizable(p, d.r());
  Echelon<K> e(d.dim());
  for (const auto& nu : dominant_diagonals(d.n(), d.r())) {
    if (!p.contains(Weight(nu))) continue;
    for (int a = 0; a < d.dim(); ++a) {
      if (d.basis()[a].col_sums() != nu) continue;
      for (int b = 0; b < d.dim(); ++b)
        if (d.basis()[b].row_sums() == nu) e.insert(s.multiply_basis(a, b));
    }
  }
  return e;
}

// Closure of the subspace under left and right multiplication by generators.
template <class K>
bool is_two_sided_ideal(const SchurAlgebra<K>& s, const Echelon<K>& ideal) {
  const SchurData& d = s.data();
  for (const auto& [g, op] : d.generators()) {
    const int ig = d.index(g);
    for (const auto& row : ideal.rows()) {
      if (!ideal.contains(s.generator(g).apply(row))) return false;
      if (!ideal.contains(s.multiply(row, s.basis_vector(ig)))) return false;
    }
  }
  return true;
}

// Ann_S of the direct sum of the Weyl modules Lambda_mu, mu dominant and
// realizable, mu not in P; each module computed over K.
template <class K>
Echelon<K> annihilator(const SchurAlgebra<K>& s, const SaturatedSet& p) {
  const SchurData& d = s.data();
  std::vector<DenseVec<K>> cols(static_cast<std::size_t>(d.dim()));
  for (const auto& mu : dominant_diagonals(d.n(), d.r())) {
    if (p.contains(Weight(mu))) continue;
    const WeylModule<K> m = weyl_module(s, mu);
    for (int a : m.basis)
      for (int x = 0; x < d.dim(); ++x) {
        const DenseVec<K> c = m.coords(s.multiply_basis(x, a));
        cols[x].insert(cols[x].end(), c.begin(), c.end());
      }
  }
  const int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  return span_of(d.dim(), nullspace(rows, cols, s.one()));
}

template <class K>
struct Quotient {
  Echelon<K> ideal{0};
  std::vector<int> section;  // basis indices whose images form a basis of S / I

  int dim() const { return static_cast<int>(section.size()); }
  DenseVec<K> project(const DenseVec<K>& x) const { return ideal.quotient_coords(x); }
  DenseVec<K> lift(const DenseVec<K>& y, int full_dim) const {
    DenseVec<K> x(static_cast<std::size_t>(full_dim));
    for (std::size_t k = 0; k < section.size(); ++k) x[section[k]] = y[k];
    return x;
  }
};

template <class K>
Quotient<K> make_quotient(Echelon<K> ideal) {
  Quotient<K> q;
  q.section = ideal.free_positions();
  q.ideal = std::move(ideal);
  return q;
}

template <class K>
struct QuotientChecks {
  bool projection_homomorphism = true;
  bool identity = true;
};

// The projection is multiplicative on basis pairs, and the image of the sum
// of 1_lambda over weights outside P is a two-sided identity.
template <class K>
QuotientChecks<K> check_quotient(const SchurAlgebra<K>& s, const Quotient<K>& q, const SaturatedSet& p) {
  QuotientChecks<K> ck;
  const SchurData& d = s.data();
  std::vector<DenseVec<K>> lifted(static_cast<std::size_t>(d.dim()));
  for (int a = 0; a < d.dim(); ++a) lifted[a] = q.lift(q.project(s.basis_vector(a)), d.dim());
  for (int a = 0; a < d.dim() && ck.projection_homomorphism; ++a)
    for (int b = 0; b < d.dim(); ++b)
      if (q.project(s.multiply_basis(a, b)) != q.project(s.multiply(lifted[a], lifted[b]))) {
        ck.projection_homomorphism = false;
        break;
      }
  DenseVec<K> e = s.zero();
  for (int a = 0; a < d.dim(); ++a) {
    const ThetaMatrix& A = d.basis()[a];
    if (A.is_diagonal() && !weight_in(p, A.diagonal_entries())) e[a] = s.one();
  }
  for (int b : q.section) {
    const DenseVec<K> x = s.basis_vector(b);
    if (q.project(s.multiply(e, x)) != q.project(x) || q.project(s.multiply(x, e)) != q.project(x)) ck.identity = false;
  }
  return ck;
}

// ---- non-template entry points ----

struct WeylSummary {
  int dim = 0;
  std::map<std::vector<int>, int> weight_multiplicities;
};
WeylSummary weyl_module_summary(const std::vector<int>& lambda, int n, int r, const Domain& dom);

int ideal_dimension(const SaturatedSet& p, int n, int r, const Domain& dom);

// I_P equals the annihilator of the Weyl modules outside P. Over Q(v) the
// annihilator is computed directly. At a root of unity it is the reduction of
// the Z[v]_(Phi_l)-saturated generic annihilator; over F_p this is not
// supported and throws DomainError.
bool annihilator_check(const SaturatedSet& p, int n, int r, const Domain& dom);
// Dimension of the annihilator computed naively over the specialized field.
int naive_annihilator_dimension(const SaturatedSet& p, int n, int r, const Domain& dom);

struct QuotientSummary {
  int dim_s = 0, dim_i = 0, dim_u = 0;
  int block_sum = 0;  // sum of (dim Lambda_lambda)^2 over lambda outside P
  bool ideal_closed = false;
  bool projection_homomorphism = false;
  bool identity = false;
};
QuotientSummary quotient_summary(const SaturatedSet& p, int n, int r, const Domain& dom);

struct DescentReport {
  int n = 0, r = 0, ell = 0, l = 0;
  std::vector<Weight> complement;       // of P, in the (n, ell r) algebra
  std::vector<Weight> star_complement;  // of P* = { mu : ell mu in P }
  int dim_s = 0, dim_i = 0, dim_u = 0;
  int dim_star = 0, dim_star_i = 0, dim_star_u = 0;
  bool c_preserves_ideal = false;  // c(I_P*) <= I_P
  bool fr_maps_onto_ideal = false; // Fr(I_P) = I_P*
  bool c_injective = false;
  bool fr_surjective = false;
  bool section_identity = false;   // Fr_P o c_P = id
  bool ok() const {
    return c_preserves_ideal && fr_maps_onto_ideal && c_injective && fr_surjective && section_identity;
  }
};
// P is a saturated set for the (n, ell r) algebra.
DescentReport descend_maps(int n, int r, int ell, int l, const SaturatedSet& p);

// {"P_complement", "dims": {"S", "I_P", "U_P"}, "checks": {"prop_qschur", "embed", "fr_surjective"}}
nlohmann::json gschur_report(const DescentReport& d, bool prop_qschur);

}  // namespace qschur
