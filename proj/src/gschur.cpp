#include "qschur/gschur.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qschur {

Domain Domain::cyclotomic(int ell, int l) {
  check_root_order(ell, l);
  return {FieldKind::Cyclotomic, ell, l, 0};
}

Domain Domain::prime_field(int ell, int l, std::uint32_t p) {
  (void)Specialization::prime_field(ell, l, p);  // validates p against Phi_l
  return {FieldKind::PrimeField, ell, l, p};
}

std::string Domain::label() const {
  switch (kind) {
    case FieldKind::Generic: return "Q(v)";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(l) + ")";
    case FieldKind::PrimeField: return "F_" + std::to_string(p);
  }
  return "?";
}

SchurAlgebra<RatFunc> generic_field_algebra(int n, int r) {
  return SchurAlgebra<RatFunc>(SchurData::get(n, r), [](const LaurentPoly& x) { return RatFunc(x); });
}

SchurAlgebra<CycloField> cyclotomic_field_algebra(int n, int r, int l) {
  return SchurAlgebra<CycloField>(SchurData::get(n, r), [l](const LaurentPoly& x) { return reduce_mod_field(x, l); });
}

SchurAlgebra<Fp> prime_field_algebra(int n, int r, int ell, int l, std::uint32_t p) {
  const Specialization sp = Specialization::prime_field(ell, l, p);
  return SchurAlgebra<Fp>(SchurData::get(n, r), [sp](const LaurentPoly& x) { return sp.to_prime(x); });
}

std::vector<std::vector<int>> dominant_diagonals(int n, int r) {
  std::vector<std::vector<int>> out;
  for (const auto& w : dominant_weights(n, r)) out.push_back(*realize(w, r));
  return out;
}

void check_realizable(const SaturatedSet& p, int r) {
  for (const auto& w : p.complement())
    if (!realize(w, r)) {
      throw std::invalid_argument("saturated set: complement weight " + w.to_string() + " is not realizable in degree " +
                                  std::to_string(r));
    }
}

bool weight_in(const SaturatedSet& p, const std::vector<int>& d) {
  std::vector<int> s = d;
  std::sort(s.rbegin(), s.rend());
  return p.contains(Weight(s));
}

namespace {

template <class F>
decltype(auto) dispatch(int n, int r, const Domain& dom, F&& f) {
  switch (dom.kind) {
    case FieldKind::Cyclotomic: return f(cyclotomic_field_algebra(n, r, dom.l));
    case FieldKind::PrimeField: return f(prime_field_algebra(n, r, dom.ell, dom.l, dom.p));
    case FieldKind::Generic: break;
  }
  return f(generic_field_algebra(n, r));
}

// Weyl module over the target field, with its dimension checked against the
// generic one: the dimension must not drop under specialization.
template <class K>
WeylModule<K> checked_weyl(const SchurAlgebra<K>& s, const std::vector<int>& lambda) {
  WeylModule<K> m = weyl_module(s, lambda);
  if constexpr (!std::is_same_v<K, RatFunc>) {
    const auto g = weyl_module(generic_field_algebra(s.data().n(), s.data().r()), lambda);
    if (g.dim() != m.dim()) {
      throw std::runtime_error("Weyl module " + weight_label(lambda) + ": dimension " + std::to_string(m.dim()) +
                               " after specialization, " + std::to_string(g.dim()) + " generically");
    }
  }
  return m;
}

// ---- Phi_l-adic arithmetic on Q(v) ----

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& monic) {
  if (a.size() < monic.size()) {
    if (a.empty()) return ZPoly{};
    return std::nullopt;
  }
  ZPoly rem = a;
  ZPoly q(a.size() - monic.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer c = rem[k + monic.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < monic.size(); ++j) rem[k + j] -= c * monic[j];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

int zpoly_valuation(ZPoly a, const ZPoly& phi) {
  int v = 0;
  while (auto q = divide_exact(a, phi)) {
    a = std::move(*q);
    ++v;
  }
  return v;
}

class PhiAdic {
 public:
  explicit PhiAdic(int l) : l_(l), phi_(cyclotomic_coeffs(l).begin(), cyclotomic_coeffs(l).end()) {
    phi_rf_ = RatFunc(phi_, ZPoly{Integer(1)});
  }

  int valuation(const RatFunc& x) const { return zpoly_valuation(x.num(), phi_) - zpoly_valuation(x.den(), phi_); }

  int valuation(const DenseVec<RatFunc>& w) const {
    int v = std::numeric_limits<int>::max();
    for (const auto& x : w)
      if (!x.is_zero()) v = std::min(v, valuation(x));
    return v;
  }

  // Rescales w by a power of Phi so that its minimal valuation is 0.
  void normalize(DenseVec<RatFunc>& w) const {
    int v = valuation(w);
    for (; v > 0; --v)
      for (auto& x : w) x = x / phi_rf_;
    for (; v < 0; ++v)
      for (auto& x : w) x = x * phi_rf_;
  }

  CycloField reduce(const RatFunc& x) const {
    if (x.is_zero()) return {};
    const CycloField num(l_, std::vector<Rational>(x.num().begin(), x.num().end()));
    const CycloField den(l_, std::vector<Rational>(x.den().begin(), x.den().end()));
    if (den.is_zero()) throw std::logic_error("reduction of a non-integral element");
    return num * den.inverse();
  }

  DenseVec<CycloField> reduce(const DenseVec<RatFunc>& w) const {
    DenseVec<CycloField> out;
    for (const auto& x : w) out.push_back(reduce(x));
    return out;
  }

  // Polynomial lift of the reduced representative.
  static RatFunc lift(const CycloField& x) {
    if (x.is_zero()) return {};
    Integer d = 1;
    for (const auto& c : x.coeffs()) d = boost::integer::lcm(d, boost::multiprecision::denominator(c));
    ZPoly num;
    for (const auto& c : x.coeffs()) num.push_back(boost::multiprecision::numerator(Rational(c * d)));
    return RatFunc(std::move(num), ZPoly{d});
  }

  const RatFunc& phi() const { return phi_rf_; }

 private:
  int l_;
  ZPoly phi_;
  RatFunc phi_rf_;
};

// Replaces a Q(v)-basis of a subspace by a basis of its intersection with
// the Z[v]_(Phi)-lattice whose reductions stay independent: the saturation.
std::vector<DenseVec<RatFunc>> saturate_lattice(std::vector<DenseVec<RatFunc>> basis, int l) {
  const PhiAdic adic(l);
  for (auto& w : basis) adic.normalize(w);
  const CycloField one = CycloField::constant(l, Rational(1));
  for (int guard = 0; guard < 10000; ++guard) {
    std::vector<DenseVec<CycloField>> red;
    for (const auto& w : basis) red.push_back(adic.reduce(w));
    const int m = red.empty() ? 0 : static_cast<int>(red[0].size());
    const auto rel = nullspace(m, red, one);
    if (rel.empty()) return basis;
    const DenseVec<CycloField>& c = rel.front();
    std::size_t pivot = 0;
    while (c[pivot] != one) ++pivot;  // nullspace vectors carry a unit at a free slot
    DenseVec<RatFunc> comb(basis[0].size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (c[k].is_zero()) continue;
      const RatFunc f = PhiAdic::lift(c[k]);
      for (std::size_t j = 0; j < comb.size(); ++j)
        if (!basis[k][j].is_zero()) comb[j] += f * basis[k][j];
    }
    adic.normalize(comb);
    basis[pivot] = std::move(comb);
  }
  throw std::runtime_error("lattice saturation did not terminate");
}

template <class K>
int weyl_dim(const SchurAlgebra<K>& s, const std::vector<int>& lambda) {
  return checked_weyl(s, lambda).dim();
}

}  // namespace

WeylSummary weyl_module_summary(const std::vector<int>& lambda, int n, int r, const Domain& dom) {
  return dispatch(n, r, dom, [&](const auto& s) {
    const auto m = checked_weyl(s, lambda);
    WeylSummary out;
    out.dim = m.dim();
    for (int a : m.basis) ++out.weight_multiplicities[s.data().basis()[a].row_sums()];
    return out;
  });
}

int ideal_dimension(const SaturatedSet& p, int n, int r, const Domain& dom) {
  return dispatch(n, r, dom, [&](const auto& s) { return ideal_generated(s, p).rank(); });
}

int naive_annihilator_dimension(const SaturatedSet& p, int n, int r, const Domain& dom) {
  return dispatch(n, r, dom, [&](const auto& s) {
    for (const auto& mu : dominant_diagonals(n, r))
      if (!p.contains(Weight(mu))) (void)checked_weyl(s, mu);
    return annihilator(s, p).rank();
  });
}

bool annihilator_check(const SaturatedSet& p, int n, int r, const Domain& dom) {
  check_realizable(p, r);
  switch (dom.kind) {
    case FieldKind::Generic: {
      const auto s = generic_field_algebra(n, r);
      return same_span(annihilator(s, p), ideal_generated(s, p));
    }
    case FieldKind::Cyclotomic: {
      const auto gen = generic_field_algebra(n, r);
      const auto sat = saturate_lattice(annihilator(gen, p).rows(), dom.l);
      const auto s = cyclotomic_field_algebra(n, r, dom.l);
      for (const auto& mu : dominant_diagonals(n, r))
        if (!p.contains(Weight(mu))) (void)checked_weyl(s, mu);
      const PhiAdic adic(dom.l);
      Echelon<CycloField> ann(s.dim());
      for (const auto& w : sat) ann.insert(adic.reduce(w));
      return ann.rank() == static_cast<int>(sat.size()) && same_span(ann, ideal_generated(s, p));
    }
    case FieldKind::PrimeField: break;
  }
  throw DomainError("annihilator check over " + dom.label() + " is not supported");
}

QuotientSummary quotient_summary(const SaturatedSet& p, int n, int r, const Domain& dom) {
  return dispatch(n, r, dom, [&](const auto& s) {
    QuotientSummary out;
    auto ideal = ideal_generated(s, p);
    out.dim_s = s.dim();
    out.dim_i = ideal.rank();
    out.ideal_closed = is_two_sided_ideal(s, ideal);
    const auto q = make_quotient(std::move(ideal));
    out.dim_u = q.dim();
    const auto ck = check_quotient(s, q, p);
    out.projection_homomorphism = ck.projection_homomorphism;
    out.identity = ck.identity;
    for (const auto& lam : dominant_diagonals(n, r))
      if (!p.contains(Weight(lam))) {
        const int d = weyl_dim(s, lam);
        out.block_sum += d * d;
      }
    return out;
  });
}

DescentReport descend_maps(int n, int r, int ell, int l, const SaturatedSet& p) {
  DescentReport rep;
  rep.n = n;
  rep.r = r;
  rep.ell = ell;
  rep.l = l;
  rep.complement = p.complement();
  check_realizable(p, ell * r);

  const FrobeniusPair pair(n, r, ell, l);
  const auto big = cyclotomic_field_algebra(n, ell * r, l);
  const int e = pair.star().epsilon();
  const SchurAlgebra<CycloField> star(SchurData::get(n, r), [l, e](const LaurentPoly& x) {
    return CycloField::constant(l, Rational(x.eval_unit(e)));
  });

  std::vector<Weight> star_comp;
  for (const auto& mu : dominant_weights(n, r))
    if (!p.contains(mu.scaled(ell))) star_comp.push_back(mu);
  const SaturatedSet pstar(n, star_comp);
  rep.star_complement = pstar.complement();

  const auto fr = map_matrix<CycloElem, CycloField>(pair.fr_matrix(), [](const CycloElem& x) { return to_field(x); });
  const auto c = map_matrix<CycloElem, CycloField>(pair.c_matrix(), [](const CycloElem& x) { return to_field(x); });

  Echelon<CycloField> ip = ideal_generated(big, p);
  Echelon<CycloField> istar = ideal_generated(star, pstar);
  rep.dim_s = big.dim();
  rep.dim_i = ip.rank();
  rep.dim_star = star.dim();
  rep.dim_star_i = istar.rank();

  rep.c_preserves_ideal = true;
  for (const auto& row : istar.rows())
    if (!ip.contains(c.apply(row))) rep.c_preserves_ideal = false;
  Echelon<CycloField> fr_image(star.dim());
  for (const auto& row : ip.rows()) fr_image.insert(fr.apply(row));
  rep.fr_maps_onto_ideal = same_span(fr_image, istar);

  const auto qb = make_quotient(std::move(ip));
  const auto qs = make_quotient(std::move(istar));
  rep.dim_u = qb.dim();
  rep.dim_star_u = qs.dim();

  // c_P : U* -> U and Fr_P : U -> U*, as columns in quotient coordinates
  Echelon<CycloField> c_cols(qb.dim()), fr_cols(qs.dim());
  rep.section_identity = true;
  for (std::size_t k = 0; k < qs.section.size(); ++k) {
    const DenseVec<CycloField> cb = qb.project(c.apply(star.basis_vector(qs.section[k])));
    c_cols.insert(cb);
    const DenseVec<CycloField> back = qs.project(fr.apply(qb.lift(cb, big.dim())));
    DenseVec<CycloField> unit(qs.section.size());
    unit[k] = star.one();
    if (back != unit) rep.section_identity = false;
  }
  for (int a : qb.section) fr_cols.insert(qs.project(fr.apply(big.basis_vector(a))));
  rep.c_injective = c_cols.rank() == qs.dim();
  rep.fr_surjective = fr_cols.rank() == qs.dim();
  return rep;
}

nlohmann::json gschur_report(const DescentReport& d, bool prop_qschur) {
  nlohmann::json comp = nlohmann::json::array();
  // realized as partitions of ell r, which is how they index the idempotents
  for (const auto& w : d.complement) comp.push_back(*realize(w, d.ell * d.r));
  return {
      {"P_complement", comp},
      {"dims", {{"S", d.dim_s}, {"I_P", d.dim_i}, {"U_P", d.dim_u}}},
      {"checks", {{"prop_qschur", prop_qschur}, {"embed", d.ok()}, {"fr_surjective", d.fr_surjective}}},
  };
}

}  // namespace qschur
