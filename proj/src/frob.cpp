#include "qschur/frob.hpp"

namespace qschur {

std::optional<ThetaMatrix> frobenius_basis(const ThetaMatrix& a, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  return a.divided(ell);
}

int default_root_order(int ell) { return ell % 2 == 0 ? 2 * ell : ell; }

namespace {

int checked_sign(int ell, int l) { return quasiclassical_sign(ell, l); }

std::optional<DenseVec<CycloElem>> eval_word(const SchurAlgebra<CycloElem>& s, const std::vector<GenStep>& steps,
                                             const std::vector<int>& weight) {
  DenseVec<CycloElem> v = s.basis_vector(s.data().index(ThetaMatrix::diagonal(weight)));
  std::vector<int> d = weight;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const SparseMatrix<CycloElem>* g = s.generator(it->kind, it->index, it->power, d);
    if (!g) return std::nullopt;
    v = g->apply(v);
    d = step_weight(*it, d);
  }
  return v;
}

}  // namespace

StarAlgebra::StarAlgebra(int n, int r, int ell, int l)
    : ell_(ell),
      l_(l),
      eps_(checked_sign(ell, l)),
      alg_(SchurData::get(n, r), [l, e = eps_](const LaurentPoly& x) { return CycloElem::constant(l, x.eval_unit(e)); }) {}

FrobeniusPair::FrobeniusPair(int n, int r, int ell, int l)
    : n_(n),
      r_(r),
      ell_(ell),
      l_(l),
      big_(SchurData::get(n, ell * r), [l](const LaurentPoly& x) { return reduce_mod(x, l); }),
      star_(n, r, ell, l) {
  check_root_order(ell, l);
  const SchurData& bd = big_.data();
  const SchurData& sd = star_.algebra().data();
  const CycloElem one = CycloElem::constant(l, 1);

  fr_ = SparseMatrix<CycloElem>(sd.dim(), bd.dim());
  for (int a = 0; a < bd.dim(); ++a)
    if (auto b = frobenius_basis(bd.basis()[a], ell)) fr_.cols[a].emplace_back(sd.index(*b), one);

  c_cols_.resize(static_cast<std::size_t>(sd.dim()));
  std::vector<int> state(static_cast<std::size_t>(sd.dim()), 0);
  c_ = SparseMatrix<CycloElem>(bd.dim(), sd.dim());
  for (int b = 0; b < sd.dim(); ++b) c_.set_column(b, c_of(b, state));
}

const DenseVec<CycloElem>& FrobeniusPair::c_of(int b, std::vector<int>& state) {
  if (state[b] == 2) return c_cols_[b];
  if (state[b] == 1) throw std::logic_error("splitting recursion is not well founded");
  state[b] = 1;
  const SchurData& sd = star_.algebra().data();
  const Monomial& m = sd.monomial(b);
  std::vector<GenStep> steps = m.steps;
  for (auto& s : steps) s.power *= ell_;
  std::vector<int> weight = m.weight;
  for (auto& x : weight) x *= ell_;
  auto img = eval_word(big_, steps, weight);
  if (!img) throw std::logic_error("scaled monomial vanished for " + sd.basis()[b].key());
  DenseVec<CycloElem> v = std::move(*img);
  for (const auto& [c, coef] : m.correction) {
    const CycloElem k = star_.map(coef);
    if (ring_is_zero(k)) continue;
    const DenseVec<CycloElem>& cc = c_of(sd.index(c), state);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!ring_is_zero(cc[i])) v[i] -= k * cc[i];
  }
  const CycloElem lead = star_.map(m.lead);
  if (lead != CycloElem::constant(l_, 1)) {
    const CycloElem inv = lead.inverse();
    for (auto& x : v) x = x * inv;
  }
  c_cols_[b] = std::move(v);
  state[b] = 2;
  return c_cols_[b];
}

FrobeniusChecks FrobeniusPair::verify() const {
  FrobeniusChecks ck;
  const SchurData& bd = big_.data();
  const SchurAlgebra<CycloElem>& sa = star_.algebra();
  const SchurData& sd = sa.data();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    ck.failures.push_back(what);
  };

  for (int b = 0; b < sd.dim(); ++b) {
    const ThetaMatrix& B = sd.basis()[b];
    const DenseVec<CycloElem> cb = c_.column(b);
    if (frobenius_map(cb) != sa.basis_vector(b)) fail(ck.fr_c_identity, "Fr(c[" + B.key() + "]) != [" + B.key() + "]");
    const ThetaMatrix top = B.scaled(ell_);
    const int it = bd.index(top);
    bool tri = cb[it] == CycloElem::constant(l_, 1);
    for (int c = 0; c < bd.dim() && tri; ++c)
      if (c != it && !ring_is_zero(cb[c]) && !order_less(bd.basis()[c], top)) tri = false;
    if (!tri) fail(ck.c_triangular, "c[" + B.key() + "] is not [ellB] + lower");
    if (generator_shape(B) && cb != big_.basis_vector(it)) {
      fail(ck.generator_compatible, "c[" + B.key() + "] != [" + top.key() + "]");
    }
  }

  for (int a = 0; a < sd.dim(); ++a)
    for (int b = 0; b < sd.dim(); ++b) {
      const DenseVec<CycloElem> lhs = splitting_map(sa.multiply_basis(a, b));
      const DenseVec<CycloElem> rhs = big_.multiply(c_.column(a), c_.column(b));
      if (lhs != rhs) fail(ck.c_multiplicative, "c not multiplicative on " + sd.basis()[a].key() + " x " + sd.basis()[b].key());
    }

  std::vector<DenseVec<CycloElem>> fr_cols(static_cast<std::size_t>(bd.dim()));
  for (int a = 0; a < bd.dim(); ++a) fr_cols[a] = fr_.column(a);
  for (int a = 0; a < bd.dim(); ++a)
    for (int b = 0; b < bd.dim(); ++b) {
      const DenseVec<CycloElem> lhs = frobenius_map(big_.multiply_basis(a, b));
      const DenseVec<CycloElem> rhs = sa.multiply(fr_cols[a], fr_cols[b]);
      if (lhs != rhs) fail(ck.fr_multiplicative, "Fr not multiplicative on " + bd.basis()[a].key() + " x " + bd.basis()[b].key());
    }

  Echelon<CycloField> fr_img(sd.dim()), c_img(bd.dim());
  for (int a = 0; a < bd.dim(); ++a) {
    DenseVec<CycloField> v;
    for (const auto& x : fr_cols[a]) v.push_back(to_field(x));
    fr_img.insert(std::move(v));
  }
  for (int b = 0; b < sd.dim(); ++b) {
    DenseVec<CycloField> v;
    for (const auto& x : c_.column(b)) v.push_back(to_field(x));
    c_img.insert(std::move(v));
  }
  if (fr_img.rank() != sd.dim()) fail(ck.fr_surjective, "Fr is not surjective");
  if (c_img.rank() != sd.dim()) fail(ck.c_injective, "c is not injective");
  ck.fr_kernel_dim = bd.dim() - fr_img.rank();
  return ck;
}

namespace {

nlohmann::json basis_json(const SchurData& d) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& a : d.basis()) j.push_back(a.key());
  return j;
}

}  // namespace

nlohmann::json FrobeniusPair::fr_json() const {
  const SchurData& bd = big_.data();
  const SchurData& sd = star_.algebra().data();
  nlohmann::json m = nlohmann::json::object();
  for (int a = 0; a < bd.dim(); ++a) {
    nlohmann::json col = nlohmann::json::object();
    for (const auto& [i, x] : fr_.cols[a]) col[sd.basis()[i].key()] = to_json(x);
    if (!col.empty()) m[bd.basis()[a].key()] = std::move(col);
  }
  return {{"map", "fr"},
          {"n", n_},
          {"r", r_},
          {"ell", ell_},
          {"l", l_},
          {"epsilon", star_.epsilon()},
          {"source_basis", basis_json(bd)},
          {"target_basis", basis_json(sd)},
          {"matrix", std::move(m)}};
}

nlohmann::json FrobeniusPair::c_json() const {
  const SchurData& bd = big_.data();
  const SchurData& sd = star_.algebra().data();
  nlohmann::json m = nlohmann::json::object();
  nlohmann::json cert = nlohmann::json::object();
  for (int b = 0; b < sd.dim(); ++b) {
    const ThetaMatrix top = sd.basis()[b].scaled(ell_);
    nlohmann::json col = nlohmann::json::object();
    nlohmann::json lower = nlohmann::json::object();
    bool below = true;
    for (const auto& [i, x] : c_.cols[b]) {
      col[bd.basis()[i].key()] = to_json(x);
      if (bd.basis()[i] == top) continue;
      lower[bd.basis()[i].key()] = to_json(x);
      below = below && order_less(bd.basis()[i], top);
    }
    m[sd.basis()[b].key()] = std::move(col);
    const int it = bd.index(top);
    const bool unit_lead = c_.column(b)[it] == CycloElem::constant(l_, 1);
    cert[sd.basis()[b].key()] = {
        {"leading", top.key()}, {"leading_coefficient_one", unit_lead}, {"lower", std::move(lower)}, {"strictly_below", below}};
  }
  return {{"map", "c"},
          {"n", n_},
          {"r", r_},
          {"ell", ell_},
          {"l", l_},
          {"epsilon", star_.epsilon()},
          {"source_basis", basis_json(sd)},
          {"target_basis", basis_json(bd)},
          {"matrix", std::move(m)},
          {"certificates", std::move(cert)}};
}

std::map<ThetaMatrix, Fp> fayers_martin_image(const ThetaMatrix& a, std::uint32_t p) {
  if (a.n() != 2) throw RankMismatch("the Fayers-Martin map is defined for n = 2");
  if (!is_prime(p)) throw DomainError("p must be prime");
  const int q = static_cast<int>(p);
  const int x = a.at(0, 0), b = a.at(0, 1), c = a.at(1, 0), d = a.at(1, 1);
  std::map<ThetaMatrix, Fp> out;
  if (b == 0 || c == 0) {
    out[a.scaled(q)] = Fp(p, 1);
    return out;
  }
  for (int e = 0; e < q; ++e) out[ThetaMatrix(2, {q * x + e, q * b - e, q * c - e, q * d + e})] += Fp(p, 1);
  return out;
}

FmReport compare_with_fm(int r, std::uint32_t p) {
  FmReport rep;
  rep.r = r;
  rep.p = p;
  const int ell = static_cast<int>(p);
  rep.l = default_root_order(ell);
  const Specialization spec = Specialization::prime_field(ell, rep.l, p);
  const FrobeniusPair pair(2, r, ell, rep.l);
  const SchurData& bd = pair.big().data();
  const SchurData& sd = pair.star().algebra().data();
  for (int b = 0; b < sd.dim(); ++b) {
    const auto fm = fayers_martin_image(sd.basis()[b], p);
    const DenseVec<CycloElem> cb = pair.c_matrix().column(b);
    bool same = true;
    for (int i = 0; i < bd.dim(); ++i) {
      const Fp got = spec.to_prime(cb[i]);
      auto it = fm.find(bd.basis()[i]);
      const Fp want = it == fm.end() ? Fp() : it->second;
      if (got != want) same = false;
    }
    ++rep.compared;
    if (!same) rep.mismatches.push_back(sd.basis()[b].key());
  }
  return rep;
}

}  // namespace qschur
