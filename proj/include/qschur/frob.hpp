#pragma once

// Quantum Frobenius Fr : S(n, ell r) -> S*(n, r) over A_l and its splitting c,
// computed by triangular recursion on generator monomials.

#include "qschur/schur.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qschur {

// Fr([A]) = [A / ell] when ell divides every entry, else 0.
std::optional<ThetaMatrix> frobenius_basis(const ThetaMatrix& a, int ell);

// l = 2 ell for even ell, l = ell for odd ell.
int default_root_order(int ell);

// S*(n, r): the generic algebra specialized along v -> epsilon, with
// coefficients embedded in A_l as constants.
class StarAlgebra {
 public:
  StarAlgebra(int n, int r, int ell, int l);

  int epsilon() const { return eps_; }
  int ell() const { return ell_; }
  int l() const { return l_; }
  CycloElem map(const LaurentPoly& x) const { return CycloElem::constant(l_, x.eval_unit(eps_)); }
  const SchurAlgebra<CycloElem>& algebra() const { return alg_; }

 private:
  int ell_, l_, eps_;
  SchurAlgebra<CycloElem> alg_;
};

struct FrobeniusChecks {
  bool fr_c_identity = true;
  bool fr_multiplicative = true;
  bool c_multiplicative = true;
  bool c_triangular = true;
  bool generator_compatible = true;
  bool fr_surjective = true;
  bool c_injective = true;
  int fr_kernel_dim = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

class FrobeniusPair {
 public:
  FrobeniusPair(int n, int r, int ell, int l);

  int n() const { return n_; }
  int r() const { return r_; }
  int ell() const { return ell_; }
  int l() const { return l_; }
  const SchurAlgebra<CycloElem>& big() const { return big_; }
  const StarAlgebra& star() const { return star_; }

  // big basis -> star basis, and star basis -> big basis
  const SparseMatrix<CycloElem>& fr_matrix() const { return fr_; }
  const SparseMatrix<CycloElem>& c_matrix() const { return c_; }

  DenseVec<CycloElem> frobenius_map(const DenseVec<CycloElem>& x) const { return fr_.apply(x); }
  DenseVec<CycloElem> splitting_map(const DenseVec<CycloElem>& x) const { return c_.apply(x); }

  // Exhaustive over basis pairs.
  FrobeniusChecks verify() const;

  // Sparse matrix export; for c also the leading-term certificate.
  nlohmann::json fr_json() const;
  nlohmann::json c_json() const;

 private:
  const DenseVec<CycloElem>& c_of(int b, std::vector<int>& state);

  int n_, r_, ell_, l_;
  SchurAlgebra<CycloElem> big_;
  StarAlgebra star_;
  SparseMatrix<CycloElem> fr_, c_;
  std::vector<DenseVec<CycloElem>> c_cols_;
};

// The Fayers-Martin map on a 2x2 matrix: [pa pb; pc pd] when b = 0 or c = 0,
// otherwise sum over e < p of [pa+e, pb-e; pc-e, pd+e]; all coefficients 1.
std::map<ThetaMatrix, Fp> fayers_martin_image(const ThetaMatrix& a, std::uint32_t p);

struct FmReport {
  int r = 0;
  std::uint32_t p = 0;
  int l = 0;
  int compared = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Specializes c for (n, r, ell) = (2, r, p) to F_p along v -> 1 and compares
// it with fayers_martin_image on every basis element.
FmReport compare_with_fm(int r, std::uint32_t p);

}  // namespace qschur
