#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qschur/frob.hpp"
#include "qschur/schur.hpp"

using namespace qschur;

namespace {

ThetaMatrix m2(int a, int b, int c, int d) { return ThetaMatrix(2, {a, b, c, d}); }

void expect_ok(const FrobeniusChecks& ck) {
  CHECK(ck.fr_c_identity);
  CHECK(ck.fr_multiplicative);
  CHECK(ck.c_multiplicative);
  CHECK(ck.c_triangular);
  CHECK(ck.generator_compatible);
  CHECK(ck.fr_surjective);
  CHECK(ck.c_injective);
  for (const auto& f : ck.failures) FAIL_CHECK(f);
}

// Rank of a sparse matrix over A_l after reducing to the field Q[v]/Phi_l.
int rank_over_field(const SparseMatrix<CycloElem>& m) {
  Echelon<CycloField> e(m.rows);
  for (int j = 0; j < m.ncols(); ++j) {
    DenseVec<CycloField> col(static_cast<std::size_t>(m.rows));
    for (const auto& [i, x] : m.cols[j]) col[i] = to_field(x);
    e.insert(col);
  }
  return static_cast<int>(e.rows().size());
}

}  // namespace

TEST_CASE("frobenius_basis") {
  CHECK(frobenius_basis(m2(2, 0, 0, 2), 2) == m2(1, 0, 0, 1));
  CHECK_FALSE(frobenius_basis(m2(1, 1, 1, 1), 2));
  CHECK(frobenius_basis(m2(3, 6, 0, 3), 3) == m2(1, 2, 0, 1));
  // exactly |Theta_r| matrices of Theta_{ell r} survive
  for (int ell = 1; ell <= 3; ++ell)
    for (int r = 0; r <= 2; ++r) {
      std::size_t alive = 0;
      for (const auto& a : theta_enumerate(2, ell * r)) alive += frobenius_basis(a, ell).has_value();
      CHECK(alive == theta_enumerate(2, r).size());
    }
  CHECK(default_root_order(2) == 4);
  CHECK(default_root_order(3) == 3);
}

TEST_CASE("Fr and c on (2,1,2)") {
  const FrobeniusPair fp(2, 1, 2, 4);
  expect_ok(fp.verify());
  const auto& sd = fp.star().algebra().data();
  const auto& bd = fp.big().data();
  // idempotents go to idempotents exactly
  for (int b = 0; b < sd.dim(); ++b) {
    const ThetaMatrix& B = sd.basis()[b];
    if (!B.is_diagonal()) continue;
    auto col = fp.c_matrix().column(b);
    CHECK(col == fp.big().basis_vector(bd.index(B.scaled(2))));
    CHECK(fp.frobenius_map(col) == fp.star().algebra().basis_vector(b));
  }
}

TEST_CASE("Fr and c on (2,2,2)") {
  const FrobeniusPair fp(2, 2, 2, 4);
  const auto ck = fp.verify();
  expect_ok(ck);
  CHECK(ck.fr_kernel_dim == 25);
  CHECK(fp.big().dim() == 35);
  CHECK(fp.star().algebra().dim() == 10);
  const auto& sd = fp.star().algebra().data();
  const auto& bd = fp.big().data();
  // c([0 1;1 0]) = [0 2;2 0] - v [1 1;1 1]
  const auto col = fp.c_matrix().column(sd.index(m2(0, 1, 1, 0)));
  for (int i = 0; i < bd.dim(); ++i) {
    const ThetaMatrix& C = bd.basis()[i];
    if (C == m2(0, 2, 2, 0))
      CHECK(col[i] == CycloElem::constant(4, 1));
    else if (C == m2(1, 1, 1, 1))
      CHECK(col[i] == reduce_mod(LaurentPoly::monomial(1, -1), 4));
    else
      CHECK(col[i].is_zero());
  }
  // Fr of E_1 1_(1,1) is zero: (1,1) is not in ell X
  const auto e11 = psi_generator_image({GeneratorKind::E, 1, 1, Weight({1, 1})}, 2, 4);
  REQUIRE(e11);
  CHECK(is_zero_vec(fp.frobenius_map(fp.big().basis_vector(bd.index(*e11)))));
  // Fr([ell D]) = [D]
  for (int b = 0; b < sd.dim(); ++b)
    if (sd.basis()[b].is_diagonal())
      CHECK(fp.frobenius_map(fp.big().basis_vector(bd.index(sd.basis()[b].scaled(2)))) ==
            fp.star().algebra().basis_vector(b));
  // rank bookkeeping through an independent elimination
  CHECK(rank_over_field(fp.fr_matrix()) == 10);
  CHECK(bd.dim() - rank_over_field(fp.fr_matrix()) == 25);
  CHECK(rank_over_field(fp.c_matrix()) == 10);
}

TEST_CASE("Fr and c on (2,1,3), both root conventions") {
  for (int l : {3, 6}) {
    const FrobeniusPair fp(2, 1, 3, l);
    expect_ok(fp.verify());
  }
}

TEST_CASE("ell = 1 gives identity maps") {
  const FrobeniusPair fp(2, 2, 1, 2);
  expect_ok(fp.verify());
  const auto& bd = fp.big().data();
  for (int a = 0; a < bd.dim(); ++a) {
    CHECK(fp.c_matrix().column(a) == fp.big().basis_vector(a));
    CHECK(fp.fr_matrix().column(a) == fp.star().algebra().basis_vector(a));
  }
}

TEST_CASE("n = 3") {
  const FrobeniusPair fp(3, 1, 2, 4);
  expect_ok(fp.verify());
}

TEST_CASE("bad root orders are rejected") {
  CHECK_THROWS_AS(FrobeniusPair(2, 1, 2, 2), DomainError);
  CHECK_THROWS_AS(FrobeniusPair(2, 1, 3, 4), DomainError);
}

TEST_CASE("JSON export") {
  const FrobeniusPair fp(2, 1, 2, 4);
  const auto c = fp.c_json();
  CHECK(c["map"] == "c");
  CHECK(c["source_basis"].size() == 4);
  CHECK(c["target_basis"].size() == 10);
  for (const auto& [key, cert] : c["certificates"].items()) {
    CHECK(cert["leading"] == ThetaMatrix::parse(key).scaled(2).key());
    CHECK(cert["leading_coefficient_one"] == true);
    CHECK(cert["strictly_below"] == true);
  }
  const auto fr = fp.fr_json();
  CHECK(fr["matrix"].size() == 4);
  CHECK(fr.dump() == FrobeniusPair(2, 1, 2, 4).fr_json().dump());
  CHECK(FrobeniusPair(2, 2, 2, 4).fr_json()["matrix"].size() == 10);
}

TEST_CASE("the Fayers-Martin formula") {
  auto as_ints = [](const std::map<ThetaMatrix, Fp>& m) {
    std::map<ThetaMatrix, int> out;
    for (const auto& [k, x] : m)
      if (!x.is_zero()) out[k] = static_cast<int>(x.value());
    return out;
  };
  CHECK(as_ints(fayers_martin_image(m2(0, 1, 1, 0), 2)) ==
        std::map<ThetaMatrix, int>{{m2(0, 2, 2, 0), 1}, {m2(1, 1, 1, 1), 1}});
  CHECK(as_ints(fayers_martin_image(m2(1, 1, 0, 0), 2)) == std::map<ThetaMatrix, int>{{m2(2, 2, 0, 0), 1}});
  CHECK(as_ints(fayers_martin_image(m2(1, 0, 0, 1), 3)) == std::map<ThetaMatrix, int>{{m2(3, 0, 0, 3), 1}});
  for (int p : {2, 3, 5})
    for (int r = 0; r <= 4; ++r)
      for (const auto& a : theta_enumerate(2, r)) CHECK(as_ints(fayers_martin_image(a, p)) == oracle::fm(a, p));
  CHECK_THROWS(fayers_martin_image(ThetaMatrix::diagonal({1, 0, 0}), 2));
  CHECK_THROWS_AS(fayers_martin_image(m2(1, 0, 0, 0), 4), DomainError);
}

TEST_CASE("c specializes to the Fayers-Martin map") {
  for (const auto& [r, p, n] : std::vector<std::tuple<int, std::uint32_t, int>>{{1, 2, 4}, {2, 2, 10}, {1, 3, 4}}) {
    const auto rep = compare_with_fm(r, p);
    CHECK(rep.compared == n);
    for (const auto& m : rep.mismatches) FAIL_CHECK(m);
  }
}
