#pragma once

// S_v(n,r) in its left-regular representation on the [A] basis. Only
// generator operators come from counting; every other [A] acts through a
// monomial in generators whose image is [A] plus terms strictly below A.

#include "qschur/cartan.hpp"
#include "qschur/sparse.hpp"
#include "qschur/table.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qschur {

struct GenStep {
  GeneratorKind kind;
  int index = 0;  // 1-based simple root
  int power = 0;
  friend bool operator==(const GenStep&, const GenStep&) = default;
};

// E_i^(a) 1_lambda, F_i^(a) 1_lambda or 1_lambda.
struct GeneratorSymbol {
  GeneratorKind kind;
  int index = 0;
  int power = 0;
  Weight weight;
};

// The basis matrix of a generator acting on the weight realized by the
// diagonal d, or nullopt when an entry would go negative.
std::optional<ThetaMatrix> generator_matrix(GeneratorKind kind, int index, int power, const std::vector<int>& d);
// Weight realization after applying the step to d.
std::vector<int> step_weight(const GenStep& s, std::vector<int> d);

// psi_r: 1_lambda -> [D_lambda], E_i^(a) 1_lambda -> [D - a e_{i+1,i+1} + a e_{i,i+1}],
// F likewise; nullopt means the image is zero.
std::optional<ThetaMatrix> psi_generator_image(const GeneratorSymbol& g, int n, int r);

struct Monomial {
  std::vector<GenStep> steps;  // leftmost factor first; acts on 1_lambda
  std::vector<int> weight;     // lambda = c(A)
  LaurentPoly lead;            // coefficient of [A]; a unit +-v^k
  // psi(monomial) - lead [A], supported strictly below A
  std::map<ThetaMatrix, LaurentPoly> correction;
};

class SchurData {
 public:
  explicit SchurData(const StructureTable& table);
  // Memoized per process, on top of get_table(n, r).
  static const SchurData& get(int n, int r);

  int n() const { return table_->n; }
  int r() const { return table_->r; }
  int dim() const { return static_cast<int>(basis().size()); }
  const std::vector<ThetaMatrix>& basis() const { return table_->basis; }
  const StructureTable& table() const { return *table_; }
  int index(const ThetaMatrix& a) const;

  const SparseMatrix<LaurentPoly>& generator(const ThetaMatrix& g) const;
  const std::map<ThetaMatrix, SparseMatrix<LaurentPoly>>& generators() const { return gens_; }
  // Left multiplication by [A].
  const SparseMatrix<LaurentPoly>& left(int a) const { return left_.at(static_cast<std::size_t>(a)); }
  const Monomial& monomial(int a) const { return mono_.at(static_cast<std::size_t>(a)); }

  // psi(monomial) as a vector; nullopt if a factor vanishes.
  std::optional<DenseVec<LaurentPoly>> evaluate(const std::vector<GenStep>& steps, const std::vector<int>& weight) const;
  // The operator of psi(monomial); nullopt if a factor vanishes.
  std::optional<SparseMatrix<LaurentPoly>> operator_of(const std::vector<GenStep>& steps,
                                                      const std::vector<int>& weight) const;

 private:
  const SparseMatrix<LaurentPoly>& build_left(int a, std::vector<int>& state);

  const StructureTable* table_;
  std::map<ThetaMatrix, int> index_;
  std::map<ThetaMatrix, SparseMatrix<LaurentPoly>> gens_;
  std::vector<Monomial> mono_;
  std::vector<SparseMatrix<LaurentPoly>> left_;
};

// Searches generator monomials for A and returns the first one with a unit
// leading coefficient at [A] and every other term strictly below A. Throws
// std::logic_error when none is found.
Monomial monomial_for(const ThetaMatrix& a, const SchurData& data);

// Raw convolution counts #{F''} for each C at each q, by full middle-flag
// enumeration. Entries with all counts zero are omitted.
std::map<ThetaMatrix, std::vector<std::uint64_t>> brute_oracle_product(const ThetaMatrix& a, const ThetaMatrix& b,
                                                                       const std::vector<int>& qs);

// S over a coefficient ring R, obtained from the generic data by a ring map.
template <class R>
class SchurAlgebra {
 public:
  SchurAlgebra(const SchurData& data, std::function<R(const LaurentPoly&)> map)
      : data_(&data), map_(std::move(map)), one_(map_(LaurentPoly(1))) {
    for (int a = 0; a < data.dim(); ++a) left_.push_back(map_matrix<LaurentPoly, R>(data.left(a), map_));
    for (const auto& [g, m] : data.generators()) gens_.emplace(g, map_matrix<LaurentPoly, R>(m, map_));
  }

  const SchurData& data() const { return *data_; }
  int dim() const { return data_->dim(); }
  const R& one() const { return one_; }
  R map(const LaurentPoly& x) const { return map_(x); }

  const SparseMatrix<R>& left(int a) const { return left_.at(static_cast<std::size_t>(a)); }
  const SparseMatrix<R>& generator(const ThetaMatrix& g) const { return gens_.at(g); }
  // nullptr when the generator is zero on this weight
  const SparseMatrix<R>* generator(GeneratorKind kind, int index, int power, const std::vector<int>& d) const {
    for (int x : d)
      if (x < 0) return nullptr;
    const auto g = kind == GeneratorKind::Idempotent ? std::optional<ThetaMatrix>(ThetaMatrix::diagonal(d))
                                                     : generator_matrix(kind, index, power, d);
    if (!g) return nullptr;
    auto it = gens_.find(*g);
    return it == gens_.end() ? nullptr : &it->second;
  }

  DenseVec<R> zero() const { return DenseVec<R>(static_cast<std::size_t>(dim())); }
  DenseVec<R> basis_vector(int a) const {
    DenseVec<R> v = zero();
    v[a] = one_;
    return v;
  }
  DenseVec<R> identity() const {
    DenseVec<R> v = zero();
    for (int a = 0; a < dim(); ++a)
      if (data_->basis()[a].is_diagonal()) v[a] = one_;
    return v;
  }

  DenseVec<R> multiply(const DenseVec<R>& x, const DenseVec<R>& y) const {
    DenseVec<R> out = zero();
    for (int a = 0; a < dim(); ++a) {
      if (ring_is_zero(x[a])) continue;
      const DenseVec<R> t = left_[a].apply(y);
      for (int c = 0; c < dim(); ++c)
        if (!ring_is_zero(t[c])) out[c] += x[a] * t[c];
    }
    return out;
  }
  // [A][B]
  DenseVec<R> multiply_basis(int a, int b) const { return left_[a].column(b); }

 private:
  const SchurData* data_;
  std::function<R(const LaurentPoly&)> map_;
  R one_;
  std::vector<SparseMatrix<R>> left_;
  std::map<ThetaMatrix, SparseMatrix<R>> gens_;
};

}  // namespace qschur
