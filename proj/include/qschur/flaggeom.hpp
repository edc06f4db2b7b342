#pragma once

// Linear algebra over F_q: subspaces in reduced echelon form, n-step flags,
// the orbit invariant of a flag pair, and middle-flag counting.

#include "qschur/finite_field.hpp"
#include "qschur/theta.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace qschur {

using FVec = std::vector<PrimePowerField::Elem>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Subspace of F_q^r held by its reduced row echelon basis, so equality of
// subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const PrimePowerField& k, int r, std::vector<FVec> spanning);

  int ambient() const { return r_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<FVec>& rows() const { return rows_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  int r_ = 0;
  std::vector<FVec> rows_;
};

int rank_of(const PrimePowerField& k, int r, std::vector<FVec> rows);
Subspace span_sum(const PrimePowerField& k, const Subspace& a, const Subspace& b);
int intersection_dim(const PrimePowerField& k, const Subspace& a, const Subspace& b);
bool contains(const PrimePowerField& k, const Subspace& big, const Subspace& small);

// 0 = F_0 <= F_1 <= ... <= F_n = V; F_0 is implicit.
class Flag {
 public:
  Flag() = default;
  Flag(const PrimePowerField& k, std::vector<Subspace> steps);

  int n() const { return static_cast<int>(steps_.size()); }
  int ambient() const { return steps_.empty() ? 0 : steps_.back().ambient(); }
  // F_i for 0 <= i <= n
  const Subspace& step(int i) const;
  const std::vector<Subspace>& steps() const { return steps_; }
  // dim F_i - dim F_{i-1}
  std::vector<int> type() const;

  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag&, const Flag&) = default;

 private:
  std::vector<Subspace> steps_;
  Subspace zero_;
};

// a_ij = dim F_i cap F'_j - dim F_{i-1} cap F'_j - dim F_i cap F'_{j-1}
//        + dim F_{i-1} cap F'_{j-1}
ThetaMatrix orbit_invariant(const PrimePowerField& k, const Flag& f, const Flag& g);

struct FlagPair {
  Flag first, second;
  ThetaMatrix invariant;
};

// Basis vectors e_(i,j,t), t < c_ij, ordered by j then i then t; F_a is spanned
// by those with i <= a and F'_b by those with j <= b.
FlagPair representative_pair(const PrimePowerField& k, const ThetaMatrix& c);

// Applies g (an invertible r x r matrix, acting on row vectors) to every step.
Flag twist(const PrimePowerField& k, const Flag& f, const std::vector<FVec>& g);
std::vector<FVec> random_invertible(const PrimePowerField& k, int r, std::mt19937_64& rng);

// Number of k-dimensional subspaces of F_q^r, saturating at UINT64_MAX.
std::uint64_t subspace_count(int q, int r, int k);

// Every k-dimensional subspace of F_q^r exactly once.
void enumerate_subspaces(const PrimePowerField& field, int r, int k,
                         const std::function<void(const Subspace&)>& visit,
                         std::uint64_t budget = kDefaultBudget);

// #{F'' : (F, F'') in O_A, (F'', F') in O_B} for (F, F') in O_C, by
// enumerating every flag of type c(A).
std::uint64_t count_middle(const PrimePowerField& k, const ThetaMatrix& a, const ThetaMatrix& b,
                           const ThetaMatrix& c, std::uint64_t budget = kDefaultBudget);
// The same count at an explicit pair (F, F') in O_C.
std::uint64_t count_middle_at(const PrimePowerField& k, const ThetaMatrix& a, const ThetaMatrix& b,
                              const FlagPair& pair, std::uint64_t budget = kDefaultBudget);

// Fast path for generator-shaped A: only step i of F'' moves.
std::uint64_t count_middle_generator(const PrimePowerField& k, const ThetaMatrix& a, const ThetaMatrix& b,
                                     const ThetaMatrix& c, std::uint64_t budget = kDefaultBudget);
// Counts for every B at once: B -> N(A, B, C), zero entries omitted.
std::map<ThetaMatrix, std::uint64_t> count_middle_generator_all(const PrimePowerField& k, const ThetaMatrix& a,
                                                                const ThetaMatrix& c,
                                                                std::uint64_t budget = kDefaultBudget);

}  // namespace qschur
