#pragma once

// Theta_r: n x n matrices of nonnegative integers with entry sum r. They index
// GL(V)-orbits on pairs of n-step flags in an r-dimensional space, and so the
// basis of the q-Schur algebra.

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qschur {

class ThetaMatrix {
 public:
  ThetaMatrix() = default;
  // Row-major entries, all nonnegative.
  ThetaMatrix(int n, std::vector<int> entries);

  static ThetaMatrix diagonal(const std::vector<int>& d);
  // Inverse of key(): "a11,a12|a21,a22".
  static ThetaMatrix parse(const std::string& key);

  int n() const { return n_; }
  // 0-based entry access
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<int>& entries() const { return entries_; }
  int degree() const;
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  bool is_diagonal() const;
  std::vector<int> diagonal_entries() const;

  ThetaMatrix scaled(int k) const;
  // A / k when every entry is divisible by k.
  std::optional<ThetaMatrix> divided(int k) const;
  ThetaMatrix transposed() const;

  std::string key() const;

  friend bool operator==(const ThetaMatrix&, const ThetaMatrix&) = default;
  friend auto operator<=>(const ThetaMatrix&, const ThetaMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const ThetaMatrix& m);

// d_A = sum over i >= k, j < l of a_ij a_kl; [A] = v^{-d_A} <A>.
int codim_d(const ThetaMatrix& a);

// All matrices in Theta_r for the given n; count C(r + n^2 - 1, n^2 - 1).
std::vector<ThetaMatrix> theta_enumerate(int n, int r);

// B <= A in the orbit-closure order: equal marginals, and for s < t
// sum_{i<=s, j>=t} b_ij <= sum a_ij, and for s > t sum_{i>=s, j<=t} b_ij <= sum a_ij.
bool order_leq(const ThetaMatrix& b, const ThetaMatrix& a);
inline bool order_less(const ThetaMatrix& b, const ThetaMatrix& a) { return b != a && order_leq(b, a); }

enum class GeneratorKind { Idempotent, E, F };

struct GeneratorShape {
  GeneratorKind kind;
  int index = 0;  // simple root index i (1-based); 0 for idempotents
  int power = 0;  // divided power a
};

// Diagonal matrices, and diagonal-plus-one entry at (i, i+1) (kind E) or at
// (i+1, i) (kind F). nullopt for anything else.
std::optional<GeneratorShape> generator_shape(const ThetaMatrix& a);

}  // namespace qschur
