#pragma once

// Cartan data, the type A root datum, the ell-modified datum, the dominance
// order and saturated sets of dominant weights.
//
// Simple roots and coroots are indexed 1..n-1 as usual.

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

class CartanDatum {
 public:
  // Symmetric pairing matrix (i.j), validated on construction.
  explicit CartanDatum(std::vector<std::vector<int>> pairing);

  static CartanDatum type_a(int rank);

  int rank() const { return static_cast<int>(pairing_.size()); }
  // i . j, 1-based
  int dot(int i, int j) const { return pairing_.at(i - 1).at(j - 1); }
  // a_ij = 2 (i.j) / (i.i)
  int cartan_entry(int i, int j) const { return 2 * dot(i, j) / dot(i, i); }
  const std::vector<std::vector<int>>& pairing() const { return pairing_; }

  // Empty string when valid, otherwise the first violated axiom.
  static std::string violation(const std::vector<std::vector<int>>& pairing);

 private:
  std::vector<std::vector<int>> pairing_;
};

// Smallest l_i > 0 with l_i (i.i / 2) in ell Z.
int l_factor(const CartanDatum& datum, int i, int ell);

class ModifiedDatum {
 public:
  ModifiedDatum(CartanDatum base, int ell);

  const CartanDatum& base() const { return base_; }
  int ell() const { return ell_; }
  int l(int i) const { return l_.at(i - 1); }
  // (I, o) with i o j = l_i l_j (i.j)
  const CartanDatum& star() const { return star_; }

 private:
  CartanDatum base_;
  int ell_;
  std::vector<int> l_;
  CartanDatum star_;
};

// Weight of the SL_n root datum: X = Z^n / Z(1,...,1). Stored through the
// representative whose minimum coordinate is 0, so equality is decidable.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> lift);

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }
  int coordinate_sum() const;
  // <alpha_i^vee, lambda> = lambda_i - lambda_{i+1}
  int pairing(int i) const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight scaled(int k) const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

class RootDatumTypeA {
 public:
  explicit RootDatumTypeA(int n);

  int n() const { return n_; }
  const CartanDatum& cartan() const { return cartan_; }
  Weight simple_root(int i) const;
  // Coroot alpha_i^vee as a zero-sum vector in Y.
  std::vector<int> simple_coroot(int i) const;
  int pair(const std::vector<int>& coweight, const Weight& w) const;

 private:
  int n_;
  CartanDatum cartan_;
};

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// lambda <= mu iff mu - lambda is a nonnegative integer combination of simple
// roots. Lift-independent: lifts are aligned to equal coordinate sums.
bool dominance_leq(const Weight& lambda, const Weight& mu);

bool is_dominant(const Weight& w);

// All <alpha_i^vee, lambda> lie in l_i Z (l_i = ell in type A).
bool in_Xstar(const Weight& lambda, int ell);

// s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i
Weight weyl_reflect(int i, const Weight& lambda);

// Realization of lambda as a diagonal with nonnegative entries summing to r.
std::optional<std::vector<int>> realize(const Weight& lambda, int r);

// Dominant weights realizable in degree r (partitions of r into at most n
// parts), in decreasing dominance-compatible order.
std::vector<Weight> dominant_weights(int n, int r);

// A saturated set P, held through its finite complement in X^+.
class SaturatedSet {
 public:
  SaturatedSet(int n, std::vector<Weight> complement);

  int n() const { return n_; }
  const std::vector<Weight>& complement() const { return complement_; }
  bool contains(const Weight& w) const;
  // The complement is downward closed among the dominant weights of window.
  bool is_saturated_within(const std::vector<Weight>& window) const;

 private:
  int n_;
  std::vector<Weight> complement_;
};

// P = { mu dominant : lambda <= mu }, complement taken inside window.
SaturatedSet saturate(const Weight& lambda, const std::vector<Weight>& window);

// Every saturated set whose complement lies in the given dominant window.
std::vector<SaturatedSet> all_saturated_sets(const std::vector<Weight>& window);

}  // namespace qschur
