#pragma once

// Exact Laurent polynomials over Z: the ring A = Z[v, v^-1].
//
// Elements are kept as a sorted list of (exponent, coefficient) pairs with no
// zero coefficients, so equality is representation equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT: constants embed implicitly
  LaurentPoly(const Integer& c);  // NOLINT

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int min_exponent() const;
  int max_exponent() const;
  Integer coeff(int exponent) const;

  // v -> v^-1
  LaurentPoly bar() const;
  // v -> v^d (d may be negative)
  LaurentPoly substitute_power(int d) const;
  // multiply by v^k
  LaurentPoly shifted(int k) const;
  // value at v = x for x a unit of Z (x = 1 or x = -1)
  Integer eval_unit(int x) const;
  Rational eval(const Rational& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Quantum integer [m]_d = (v^{dm} - v^{-dm}) / (v^d - v^{-d}); any integer m.
LaurentPoly quantum_int(int m, int d = 1);
LaurentPoly quantum_factorial(int m, int d = 1);

// Gaussian binomial [m over k] in v_i = v^d, for m >= 0. Zero when k < 0 or
// k > m.
LaurentPoly gauss_binomial(int m, int k, int d = 1);

// [m over k] = [m][m-1]...[m-k+1] / [k]! for arbitrary integer m and k >= 0.
// Agrees with gauss_binomial when m >= 0.
LaurentPoly gauss_binomial_general(int m, int k, int d = 1);

// l-th cyclotomic polynomial (in nonnegative powers of v).
LaurentPoly cyclotomic(int l);

// Quotient x / y in Z[v, v^-1]; throws NotDivisible if y does not divide x.
LaurentPoly exact_divide(const LaurentPoly& x, const LaurentPoly& y);

nlohmann::json integer_to_json(const Integer& c);
Integer integer_from_json(const nlohmann::json& j);

// {"coeffs": {"<exponent>": <int>, ...}}
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace qschur
