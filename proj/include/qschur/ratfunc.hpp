#pragma once

// The field Q(v), for exact row reduction over the generic parameter.
//
// A value is num/den with num, den in Z[v] coprime in Q[v], their contents
// jointly coprime, and lead(den) > 0. That normal form is unique, so
// equality is representation equality.

#include "qschur/laurent.hpp"

#include <vector>

namespace qschur {

// Dense integer polynomial, constant term first, no trailing zeros.
using ZPoly = std::vector<Integer>;

ZPoly zpoly_gcd(ZPoly a, ZPoly b);
Integer zpoly_content(const ZPoly& a);

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c);  // NOLINT
  RatFunc(const LaurentPoly& x);  // NOLINT
  RatFunc(ZPoly num, ZPoly den);

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
  RatFunc inverse() const;

  std::string to_string() const;

 private:
  void normalize();

  ZPoly num_;
  ZPoly den_{Integer(1)};
};

std::ostream& operator<<(std::ostream& os, const RatFunc& x);

}  // namespace qschur
