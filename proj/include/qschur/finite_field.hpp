#pragma once

// Small finite fields F_q, q a prime power, with table arithmetic. An element
// is the integer sum c_k p^k of its coefficients in F_p[x]/(f), f irreducible.

#include <cstdint>
#include <vector>

namespace qschur {

class PrimePowerField {
 public:
  using Elem = std::uint8_t;
  static constexpr int kMaxOrder = 256;

  explicit PrimePowerField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return e_; }
  // Coefficients of the defining polynomial, constant first, monic.
  const std::vector<int>& modulus() const { return f_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;  // throws on 0

  // Field axioms; every triple when q <= 16, a seeded sample otherwise.
  bool verify_axioms() const;

 private:
  int q_, p_, e_;
  std::vector<int> f_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

bool is_prime_power(int q, int* p = nullptr, int* e = nullptr);
// 2, 3, 4, 5, 7, 8, 9, 11, ...
std::vector<int> prime_powers(int count, int from = 2);

}  // namespace qschur
