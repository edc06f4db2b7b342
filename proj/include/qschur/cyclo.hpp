#pragma once

// Root-of-unity coefficient rings: A_l = Z[v]/(Phi_l), its fraction field
// Q[v]/(Phi_l), prime fields F_p, and the specialization maps between them.

#include "qschur/laurent.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace qschur {

// Coefficients of Phi_l, constant term first (monic, length phi(l) + 1).
const std::vector<Integer>& cyclotomic_coeffs(int l);
int euler_phi(int l);

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of C[v]/(Phi_l(v)) kept as the reduced representative of degree
// < phi(l). A default-constructed value is the zero of every such ring; any
// nonzero value carries its modulus l.
template <class C>
class CycloPoly {
 public:
  CycloPoly() = default;
  CycloPoly(int l, std::vector<C> coeffs);  // reduces

  static CycloPoly constant(int l, const C& c) { return CycloPoly(l, std::vector<C>{c}); }

  int modulus() const { return l_; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }
  // Sum of coefficients: the image under v -> 1 (before any further reduction).
  C value_at_one() const;

  CycloPoly operator-() const;
  CycloPoly& operator+=(const CycloPoly& o);
  CycloPoly& operator-=(const CycloPoly& o);
  friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
  friend CycloPoly operator-(CycloPoly a, const CycloPoly& b) { return a -= b; }
  friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) { return a.times(b); }
  CycloPoly& operator*=(const CycloPoly& o) { return *this = times(o); }
  friend bool operator==(const CycloPoly& a, const CycloPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Field inverse; only meaningful for rational coefficients.
  CycloPoly inverse() const;
  friend CycloPoly operator/(const CycloPoly& a, const CycloPoly& b) { return a * b.inverse(); }

  std::string to_string() const;

 private:
  CycloPoly times(const CycloPoly& o) const;
  static int join(int a, int b);

  int l_ = 0;
  std::vector<C> coeffs_;
};

using CycloElem = CycloPoly<Integer>;
using CycloField = CycloPoly<Rational>;

template <class C>
std::ostream& operator<<(std::ostream& os, const CycloPoly<C>& x) {
  return os << x.to_string();
}

// Image of x in A_l = Z[v,v^-1]/(Phi_l). Negative powers use v^l = 1.
CycloElem reduce_mod(const LaurentPoly& x, int l);
CycloField reduce_mod_field(const LaurentPoly& x, int l);
CycloField to_field(const CycloElem& x);
// Lift of the reduced representative back to Z[v].
LaurentPoly lift(const CycloElem& x);

nlohmann::json to_json(const CycloElem& x);
CycloElem cyclo_from_json(const nlohmann::json& j, int l);

// Prime field element; p < 2^31.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t p, std::int64_t value);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return val_; }
  bool is_zero() const { return val_ == 0; }

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  Fp inverse() const;
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.val_ == b.val_; }
  std::string to_string() const { return std::to_string(val_); }

 private:
  static std::uint32_t join(std::uint32_t a, std::uint32_t b);
  std::uint32_t p_ = 0;
  std::uint32_t val_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

Fp integer_mod(const Integer& c, std::uint32_t p);

// Which ring a specialization lands in.
enum class RingKind { Generic, Cyclotomic, PrimeField, SignTwist };

// Base change out of A = Z[v, v^-1]. For roots of unity the order l of v
// follows the convention: ell even forces l = 2 ell; ell odd allows l = ell or
// l = 2 ell.
class Specialization {
 public:
  static Specialization generic();
  static Specialization cyclotomic(int ell, int l);
  // v -> 1 into F_p through A_l; requires Phi_l(1) = 0 mod p.
  static Specialization prime_field(int ell, int l, std::uint32_t p);
  // The quasiclassical twist v -> epsilon, epsilon the image of v^{ell^2} in A_l.
  static Specialization sign_twist(int ell, int l);

  RingKind kind() const { return kind_; }
  int ell() const { return ell_; }
  int l() const { return l_; }
  std::uint32_t p() const { return p_; }
  int epsilon() const;

  CycloElem to_cyclo(const LaurentPoly& x) const;
  Integer to_sign(const LaurentPoly& x) const;
  Fp to_prime(const LaurentPoly& x) const;
  Fp to_prime(const CycloElem& x) const;

 private:
  RingKind kind_ = RingKind::Generic;
  int ell_ = 0;
  int l_ = 0;
  std::uint32_t p_ = 0;
};

// Checks the ell -> l convention; throws DomainError when violated.
void check_root_order(int ell, int l);
// The sign epsilon = v^{ell^2} in A_l, computed by reduction.
int quasiclassical_sign(int ell, int l);
bool is_prime(std::uint64_t n);

}  // namespace qschur
