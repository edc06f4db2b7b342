#include "qschur/finite_field.hpp"

#include <random>
#include <stdexcept>

namespace qschur {

bool is_prime_power(int q, int* p_out, int* e_out) {
  if (q < 2) return false;
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

std::vector<int> prime_powers(int count, int from) {
  std::vector<int> out;
  for (int q = std::max(from, 2); static_cast<int>(out.size()) < count; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

namespace {

using Poly = std::vector<int>;  // constant first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, int p) {
  // b monic
  trim(a);
  while (a.size() >= b.size()) {
    const int c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly from_index(int x, int p, int e) {
  Poly c(e, 0);
  for (int k = 0; k < e; ++k) {
    c[k] = x % p;
    x /= p;
  }
  return c;
}

int to_index(const Poly& c, int p) {
  int x = 0;
  for (std::size_t k = c.size(); k-- > 0;) x = x * p + c[k];
  return x;
}

bool irreducible(const Poly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  // try every monic divisor of degree 1..e/2
  for (int d = 1; 2 * d <= e; ++d) {
    int count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = from_index(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

PrimePowerField::PrimePowerField(int q) : q_(q) {
  if (q > kMaxOrder || !is_prime_power(q, &p_, &e_)) {
    throw std::invalid_argument("PrimePowerField: q must be a prime power <= 256");
  }
  int count = 1;
  for (int k = 0; k < e_; ++k) count *= p_;
  for (int low = 0; low < count; ++low) {
    Poly f = from_index(low, p_, e_);
    f.push_back(1);
    if (e_ == 1 || irreducible(f, p_)) {
      f_ = f;
      break;
    }
  }
  const auto qs = static_cast<std::size_t>(q_);
  add_.resize(qs * qs);
  mul_.resize(qs * qs);
  neg_.resize(qs);
  inv_.assign(qs, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly pa = from_index(a, p_, e_);
    Poly na(e_);
    for (int k = 0; k < e_; ++k) na[k] = (p_ - pa[k]) % p_;
    neg_[a] = static_cast<Elem>(to_index(na, p_));
    for (int b = 0; b < q_; ++b) {
      const Poly pb = from_index(b, p_, e_);
      Poly s(e_);
      for (int k = 0; k < e_; ++k) s[k] = (pa[k] + pb[k]) % p_;
      add_[a * q_ + b] = static_cast<Elem>(to_index(s, p_));
      Poly prod(2 * e_, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
      Poly r = poly_mod(prod, f_, p_);
      r.resize(e_, 0);
      mul_[a * q_ + b] = static_cast<Elem>(to_index(r, p_));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
}

PrimePowerField::Elem PrimePowerField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

bool PrimePowerField::verify_axioms() const {
  auto check = [&](Elem a, Elem b, Elem c) {
    if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
    if (add(add(a, b), c) != add(a, add(b, c))) return false;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) return false;
    if (a != 0 && mul(a, inv(a)) != 1) return false;
    return true;
  };
  if (q_ <= 16) {
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        for (int c = 0; c < q_; ++c)
          if (!check(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c))) return false;
    return true;
  }
  std::mt19937 rng(static_cast<unsigned>(q_));
  std::uniform_int_distribution<int> pick(0, q_ - 1);
  for (int t = 0; t < 20000; ++t) {
    if (!check(static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)))) return false;
  }
  return true;
}

}  // namespace qschur
