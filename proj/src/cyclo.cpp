#include "qschur/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qschur {

const std::vector<Integer>& cyclotomic_coeffs(int l) {
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  LaurentPoly phi = cyclotomic(l);
  std::vector<Integer> c(static_cast<std::size_t>(phi.max_exponent()) + 1);
  for (const auto& [e, k] : phi.terms()) c[e] = k;
  return cache.emplace(l, std::move(c)).first->second;
}

int euler_phi(int l) { return static_cast<int>(cyclotomic_coeffs(l).size()) - 1; }

namespace {

template <class C>
void trim(std::vector<C>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Reduce a coefficient vector modulo the monic Phi_l in place.
template <class C>
void reduce_in_place(std::vector<C>& a, int l) {
  const auto& phi = cyclotomic_coeffs(l);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= deg; --k) {
    if (a[k] == 0) continue;
    C top = a[k];
    for (int j = 0; j <= deg; ++j) a[k - deg + j] -= top * C(phi[j]);
  }
  if (static_cast<int>(a.size()) > deg) a.resize(deg);
  trim(a);
}

using QPoly = std::vector<Rational>;

QPoly qpoly_sub_mul(const QPoly& a, const QPoly& b, const QPoly& c) {
  // a - b * c
  QPoly out = a;
  if (!b.empty() && !c.empty()) {
    if (out.size() < b.size() + c.size() - 1) out.resize(b.size() + c.size() - 1);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) out[i + j] -= b[i] * c[j];
  }
  trim(out);
  return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  const int db = static_cast<int>(b.size()) - 1;
  trim(a);
  if (static_cast<int>(a.size()) - 1 >= db) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (int j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly inverse_mod_phi(const QPoly& x, int l) {
  const auto& phiz = cyclotomic_coeffs(l);
  QPoly phi(phiz.begin(), phiz.end());
  // Extended Euclid tracking only the coefficient of x.
  QPoly r0 = phi, r1 = x, s0, s1{Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = qpoly_divmod(r0, r1);
    QPoly s = qpoly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw DomainError("element is not invertible modulo Phi_" + std::to_string(l));
  for (auto& c : s0) c /= r0[0];
  reduce_in_place(s0, l);
  return s0;
}

}  // namespace

template <class C>
int CycloPoly<C>::join(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("mixing A_" + std::to_string(a) + " and A_" + std::to_string(b));
}

template <class C>
CycloPoly<C>::CycloPoly(int l, std::vector<C> coeffs) : l_(l), coeffs_(std::move(coeffs)) {
  if (l < 1) throw DomainError("cyclotomic modulus must be positive");
  reduce_in_place(coeffs_, l_);
}

template <class C>
C CycloPoly<C>::value_at_one() const {
  C s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

template <class C>
CycloPoly<C> CycloPoly<C>::operator-() const {
  CycloPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

template <class C>
CycloPoly<C>& CycloPoly<C>::operator+=(const CycloPoly& o) {
  l_ = join(l_, o.l_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim(coeffs_);
  return *this;
}

template <class C>
CycloPoly<C>& CycloPoly<C>::operator-=(const CycloPoly& o) {
  l_ = join(l_, o.l_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim(coeffs_);
  return *this;
}

template <class C>
CycloPoly<C> CycloPoly<C>::times(const CycloPoly& o) const {
  const int l = join(l_, o.l_);
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<C> prod(coeffs_.size() + o.coeffs_.size() - 1, C(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return CycloPoly(l, std::move(prod));
}

template <class C>
CycloPoly<C> CycloPoly<C>::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  QPoly x(coeffs_.begin(), coeffs_.end());
  QPoly inv = inverse_mod_phi(x, l_);
  std::vector<C> out;
  out.reserve(inv.size());
  for (const auto& c : inv) {
    if constexpr (std::is_same_v<C, Integer>) {
      if (denominator(c) != 1) throw DomainError("not a unit of A_" + std::to_string(l_));
      out.push_back(numerator(c));
    } else {
      out.push_back(c);
    }
  }
  return CycloPoly(l_, std::move(out));
}

template <class C>
std::string CycloPoly<C>::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k] << ")";
    if (k > 0) os << "*v^" << k;
  }
  return os.str();
}

template class CycloPoly<Integer>;
template class CycloPoly<Rational>;

CycloElem reduce_mod(const LaurentPoly& x, int l) {
  if (x.is_zero()) return {};
  std::vector<Integer> a(static_cast<std::size_t>(l), Integer(0));
  for (const auto& [e, c] : x.terms()) a[((e % l) + l) % l] += c;
  return CycloElem(l, std::move(a));
}

CycloField reduce_mod_field(const LaurentPoly& x, int l) { return to_field(reduce_mod(x, l)); }

CycloField to_field(const CycloElem& x) {
  if (x.is_zero()) return {};
  return CycloField(x.modulus(), std::vector<Rational>(x.coeffs().begin(), x.coeffs().end()));
}

LaurentPoly lift(const CycloElem& x) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) t.emplace_back(static_cast<int>(k), x.coeffs()[k]);
  return LaurentPoly::from_terms(std::move(t));
}

nlohmann::json to_json(const CycloElem& x) { return to_json(lift(x)); }

CycloElem cyclo_from_json(const nlohmann::json& j, int l) { return reduce_mod(laurent_from_json(j), l); }

// ---- F_p ----

std::uint32_t Fp::join(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("mixing F_" + std::to_string(a) + " and F_" + std::to_string(b));
}

Fp::Fp(std::uint32_t p, std::int64_t value) : p_(p) {
  if (p < 2) throw DomainError("prime field modulus must be >= 2");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  val_ = static_cast<std::uint32_t>(r);
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (val_ != 0) r.val_ = p_ - val_;
  return r;
}

Fp& Fp::operator+=(const Fp& o) {
  p_ = join(p_, o.p_);
  if (p_ == 0) return *this;
  std::uint64_t s = static_cast<std::uint64_t>(val_) + o.val_;
  val_ = static_cast<std::uint32_t>(s % p_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) { return *this += -o; }

Fp& Fp::operator*=(const Fp& o) {
  p_ = join(p_, o.p_);
  if (p_ == 0) return *this;
  val_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(val_) * o.val_ % p_);
  return *this;
}

Fp Fp::inverse() const {
  if (val_ == 0) throw DomainError("inverse of zero in F_p");
  // Fermat: a^{p-2}
  std::uint64_t base = val_, e = p_ - 2, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  Fp r;
  r.p_ = p_;
  r.val_ = static_cast<std::uint32_t>(acc);
  return r;
}

Fp integer_mod(const Integer& c, std::uint32_t p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return Fp(p, static_cast<std::int64_t>(r));
}

// ---- specialization ----

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void check_root_order(int ell, int l) {
  if (ell < 1) throw DomainError("ell must be positive");
  if (ell % 2 == 0 && l != 2 * ell) throw DomainError("ell even forces l = 2 ell");
  if (ell % 2 == 1 && l != ell && l != 2 * ell) throw DomainError("ell odd allows only l = ell or l = 2 ell");
}

int quasiclassical_sign(int ell, int l) {
  check_root_order(ell, l);
  CycloElem e = reduce_mod(LaurentPoly::monomial(ell * ell), l);
  if (e == CycloElem::constant(l, 1)) return 1;
  if (e == CycloElem::constant(l, -1)) return -1;
  throw DomainError("v^{ell^2} is not a sign in A_l");
}

Specialization Specialization::generic() { return {}; }

Specialization Specialization::cyclotomic(int ell, int l) {
  check_root_order(ell, l);
  Specialization s;
  s.kind_ = RingKind::Cyclotomic;
  s.ell_ = ell;
  s.l_ = l;
  return s;
}

Specialization Specialization::prime_field(int ell, int l, std::uint32_t p) {
  check_root_order(ell, l);
  if (!is_prime(p)) throw DomainError("p must be prime");
  Integer at_one = 0;
  for (const auto& c : cyclotomic_coeffs(l)) at_one += c;
  if (at_one % p != 0) {
    throw DomainError("v -> 1 is not defined on A_" + std::to_string(l) + " over F_" + std::to_string(p) +
                      " (Phi_l(1) = " + at_one.str() + ")");
  }
  Specialization s;
  s.kind_ = RingKind::PrimeField;
  s.ell_ = ell;
  s.l_ = l;
  s.p_ = p;
  return s;
}

Specialization Specialization::sign_twist(int ell, int l) {
  check_root_order(ell, l);
  Specialization s;
  s.kind_ = RingKind::SignTwist;
  s.ell_ = ell;
  s.l_ = l;
  return s;
}

int Specialization::epsilon() const {
  if (kind_ == RingKind::Generic) throw DomainError("epsilon needs a root of unity");
  return quasiclassical_sign(ell_, l_);
}

CycloElem Specialization::to_cyclo(const LaurentPoly& x) const {
  if (kind_ != RingKind::Cyclotomic) throw DomainError("not a cyclotomic specialization");
  return reduce_mod(x, l_);
}

Integer Specialization::to_sign(const LaurentPoly& x) const {
  if (kind_ != RingKind::SignTwist) throw DomainError("not a sign-twist specialization");
  return x.eval_unit(epsilon());
}

Fp Specialization::to_prime(const LaurentPoly& x) const {
  if (kind_ != RingKind::PrimeField) throw DomainError("not a prime-field specialization");
  return integer_mod(x.eval_unit(1), p_);
}

Fp Specialization::to_prime(const CycloElem& x) const {
  if (kind_ != RingKind::PrimeField) throw DomainError("not a prime-field specialization");
  if (!x.is_zero() && x.modulus() != l_) throw DomainError("element lives in a different A_l");
  return integer_mod(x.value_at_one(), p_);
}

}  // namespace qschur
