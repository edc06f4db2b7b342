#include "qschur/ratfunc.hpp"

#include <boost/integer/common_factor.hpp>

#include <ostream>
#include <sstream>

namespace qschur {

namespace {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly add(const ZPoly& a, const ZPoly& b, bool subtract) {
  ZPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (subtract) {
      out[i] -= b[i];
    } else {
      out[i] += b[i];
    }
  }
  trim(out);
  return out;
}

bool is_one(const ZPoly& a) { return a.size() == 1 && a[0] == 1; }

void divide_scalar(ZPoly& a, const Integer& c) {
  for (auto& x : a) x /= c;
}

ZPoly primitive_part(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  Integer c = zpoly_content(a);
  if (a.back() < 0) c = -c;
  divide_scalar(a, c);
  return a;
}

// Pseudo-remainder of a by b: lead(b)^k a = q b + r.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    for (auto& x : a) x *= b.back();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

// Exact quotient a / b over Z[v] (b divides a).
ZPoly exact_quotient(ZPoly a, const ZPoly& b) {
  if (is_one(b)) return a;
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    if (a.empty()) return a;
    throw std::logic_error("exact_quotient: not divisible");
  }
  ZPoly q(a.size() - db, Integer(0));
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    const Integer& top = a[k + db];
    if (top == 0) continue;
    if (top % b.back() != 0) throw std::logic_error("exact_quotient: non-integral");
    Integer f = top / b.back();
    for (std::size_t j = 0; j <= db; ++j) a[k + j] -= f * b[j];
    q[k] = f;
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("exact_quotient: remainder");
  trim(q);
  return q;
}

}  // namespace

Integer zpoly_content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& x : a) {
    g = boost::integer::gcd(g, x);
    if (g == 1) break;
  }
  return g < 0 ? Integer(-g) : g;
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return ZPoly{Integer(1)};
    ZPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RatFunc::RatFunc(int c) {
  if (c != 0) num_ = {Integer(c)};
}

RatFunc::RatFunc(const LaurentPoly& x) {
  if (x.is_zero()) return;
  const int lo = std::min(0, x.min_exponent());
  num_.assign(static_cast<std::size_t>(x.max_exponent() - lo) + 1, Integer(0));
  for (const auto& [e, c] : x.terms()) num_[e - lo] = c;
  if (lo < 0) {
    den_.assign(static_cast<std::size_t>(-lo) + 1, Integer(0));
    den_.back() = 1;
  }
  trim(num_);
}

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw std::domain_error("RatFunc with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.empty()) {
    den_ = {Integer(1)};
    return;
  }
  if (!is_one(den_)) {
    ZPoly g = zpoly_gcd(num_, den_);
    if (g.size() > 1) {
      num_ = exact_quotient(std::move(num_), g);
      den_ = exact_quotient(std::move(den_), g);
    }
  }
  Integer c = boost::integer::gcd(zpoly_content(num_), zpoly_content(den_));
  if (den_.back() < 0) c = -c;
  if (c != 1) {
    divide_scalar(num_, c);
    divide_scalar(den_, c);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = add(num_, o.num_, false);
  } else {
    num_ = add(mul(num_, o.den_), mul(o.num_, den_), false);
    den_ = mul(den_, o.den_);
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  num_ = mul(num_, o.num_);
  den_ = mul(den_, o.den_);
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(v)");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
  auto poly = [](const ZPoly& p) {
    std::vector<LaurentPoly::Term> t;
    for (std::size_t k = 0; k < p.size(); ++k) t.emplace_back(static_cast<int>(k), p[k]);
    return LaurentPoly::from_terms(std::move(t)).to_string();
  };
  if (is_one(den_)) return poly(num_);
  return "(" + poly(num_) + ")/(" + poly(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

}  // namespace qschur
