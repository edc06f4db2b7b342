#include "qschur/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace qschur {

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
    } else {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::bar() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int d) const {
  if (d == 0) {
    Integer s = 0;
    for (const auto& t : terms_) s += t.second;
    return LaurentPoly(s);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e * d, c);
  if (d < 0) {
    std::reverse(out.begin(), out.end());
    LaurentPoly p;
    p.terms_ = std::move(out);
    return p;
  }
  LaurentPoly p;
  p.terms_ = std::move(out);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

Integer LaurentPoly::eval_unit(int x) const {
  if (x != 1 && x != -1) throw std::invalid_argument("eval_unit needs x = +-1");
  Integer s = 0;
  for (const auto& [e, c] : terms_) {
    if (x == -1 && (e % 2 != 0)) {
      s -= c;
    } else {
      s += c;
    }
  }
  return s;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (x == 0 && !terms_.empty() && terms_.front().first < 0) {
    throw std::domain_error("negative power of v evaluated at zero");
  }
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    const Rational base = e >= 0 ? x : Rational(1) / x;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    s += p * Rational(c);
  }
  return s;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].second - b[j].second)
                           : Integer(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
  }
  LaurentPoly p;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (dense[k] != 0) p.terms_.emplace_back(static_cast<int>(k) + lo, std::move(dense[k]));
  }
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly quantum_int(int m, int d) {
  // [m] = sum_{k=0}^{|m|-1} v^{d(|m|-1-2k)}, negated for m < 0
  if (m == 0) return {};
  const int am = std::abs(m);
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0; k < am; ++k) terms.emplace_back(d * (am - 1 - 2 * k), Integer(m > 0 ? 1 : -1));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int m, int d) {
  if (m < 0) throw std::invalid_argument("quantum_factorial of negative integer");
  LaurentPoly p = 1;
  for (int k = 2; k <= m; ++k) p *= quantum_int(k, d);
  return p;
}

LaurentPoly gauss_binomial(int m, int k, int d) {
  if (m < 0) throw std::invalid_argument("gauss_binomial needs m >= 0");
  if (k < 0 || k > m) return {};
  k = std::min(k, m - k);
  // q-Pascal: [m, j] = v^{-j} [m-1, j] + v^{m-j} [m-1, j-1], row by row.
  std::vector<LaurentPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int mm = 1; mm <= m; ++mm) {
    for (int j = std::min(mm, k); j >= 1; --j) {
      row[j] = row[j].shifted(-d * j) + row[j - 1].shifted(d * (mm - j));
    }
  }
  return row[k];
}

LaurentPoly gauss_binomial_general(int m, int k, int d) {
  if (k < 0) return {};
  if (m >= 0) return gauss_binomial(m, k, d);
  LaurentPoly num = 1;
  for (int s = 0; s < k; ++s) num *= quantum_int(m - s, d);
  return exact_divide(num, quantum_factorial(k, d));
}

LaurentPoly cyclotomic(int l) {
  if (l < 1) throw std::invalid_argument("cyclotomic needs l >= 1");
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(l); it != cache.end()) return it->second;
  }
  LaurentPoly p = LaurentPoly::monomial(l) - 1;
  for (int d = 1; d < l; ++d) {
    if (l % d == 0) p = exact_divide(p, cyclotomic(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(l, p);
  return p;
}

LaurentPoly exact_divide(const LaurentPoly& x, const LaurentPoly& y) {
  if (y.is_zero()) throw NotDivisible("division by zero");
  if (x.is_zero()) return {};
  // Work with ordinary polynomials X, Y having nonzero constant terms.
  const int sx = x.min_exponent();
  const int sy = y.min_exponent();
  const int dx = x.max_exponent() - sx;
  const int dy = y.max_exponent() - sy;
  if (dx < dy) throw NotDivisible("divisor has larger degree span: " + x.to_string() + " / " + y.to_string());
  std::vector<Integer> rem(static_cast<std::size_t>(dx) + 1);
  for (const auto& [e, c] : x.terms()) rem[e - sx] = c;
  std::vector<Integer> div(static_cast<std::size_t>(dy) + 1);
  for (const auto& [e, c] : y.terms()) div[e - sy] = c;
  const Integer& lead = div.back();
  std::vector<LaurentPoly::Term> quot;
  for (int k = dx - dy; k >= 0; --k) {
    const Integer& top = rem[k + dy];
    if (top == 0) continue;
    if (top % lead != 0) throw NotDivisible(x.to_string() + " / " + y.to_string());
    Integer qk = top / lead;
    for (int j = 0; j <= dy; ++j) rem[k + j] -= qk * div[j];
    quot.emplace_back(k + sx - sy, std::move(qk));
  }
  for (const auto& c : rem) {
    if (c != 0) throw NotDivisible(x.to_string() + " / " + y.to_string());
  }
  return LaurentPoly::from_terms(std::move(quot));
}

nlohmann::json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = integer_to_json(c);
  return {{"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    terms.emplace_back(std::stoi(key), integer_from_json(val));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qschur
