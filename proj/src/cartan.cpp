#include "qschur/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qschur {

std::string CartanDatum::violation(const std::vector<std::vector<int>>& p) {
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (p[i].size() != m) return "pairing matrix is not square";
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (p[i][i] <= 0 || p[i][i] % 2 != 0) return "i.i must lie in {2,4,6,...}";
    for (std::size_t j = 0; j < m; ++j) {
      if (p[i][j] != p[j][i]) return "pairing matrix is not symmetric";
      if (i == j) continue;
      if ((2 * p[i][j]) % p[i][i] != 0 || 2 * p[i][j] / p[i][i] > 0) {
        return "2(i.j)/(i.i) must lie in {0,-1,-2,...}";
      }
    }
  }
  return {};
}

CartanDatum::CartanDatum(std::vector<std::vector<int>> pairing) : pairing_(std::move(pairing)) {
  if (auto why = violation(pairing_); !why.empty()) throw std::invalid_argument("invalid Cartan datum: " + why);
}

CartanDatum CartanDatum::type_a(int rank) {
  std::vector<std::vector<int>> p(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    p[i][i] = 2;
    if (i + 1 < rank) p[i][i + 1] = p[i + 1][i] = -1;
  }
  return CartanDatum(std::move(p));
}

int l_factor(const CartanDatum& datum, int i, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  const int half = datum.dot(i, i) / 2;
  return ell / std::gcd(ell, half);
}

namespace {

CartanDatum star_datum(const CartanDatum& base, const std::vector<int>& l) {
  std::vector<std::vector<int>> p = base.pairing();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) p[i][j] *= l[i] * l[j];
  return CartanDatum(std::move(p));
}

std::vector<int> l_factors(const CartanDatum& base, int ell) {
  std::vector<int> l;
  for (int i = 1; i <= base.rank(); ++i) l.push_back(l_factor(base, i, ell));
  return l;
}

}  // namespace

ModifiedDatum::ModifiedDatum(CartanDatum base, int ell)
    : base_(std::move(base)), ell_(ell), l_(l_factors(base_, ell)), star_(star_datum(base_, l_)) {}

// ---- weights ----

Weight::Weight(std::vector<int> lift) : coords_(std::move(lift)) {
  if (coords_.empty()) throw std::invalid_argument("weight of rank 0");
  const int m = *std::min_element(coords_.begin(), coords_.end());
  for (auto& c : coords_) c -= m;
}

int Weight::coordinate_sum() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

int Weight::pairing(int i) const {
  if (i < 1 || i >= rank()) throw std::out_of_range("coroot index out of range");
  return coords_[i - 1] - coords_[i];
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw RankMismatch("adding weights of different rank");
  std::vector<int> c = coords_;
  for (int k = 0; k < rank(); ++k) c[k] += o.coords_[k];
  return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
  if (o.rank() != rank()) throw RankMismatch("subtracting weights of different rank");
  std::vector<int> c = coords_;
  for (int k = 0; k < rank(); ++k) c[k] -= o.coords_[k];
  return Weight(std::move(c));
}

Weight Weight::scaled(int k) const {
  std::vector<int> c = coords_;
  for (auto& x : c) x *= k;
  return Weight(std::move(c));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < rank(); ++k) os << (k ? "," : "") << coords_[k];
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

RootDatumTypeA::RootDatumTypeA(int n) : n_(n), cartan_(CartanDatum::type_a(n - 1)) {
  if (n < 2) throw std::invalid_argument("type A root datum needs n >= 2");
}

Weight RootDatumTypeA::simple_root(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("simple root index out of range");
  std::vector<int> c(n_, 0);
  c[i - 1] = 1;
  c[i] = -1;
  return Weight(std::move(c));
}

std::vector<int> RootDatumTypeA::simple_coroot(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("simple coroot index out of range");
  std::vector<int> c(n_, 0);
  c[i - 1] = 1;
  c[i] = -1;
  return c;
}

int RootDatumTypeA::pair(const std::vector<int>& coweight, const Weight& w) const {
  if (static_cast<int>(coweight.size()) != n_ || w.rank() != n_) throw RankMismatch("pairing across ranks");
  if (std::accumulate(coweight.begin(), coweight.end(), 0) != 0) {
    throw std::invalid_argument("coweight must have zero coordinate sum");
  }
  int s = 0;
  for (int k = 0; k < n_; ++k) s += coweight[k] * w.coords()[k];
  return s;
}

bool dominance_leq(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank()) throw RankMismatch("dominance between weights of different rank");
  const int n = lambda.rank();
  const int gap = lambda.coordinate_sum() - mu.coordinate_sum();
  if (gap % n != 0) return false;
  // mu + k(1,...,1) - lambda has zero sum; its partial sums are the n_i.
  const int k = gap / n;
  int partial = 0;
  for (int i = 0; i + 1 < n; ++i) {
    partial += mu.coords()[i] + k - lambda.coords()[i];
    if (partial < 0) return false;
  }
  return true;
}

bool is_dominant(const Weight& w) {
  for (int i = 1; i < w.rank(); ++i)
    if (w.pairing(i) < 0) return false;
  return true;
}

bool in_Xstar(const Weight& lambda, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  const ModifiedDatum md(CartanDatum::type_a(lambda.rank() - 1), ell);
  for (int i = 1; i < lambda.rank(); ++i) {
    if (lambda.pairing(i) % md.l(i) != 0) return false;
  }
  return true;
}

Weight weyl_reflect(int i, const Weight& lambda) {
  std::vector<int> c = lambda.coords();
  if (i < 1 || i >= lambda.rank()) throw std::out_of_range("reflection index out of range");
  std::swap(c[i - 1], c[i]);
  return Weight(std::move(c));
}

std::optional<std::vector<int>> realize(const Weight& lambda, int r) {
  const int n = lambda.rank();
  const int s = lambda.coordinate_sum();
  if (s > r || (r - s) % n != 0) return std::nullopt;
  std::vector<int> d = lambda.coords();
  for (auto& x : d) x += (r - s) / n;
  return d;
}

namespace {

void partitions(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 0; --p) {
    cur.push_back(p);
    partitions(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Weight> dominant_weights(int n, int r) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(r, r, n, cur, parts);
  std::vector<Weight> out;
  for (auto& p : parts) out.emplace_back(p);
  return out;
}

SaturatedSet::SaturatedSet(int n, std::vector<Weight> complement) : n_(n), complement_(std::move(complement)) {
  for (const auto& w : complement_) {
    if (w.rank() != n) throw RankMismatch("complement weight of wrong rank");
    if (!is_dominant(w)) throw std::invalid_argument("complement weight " + w.to_string() + " is not dominant");
  }
  std::sort(complement_.begin(), complement_.end());
  complement_.erase(std::unique(complement_.begin(), complement_.end()), complement_.end());
}

bool SaturatedSet::contains(const Weight& w) const {
  if (!is_dominant(w)) return false;
  return !std::binary_search(complement_.begin(), complement_.end(), w);
}

bool SaturatedSet::is_saturated_within(const std::vector<Weight>& window) const {
  for (const auto& mu : complement_) {
    for (const auto& nu : window) {
      if (is_dominant(nu) && dominance_leq(nu, mu) && contains(nu)) return false;
    }
  }
  return true;
}

SaturatedSet saturate(const Weight& lambda, const std::vector<Weight>& window) {
  if (!is_dominant(lambda)) throw std::invalid_argument("saturate: " + lambda.to_string() + " is not dominant");
  std::vector<Weight> comp;
  for (const auto& mu : window) {
    if (is_dominant(mu) && !dominance_leq(lambda, mu)) comp.push_back(mu);
  }
  return SaturatedSet(lambda.rank(), std::move(comp));
}

std::vector<SaturatedSet> all_saturated_sets(const std::vector<Weight>& window) {
  std::vector<Weight> dom;
  for (const auto& w : window)
    if (is_dominant(w)) dom.push_back(w);
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  if (dom.size() > 20) throw std::invalid_argument("window too large for exhaustive saturated sets");
  const int n = dom.empty() ? 2 : dom.front().rank();
  std::vector<SaturatedSet> out;
  for (std::uint32_t mask = 0; mask < (1u << dom.size()); ++mask) {
    std::vector<Weight> comp;
    for (std::size_t k = 0; k < dom.size(); ++k)
      if (mask & (1u << k)) comp.push_back(dom[k]);
    SaturatedSet s(n, std::move(comp));
    if (s.is_saturated_within(dom)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qschur
