#include "qschur/theta.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

ThetaMatrix::ThetaMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("ThetaMatrix: entry count does not match n");
  }
  for (int x : entries_)
    if (x < 0) throw std::invalid_argument("ThetaMatrix: negative entry");
}

ThetaMatrix ThetaMatrix::diagonal(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) e[i * n + i] = d[i];
  return ThetaMatrix(n, std::move(e));
}

ThetaMatrix ThetaMatrix::parse(const std::string& key) {
  std::vector<int> entries;
  int rows = 0;
  std::stringstream rs(key);
  std::string row;
  while (std::getline(rs, row, '|')) {
    ++rows;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) entries.push_back(std::stoi(cell));
  }
  return ThetaMatrix(rows, std::move(entries));
}

int ThetaMatrix::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::vector<int> ThetaMatrix::row_sums() const {
  std::vector<int> s(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s[i] += at(i, j);
  return s;
}

std::vector<int> ThetaMatrix::col_sums() const {
  std::vector<int> s(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s[j] += at(i, j);
  return s;
}

bool ThetaMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

std::vector<int> ThetaMatrix::diagonal_entries() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = at(i, i);
  return d;
}

ThetaMatrix ThetaMatrix::scaled(int k) const {
  std::vector<int> e = entries_;
  for (auto& x : e) x *= k;
  return ThetaMatrix(n_, std::move(e));
}

std::optional<ThetaMatrix> ThetaMatrix::divided(int k) const {
  std::vector<int> e = entries_;
  for (auto& x : e) {
    if (x % k != 0) return std::nullopt;
    x /= k;
  }
  return ThetaMatrix(n_, std::move(e));
}

ThetaMatrix ThetaMatrix::transposed() const {
  std::vector<int> e(entries_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) e[j * n_ + i] = at(i, j);
  return ThetaMatrix(n_, std::move(e));
}

std::string ThetaMatrix::key() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (i) s += '|';
    for (int j = 0; j < n_; ++j) {
      if (j) s += ',';
      s += std::to_string(at(i, j));
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const ThetaMatrix& m) { return os << "[" << m.key() << "]"; }

int codim_d(const ThetaMatrix& a) {
  const int n = a.n();
  int d = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k <= i; ++k)
        for (int l = j + 1; l < n; ++l) d += a.at(i, j) * a.at(k, l);
    }
  return d;
}

namespace {

void compositions(int remaining, std::size_t slot, std::vector<int>& cur, int n,
                  std::vector<ThetaMatrix>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = remaining;
    out.emplace_back(n, cur);
    return;
  }
  for (int x = remaining; x >= 0; --x) {
    cur[slot] = x;
    compositions(remaining - x, slot + 1, cur, n, out);
  }
}

}  // namespace

std::vector<ThetaMatrix> theta_enumerate(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("theta_enumerate: bad (n, r)");
  std::vector<ThetaMatrix> out;
  std::vector<int> cur(static_cast<std::size_t>(n * n), 0);
  compositions(r, 0, cur, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool order_leq(const ThetaMatrix& b, const ThetaMatrix& a) {
  if (a.n() != b.n()) return false;
  if (a.row_sums() != b.row_sums() || a.col_sums() != b.col_sums()) return false;
  const int n = a.n();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      int sa = 0, sb = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const bool in = s < t ? (i <= s && j >= t) : (i >= s && j <= t);
          if (in) {
            sa += a.at(i, j);
            sb += b.at(i, j);
          }
        }
      if (sb > sa) return false;
    }
  }
  return true;
}

std::optional<GeneratorShape> generator_shape(const ThetaMatrix& a) {
  const int n = a.n();
  std::optional<GeneratorShape> shape = GeneratorShape{GeneratorKind::Idempotent, 0, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || a.at(i, j) == 0) continue;
      if (shape->kind != GeneratorKind::Idempotent) return std::nullopt;
      if (j == i + 1) {
        shape = GeneratorShape{GeneratorKind::E, i + 1, a.at(i, j)};
      } else if (i == j + 1) {
        shape = GeneratorShape{GeneratorKind::F, j + 1, a.at(i, j)};
      } else {
        return std::nullopt;
      }
    }
  return shape;
}

}  // namespace qschur
