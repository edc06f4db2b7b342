#include "qschur/flaggeom.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace qschur {

namespace {

using Elem = PrimePowerField::Elem;

// In-place reduced row echelon form; zero rows dropped.
std::vector<FVec> rref(const PrimePowerField& k, int r, std::vector<FVec> rows) {
  std::size_t rank = 0;
  for (int col = 0; col < r && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Elem s = k.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = k.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Elem f = rows[i][col];
      for (int c = col; c < r; ++c) rows[i][c] = k.sub(rows[i][c], k.mul(f, rows[rank][c]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Calls visit(M) for every k x m matrix M in reduced echelon form of full
// rank k, i.e. for every k-subspace of F_q^m.
void enumerate_rref(const PrimePowerField& field, int m, int k,
                    const std::function<void(const std::vector<FVec>&)>& visit) {
  if (k < 0 || k > m) return;
  const int q = field.q();
  std::vector<int> piv(k);
  for (int j = 0; j < k; ++j) piv[j] = j;
  while (true) {
    // free slots: (row j, column c) with c > piv[j], c not a pivot
    std::vector<std::pair<int, int>> slots;
    std::vector<bool> is_piv(m, false);
    for (int p : piv) is_piv[p] = true;
    for (int j = 0; j < k; ++j)
      for (int c = piv[j] + 1; c < m; ++c)
        if (!is_piv[c]) slots.emplace_back(j, c);
    std::vector<FVec> mat(k, FVec(m, 0));
    for (int j = 0; j < k; ++j) mat[j][piv[j]] = 1;
    std::vector<int> digit(slots.size(), 0);
    while (true) {
      visit(mat);
      std::size_t s = 0;
      while (s < slots.size()) {
        if (++digit[s] < q) {
          mat[slots[s].first][slots[s].second] = static_cast<Elem>(digit[s]);
          break;
        }
        digit[s] = 0;
        mat[slots[s].first][slots[s].second] = 0;
        ++s;
      }
      if (s == slots.size()) break;
    }
    // next pivot combination
    int j = k - 1;
    while (j >= 0 && piv[j] == m - k + j) --j;
    if (j < 0) break;
    ++piv[j];
    for (int t = j + 1; t < k; ++t) piv[t] = piv[t - 1] + 1;
  }
}

// Vectors extending the basis of u to a basis of w (u <= w).
std::vector<FVec> complement_basis(const PrimePowerField& k, const Subspace& u, const Subspace& w) {
  std::vector<FVec> acc = u.rows();
  std::vector<FVec> out;
  int rank = u.dim();
  for (const auto& row : w.rows()) {
    acc.push_back(row);
    const int nr = rank_of(k, w.ambient(), acc);
    if (nr > rank) {
      rank = nr;
      out.push_back(row);
    } else {
      acc.pop_back();
    }
  }
  return out;
}

// Every subspace S with u <= S <= w and dim S = dim u + extra.
void enumerate_between(const PrimePowerField& k, const Subspace& u, const Subspace& w, int extra,
                       const std::function<void(const Subspace&)>& visit) {
  const std::vector<FVec> comp = complement_basis(k, u, w);
  const int m = static_cast<int>(comp.size());
  const int r = w.ambient();
  enumerate_rref(k, m, extra, [&](const std::vector<FVec>& coeff) {
    std::vector<FVec> rows = u.rows();
    for (const auto& c : coeff) {
      FVec v(r, 0);
      for (int t = 0; t < m; ++t) {
        if (c[t] == 0) continue;
        for (int x = 0; x < r; ++x) v[x] = k.add(v[x], k.mul(c[t], comp[t][x]));
      }
      rows.push_back(std::move(v));
    }
    visit(Subspace(k, r, std::move(rows)));
  });
}

bool compatible(const ThetaMatrix& a, const ThetaMatrix& b, const ThetaMatrix& c) {
  return a.n() == b.n() && a.n() == c.n() && a.col_sums() == b.row_sums() && a.row_sums() == c.row_sums() &&
         b.col_sums() == c.col_sums();
}

std::vector<int> cumulative(const std::vector<int>& steps) {
  std::vector<int> d(steps.size());
  int s = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) d[i] = s += steps[i];
  return d;
}

Subspace full_space(const PrimePowerField& k, int r) {
  std::vector<FVec> rows(r, FVec(r, 0));
  for (int i = 0; i < r; ++i) rows[i][i] = 1;
  return Subspace(k, r, std::move(rows));
}

}  // namespace

Subspace::Subspace(const PrimePowerField& k, int r, std::vector<FVec> spanning) : r_(r) {
  for (const auto& v : spanning)
    if (static_cast<int>(v.size()) != r) throw std::invalid_argument("Subspace: vector of wrong length");
  rows_ = rref(k, r, std::move(spanning));
}

int rank_of(const PrimePowerField& k, int r, std::vector<FVec> rows) {
  return static_cast<int>(rref(k, r, std::move(rows)).size());
}

Subspace span_sum(const PrimePowerField& k, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("span_sum: ambient mismatch");
  std::vector<FVec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Subspace(k, a.ambient(), std::move(rows));
}

int intersection_dim(const PrimePowerField& k, const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - span_sum(k, a, b).dim();
}

bool contains(const PrimePowerField& k, const Subspace& big, const Subspace& small) {
  return span_sum(k, big, small).dim() == big.dim();
}

Flag::Flag(const PrimePowerField& k, std::vector<Subspace> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("Flag: no steps");
  const int r = steps_.back().ambient();
  if (steps_.back().dim() != r) throw std::invalid_argument("Flag: last step must be the whole space");
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (steps_[i].ambient() != r || !contains(k, steps_[i + 1], steps_[i])) {
      throw std::invalid_argument("Flag: steps are not nested");
    }
  }
  zero_ = Subspace(k, r, {});
}

const Subspace& Flag::step(int i) const {
  if (i == 0) return zero_;
  return steps_.at(static_cast<std::size_t>(i - 1));
}

std::vector<int> Flag::type() const {
  std::vector<int> t;
  for (int i = 1; i <= n(); ++i) t.push_back(step(i).dim() - step(i - 1).dim());
  return t;
}

ThetaMatrix orbit_invariant(const PrimePowerField& k, const Flag& f, const Flag& g) {
  if (f.n() != g.n() || f.ambient() != g.ambient()) throw std::invalid_argument("orbit_invariant: dimension mismatch");
  const int n = f.n();
  std::vector<std::vector<int>> inter(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) inter[i][j] = intersection_dim(k, f.step(i), g.step(j));
  std::vector<int> e;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) e.push_back(inter[i][j] - inter[i - 1][j] - inter[i][j - 1] + inter[i - 1][j - 1]);
  return ThetaMatrix(n, std::move(e));
}

FlagPair representative_pair(const PrimePowerField& k, const ThetaMatrix& c) {
  const int n = c.n();
  const int r = c.degree();
  // index of basis vector (i, j, t): column-major over (j, i), then t
  std::vector<int> owner_i, owner_j;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < c.at(i, j); ++t) {
        owner_i.push_back(i);
        owner_j.push_back(j);
      }
  auto build = [&](const std::vector<int>& owner) {
    std::vector<Subspace> steps;
    for (int a = 0; a < n; ++a) {
      std::vector<FVec> rows;
      for (int x = 0; x < r; ++x)
        if (owner[x] <= a) {
          FVec e(r, 0);
          e[x] = 1;
          rows.push_back(std::move(e));
        }
      steps.emplace_back(k, r, std::move(rows));
    }
    return Flag(k, std::move(steps));
  };
  FlagPair out{build(owner_i), build(owner_j), c};
  if (orbit_invariant(k, out.first, out.second) != c) throw std::logic_error("representative_pair: invariant mismatch");
  return out;
}

Flag twist(const PrimePowerField& k, const Flag& f, const std::vector<FVec>& g) {
  const int r = f.ambient();
  std::vector<Subspace> steps;
  for (const auto& s : f.steps()) {
    std::vector<FVec> rows;
    for (const auto& v : s.rows()) {
      FVec w(r, 0);
      for (int i = 0; i < r; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < r; ++j) w[j] = k.add(w[j], k.mul(v[i], g[i][j]));
      }
      rows.push_back(std::move(w));
    }
    steps.emplace_back(k, r, std::move(rows));
  }
  return Flag(k, std::move(steps));
}

std::vector<FVec> random_invertible(const PrimePowerField& k, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, k.q() - 1);
  while (true) {
    std::vector<FVec> g(r, FVec(r, 0));
    for (auto& row : g)
      for (auto& x : row) x = static_cast<Elem>(pick(rng));
    if (rank_of(k, r, g) == r) return g;
  }
}

std::uint64_t subspace_count(int q, int r, int k) {
  if (k < 0 || k > r) return 0;
  // [r over k]_q = prod_{t<k} (q^{r-t} - 1) / (q^{t+1} - 1), built up exactly
  // as a running product of binomials to stay integral.
  std::uint64_t num = 1;
  for (int t = 0; t < k; ++t) {
    std::uint64_t top = 1, bot = 1;
    for (int s = 0; s < r - t; ++s) top = sat_mul(top, static_cast<std::uint64_t>(q));
    for (int s = 0; s < t + 1; ++s) bot = sat_mul(bot, static_cast<std::uint64_t>(q));
    if (top == std::numeric_limits<std::uint64_t>::max() || num == std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    // num * (top-1) is divisible by (bot-1) at every stage
    const unsigned __int128 wide = static_cast<unsigned __int128>(num) * (top - 1) / (bot - 1);
    if (wide > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    num = static_cast<std::uint64_t>(wide);
  }
  return num;
}

void enumerate_subspaces(const PrimePowerField& field, int r, int k, const std::function<void(const Subspace&)>& visit,
                         std::uint64_t budget) {
  if (k < 0 || k > r) throw std::invalid_argument("enumerate_subspaces: need 0 <= k <= r");
  if (subspace_count(field.q(), r, k) > budget) throw BudgetExceeded("enumerate_subspaces: over budget");
  enumerate_rref(field, r, k, [&](const std::vector<FVec>& m) { visit(Subspace(field, r, m)); });
}

std::uint64_t count_middle_at(const PrimePowerField& k, const ThetaMatrix& a, const ThetaMatrix& b,
                              const FlagPair& pair, std::uint64_t budget) {
  if (!compatible(a, b, pair.invariant)) return 0;
  const int n = a.n();
  const int r = a.degree();
  const std::vector<int> dims = cumulative(a.col_sums());
  std::uint64_t total = 1;
  for (int i = n - 1; i >= 1; --i) total = sat_mul(total, subspace_count(k.q(), dims[i], dims[i - 1]));
  if (total > budget) throw BudgetExceeded("count_middle: over budget");

  std::uint64_t count = 0;
  std::vector<Subspace> steps(n);
  steps[n - 1] = full_space(k, r);
  const Subspace zero(k, r, {});
  std::function<void(int)> descend = [&](int i) {
    if (i < 0) {
      const Flag mid(k, steps);
      if (orbit_invariant(k, pair.first, mid) == a && orbit_invariant(k, mid, pair.second) == b) ++count;
      return;
    }
    enumerate_between(k, zero, steps[i + 1], dims[i], [&](const Subspace& s) {
      steps[i] = s;
      descend(i - 1);
    });
  };
  descend(n - 2);
  return count;
}

std::uint64_t count_middle(const PrimePowerField& k, const ThetaMatrix& a, const ThetaMatrix& b, const ThetaMatrix& c,
                           std::uint64_t budget) {
  if (!compatible(a, b, c)) return 0;
  return count_middle_at(k, a, b, representative_pair(k, c), budget);
}

namespace {

// Visits every F'' with (F, F'') in O_A for the representative (F, F') of O_C.
void generator_fibers(const PrimePowerField& k, const ThetaMatrix& a, const FlagPair& pair, std::uint64_t budget,
                      const std::function<void(const Flag&)>& visit) {
  const auto shape = generator_shape(a);
  if (!shape) throw std::invalid_argument("count_middle_generator: A is not generator-shaped");
  const Flag& f = pair.first;
  if (shape->kind == GeneratorKind::Idempotent) {
    if (a.row_sums() == pair.invariant.row_sums()) visit(f);
    return;
  }
  const int i = shape->index;
  const int pw = shape->power;
  Subspace lo, hi;
  int extra;
  if (shape->kind == GeneratorKind::E) {
    lo = f.step(i - 1);
    hi = f.step(i);
    extra = hi.dim() - lo.dim() - pw;
  } else {
    lo = f.step(i);
    hi = f.step(i + 1);
    extra = pw;
  }
  const int room = hi.dim() - lo.dim();
  if (extra < 0 || extra > room) return;
  if (subspace_count(k.q(), room, extra) > budget) throw BudgetExceeded("count_middle_generator: over budget");
  enumerate_between(k, lo, hi, extra, [&](const Subspace& s) {
    std::vector<Subspace> steps = f.steps();
    steps[static_cast<std::size_t>(i - 1)] = s;
    const Flag mid(k, std::move(steps));
    if (orbit_invariant(k, f, mid) != a) throw std::logic_error("count_middle_generator: middle flag left O_A");
    visit(mid);
  });
}

}  // namespace

std::uint64_t count_middle_generator(const PrimePowerField& k, const ThetaMatrix& a, const ThetaMatrix& b,
                                     const ThetaMatrix& c, std::uint64_t budget) {
  if (!compatible(a, b, c)) return 0;
  const FlagPair pair = representative_pair(k, c);
  std::uint64_t count = 0;
  generator_fibers(k, a, pair, budget, [&](const Flag& mid) {
    if (orbit_invariant(k, mid, pair.second) == b) ++count;
  });
  return count;
}

std::map<ThetaMatrix, std::uint64_t> count_middle_generator_all(const PrimePowerField& k, const ThetaMatrix& a,
                                                                const ThetaMatrix& c, std::uint64_t budget) {
  std::map<ThetaMatrix, std::uint64_t> out;
  if (a.n() != c.n() || a.row_sums() != c.row_sums()) return out;
  const FlagPair pair = representative_pair(k, c);
  generator_fibers(k, a, pair, budget, [&](const Flag& mid) { ++out[orbit_invariant(k, mid, pair.second)]; });
  return out;
}

}  // namespace qschur
