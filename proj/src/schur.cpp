#include "qschur/schur.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

namespace qschur {

std::optional<ThetaMatrix> generator_matrix(GeneratorKind kind, int index, int power, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  for (int x : d)
    if (x < 0) return std::nullopt;
  if (kind == GeneratorKind::Idempotent) return ThetaMatrix::diagonal(d);
  if (index < 1 || index >= n || power < 1) return std::nullopt;
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) e[k * n + k] = d[k];
  const int i = index - 1;
  if (kind == GeneratorKind::E) {
    if (d[i + 1] < power) return std::nullopt;
    e[(i + 1) * n + (i + 1)] -= power;
    e[i * n + (i + 1)] = power;
  } else {
    if (d[i] < power) return std::nullopt;
    e[i * n + i] -= power;
    e[(i + 1) * n + i] = power;
  }
  return ThetaMatrix(n, std::move(e));
}

std::vector<int> step_weight(const GenStep& s, std::vector<int> d) {
  if (s.kind == GeneratorKind::E) {
    d[s.index - 1] += s.power;
    d[s.index] -= s.power;
  } else if (s.kind == GeneratorKind::F) {
    d[s.index - 1] -= s.power;
    d[s.index] += s.power;
  }
  return d;
}

std::optional<ThetaMatrix> psi_generator_image(const GeneratorSymbol& g, int n, int r) {
  if (g.weight.rank() != n) throw RankMismatch("generator weight of wrong rank");
  const auto d = realize(g.weight, r);
  if (!d) return std::nullopt;
  return generator_matrix(g.kind, g.index, g.power, *d);
}

SchurData::SchurData(const StructureTable& table) : table_(&table) {
  for (int a = 0; a < dim(); ++a) index_[basis()[a]] = a;
  for (const auto& [g, op] : table.ops) {
    SparseMatrix<LaurentPoly> m(dim(), dim());
    for (const auto& [b, col] : op) {
      auto& out = m.cols[static_cast<std::size_t>(index(b))];
      for (const auto& [c, coef] : col) out.emplace_back(index(c), coef);
      std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    gens_.emplace(g, std::move(m));
  }
  mono_.resize(static_cast<std::size_t>(dim()));
  left_.resize(static_cast<std::size_t>(dim()));
  std::vector<int> state(static_cast<std::size_t>(dim()), 0);  // 0 todo, 1 in progress, 2 done
  for (int a = 0; a < dim(); ++a) build_left(a, state);
}

const SchurData& SchurData::get(int n, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SchurData>> memo;
  const StructureTable& t = get_table(n, r);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[{n, r}];
  if (!slot) slot = std::make_unique<SchurData>(t);
  return *slot;
}

int SchurData::index(const ThetaMatrix& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw std::out_of_range(a.key() + " is not in the basis");
  return it->second;
}

const SparseMatrix<LaurentPoly>& SchurData::generator(const ThetaMatrix& g) const {
  auto it = gens_.find(g);
  if (it == gens_.end()) throw std::out_of_range("no generator operator for " + g.key());
  return it->second;
}

std::optional<DenseVec<LaurentPoly>> SchurData::evaluate(const std::vector<GenStep>& steps,
                                                         const std::vector<int>& weight) const {
  DenseVec<LaurentPoly> v(static_cast<std::size_t>(dim()));
  v[index(ThetaMatrix::diagonal(weight))] = 1;
  std::vector<int> d = weight;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto g = generator_matrix(it->kind, it->index, it->power, d);
    if (!g) return std::nullopt;
    v = generator(*g).apply(v);
    d = step_weight(*it, d);
  }
  return v;
}

std::optional<SparseMatrix<LaurentPoly>> SchurData::operator_of(const std::vector<GenStep>& steps,
                                                                const std::vector<int>& weight) const {
  SparseMatrix<LaurentPoly> m = generator(ThetaMatrix::diagonal(weight));
  std::vector<int> d = weight;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto g = generator_matrix(it->kind, it->index, it->power, d);
    if (!g) return std::nullopt;
    m = compose(generator(*g), m);
    d = step_weight(*it, d);
  }
  return m;
}

namespace {

bool is_unit(const LaurentPoly& x) {
  return x.terms().size() == 1 && (x.terms()[0].second == 1 || x.terms()[0].second == -1);
}

LaurentPoly unit_inverse(const LaurentPoly& x) {
  const auto& [e, c] = x.terms()[0];
  return LaurentPoly::monomial(-e, c);
}

}  // namespace

Monomial monomial_for(const ThetaMatrix& a, const SchurData& data) {
  const int n = a.n();
  struct Block {
    std::vector<GenStep> steps;
    bool reversible;
  };
  std::vector<Block> upper, lower;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int x = a.at(i, j);
      if (i == j || x == 0) continue;
      Block b;
      if (i < j) {
        for (int k = i; k < j; ++k) b.steps.push_back({GeneratorKind::E, k + 1, x});
      } else {
        for (int k = j; k < i; ++k) b.steps.push_back({GeneratorKind::F, k + 1, x});
      }
      b.reversible = b.steps.size() > 1;
      (i < j ? upper : lower).push_back(std::move(b));
    }

  // All orderings and chain directions of a family of blocks.
  auto arrangements = [](const std::vector<Block>& blocks) {
    std::vector<std::vector<GenStep>> out;
    std::vector<int> perm(blocks.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const std::uint32_t masks = 1u << blocks.size();
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        bool redundant = false;
        std::vector<GenStep> seq;
        for (std::size_t k = 0; k < perm.size(); ++k) {
          const Block& b = blocks[perm[k]];
          const bool flip = (mask >> k) & 1u;
          if (flip && !b.reversible) {
            redundant = true;
            break;
          }
          if (flip) {
            seq.insert(seq.end(), b.steps.rbegin(), b.steps.rend());
          } else {
            seq.insert(seq.end(), b.steps.begin(), b.steps.end());
          }
        }
        if (!redundant) out.push_back(std::move(seq));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  };

  const auto ups = arrangements(upper);
  const auto lows = arrangements(lower);
  const std::vector<int> weight = a.col_sums();
  const int ia = data.index(a);
  std::optional<Monomial> fallback;
  for (int e_first = 1; e_first >= 0; --e_first) {
    for (const auto& u : ups)
      for (const auto& l : lows) {
        Monomial m;
        m.weight = weight;
        m.steps = e_first ? u : l;
        const auto& tail = e_first ? l : u;
        m.steps.insert(m.steps.end(), tail.begin(), tail.end());
        const auto img = data.evaluate(m.steps, weight);
        if (!img) continue;
        m.lead = (*img)[ia];
        if (!is_unit(m.lead)) continue;
        bool below = true;
        for (int c = 0; c < data.dim() && below; ++c) {
          if (c == ia || (*img)[c].is_zero()) continue;
          if (!order_less(data.basis()[c], a)) below = false;
          m.correction[data.basis()[c]] = (*img)[c];
        }
        if (!below) continue;
        if (m.lead == LaurentPoly(1)) return m;
        if (!fallback) fallback = std::move(m);
      }
  }
  if (fallback) return *fallback;
  throw std::logic_error("monomial_for: no triangular generator monomial for " + a.key());
}

const SparseMatrix<LaurentPoly>& SchurData::build_left(int a, std::vector<int>& state) {
  if (state[a] == 2) return left_[a];
  if (state[a] == 1) throw std::logic_error("monomial recursion is not well founded at " + basis()[a].key());
  state[a] = 1;
  Monomial m = monomial_for(basis()[a], *this);
  SparseMatrix<LaurentPoly> op = *operator_of(m.steps, m.weight);
  for (const auto& [c, coef] : m.correction) {
    const int ic = index(c);
    op = add(op, build_left(ic, state), -coef);
  }
  if (m.lead != LaurentPoly(1)) op = scaled(op, unit_inverse(m.lead));
  left_[a] = std::move(op);
  mono_[a] = std::move(m);
  state[a] = 2;
  return left_[a];
}

std::map<ThetaMatrix, std::vector<std::uint64_t>> brute_oracle_product(const ThetaMatrix& a, const ThetaMatrix& b,
                                                                       const std::vector<int>& qs) {
  std::map<ThetaMatrix, std::vector<std::uint64_t>> out;
  if (a.n() != b.n() || a.col_sums() != b.row_sums()) return out;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const PrimePowerField field(qs[k]);
    for (const auto& c : theta_enumerate(a.n(), a.degree())) {
      if (c.row_sums() != a.row_sums() || c.col_sums() != b.col_sums()) continue;
      const std::uint64_t cnt = count_middle(field, a, b, c);
      if (cnt == 0) continue;
      auto& v = out[c];
      v.resize(qs.size(), 0);
      v[k] = cnt;
    }
  }
  return out;
}

}  // namespace qschur
