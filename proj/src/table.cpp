#include "qschur/table.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>

namespace qschur {

LaurentOp compose(const LaurentOp& x, const LaurentOp& y) {
  LaurentOp out;
  for (const auto& [b, col] : y) {
    OpColumn acc;
    for (const auto& [c, coef] : col) {
      auto it = x.find(c);
      if (it == x.end()) continue;
      for (const auto& [d, c2] : it->second) {
        LaurentPoly& slot = acc[d];
        slot += coef * c2;
      }
    }
    for (auto it = acc.begin(); it != acc.end();) {
      if (it->second.is_zero()) {
        it = acc.erase(it);
      } else {
        ++it;
      }
    }
    if (!acc.empty()) out[b] = std::move(acc);
  }
  return out;
}

const LaurentOp& StructureTable::op(const ThetaMatrix& g) const {
  auto it = ops.find(g);
  if (it == ops.end()) throw std::out_of_range("no generator operator for " + g.key());
  return it->second;
}

void check_admissible(int n, int r) {
  const bool ok = (n == 2 && r >= 1 && r <= 6) || (n == 3 && r >= 1 && r <= 3);
  if (!ok) {
    throw BudgetExceeded("(n, r) = (" + std::to_string(n) + ", " + std::to_string(r) +
                         ") is outside the counting budget (n = 2: r <= 6; n = 3: r <= 3)");
  }
}

std::vector<Integer> interpolate_integer(const std::vector<int>& qs, const std::vector<Integer>& values) {
  const std::size_t m = qs.size();
  if (m == 0 || values.size() != m) throw std::invalid_argument("interpolate_integer: bad sample");
  // Newton divided differences
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t i = m - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(qs[i] - qs[i - k]);
  std::vector<Rational> poly{dd[m - 1]};
  for (std::size_t k = m - 1; k-- > 0;) {
    // poly = poly * (x - qs[k]) + dd[k]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * qs[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<Integer> out;
  for (const auto& c : poly) {
    if (denominator(c) != 1) throw std::runtime_error("interpolation produced a non-integral coefficient");
    out.push_back(numerator(c));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

namespace {

Integer eval_poly(const std::vector<Integer>& p, int q) {
  Integer acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * q + p[k];
  return acc;
}

struct GenInfo {
  GeneratorShape shape;
  int room = 0;   // dimension of the step quotient the middle flag moves in
  int extra = 0;  // dimension of the moving subspace inside it
};

GenInfo info_for(const ThetaMatrix& g) {
  GenInfo info{*generator_shape(g)};
  const auto rows = g.row_sums();
  const int i = info.shape.index;
  if (info.shape.kind == GeneratorKind::E) {
    info.room = rows[i - 1];
    info.extra = info.room - info.shape.power;
  } else if (info.shape.kind == GeneratorKind::F) {
    info.room = rows[i];
    info.extra = info.shape.power;
  }
  return info;
}

ThetaMatrix single_generator(GeneratorKind kind, int i, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) e[k * n + k] = d[k];
  if (kind == GeneratorKind::E) {
    e[i * n + i] -= 1;
    e[(i - 1) * n + i] += 1;
  } else {
    e[(i - 1) * n + (i - 1)] -= 1;
    e[i * n + (i - 1)] += 1;
  }
  return ThetaMatrix(n, std::move(e));
}

LaurentOp derive_divided_power(const StructureTable& t, const ThetaMatrix& g, const GeneratorShape& s) {
  std::vector<int> d = g.col_sums();
  LaurentOp acc;
  bool first = true;
  for (int step = 0; step < s.power; ++step) {
    const ThetaMatrix one = single_generator(s.kind, s.index, d);
    acc = first ? t.op(one) : compose(t.op(one), acc);
    first = false;
    if (s.kind == GeneratorKind::E) {
      d[s.index - 1] += 1;
      d[s.index] -= 1;
    } else {
      d[s.index - 1] -= 1;
      d[s.index] += 1;
    }
  }
  const LaurentPoly fact = quantum_factorial(s.power);
  for (auto& [b, col] : acc)
    for (auto& [c, coef] : col) coef = exact_divide(coef, fact);
  return acc;
}

}  // namespace

StructureTable build_table(int n, int r, const BuildOptions& opts) {
  check_admissible(n, r);
  StructureTable t;
  t.n = n;
  t.r = r;
  t.basis = theta_enumerate(n, r);

  std::vector<ThetaMatrix> gens;
  for (const auto& a : t.basis)
    if (generator_shape(a)) gens.push_back(a);
  // single steps first: divided powers may be derived from them
  std::stable_sort(gens.begin(), gens.end(), [](const ThetaMatrix& x, const ThetaMatrix& y) {
    return generator_shape(x)->power < generator_shape(y)->power;
  });

  std::map<int, std::unique_ptr<PrimePowerField>> fields;
  auto field = [&](int q) -> const PrimePowerField& {
    auto& slot = fields[q];
    if (!slot) slot = std::make_unique<PrimePowerField>(q);
    return *slot;
  };

  std::set<int> all_q, all_held;
  bool all_passed = true;
  int max_degree = 0;

  for (const auto& g : gens) {
    const GenInfo info = info_for(g);
    GeneratorProvenance prov;
    const int degree = info.shape.kind == GeneratorKind::Idempotent ? 0 : info.extra * (info.room - info.extra);
    const std::vector<int> qs = prime_powers(degree + 1 + opts.held_out);
    const bool in_budget = subspace_count(qs.back(), info.room, info.extra) <= opts.budget;
    std::uint64_t work = 0;
    for (int q : qs) work += subspace_count(q, info.room, info.extra);
    if (info.shape.power <= 1 && !in_budget) {
      throw BudgetExceeded("generator " + g.key() + " exceeds the enumeration budget");
    }
    if (info.shape.power > 1 && (!in_budget || work > opts.max_work)) {
      prov.method = "derived";
      t.ops[g] = derive_divided_power(t, g, info.shape);
      t.provenance.generators[g] = prov;
      continue;
    }

    prov.method = "counted";
    prov.degree_bound = degree;
    prov.q_samples.assign(qs.begin(), qs.begin() + degree + 1);
    prov.held_out.assign(qs.begin() + degree + 1, qs.end());
    max_degree = std::max(max_degree, degree);

    std::map<std::pair<ThetaMatrix, ThetaMatrix>, std::vector<Integer>> samples;
    for (const auto& c : t.basis) {
      if (c.row_sums() != g.row_sums()) continue;
      for (std::size_t k = 0; k < qs.size(); ++k) {
        for (const auto& [b, cnt] : count_middle_generator_all(field(qs[k]), g, c, opts.budget)) {
          auto& vals = samples[{b, c}];
          vals.resize(qs.size(), Integer(0));
          vals[k] = cnt;
        }
      }
    }

    LaurentOp op;
    const int dg = codim_d(g);
    for (const auto& [bc, vals] : samples) {
      const auto& [b, c] = bc;
      const std::vector<int> fit_q(qs.begin(), qs.begin() + degree + 1);
      const std::vector<Integer> fit_v(vals.begin(), vals.begin() + degree + 1);
      const std::vector<Integer> poly = interpolate_integer(fit_q, fit_v);
      for (std::size_t k = degree + 1; k < qs.size(); ++k) {
        if (eval_poly(poly, qs[k]) != vals[k]) {
          all_passed = false;
          throw std::runtime_error("held-out check failed for " + g.key() + " * " + b.key() + " -> " + c.key() +
                                   " at q = " + std::to_string(qs[k]));
        }
      }
      const int shift = codim_d(c) - dg - codim_d(b);
      std::vector<LaurentPoly::Term> terms;
      for (std::size_t k = 0; k < poly.size(); ++k)
        if (poly[k] != 0) terms.emplace_back(2 * static_cast<int>(k) + shift, poly[k]);
      LaurentPoly coef = LaurentPoly::from_terms(std::move(terms));
      if (!coef.is_zero()) op[b][c] = std::move(coef);
    }
    t.ops[g] = std::move(op);
    all_q.insert(prov.q_samples.begin(), prov.q_samples.end());
    all_held.insert(prov.held_out.begin(), prov.held_out.end());
    t.provenance.generators[g] = std::move(prov);
  }

  t.provenance.q_samples.assign(all_q.begin(), all_q.end());
  t.provenance.held_out.assign(all_held.begin(), all_held.end());
  t.provenance.held_out_passed = all_passed;
  t.provenance.degree_bound = max_degree;
  return t;
}

nlohmann::json to_json(const StructureTable& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["r"] = t.r;
  j["basis"] = nlohmann::json::array();
  for (const auto& a : t.basis) j["basis"].push_back(a.key());
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [g, op] : t.ops) {
    nlohmann::json jo = nlohmann::json::object();
    for (const auto& [b, col] : op) {
      nlohmann::json jc = nlohmann::json::object();
      for (const auto& [c, coef] : col) jc[c.key()] = to_json(coef);
      jo[b.key()] = std::move(jc);
    }
    ops[g.key()] = std::move(jo);
  }
  j["ops"] = std::move(ops);
  nlohmann::json prov;
  prov["q_samples"] = t.provenance.q_samples;
  prov["held_out"] = {{"q", t.provenance.held_out}, {"passed", t.provenance.held_out_passed}};
  prov["degree_bound"] = t.provenance.degree_bound;
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& [g, p] : t.provenance.generators) {
    gens[g.key()] = {{"method", p.method},
                     {"degree_bound", p.degree_bound},
                     {"q_samples", p.q_samples},
                     {"held_out", p.held_out}};
  }
  prov["generators"] = std::move(gens);
  j["provenance"] = std::move(prov);
  return j;
}

StructureTable table_from_json(const nlohmann::json& j) {
  StructureTable t;
  t.n = j.at("n").get<int>();
  t.r = j.at("r").get<int>();
  for (const auto& k : j.at("basis")) t.basis.push_back(ThetaMatrix::parse(k.get<std::string>()));
  for (const auto& [gk, jo] : j.at("ops").items()) {
    LaurentOp op;
    for (const auto& [bk, jc] : jo.items()) {
      OpColumn col;
      for (const auto& [ck, coef] : jc.items()) col[ThetaMatrix::parse(ck)] = laurent_from_json(coef);
      op[ThetaMatrix::parse(bk)] = std::move(col);
    }
    t.ops[ThetaMatrix::parse(gk)] = std::move(op);
  }
  const auto& prov = j.at("provenance");
  t.provenance.q_samples = prov.at("q_samples").get<std::vector<int>>();
  t.provenance.held_out = prov.at("held_out").at("q").get<std::vector<int>>();
  t.provenance.held_out_passed = prov.at("held_out").at("passed").get<bool>();
  t.provenance.degree_bound = prov.at("degree_bound").get<int>();
  for (const auto& [gk, jg] : prov.at("generators").items()) {
    GeneratorProvenance p;
    p.method = jg.at("method").get<std::string>();
    p.degree_bound = jg.at("degree_bound").get<int>();
    p.q_samples = jg.at("q_samples").get<std::vector<int>>();
    p.held_out = jg.at("held_out").get<std::vector<int>>();
    t.provenance.generators[ThetaMatrix::parse(gk)] = std::move(p);
  }
  if (t.basis != theta_enumerate(t.n, t.r)) throw std::runtime_error("table file: basis does not match (n, r)");
  return t;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("QSCHUR_CACHE"); env && *env) return env;
  return "qschur_cache";
}

std::string cache_file(const std::string& dir, int n, int r) {
  return (std::filesystem::path(dir) / ("table_n" + std::to_string(n) + "_r" + std::to_string(r) + ".json")).string();
}

const StructureTable& get_table(int n, int r, const std::string& dir, bool* cache_hit) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<StructureTable>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[{n, r}];
  if (slot) {
    if (cache_hit) *cache_hit = true;
    return *slot;
  }
  check_admissible(n, r);
  if (!dir.empty()) {
    const std::string path = cache_file(dir, n, r);
    if (std::ifstream in(path); in) {
      slot = std::make_unique<StructureTable>(table_from_json(nlohmann::json::parse(in)));
      if (cache_hit) *cache_hit = true;
      return *slot;
    }
  }
  slot = std::make_unique<StructureTable>(build_table(n, r));
  if (cache_hit) *cache_hit = false;
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    std::ofstream out(cache_file(dir, n, r));
    out << to_json(*slot).dump(1) << "\n";
    if (!out) throw std::runtime_error("could not write table cache in " + dir);
  }
  return *slot;
}

}  // namespace qschur
