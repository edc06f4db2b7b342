#pragma once

// Generator structure constants of S_v(n,r), obtained by counting middle flags
// over several F_q and interpolating in q = v^2, stored in the [A] basis.

#include "qschur/flaggeom.hpp"
#include "qschur/laurent.hpp"
#include "qschur/theta.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace qschur {

// A left-multiplication operator: B -> (C -> coefficient of [C] in x[B]).
using OpColumn = std::map<ThetaMatrix, LaurentPoly>;
using LaurentOp = std::map<ThetaMatrix, OpColumn>;

// op(x) o op(y) = op(xy)
LaurentOp compose(const LaurentOp& x, const LaurentOp& y);

struct GeneratorProvenance {
  std::string method;  // "counted" or "derived"
  int degree_bound = 0;
  std::vector<int> q_samples;
  std::vector<int> held_out;
};

struct TableProvenance {
  std::vector<int> q_samples;  // union over counted generators
  std::vector<int> held_out;
  bool held_out_passed = false;
  int degree_bound = 0;  // max over counted generators
  std::map<ThetaMatrix, GeneratorProvenance> generators;
};

struct StructureTable {
  int n = 0, r = 0;
  std::vector<ThetaMatrix> basis;
  // generator-shaped G -> left multiplication by [G]
  std::map<ThetaMatrix, LaurentOp> ops;
  TableProvenance provenance;

  const LaurentOp& op(const ThetaMatrix& g) const;
};

struct BuildOptions {
  std::uint64_t budget = kDefaultBudget;
  // held-out points per counted generator
  int held_out = 1;
  // Divided powers whose total enumeration (summed over samples) would exceed
  // this are derived exactly from single steps instead: E^(a) = E^a / [a]!.
  std::uint64_t max_work = 200'000;
};

// Throws BudgetExceeded unless n = 2, 1 <= r <= 6 or n = 3, 1 <= r <= 3.
void check_admissible(int n, int r);

StructureTable build_table(int n, int r, const BuildOptions& opts = {});

// N(q) from samples, as an integer polynomial in q (constant term first);
// throws if the interpolant is not integral.
std::vector<Integer> interpolate_integer(const std::vector<int>& qs, const std::vector<Integer>& values);

nlohmann::json to_json(const StructureTable& t);
StructureTable table_from_json(const nlohmann::json& j);

// QSCHUR_CACHE, else ./qschur_cache
std::string default_cache_dir();
std::string cache_file(const std::string& dir, int n, int r);

// Loads dir/table_n<n>_r<r>.json if present, otherwise builds and writes it.
// An empty dir skips the disk. Results are memoized per process either way.
const StructureTable& get_table(int n, int r, const std::string& dir = "", bool* cache_hit = nullptr);

}  // namespace qschur
