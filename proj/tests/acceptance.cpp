// One line per acceptance criterion. Tables are built in-process from
// scratch, so the timings include construction. Exit status is nonzero when
// any criterion fails.

#include "cli_run.hpp"
#include "qschur/frob.hpp"
#include "qschur/gschur.hpp"
#include "qschur/relations.hpp"
#include "qschur/schur.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace qschur;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(limit_s)) + " s limit";
  }
  if (!o.pass) ++failures;
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2) << s
            << " s) " << o.detail << std::endl;
}

// Collects relation reports; first failure goes into the detail.
struct Tally {
  int checked = 0, failed = 0;
  std::string first;
  void add(const RelationReport& r, const std::string& where) {
    checked += r.checked;
    failed += static_cast<int>(r.failures.size());
    if (first.empty() && !r.failures.empty()) first = where + ": " + r.failures.front();
  }
  Outcome outcome() const {
    Outcome o{failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) + " checks"};
    if (!first.empty()) o.detail += "; first failure " + first;
    return o;
  }
};

const std::vector<std::tuple<int, int, int>> kTriples{{2, 1, 2}, {2, 2, 2}, {2, 1, 3}};

std::map<std::tuple<int, int, int>, FrobeniusChecks> frob_checks;

const FrobeniusChecks& checks_for(const std::tuple<int, int, int>& t) {
  auto it = frob_checks.find(t);
  if (it == frob_checks.end()) {
    const auto [n, r, ell] = t;
    it = frob_checks.emplace(t, FrobeniusPair(n, r, ell, default_root_order(ell)).verify()).first;
  }
  return it->second;
}

}  // namespace

int main() {
  criterion(1, 10, [] {
    Tally t;
    for (int ell = 1; ell <= 7; ++ell) {
      std::vector<int> ls{2 * ell};
      if (ell % 2) ls.push_back(ell);
      for (int l : ls) t.add(check_binomial_lemma(ell, l, 40), "ell=" + std::to_string(ell) + " l=" + std::to_string(l));
    }
    return t.outcome();
  });

  criterion(2, 120, [] {
    Tally t;
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}})
      t.add(check_presentation(n, r), "S(" + std::to_string(n) + "," + std::to_string(r) + ")");
    return t.outcome();
  });

  criterion(3, 300, [] {
    Tally t;
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}})
      t.add(check_oracle(n, r, n == 2 && r <= 2), "S(" + std::to_string(n) + "," + std::to_string(r) + ")");
    return t.outcome();
  });

  criterion(4, 300, [] {
    Outcome o{true, ""};
    for (const auto& t : kTriples) {
      const auto& ck = checks_for(t);
      o.pass = o.pass && ck.c_triangular && ck.generator_compatible;
    }
    o.detail = o.pass ? "c[A] = [ell A] + strictly lower on every basis element" : "triangularity failed";
    return o;
  });

  criterion(5, 300, [] {
    Outcome o{true, ""};
    for (const auto& t : kTriples) {
      const auto& ck = checks_for(t);
      o.pass = o.pass && ck.fr_c_identity && ck.fr_multiplicative && ck.c_multiplicative && ck.ok();
      for (const auto& f : ck.failures) o.detail += f + "; ";
    }
    if (o.pass) o.detail = "Fr c = id, Fr and c multiplicative on all basis pairs";
    return o;
  });

  criterion(6, 600, [] {
    Outcome o{true, ""};
    int compared = 0;
    for (const auto& [r, p] : std::vector<std::pair<int, std::uint32_t>>{{1, 2}, {2, 2}, {1, 3}}) {
      const auto rep = compare_with_fm(r, p);
      compared += rep.compared;
      if (!rep.ok()) {
        o.pass = false;
        o.detail += "(r,p)=(" + std::to_string(r) + "," + std::to_string(p) + "): " + rep.mismatches.front() + "; ";
      }
    }
    if (o.pass) o.detail = std::to_string(compared) + " basis elements equal";
    return o;
  });

  criterion(7, 300, [] {
    Outcome o{true, ""};
    int sets = 0;
    for (int r = 1; r <= 4; ++r)
      for (const auto& dom : {Domain::generic(), Domain::cyclotomic(2, 4)})
        for (const auto& p : all_saturated_sets(dominant_weights(2, r))) {
          ++sets;
          if (!annihilator_check(p, 2, r, dom)) {
            o.pass = false;
            o.detail += "r=" + std::to_string(r) + " " + dom.label() + "; ";
          }
        }
    if (o.pass) o.detail = "I_P = Ann for " + std::to_string(sets) + " (P, domain) pairs";
    return o;
  });

  criterion(8, 600, [] {
    Outcome o{true, ""};
    for (const auto& [r, ell] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
      const auto sets = all_saturated_sets(dominant_weights(2, ell * r));
      if (sets.size() < 2) o.pass = false;
      for (const auto& p : sets)
        if (!descend_maps(2, r, ell, default_root_order(ell), p).ok()) {
          o.pass = false;
          o.detail += "descent failed for r=" + std::to_string(r) + "; ";
        }
      if (o.pass) o.detail += "(2," + std::to_string(r) + "," + std::to_string(ell) + "): " + std::to_string(sets.size()) + " sets; ";
    }
    return o;
  });

  criterion(9, 60, [] {
    auto squares = [](int r) {
      int s = 0;
      for (const auto& lam : dominant_diagonals(2, r)) {
        const int d = weyl_module_summary(lam, 2, r, Domain::generic()).dim;
        s += d * d;
      }
      return s;
    };
    const int s2 = SchurData::get(2, 2).dim(), s4 = SchurData::get(2, 4).dim();
    const int ker = FrobeniusPair(2, 2, 2, 4).verify().fr_kernel_dim;
    const bool pass = s2 == 10 && squares(2) == 10 && s4 == 35 && squares(4) == 35 && ker == 25;
    return Outcome{pass, "dim S(2,2) = " + std::to_string(s2) + " = " + std::to_string(squares(2)) + ", dim S(2,4) = " +
                             std::to_string(s4) + " = " + std::to_string(squares(4)) + ", dim ker Fr = " + std::to_string(ker)};
  });

  criterion(10, 120, [] {
    const auto a = cli::fresh_dir("cold_a"), b = cli::fresh_dir("cold_b");
    const auto ra = cli::run("table --n 2 --r 2", a);
    const auto rb = cli::run("table --n 2 --r 2", b);
    const auto fa = cli::slurp(std::filesystem::path(a) / "table_n2_r2.json");
    const auto fb = cli::slurp(std::filesystem::path(b) / "table_n2_r2.json");
    const bool pass = ra.code == 0 && rb.code == 0 && !fa.empty() && fa == fb;
    return Outcome{pass, std::to_string(fa.size()) + " bytes, " + (fa == fb ? "identical" : "different")};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
