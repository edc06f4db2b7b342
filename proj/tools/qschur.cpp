// qschur: build and cache structure tables, run the verification suites,
// export Fr and c.
//
// Exit codes: 0 every assertion passed, 1 some assertion failed, 2 bad
// parameters or a budget/domain error.

#include "qschur/frob.hpp"
#include "qschur/gschur.hpp"
#include "qschur/relations.hpp"
#include "qschur/table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace qschur;

namespace {

struct Config {
  int n = 2;
  int r = 1;
  int ell = 0;
  int l = 0;
  std::uint32_t p = 0;
  std::string cache = default_cache_dir();
  std::string out;
  std::string suite;
  std::string map_kind;
  bool full = false;
  bool verbose = false;
};

class Reporter {
 public:
  explicit Reporter(bool verbose) : verbose_(verbose) {}

  void check(bool pass, const std::string& what) {
    ++checked_;
    if (!pass) ++failed_;
    if (!pass || verbose_) std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
  }
  void merge(const RelationReport& rep, const std::string& what) {
    checked_ += rep.checked;
    failed_ += static_cast<int>(rep.failures.size());
    for (const auto& f : rep.failures) std::cout << "FAIL " << what << ": " << f << "\n";
    std::cout << (rep.ok() ? "PASS " : "FAIL ") << what << " (" << rep.checked << " checks)\n";
  }
  void info(const std::string& s) const { std::cout << s << "\n"; }
  int finish() const {
    std::cout << (failed_ == 0 ? "OK" : "FAILED") << ": " << checked_ - failed_ << "/" << checked_ << " assertions passed\n";
    return failed_ == 0 ? 0 : 1;
  }

 private:
  bool verbose_;
  int checked_ = 0, failed_ = 0;
};

// Loads (or builds and caches) the tables a run needs, so later lookups are
// in-process hits.
void warm(const Config& cfg, int n, int r) { (void)get_table(n, r, cfg.cache); }

int root_order(const Config& cfg) {
  const int l = cfg.l ? cfg.l : default_root_order(cfg.ell);
  check_root_order(cfg.ell, l);
  return l;
}

std::vector<int> root_orders(int ell) {
  if (ell % 2 == 0) return {2 * ell};
  return {ell, 2 * ell};
}

void write_json(const nlohmann::json& j, const std::string& path) {
  const std::string text = j.dump(1) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("could not write " + path);
}

int cmd_table(const Config& cfg) {
  bool hit = false;
  const StructureTable& t = get_table(cfg.n, cfg.r, cfg.cache, &hit);
  const std::string file = cache_file(cfg.cache, cfg.n, cfg.r);
  std::cout << (hit ? "cache hit: " : "built: ") << file << "\n";
  std::cout << "basis " << t.basis.size() << ", generators " << t.ops.size() << ", held-out check "
            << (t.provenance.held_out_passed ? "passed" : "FAILED") << "\n";
  if (!cfg.out.empty()) {
    std::filesystem::copy_file(file, cfg.out, std::filesystem::copy_options::overwrite_existing);
    std::cout << "wrote " << cfg.out << "\n";
  }
  return t.provenance.held_out_passed ? 0 : 1;
}

std::vector<SaturatedSet> saturated_sets(int n, int r) { return all_saturated_sets(dominant_weights(n, r)); }

std::string complement_label(const SaturatedSet& p, int r) {
  std::string s = "{";
  for (std::size_t k = 0; k < p.complement().size(); ++k) s += (k ? "," : "") + weight_label(*realize(p.complement()[k], r));
  return s + "}";
}

void verify_gschur(const Config& cfg, Reporter& rep) {
  const int n = cfg.n, r = cfg.r;
  warm(cfg, n, r);
  const auto gen = generic_field_algebra(n, r);
  const auto parts = dominant_diagonals(n, r);

  int squares = 0;
  for (const auto& lam : parts) {
    const int d = weyl_module(gen, lam).dim();
    squares += d * d;
    rep.info("Weyl module " + weight_label(lam) + ": dim " + std::to_string(d));
  }
  rep.check(squares == gen.dim(), "dim S = " + std::to_string(gen.dim()) + " = sum of squared Weyl dimensions");

  std::vector<Domain> domains{Domain::generic()};
  if (cfg.ell) domains.push_back(Domain::cyclotomic(cfg.ell, root_order(cfg)));
  if (cfg.p) {
    const int ell = cfg.ell ? cfg.ell : static_cast<int>(cfg.p);
    domains.push_back(Domain::prime_field(ell, cfg.ell ? root_order(cfg) : default_root_order(ell), cfg.p));
  }
  for (const auto& dom : domains)
    if (dom.kind != FieldKind::Generic)
      for (const auto& lam : parts) {
        const auto w = weyl_module_summary(lam, n, r, dom);
        rep.check(w.dim == weyl_module(gen, lam).dim(),
                  "Weyl module " + weight_label(lam) + " keeps its dimension over " + dom.label());
      }

  const auto sets = saturated_sets(n, r);
  std::vector<Echelon<RatFunc>> ideals;
  for (const auto& p : sets) {
    const std::string tag = "P^c = " + complement_label(p, r);
    for (const auto& dom : domains) {
      const auto q = quotient_summary(p, n, r, dom);
      const std::string at = tag + " over " + dom.label();
      rep.info(at + ": dim I_P " + std::to_string(q.dim_i) + ", dim U_P " + std::to_string(q.dim_u));
      rep.check(q.ideal_closed, at + ": I_P is a two-sided ideal");
      rep.check(q.projection_homomorphism, at + ": projection is multiplicative");
      rep.check(q.identity, at + ": quotient identity");
      if (dom.kind == FieldKind::Generic) rep.check(q.dim_u == q.block_sum, at + ": dim U_P equals the block sum");
      if (dom.kind != FieldKind::PrimeField) rep.check(annihilator_check(p, n, r, dom), at + ": I_P = Ann");
    }
    ideals.push_back(ideal_generated(gen, p));
  }
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) {
      const auto& pa = sets[a].complement();
      const auto& pb = sets[b].complement();
      // P_a within P_b iff complement of P_b within complement of P_a
      const bool nested = std::all_of(pb.begin(), pb.end(), [&](const Weight& w) {
        return std::find(pa.begin(), pa.end(), w) != pa.end();
      });
      if (a != b && nested)
        rep.check(ideals[b].contains_all(ideals[a]),
                  "I_P nested: " + complement_label(sets[a], r) + " vs " + complement_label(sets[b], r));
    }
}

void verify_embed(const Config& cfg, Reporter& rep) {
  const int l = root_order(cfg);
  warm(cfg, cfg.n, cfg.r);
  warm(cfg, cfg.n, cfg.ell * cfg.r);
  for (const auto& p : saturated_sets(cfg.n, cfg.ell * cfg.r)) {
    const DescentReport d = descend_maps(cfg.n, cfg.r, cfg.ell, l, p);
    const bool prop = annihilator_check(p, cfg.n, cfg.ell * cfg.r, Domain::cyclotomic(cfg.ell, l));
    const std::string tag = "P^c = " + complement_label(p, cfg.ell * cfg.r);
    rep.info(gschur_report(d, prop).dump());
    rep.check(prop, tag + ": I_P = Ann at the root of unity");
    rep.check(d.c_preserves_ideal, tag + ": c(I_P*) within I_P");
    rep.check(d.fr_maps_onto_ideal, tag + ": Fr(I_P) = I_P*");
    rep.check(d.c_injective, tag + ": c_P injective");
    rep.check(d.fr_surjective, tag + ": Fr_P surjective");
    rep.check(d.section_identity, tag + ": Fr_P c_P = id");
  }
}

void verify_frobenius(const Config& cfg, Reporter& rep, bool splitting) {
  const int l = root_order(cfg);
  warm(cfg, cfg.n, cfg.r);
  warm(cfg, cfg.n, cfg.ell * cfg.r);
  const FrobeniusPair pair(cfg.n, cfg.r, cfg.ell, l);
  const FrobeniusChecks ck = pair.verify();
  for (const auto& f : ck.failures) rep.info("  " + f);
  const std::string tag = "(n,r,ell,l) = (" + std::to_string(cfg.n) + "," + std::to_string(cfg.r) + "," +
                          std::to_string(cfg.ell) + "," + std::to_string(l) + ")";
  rep.info(tag + ": epsilon " + std::to_string(pair.star().epsilon()) + ", dim ker Fr " + std::to_string(ck.fr_kernel_dim));
  if (splitting) {
    rep.check(ck.fr_c_identity, tag + ": Fr c = id");
    rep.check(ck.c_multiplicative, tag + ": c multiplicative");
    rep.check(ck.c_triangular, tag + ": c[A] = [ell A] + lower");
    rep.check(ck.c_injective, tag + ": c injective");
    rep.check(ck.generator_compatible, tag + ": c on generators");
  } else {
    rep.check(ck.fr_multiplicative, tag + ": Fr multiplicative");
    rep.check(ck.fr_surjective, tag + ": Fr surjective");
    rep.check(ck.fr_c_identity, tag + ": Fr c = id");
  }
}

int cmd_verify(const Config& cfg) {
  Reporter rep(cfg.verbose);
  const std::string& s = cfg.suite;
  if (s == "binomials") {
    std::vector<int> ells;
    if (cfg.ell) {
      ells.push_back(cfg.ell);
    } else {
      for (int e = 1; e <= 7; ++e) ells.push_back(e);
    }
    for (int ell : ells)
      for (int l : cfg.l ? std::vector<int>{cfg.l} : root_orders(ell))
        rep.merge(check_binomial_lemma(ell, l), "binomials ell=" + std::to_string(ell) + " l=" + std::to_string(l));
  } else if (s == "presentation") {
    warm(cfg, cfg.n, cfg.r);
    rep.merge(check_presentation(cfg.n, cfg.r), "presentation n=" + std::to_string(cfg.n) + " r=" + std::to_string(cfg.r));
  } else if (s == "oracle") {
    warm(cfg, cfg.n, cfg.r);
    rep.merge(check_oracle(cfg.n, cfg.r, cfg.full), "oracle n=" + std::to_string(cfg.n) + " r=" + std::to_string(cfg.r));
  } else if (s == "frobenius" || s == "splitting") {
    if (!cfg.ell) throw CLI::ValidationError("--ell", "required for " + s);
    verify_frobenius(cfg, rep, s == "splitting");
  } else if (s == "fm") {
    if (!cfg.p) throw CLI::ValidationError("--p", "required for fm");
    if (cfg.n != 2) throw CLI::ValidationError("--n", "the fm comparison is for n = 2");
    if (cfg.ell && cfg.ell != static_cast<int>(cfg.p)) throw CLI::ValidationError("--ell", "fm needs ell = p");
    warm(cfg, 2, cfg.r);
    warm(cfg, 2, static_cast<int>(cfg.p) * cfg.r);
    const FmReport fm = compare_with_fm(cfg.r, cfg.p);
    for (const auto& m : fm.mismatches) rep.info("  " + m);
    rep.check(fm.ok(), "fm r=" + std::to_string(cfg.r) + " p=" + std::to_string(cfg.p) + " l=" + std::to_string(fm.l) +
                           ": " + std::to_string(fm.compared) + " basis elements compared");
  } else if (s == "gschur") {
    verify_gschur(cfg, rep);
  } else if (s == "embed") {
    if (!cfg.ell) throw CLI::ValidationError("--ell", "required for embed");
    verify_embed(cfg, rep);
  } else {
    throw CLI::ValidationError("suite", "unknown suite " + s);
  }
  return rep.finish();
}

int cmd_map(const Config& cfg) {
  const int l = root_order(cfg);
  warm(cfg, cfg.n, cfg.r);
  warm(cfg, cfg.n, cfg.ell * cfg.r);
  const FrobeniusPair pair(cfg.n, cfg.r, cfg.ell, l);
  write_json(cfg.map_kind == "fr" ? pair.fr_json() : pair.c_json(), cfg.out);
  if (cfg.map_kind == "c") {
    // the certificate is part of the contract: fail if any column breaks it
    const auto j = pair.c_json();
    for (const auto& [k, cert] : j.at("certificates").items())
      if (!cert.at("leading_coefficient_one").get<bool>() || !cert.at("strictly_below").get<bool>()) {
        std::cerr << "leading-term certificate fails for [" << k << "]\n";
        return 1;
      }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-Schur algebras, quantum Frobenius and its splitting"};
  app.require_subcommand(1);
  Config cfg;

  const auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank (n x n matrices)")->check(CLI::Range(2, 3));
    sub->add_option("--r", cfg.r, "degree")->check(CLI::PositiveNumber);
    sub->add_option("--cache", cfg.cache, "table cache directory (default $QSCHUR_CACHE or ./qschur_cache)");
  };

  auto* table = app.add_subcommand("table", "build or load the structure table of S_v(n,r)");
  common(table);
  table->add_option("--out", cfg.out, "also copy the table JSON here");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("suite", cfg.suite, "binomials|presentation|oracle|frobenius|splitting|fm|gschur|embed")
      ->required()
      ->check(CLI::IsMember({"binomials", "presentation", "oracle", "frobenius", "splitting", "fm", "gschur", "embed"}));
  verify->add_option("--ell", cfg.ell, "order ell of the root of unity")->check(CLI::Range(1, 7));
  verify->add_option("--l", cfg.l, "order of v: 2 ell, or ell when ell is odd");
  verify->add_option("--p", cfg.p, "prime");
  verify->add_flag("--full", cfg.full, "oracle: also brute-force every product at q = 2,3,4,5");
  verify->add_flag("-v,--verbose", cfg.verbose, "print passing assertions too");

  auto* map = app.add_subcommand("map", "export Fr or c as a sparse matrix");
  map->add_option("kind", cfg.map_kind, "fr|c")->required()->check(CLI::IsMember({"fr", "c"}));
  common(map);
  map->add_option("--ell", cfg.ell, "order ell of the root of unity")->required()->check(CLI::Range(1, 7));
  map->add_option("--l", cfg.l, "order of v");
  map->add_option("--out", cfg.out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return cmd_table(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*map) return cmd_map(cfg);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
