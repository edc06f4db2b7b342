#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_run.hpp"

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

TEST_CASE("table: build, cache hit, byte-identical output") {
  const auto cache = cli::fresh_dir("table");
  const auto first = cli::run("table --n 2 --r 2", cache);
  CHECK(first.code == 0);
  CHECK(first.out.find("built: ") != std::string::npos);
  CHECK(first.out.find("basis 10,") != std::string::npos);
  const fs::path file = fs::path(cache) / "table_n2_r2.json";
  REQUIRE(fs::exists(file));
  const auto bytes = cli::slurp(file);
  const auto j = nlohmann::json::parse(bytes);
  CHECK(j["basis"].size() == 10);

  const auto second = cli::run("table --n 2 --r 2 --out '" + cache + "/copy.json'", cache);
  CHECK(second.code == 0);
  CHECK(second.out.find("cache hit: ") != std::string::npos);
  CHECK(cli::slurp(file) == bytes);
  CHECK(cli::slurp(fs::path(cache) / "copy.json") == bytes);

  // --cache beats the environment
  const auto other = cli::fresh_dir("table_flag");
  CHECK(cli::run("table --n 2 --r 1 --cache '" + other + "'", cache).code == 0);
  CHECK(fs::exists(fs::path(other) / "table_n2_r1.json"));
}

TEST_CASE("table: out of budget") {
  const auto cache = cli::fresh_dir("budget");
  const auto res = cli::run("table --n 2 --r 40", cache);
  CHECK(res.code != 0);
  CHECK_FALSE(fs::exists(fs::path(cache) / "table_n2_r40.json"));
}

TEST_CASE("verify suites pass") {
  const auto cache = cli::fresh_dir("verify");
  for (const std::string args : {"verify fm --p 2 --r 2", "verify presentation --n 3 --r 2", "verify binomials --ell 3",
                                 "verify oracle --n 2 --r 2 --full", "verify frobenius --n 2 --r 2 --ell 2",
                                 "verify splitting --n 2 --r 1 --ell 3", "verify gschur --n 2 --r 4",
                                 "verify gschur --n 2 --r 4 --ell 2", "verify embed --n 2 --r 2 --ell 2"}) {
    INFO(args);
    const auto res = cli::run(args, cache);
    CHECK(res.code == 0);
    CHECK(res.out.find("OK: ") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("bad parameters exit nonzero") {
  const auto cache = cli::fresh_dir("bad");
  CHECK(cli::run("verify binomials --ell 2 --l 2", cache).code != 0);
  CHECK(cli::run("verify nonsense", cache).code != 0);
  CHECK(cli::run("verify fm --p 4 --r 1", cache).code != 0);
  CHECK(cli::run("map x --ell 2", cache).code != 0);
  CHECK(cli::run("verify gschur --n 2 --r 2 --ell 2 --p 3", cache).code != 0);
}

TEST_CASE("map exports") {
  const auto cache = cli::fresh_dir("map");
  const auto c = cli::run("map c --n 2 --r 1 --ell 2", cache);
  REQUIRE(c.code == 0);
  const auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["matrix"].size() == 4);
  for (const auto& [key, cert] : jc["certificates"].items()) {
    CHECK(cert["strictly_below"] == true);
    CHECK(cert["leading_coefficient_one"] == true);
  }

  const auto out = fs::path(cache) / "fr.json";
  const auto fr = cli::run("map fr --n 2 --r 2 --ell 2 --out '" + out.string() + "'", cache);
  REQUIRE(fr.code == 0);
  const auto jf = nlohmann::json::parse(cli::slurp(out));
  CHECK(jf["matrix"].size() == 10);

  const auto id = cli::run("map c --ell 1", cache);
  REQUIRE(id.code == 0);
  const auto ji = nlohmann::json::parse(id.out);
  for (const auto& [key, col] : ji["matrix"].items()) {
    CHECK(col.size() == 1);
    CHECK(col.contains(key));
  }
}
