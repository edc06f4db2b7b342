#pragma once

// Runs the qschur binary in a shell and captures stdout and stderr.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace cli {

struct Result {
  int code = -1;
  std::string out;
};

inline Result run(const std::string& args, const std::string& cache) {
  const std::string cmd = "QSCHUR_CACHE='" + cache + "' '" + QSCHUR_CLI + "' " + args + " 2>&1";
  Result res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) res.out += buf.data();
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A fresh empty directory under the test work dir.
inline std::string fresh_dir(const std::string& name) {
  const std::filesystem::path d = std::filesystem::path(QSCHUR_TEST_DIR) / name;
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d.string();
}

}  // namespace cli
