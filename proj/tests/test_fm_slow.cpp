#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/frob.hpp"

// Builds S(2,6), so it takes a while.
TEST_CASE("c specializes to the Fayers-Martin map for (r, p) = (2, 3)") {
  const auto rep = qschur::compare_with_fm(2, 3);
  CHECK(rep.compared == 10);
  for (const auto& m : rep.mismatches) FAIL_CHECK(m);
}
