#include <cstdio>
#include <cstdlib>
#include <string>

#include "axial/acceptance.hpp"

// Usage: acceptance [filter]
int main(int argc, char** argv) {
  std::string filter = argc > 1 ? argv[1] : "";
  auto results = axial::run_acceptance(filter);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", r.line().c_str());
    failed += !r.pass;
  }
  if (results.empty()) {
    std::fprintf(stderr, "no criterion matches '%s'\n", filter.c_str());
    return 2;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
