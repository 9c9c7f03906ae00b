#ifndef AXIAL_ACCEPTANCE_HPP
#define AXIAL_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "axial/fusion.hpp"

namespace axial {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  int checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  std::string line(bool timing = true) const;  // "PASS  3 axet-sizes (42 checks, 1.20s)"
};

struct CriterionInfo {
  int id;
  const char* name;
};
const std::vector<CriterionInfo>& acceptance_criteria();

// Runs criteria whose name or number matches filter (empty = all), concurrently;
// results come back in criterion order.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "", std::uint64_t seed = kDefaultSeed);

}  // namespace axial

#endif
