#pragma once

#include <string>
#include <vector>

namespace tropmat {

struct SuiteReport {
  std::string suite;
  long long tested = 0;
  std::vector<std::string> failures;
  long long ms = 0;

  bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

// nmax < 0 selects the suite's documented default range; `sample` and `seed`
// drive the randomized extensions where a suite has one.
SuiteReport run_suite(const std::string& name, int nmax = -1,
                      long long sample = 0, unsigned seed = 1);

}  // namespace tropmat
