// Acceptance gate: one machine-checked criterion per line, all must pass.
#include <cstdio>
#include <string>
#include <vector>

#include "tropmat/errors.hpp"
#include "tropmat/suites.hpp"

int main() {
  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"q-flats", "congruence classes are exactly the flats"},
      {"duality", "hom duality between L and Q"},
      {"minors", "restriction/projection minor identities"},
      {"u36", "wedge-square counterexample on U(3,6)"},
      {"strong-maps", "three strong-map characterizations agree"},
      {"factorization", "quotients factor through an extension"},
      {"monotonicity", "stable-sum monotonicity and minor identities"},
      {"stiefel", "unique fiber maximum, multiple minima"},
      {"fundamental-transversal", "fundamental-transversal criteria agree"},
      {"category", "direct sums, indecomposability, unit homs"},
      {"multivalued", "multivalued maps are exactly the morphisms"},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [suite, title] = criteria[i];
    std::string verdict;
    long long tested = 0, ms = 0;
    std::size_t failures = 0;
    std::vector<std::string> detail;
    try {
      const tropmat::SuiteReport r = tropmat::run_suite(suite);
      tested = r.tested;
      ms = r.ms;
      failures = r.failures.size();
      verdict = r.passed() ? "PASS" : "FAIL";
      for (std::size_t k = 0; k < r.failures.size() && k < 3; ++k)
        detail.push_back(r.failures[k]);
    } catch (const tropmat::Error& e) {
      verdict = "FAIL";
      detail.push_back(e.what());
    }
    if (verdict != "PASS") ++failed;
    std::printf("criterion %2zu/%zu %-24s %s  (%s; tested=%lld, failures=%zu, %lld ms)\n",
                i + 1, criteria.size(), suite.c_str(), verdict.c_str(),
                title.c_str(), tested, failures, ms);
    for (const std::string& d : detail)
      std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  if (failed) {
    std::printf("%d criteria failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
