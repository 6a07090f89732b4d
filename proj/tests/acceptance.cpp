// One line per acceptance criterion; exit status 1 if any fails.

#include "phylotoric/acceptance.hpp"

#include <cstdio>

int main() {
  phylotoric::AcceptanceOptions options;
  options.golden_dir = PHYLOTORIC_GOLDEN_DIR;
  int failed = 0;
  for (int id = 1; id <= phylotoric::criterion_count; ++id) {
    const auto r = phylotoric::run_criterion(id, options);
    std::printf("[%s] criterion %2d  %-38s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d/%d criteria passed\n", phylotoric::criterion_count - failed, phylotoric::criterion_count);
  return failed == 0 ? 0 : 1;
}
