#include "sheffer/verify.hpp"

#include <cstdio>

int main() {
  const auto results = sheffer::run_acceptance(sheffer::VerifyOptions{});
  int failures = 0;
  for (const auto& r : results) {
    std::printf("CRITERION %d [%s] %s — %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
