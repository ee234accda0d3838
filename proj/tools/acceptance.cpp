// Acceptance gate: runs every criterion and prints one line per result.
// Exit 0 iff all pass. ANSI color only on a terminal, and DGALAB_COLOR=0
// turns it off unconditionally.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "dgalab/accept.hpp"
#include "dgalab/field.hpp"

int main() {
  const char* cv = std::getenv("DGALAB_COLOR");
  bool color = isatty(fileno(stdout)) != 0 && (cv == nullptr || std::string(cv) != "0");

  auto results = dgalab::run_acceptance(dgalab::Field::rationals());
  std::size_t passed = 0;
  for (const auto& r : results) {
    const char* word = r.pass ? "pass" : "FAIL";
    std::string shown =
        color ? std::string(r.pass ? "\x1b[32m" : "\x1b[31m") + word + "\x1b[0m" : word;
    std::printf("criterion %2d: %s - %s (%s)\n", r.id, shown.c_str(), r.name.c_str(),
                r.detail.c_str());
    if (r.pass) ++passed;
  }
  std::printf("acceptance: %zu/%zu criteria pass\n", passed, results.size());
  return passed == results.size() ? 0 : 1;
}
