// Randomized property suites. Run standalone: properties [--seed N] [--cases N]

#include <CLI11.hpp>
#include <iostream>

#include "property_suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Randomized property suites"};
  std::uint64_t seed = kDefaultPropertySeed;
  int cases = 1000;
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--cases", cases, "Cases per expression suite")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::cout << "seed " << seed << "\n";
  bool ok = true;
  for (const Suite& s : run_property_suites(seed, cases)) {
    ok = ok && s.failures == 0;
    std::cout << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases";
    if (s.failures) std::cout << ", " << s.failures << " failed; first: " << s.first_failure;
    std::cout << ")\n";
  }
  return ok ? 0 : 1;
}
