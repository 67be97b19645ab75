#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

struct Suite {
  explicit Suite(std::string n) : name(std::move(n)) {}
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

constexpr std::uint64_t kDefaultPropertySeed = 20240601;

// Normalization idempotence, eval agreement, Fourier reconstruction, normal
// rescaling and differentiate-vs-difference, each on its own stream.
std::vector<Suite> run_property_suites(std::uint64_t seed, int cases = 1000);
