#pragma once

// Shared test utilities: an error-kind matcher and a fixed-seed RNG.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "mlab/error.hpp"

struct ErrorMatcher : Catch::Matchers::MatcherGenericBase {
  mlab::ErrorKind kind;
  explicit ErrorMatcher(mlab::ErrorKind k) : kind(k) {}
  bool match(const mlab::MlabError& e) const { return e.kind() == kind; }
  std::string describe() const override {
    return "has error kind " + std::string(mlab::to_string(kind));
  }
};

inline std::mt19937& test_rng() {
  static std::mt19937 rng(0x5eed);
  return rng;
}

inline int pick(int lo, int hi) {  // inclusive bounds
  return std::uniform_int_distribution<int>(lo, hi)(test_rng());
}
