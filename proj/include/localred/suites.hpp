#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "localred/corpus.hpp"

namespace localred {

struct SuiteParams {
  int count = 0;  // 0: the suite's default size (per prime for ogg-saito)
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> primes;  // ogg-saito only; default {2, 3, 5}
  int threads = 0;                    // 0: hardware concurrency
  CorpusParams corpus;
};

struct CaseResult {
  int index = 0;
  std::string label;  // ring and input
  bool pass = false;
  std::string detail;  // the checked quantities, or the failure
  double margin = 0;   // distance to the bound (smaller is worse)
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;  // sorted by index
  int passed() const;
  int total() const { return static_cast<int>(cases.size()); }
  bool ok() const { return passed() == total(); }
  // Failed case, or the passing case closest to its bound.
  const CaseResult* worst() const;
};

const std::vector<std::string>& suite_names();
// InvalidDescriptor for an unknown suite; BudgetExceeded propagates.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

}  // namespace localred
