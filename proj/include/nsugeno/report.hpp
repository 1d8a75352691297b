#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nsugeno {

// One violated check, with enough payload to replay the instance by hand.
struct CheckFailure {
  long long trial = -1;  // -1 for deterministic (non-randomized) checks
  std::string instance;  // serialized inputs
  std::string relation;  // the relation that was expected to hold
  std::string observed;  // observed values
};

struct VerificationReport {
  std::string suite;
  long long trials = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }

  void fail(long long trial, std::string instance, std::string relation,
            std::string observed) {
    failures.push_back(
        {trial, std::move(instance), std::move(relation), std::move(observed)});
  }

  // Concatenates another report's findings (used when a suite is assembled
  // from sub-checks or parallel shards).
  void absorb(const VerificationReport& other) {
    trials += other.trials;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
};

}  // namespace nsugeno
