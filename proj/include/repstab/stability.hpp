#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repstab/characters.hpp"

namespace repstab {

// Decompositions over a contiguous window of n.
struct DecompositionSequence {
  int n_min = 0;
  std::vector<IrrDecomposition> decs;
  std::string provenance;

  int n_max() const { return n_min + static_cast<int>(decs.size()) - 1; }
  const IrrDecomposition& at(int n) const { return decs.at(n - n_min); }
};

struct MonotoneViolation {
  Partition lambda;
  int n = 0;  // violation between n and n+1
  long long before = 0;
  long long after = 0;
};

struct StabilityReport {
  int n_min = 0;
  int n_max = 0;
  // least N in the window with identical unpadded multiplicity maps on
  // [N, n_max]; never extrapolates beyond the window
  std::optional<int> observed_onset;
  MultiplicityMap stable_entries;
  std::optional<int> guaranteed;
  std::optional<std::string> verdict;  // "PASS" / "FAIL" once compared
  std::vector<MonotoneViolation> monotone_violations;
  std::vector<MultiplicityMap> per_n;  // unpadded, indexed from n_min
  std::string provenance;
};

StabilityReport detect_stability(const DecompositionSequence& seq);
std::vector<MonotoneViolation> check_multiplicity_monotone(const DecompositionSequence& seq);

struct GuaranteeComparison {
  bool pass = false;
  int guaranteed = 0;
  std::optional<int> observed_onset;
  // guaranteed - onset when passing with a visible onset
  std::optional<int> slack;
};

// PASS iff the observed onset is at most the guarantee, or the sequence is
// already constant at the start of the window (stabilization below the
// window's reach). Requires n_max >= guaranteed + 2.
GuaranteeComparison compare_to_guarantee(const StabilityReport& report, int guaranteed);

// convenience: run compare and stamp verdict/guaranteed into the report
StabilityReport with_guarantee(StabilityReport report, int guaranteed);

}  // namespace repstab
