#include "repstab/stability.hpp"

namespace repstab {

StabilityReport detect_stability(const DecompositionSequence& seq) {
  if (seq.decs.size() < 2)
    throw WindowTooShort("need a window of length at least 2, got " +
                         std::to_string(seq.decs.size()));
  StabilityReport rep;
  rep.n_min = seq.n_min;
  rep.n_max = seq.n_max();
  rep.provenance = seq.provenance;
  for (const auto& d : seq.decs) rep.per_n.push_back(d.unpadded());

  // least N whose unpadded map persists to the end of the window
  const size_t last = rep.per_n.size() - 1;
  size_t onset = last;
  while (onset > 0 && rep.per_n[onset - 1] == rep.per_n[last]) --onset;
  // a lone tail point is no evidence of stabilization
  if (onset == last)
    rep.observed_onset = std::nullopt;
  else
    rep.observed_onset = seq.n_min + static_cast<int>(onset);
  rep.stable_entries = rep.per_n[onset];
  rep.monotone_violations = check_multiplicity_monotone(seq);
  return rep;
}

std::vector<MonotoneViolation> check_multiplicity_monotone(const DecompositionSequence& seq) {
  std::vector<MonotoneViolation> out;
  std::vector<MultiplicityMap> maps;
  for (const auto& d : seq.decs) maps.push_back(d.unpadded());
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    for (const auto& [lambda, before] : maps[i]) {
      auto it = maps[i + 1].find(lambda);
      long long after = it == maps[i + 1].end() ? 0 : it->second;
      if (after < before)
        out.push_back({lambda, seq.n_min + static_cast<int>(i), before, after});
    }
  }
  return out;
}

GuaranteeComparison compare_to_guarantee(const StabilityReport& report, int guaranteed) {
  if (report.n_max < guaranteed + 2)
    throw InsufficientWindow("window tops out at " + std::to_string(report.n_max) +
                             ", need n_max >= " + std::to_string(guaranteed + 2));
  GuaranteeComparison cmp;
  cmp.guaranteed = guaranteed;
  cmp.observed_onset = report.observed_onset;
  if (!report.observed_onset) {
    cmp.pass = false;
    return cmp;
  }
  int onset = *report.observed_onset;
  cmp.pass = onset <= guaranteed || onset == report.n_min;
  if (cmp.pass && onset > report.n_min) cmp.slack = guaranteed - onset;
  return cmp;
}

StabilityReport with_guarantee(StabilityReport report, int guaranteed) {
  GuaranteeComparison cmp = compare_to_guarantee(report, guaranteed);
  report.guaranteed = guaranteed;
  report.verdict = cmp.pass ? "PASS" : "FAIL";
  return report;
}

}  // namespace repstab
