#pragma once

#include <map>
#include <optional>
#include <span>

#include "conlab/semantics.hpp"

namespace conlab {

/// The non-consequence pairs one valuation rules out under designated sets
/// (D1, D2): every (G, a) with the valuation mapping G into D1 and a outside
/// D2.
struct KillSet {
  std::vector<std::pair<Mask, int>> pairs;  // sorted
};

KillSet kill_set(std::span<const int> valuation, int value_count, Mask designated1,
                 Mask designated2, const Carrier& carrier);

/// Practical caps keeping the valuation sweep (value_count^n * 2^n per
/// designated-set pair) in the sub-second range.
struct SearchLimits {
  int cap_mu2 = 12;
  int cap_mu3 = 8;
  int cap_mu4 = 6;
  long long max_steps = 1LL << 26;  // applies to value counts above 4
  int threads = 1;

  void check(int value_count, int n) const;
};

struct AchievabilityResult {
  bool achievable = false;
  std::optional<FunctionalSemantics> witness;
};

/// Decides whether some two-relation functional semantics over value_count
/// values induces the operator exactly. For each admissible designated-set
/// pair, the maximal set of valuations whose kill sets stay inside the
/// operator's non-consequences is assembled; the semantics exists iff the
/// union of those kill sets reaches every non-consequence. Induced
/// non-consequence is exactly that union and grows with the model set, so
/// testing the maximal set decides the full existential.
AchievabilityResult achievable_at(const ConsequenceOperator& op, int value_count,
                                  const SearchLimits& limits = {});

struct MinimalityResult {
  std::optional<int> min_values;            // least achievable count in [2, bound]
  std::optional<FunctionalSemantics> witness;
  std::map<int, bool> per_mu;
};

MinimalityResult inferential_valuedness(const ConsequenceOperator& op, int max_values,
                                        const SearchLimits& limits = {});

/// The maximal-model-set semantics; throws PreconditionError when the
/// operator is not achievable at the given value count.
FunctionalSemantics witness_semantics(const ConsequenceOperator& op, int value_count,
                                      const SearchLimits& limits = {});

}  // namespace conlab
