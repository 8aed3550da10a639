#pragma once

#include <map>
#include <optional>
#include <string>

#include "conlab/core.hpp"

namespace conlab {

/// One tier of a layered entailment evaluator: its own carrier, a model set,
/// a finite value set, and a total valuation of (model, premise set) pairs.
struct HierarchyLevel {
  int carrier_size = 0;
  int model_count = 0;
  int value_count = 0;
  std::vector<std::vector<int>> values;  // [model][premise mask] -> value
};

struct LevelValue {
  int level = 0;
  int value = 0;
  bool operator==(const LevelValue&) const = default;
};

/// A finite tower of levels over a base carrier (level 0), injections
/// embedding each higher carrier into every lower one, and a nonempty set of
/// ((level, value), (level, value)) steering pairs.
struct OrderedFamily {
  std::vector<HierarchyLevel> levels;
  /// (lower, upper) -> for each position of the upper carrier, its image in
  /// the lower carrier. Required for every lower < upper.
  std::map<std::pair<int, int>, std::vector<int>> injections;
  std::vector<std::pair<LevelValue, LevelValue>> pairs;
};

/// Checks the structural invariants: at least one level, value sets of size
/// >= kappa with equality somewhere, injective declared injections between
/// all level pairs, total valuations, nonempty steering pairs with valid
/// references. On failure, stores the violation's location in `why`.
bool validate_family(const OrderedFamily& family, int kappa, std::string* why = nullptr);

/// G entails alpha over the base carrier iff for every steering pair
/// ((i, a), (j, b)) and every independent model pair (m_i, m_j), the i-th
/// valuation assigning a to G's translation forces the j-th valuation to
/// assign b to {alpha}'s translation. Premise sets are translated to level i
/// as preimages along the declared injection into the base; sets containing
/// elements outside the injection's range are untranslatable and raise
/// PreconditionError.
EntailmentRelation induced_entailment_order(const OrderedFamily& family, int kappa);

struct OrderSearchCaps {
  int max_level_size = 2;
  int max_lambda = 2;
  int max_mu = 3;
  long long max_combinations = 1LL << 24;
};

struct OrderMinimalityReport {
  std::optional<int> least;     // least value-set size matching the template
  std::map<int, bool> per_mu;
};

/// Exhaustive search over families sharing the template's carriers, model
/// counts, injections, and steering-pair level skeleton, with all value sets
/// of size mu: reports the least mu in [2, mu_max] whose induced entailment
/// matches the template's, or exhaustion. Throws std::invalid_argument when
/// the caps are exceeded.
OrderMinimalityReport order_minimality_search(const OrderedFamily& shape, int mu_max,
                                              const OrderSearchCaps& caps = {});

}  // namespace conlab
