#pragma once

#include <optional>

#include "conlab/representations.hpp"

namespace conlab {

/// Two-valued point semantics: a set of tagged points, a pair relation over
/// them, and a satisfaction table. Points are identified by position; a point
/// may carry a bivaluation (a mask of elements it sends to 1). Two distinct
/// points are allowed to carry the same bivaluation — constructions that mint
/// one point per (model, index) pair need more points than there are
/// bivaluations, so identity is the tag, not the function.
struct SSemantics {
  int n = 0;
  std::vector<std::optional<Mask>> points;
  std::vector<std::pair<int, int>> relation;  // pairs of point ids
  SatTable sat;                               // point x subset

  int point_count() const { return static_cast<int>(points.size()); }
  void validate() const;

  /// Every point valued and satisfaction equal to containment in the value.
  bool is_normal() const;

  /// Builds a normal semantics from bivaluations (deduplicated) and a
  /// relation given as pairs of bivaluation masks.
  static SSemantics normal(int n, const std::vector<Mask>& bivaluations,
                           const std::vector<std::pair<Mask, Mask>>& mask_relation);
};

/// alpha follows from G iff every related pair (v, w) with v satisfying G has
/// w satisfying {alpha}. An empty point set induces the constant-full
/// operator.
ConsequenceOperator type1_operator(const SSemantics& sem, const Carrier& carrier);
std::vector<Mask> type1_table(const SSemantics& sem);

/// Existential entailment relative to a reference operator: alpha follows
/// from G iff some subset of the relation containing the pair
/// (chi_G, chi_{ref(G)}) satisfies the type-1 implication throughout. The
/// mandatory pair alone is the minimal witness, so the evaluation reduces to
/// checking that pair; premise sets whose mandatory pair is absent from the
/// relation have no witness set and map to the empty set (collected in
/// `missing` when supplied). Requires a normal semantics.
ConsequenceOperator type2_operator(const SSemantics& sem, const ConsequenceOperator& reference,
                                   std::vector<Mask>* missing = nullptr);

/// Literal evaluation of the existential over relation subsets; usable while
/// the relation holds at most `max_relation` pairs. Cross-check for the
/// reduced evaluation above.
ConsequenceOperator type2_operator_literal(const SSemantics& sem,
                                           const ConsequenceOperator& reference,
                                           int max_relation = 12);

/// Satisfaction decomposes over singletons at every point.
bool is_atomic(const SSemantics& sem);

/// Rebuilds an atomic semantics with explicit bivaluations (1 exactly on the
/// satisfied singletons) and containment satisfaction; the type-1 operator is
/// unchanged. Throws PreconditionError on non-atomic input.
SSemantics normalize(const SSemantics& sem);

/// One tagged point per (model, index) of the source semantics; the relation
/// links the points of each model along the steering pairs. The type-1
/// operator equals the source's induced operator.
SSemantics s_from_semantics(const GenericSemantics& sem);

/// Single-model semantics with one relation index per point; its induced
/// operator equals the type-1 operator. An empty point (or pair) set becomes
/// an empty-model semantics.
GenericSemantics semantics_from_s(const SSemantics& sem);

SSemantics build_s_mon(const ConsequenceOperator& op);  // requires monotonic
SSemantics build_s_q(const ConsequenceOperator& op);    // requires q-type
SSemantics build_s_p(const ConsequenceOperator& op);    // requires p-type

struct SSBuildResult {
  SSemantics semantics;
  AdequacyVerdict verdict;
};

SSBuildResult build_s_s(const ConsequenceOperator& op, const FamilyK& family, int kappa);

/// Type-II constructions. Adequacy of the type-II evaluation holds for any
/// operator; the cautious-monotonicity / weak-cumulative-transitivity checks
/// are left to the caller, so the empirical reach of the constructions stays
/// observable.
SSemantics build_s_cm(const ConsequenceOperator& op);
SSemantics build_s_wct(const ConsequenceOperator& op);

struct SHypothesisReport {
  bool q_shape = false;  // every related pair decreases the bivaluation
  bool p_shape = false;  // every related pair increases the bivaluation
  std::optional<bool> s_condition;  // per family member and element, an
                                    // excluding pair exists
};

/// Requires a normal semantics.
SHypothesisReport s_hypothesis_checks(const SSemantics& sem,
                                      const std::optional<FamilyK>& family = std::nullopt);

}  // namespace conlab
