#pragma once

#include <array>
#include <optional>

#include "conlab/properties.hpp"
#include "conlab/semantics.hpp"

namespace conlab {

enum class DiscrepancyDirection {
  missing_from_induced,  // consequence of the operator, not of the semantics
  extra_in_induced,      // consequence of the semantics, not of the operator
};

struct Discrepancy {
  Mask premises = 0;
  int element = 0;
  DiscrepancyDirection direction = DiscrepancyDirection::missing_from_induced;
};

struct AdequacyVerdict {
  bool adequate = false;
  std::vector<Discrepancy> discrepancies;
};

/// Four-valued semantics adequate for every monotonic operator: each premise
/// set S contributes the valuation sending an element to 0/1/2/3 according to
/// its membership in S and W(S). Throws PreconditionError when not monotonic.
FunctionalSemantics build_mon4(const ConsequenceOperator& op);

/// Three-valued semantics for q-type operators; the conclusion relation is
/// contained in the premise relation.
FunctionalSemantics build_q3(const ConsequenceOperator& op);

/// Three-valued semantics for p-type operators; the premise relation is
/// contained in the conclusion relation.
FunctionalSemantics build_p3(const ConsequenceOperator& op);

struct S3Result {
  FunctionalSemantics semantics;
  AdequacyVerdict verdict;  // full adequacy; may fail outside the family
};

/// Three-valued semantics for s-type operators. Value assignment resolves the
/// overlap between "element of S" and "consequence of S" in favour of the
/// consequence value. Full adequacy is reported empirically; the construction
/// always satisfies W(G) <= induced(G) with equality on family members, and
/// throws std::logic_error if that bound ever fails.
S3Result build_s3(const ConsequenceOperator& op, const FamilyK& family, int kappa);

AdequacyVerdict verify_adequacy(const ConsequenceOperator& op, const FunctionalSemantics& sem);
AdequacyVerdict verify_adequacy(const ConsequenceOperator& op, const std::vector<Mask>& induced);

/// Hypothesis record for two-relation strongly granular semantics with the
/// single steering pair (0, 1).
struct HypothesisReport {
  bool sat2_within_sat1 = false;  // conclusion relation inside premise relation
  bool sat1_within_sat2 = false;
  /// For the supplied family: every member G and element a of G have a model
  /// satisfying G under the premise relation but not {a} under the conclusion
  /// relation.
  std::optional<bool> s_projection;
  /// For the supplied kappa: [0] relations incomparable in one direction,
  /// [1] some premise growth escapes the induced consequences,
  /// [2] every set of size >= kappa keeps one element under every model.
  std::optional<std::array<bool, 3>> r_conditions;
};

HypothesisReport hypothesis_checks(const GenericSemantics& sem,
                                   const std::optional<FamilyK>& family = std::nullopt,
                                   std::optional<int> kappa = std::nullopt);

}  // namespace conlab
