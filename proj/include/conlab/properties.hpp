#pragma once

#include <optional>

#include "conlab/core.hpp"

namespace conlab {

/// Structural property flags of one operator. The composite flags
/// (tarski, q_type, p_type) are derived from the primitive ones.
struct ClassificationReport {
  bool reflexive = false;
  bool monotonic = false;
  bool transitive = false;  // G subset of W(S) implies W(G) subset of W(S)
  bool tarski = false;      // reflexive && monotonic && transitive
  bool idempotent = false;  // W(W(G)) == W(G) for all G
  bool quasi_closed = false;  // W(W(G) | G) == W(G) for all G
  bool q_type = false;        // monotonic && quasi_closed
  bool p_type = false;        // reflexive && monotonic
  bool cm_type = false;   // G <= S <= W(G) implies W(G) subset of W(S)
  bool wct_type = false;  // G <= S <= W(G) implies W(S) subset of W(G)
  bool anti_reflexive_global = false;  // G and W(G) disjoint for all G
};

/// An explicitly enumerated family of premise sets.
struct FamilyK {
  std::vector<Mask> members;  // sorted, unique

  static FamilyK of(std::vector<Mask> members);
  bool contains(Mask m) const;
};

/// Decides every flag by direct quantifier evaluation over the powerset.
ClassificationReport classify(const ConsequenceOperator& op);

/// True iff W(S) is contained in W(delta) for every S inside w_infinity(delta).
bool is_downward_q_closed(const ConsequenceOperator& op, Mask delta);

/// The five equivalent descriptions of the q-operators, each evaluated
/// independently. They must agree for every operator.
struct CharQReport {
  bool q_operator = false;          // monotonic + quasi-closure
  bool iterate_fixpoint = false;    // monotonic and W(w_infinity(G)) == W(G)
  bool all_downward_closed = false; // every delta is downward q-closed
  bool closed_extension = false;    // every non-consequence survives into some
                                    // downward q-closed superset of the premises
  bool absorbing_premises = false;  // G <= W(S) | S implies W(G) <= W(S)

  bool all_equal() const {
    return q_operator == iterate_fixpoint && q_operator == all_downward_closed &&
           q_operator == closed_extension && q_operator == absorbing_premises;
  }
};

CharQReport charq_equivalents(const ConsequenceOperator& op);

/// Every member has size >= kappa and some member has size exactly kappa.
/// The empty family fails the existence clause.
bool check_internally_kappa(const FamilyK& family, int kappa);

/// Monotonic, family internally kappa, and every family member disjoint
/// from its consequences.
bool check_s_type(const ConsequenceOperator& op, const FamilyK& family, int kappa);

/// Non-reflexive, non-quasi-closed (some W(G) escapes G), monotonic, and
/// every premise set of size >= kappa meets its own consequences.
bool check_r_type(const ConsequenceOperator& op, int kappa);

bool check_anti_reflexive_global(const ConsequenceOperator& op);

/// W(G) == L, or the union of W over all subsets of G stays inside W(G),
/// for every G.
bool finite_subset_bound(const ConsequenceOperator& op);

/// Consequences of each family member, checked against its complement sets.
struct RPropReport {
  /// W(G) <= W(L \ W(G)); equality whenever L \ W(G) is in the family too.
  bool complement_image = false;
  /// W(G) and W(L \ G) disjoint whenever L \ G is in the family.
  bool complement_disjoint = false;
  /// No family member Sigma meeting G has W(Sigma) == G.
  bool never_maps_onto = false;

  bool all() const { return complement_image && complement_disjoint && never_maps_onto; }
};

/// Requires check_s_type(op, family, kappa); throws PreconditionError otherwise.
RPropReport r_prop_checks(const ConsequenceOperator& op, const FamilyK& family, int kappa);

/// For a non-reflexive monotonic operator, an element a with a not in W({a});
/// {{a}} is then an internally-1 family witnessing the s-type check.
std::optional<int> s1_witness(const ConsequenceOperator& op);

}  // namespace conlab
