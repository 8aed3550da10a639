#include "conlab/representations.hpp"

namespace conlab {

namespace {

// One valuation per premise set, values chosen by a membership case split.
FunctionalSemantics per_set_semantics(const ConsequenceOperator& op, int value_count,
                                      Mask designated1, Mask designated2,
                                      int (*value_of)(bool in_set, bool in_consequences)) {
  const Mask count = op.carrier().subset_count();
  FunctionalSemantics sem;
  sem.value_count = value_count;
  sem.designated = {designated1, designated2};
  sem.pairs = {{0, 1}};
  sem.models.reserve(count);
  for (Mask s = 0; s < count; ++s) {
    std::vector<int> valuation(op.size());
    const Mask ws = op.apply(s);
    for (int b = 0; b < op.size(); ++b) valuation[b] = value_of(contains(s, b), contains(ws, b));
    sem.models.push_back(std::move(valuation));
  }
  return sem;
}

}  // namespace

FunctionalSemantics build_mon4(const ConsequenceOperator& op) {
  if (!classify(op).monotonic) throw PreconditionError("not monotonic: build_mon4 needs a monotonic operator");
  return per_set_semantics(op, 4, 0b0110, 0b1010, [](bool in_set, bool in_cons) {
    if (in_set && in_cons) return 1;
    if (in_set) return 2;
    if (in_cons) return 3;
    return 0;
  });
}

FunctionalSemantics build_q3(const ConsequenceOperator& op) {
  if (!classify(op).q_type) throw PreconditionError("not q-type: build_q3 needs a q-type operator");
  return per_set_semantics(op, 3, 0b110, 0b010, [](bool in_set, bool in_cons) {
    if (in_cons) return 1;
    if (in_set) return 2;
    return 0;
  });
}

FunctionalSemantics build_p3(const ConsequenceOperator& op) {
  if (!classify(op).p_type) throw PreconditionError("not p-type: build_p3 needs a p-type operator");
  return per_set_semantics(op, 3, 0b010, 0b110, [](bool in_set, bool in_cons) {
    if (in_set) return 1;
    if (in_cons) return 2;
    return 0;
  });
}

S3Result build_s3(const ConsequenceOperator& op, const FamilyK& family, int kappa) {
  if (!check_s_type(op, family, kappa)) throw PreconditionError("not s-type: build_s3 needs an operator passing check_s_type");
  // Consequence membership wins over set membership; family members are
  // disjoint from their consequences, so both readings agree there.
  FunctionalSemantics sem = per_set_semantics(op, 3, 0b010, 0b100, [](bool in_set, bool in_cons) {
    if (in_cons) return 2;
    if (in_set) return 1;
    return 0;
  });
  const std::vector<Mask> induced = induced_table(sem);
  S3Result result{std::move(sem), verify_adequacy(op, induced)};
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) {
    if (!subset_of(op.apply(g), induced[g]))
      throw std::logic_error("s3 construction lost a consequence");
    if (family.contains(g) && induced[g] != op.apply(g))
      throw std::logic_error("s3 construction inexact on a family member");
  }
  return result;
}

AdequacyVerdict verify_adequacy(const ConsequenceOperator& op, const std::vector<Mask>& induced) {
  if (induced.size() != op.carrier().subset_count())
    throw std::invalid_argument("induced table does not match the operator's carrier");
  AdequacyVerdict verdict;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) {
    const Mask want = op.apply(g);
    const Mask have = induced[g];
    if (want == have) continue;
    for (int a = 0; a < op.size(); ++a) {
      if (contains(want, a) && !contains(have, a))
        verdict.discrepancies.push_back({g, a, DiscrepancyDirection::missing_from_induced});
      else if (!contains(want, a) && contains(have, a))
        verdict.discrepancies.push_back({g, a, DiscrepancyDirection::extra_in_induced});
    }
  }
  verdict.adequate = verdict.discrepancies.empty();
  return verdict;
}

AdequacyVerdict verify_adequacy(const ConsequenceOperator& op, const FunctionalSemantics& sem) {
  if (sem.n() != op.size()) throw std::invalid_argument("semantics carrier width mismatch");
  return verify_adequacy(op, induced_table(sem));
}

HypothesisReport hypothesis_checks(const GenericSemantics& sem, const std::optional<FamilyK>& family,
                                   std::optional<int> kappa) {
  sem.validate();
  if (sem.index_count() != 2 || sem.pairs.size() != 1 || sem.pairs[0] != std::make_pair(0, 1))
    throw std::invalid_argument("hypothesis_checks expects two relations steered by the single pair (0, 1)");
  if (!granularity(sem).strong)
    throw std::invalid_argument("hypothesis_checks expects a strongly granular semantics");

  const Mask count = Mask{1} << sem.n;
  const SatTable& sat1 = sem.relations[0];
  const SatTable& sat2 = sem.relations[1];

  HypothesisReport report;
  report.sat2_within_sat1 = true;
  report.sat1_within_sat2 = true;
  for (int m = 0; m < sem.model_count; ++m)
    for (Mask g = 0; g < count; ++g) {
      if (sat2.at(m, g) && !sat1.at(m, g)) report.sat2_within_sat1 = false;
      if (sat1.at(m, g) && !sat2.at(m, g)) report.sat1_within_sat2 = false;
    }

  if (family) {
    bool ok = true;
    for (Mask g : family->members) {
      for (int a = 0; a < sem.n && ok; ++a) {
        if (!contains(g, a)) continue;
        bool witness = false;
        for (int m = 0; m < sem.model_count; ++m)
          if (sat1.at(m, g) && !sat2.at(m, singleton(a))) {
            witness = true;
            break;
          }
        if (!witness) ok = false;
      }
      if (!ok) break;
    }
    report.s_projection = ok;
  }

  if (kappa) {
    std::array<bool, 3> conditions{};
    conditions[0] = !report.sat1_within_sat2;

    const std::vector<Mask> induced = induced_table(sem);
    conditions[1] = false;
    for (Mask delta = 0; delta < count && !conditions[1]; ++delta) {
      const Mask reach = induced[delta] | delta;
      for_each_subset(reach, [&](Mask sigma) {
        if (!subset_of(induced[sigma], induced[delta])) conditions[1] = true;
      });
    }

    conditions[2] = true;
    for (Mask g = 0; g < count && conditions[2]; ++g) {
      if (popcount(g) < *kappa) continue;
      bool some_element_covered = false;
      for (int a = 0; a < sem.n && !some_element_covered; ++a) {
        if (!contains(g, a)) continue;
        bool covered = true;
        for (int m = 0; m < sem.model_count; ++m)
          if (sat1.at(m, g) && !sat2.at(m, singleton(a))) {
            covered = false;
            break;
          }
        some_element_covered = covered;
      }
      conditions[2] = some_element_covered;
    }
    report.r_conditions = conditions;
  }

  return report;
}

}  // namespace conlab
