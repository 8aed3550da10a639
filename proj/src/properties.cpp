#include "conlab/properties.hpp"

#include <algorithm>

namespace conlab {

FamilyK FamilyK::of(std::vector<Mask> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return FamilyK{std::move(members)};
}

bool FamilyK::contains(Mask m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

namespace {

bool is_reflexive(const ConsequenceOperator& op) {
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    if (!subset_of(g, op.apply(g))) return false;
  return true;
}

bool is_monotonic(const ConsequenceOperator& op) {
  for (Mask s = 0; s < op.carrier().subset_count(); ++s) {
    const Mask ws = op.apply(s);
    bool ok = true;
    for_each_subset(s, [&](Mask g) {
      if (!subset_of(op.apply(g), ws)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_transitive(const ConsequenceOperator& op) {
  for (Mask s = 0; s < op.carrier().subset_count(); ++s) {
    const Mask ws = op.apply(s);
    bool ok = true;
    for_each_subset(ws, [&](Mask g) {
      if (!subset_of(op.apply(g), ws)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_quasi_closed(const ConsequenceOperator& op) {
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    if (op.apply(op.apply(g) | g) != op.apply(g)) return false;
  return true;
}

bool is_idempotent(const ConsequenceOperator& op) {
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    if (op.apply(op.apply(g)) != op.apply(g)) return false;
  return true;
}

// Quantifies over all G <= S <= W(G). `forward` checks W(G) <= W(S),
// otherwise W(S) <= W(G).
bool cumulative_condition(const ConsequenceOperator& op, bool forward) {
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) {
    const Mask wg = op.apply(g);
    if (!subset_of(g, wg)) continue;  // no S fits between G and W(G)
    bool ok = true;
    for_each_subset(wg & ~g, [&](Mask extra) {
      const Mask s = g | extra;
      const Mask ws = op.apply(s);
      if (forward ? !subset_of(wg, ws) : !subset_of(ws, wg)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

ClassificationReport classify(const ConsequenceOperator& op) {
  ClassificationReport r;
  r.reflexive = is_reflexive(op);
  r.monotonic = is_monotonic(op);
  r.transitive = is_transitive(op);
  r.idempotent = is_idempotent(op);
  r.quasi_closed = is_quasi_closed(op);
  r.tarski = r.reflexive && r.monotonic && r.transitive;
  r.q_type = r.monotonic && r.quasi_closed;
  r.p_type = r.reflexive && r.monotonic;
  r.cm_type = cumulative_condition(op, /*forward=*/true);
  r.wct_type = cumulative_condition(op, /*forward=*/false);
  r.anti_reflexive_global = check_anti_reflexive_global(op);
  return r;
}

bool is_downward_q_closed(const ConsequenceOperator& op, Mask delta) {
  const Mask closure = w_infinity(op, delta);
  const Mask wd = op.apply(delta);
  bool ok = true;
  for_each_subset(closure, [&](Mask s) {
    if (!subset_of(op.apply(s), wd)) ok = false;
  });
  return ok;
}

CharQReport charq_equivalents(const ConsequenceOperator& op) {
  const Mask count = op.carrier().subset_count();
  const Mask full = op.full();
  CharQReport r;

  const bool monotonic = is_monotonic(op);
  r.q_operator = monotonic && is_quasi_closed(op);

  r.iterate_fixpoint = monotonic;
  if (r.iterate_fixpoint) {
    for (Mask g = 0; g < count; ++g)
      if (op.apply(w_infinity(op, g)) != op.apply(g)) {
        r.iterate_fixpoint = false;
        break;
      }
  }

  std::vector<bool> qclosed(count);
  for (Mask d = 0; d < count; ++d) qclosed[d] = is_downward_q_closed(op, d);

  r.all_downward_closed = std::all_of(qclosed.begin(), qclosed.end(), [](bool b) { return b; });

  // witnessed[g]: elements with a downward q-closed superset of g that
  // excludes them
  r.closed_extension = true;
  for (Mask g = 0; g < count && r.closed_extension; ++g) {
    Mask witnessed = 0;
    for_each_subset(full & ~g, [&](Mask extra) {
      const Mask s = g | extra;
      if (qclosed[s]) witnessed |= full & ~op.apply(s);
    });
    if (!subset_of(full & ~op.apply(g), witnessed)) r.closed_extension = false;
  }

  r.absorbing_premises = true;
  for (Mask s = 0; s < count && r.absorbing_premises; ++s) {
    const Mask bound = op.apply(s) | s;
    bool ok = true;
    for_each_subset(bound, [&](Mask g) {
      if (!subset_of(op.apply(g), op.apply(s))) ok = false;
    });
    if (!ok) r.absorbing_premises = false;
  }

  return r;
}

bool check_internally_kappa(const FamilyK& family, int kappa) {
  bool exact = false;
  for (Mask m : family.members) {
    if (popcount(m) < kappa) return false;
    if (popcount(m) == kappa) exact = true;
  }
  return exact;
}

bool check_s_type(const ConsequenceOperator& op, const FamilyK& family, int kappa) {
  if (!check_internally_kappa(family, kappa)) return false;
  if (!is_monotonic(op)) return false;
  for (Mask m : family.members)
    if ((m & op.apply(m)) != 0) return false;
  return true;
}

bool check_r_type(const ConsequenceOperator& op, int kappa) {
  const Mask count = op.carrier().subset_count();
  bool non_reflexive = false;
  bool escapes = false;
  for (Mask g = 0; g < count; ++g) {
    if (!subset_of(g, op.apply(g))) non_reflexive = true;
    if (!subset_of(op.apply(g), g)) escapes = true;
    if (popcount(g) >= kappa && (g & op.apply(g)) == 0) return false;
  }
  return non_reflexive && escapes && is_monotonic(op);
}

bool check_anti_reflexive_global(const ConsequenceOperator& op) {
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    if ((g & op.apply(g)) != 0) return false;
  return true;
}

bool finite_subset_bound(const ConsequenceOperator& op) {
  const Mask full = op.full();
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) {
    if (op.apply(g) == full) continue;
    Mask joined = 0;
    for_each_subset(g, [&](Mask sub) { joined |= op.apply(sub); });
    if (!subset_of(joined, op.apply(g))) return false;
  }
  return true;
}

RPropReport r_prop_checks(const ConsequenceOperator& op, const FamilyK& family, int kappa) {
  if (!check_s_type(op, family, kappa))
    throw PreconditionError("r_prop_checks requires an operator passing check_s_type");
  const Mask full = op.full();
  RPropReport r;
  r.complement_image = true;
  r.complement_disjoint = true;
  r.never_maps_onto = true;
  for (Mask g : family.members) {
    const Mask wg = op.apply(g);
    const Mask comp = full & ~wg;
    if (!subset_of(wg, op.apply(comp))) r.complement_image = false;
    if (family.contains(comp) && !subset_of(op.apply(comp), wg)) r.complement_image = false;
    if (family.contains(full & ~g) && (wg & op.apply(full & ~g)) != 0) r.complement_disjoint = false;
    for (Mask sigma : family.members)
      if ((g & sigma) != 0 && op.apply(sigma) == g) r.never_maps_onto = false;
  }
  return r;
}

std::optional<int> s1_witness(const ConsequenceOperator& op) {
  for (int a = 0; a < op.size(); ++a)
    if (!contains(op.apply(singleton(a)), a)) return a;
  return std::nullopt;
}

}  // namespace conlab
