#include "conlab/suszko.hpp"

#include <algorithm>
#include <map>

namespace conlab {

void SSemantics::validate() const {
  if (sat.models() != point_count() || sat.n() != n)
    throw std::invalid_argument("satisfaction table shape mismatch");
  for (auto [v, w] : relation)
    if (v < 0 || w < 0 || v >= point_count() || w >= point_count())
      throw std::invalid_argument("relation references an unknown point");
  const Mask full = (n == 0) ? 0 : (Mask{2} << (n - 1)) - 1;
  for (const auto& p : points)
    if (p && !subset_of(*p, full)) throw std::invalid_argument("bivaluation outside the carrier");
}

bool SSemantics::is_normal() const {
  const Mask count = Mask{1} << n;
  for (int v = 0; v < point_count(); ++v) {
    if (!points[v]) return false;
    for (Mask g = 0; g < count; ++g)
      if (sat.at(v, g) != subset_of(g, *points[v])) return false;
  }
  return true;
}

SSemantics SSemantics::normal(int n, const std::vector<Mask>& bivaluations,
                              const std::vector<std::pair<Mask, Mask>>& mask_relation) {
  std::vector<Mask> masks = bivaluations;
  for (const auto& [v, w] : mask_relation) {
    masks.push_back(v);
    masks.push_back(w);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  std::map<Mask, int> id;
  for (std::size_t i = 0; i < masks.size(); ++i) id[masks[i]] = static_cast<int>(i);

  SSemantics sem;
  sem.n = n;
  sem.points.reserve(masks.size());
  for (Mask m : masks) sem.points.emplace_back(m);
  sem.sat = SatTable(static_cast<int>(masks.size()), n);
  const Mask count = Mask{1} << n;
  for (std::size_t v = 0; v < masks.size(); ++v)
    for (Mask g = 0; g < count; ++g)
      if (subset_of(g, masks[v])) sem.sat.set(static_cast<int>(v), g, true);

  std::vector<std::pair<int, int>> rel;
  for (const auto& [v, w] : mask_relation) rel.emplace_back(id.at(v), id.at(w));
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  sem.relation = std::move(rel);
  return sem;
}

std::vector<Mask> type1_table(const SSemantics& sem) {
  sem.validate();
  const Mask count = Mask{1} << sem.n;
  const Mask full = count - 1;
  std::vector<Mask> table(count, full);
  for (auto [v, w] : sem.relation) {
    Mask accepted = 0;
    for (int a = 0; a < sem.n; ++a)
      if (sem.sat.at(w, singleton(a))) accepted |= singleton(a);
    for (Mask g = 0; g < count; ++g)
      if (sem.sat.at(v, g)) table[g] &= accepted;
  }
  return table;
}

ConsequenceOperator type1_operator(const SSemantics& sem, const Carrier& carrier) {
  if (carrier.size() != sem.n) throw std::invalid_argument("carrier size mismatch");
  return ConsequenceOperator(carrier, type1_table(sem));
}

namespace {

// Index of the relation pair (chi_g, chi_w) in a normal semantics, if any.
bool relation_has(const SSemantics& sem, Mask v_mask, Mask w_mask) {
  for (auto [v, w] : sem.relation)
    if (sem.points[v] == v_mask && sem.points[w] == w_mask) return true;
  return false;
}

}  // namespace

ConsequenceOperator type2_operator(const SSemantics& sem, const ConsequenceOperator& reference,
                                   std::vector<Mask>* missing) {
  sem.validate();
  if (!sem.is_normal()) throw PreconditionError("type-II entailment needs a normal semantics");
  if (reference.size() != sem.n) throw std::invalid_argument("carrier size mismatch");
  const Mask count = reference.carrier().subset_count();
  std::vector<Mask> table(count, 0);
  for (Mask g = 0; g < count; ++g) {
    const Mask target = reference.apply(g);
    if (!relation_has(sem, g, target)) {
      if (missing) missing->push_back(g);
      continue;  // no admissible witness set: nothing follows from g
    }
    // chi_g satisfies g, so the mandatory implication pins the conclusion
    // satisfaction of chi_{W(g)} exactly.
    table[g] = target;
  }
  return ConsequenceOperator(reference.carrier(), std::move(table));
}

ConsequenceOperator type2_operator_literal(const SSemantics& sem,
                                           const ConsequenceOperator& reference,
                                           int max_relation) {
  sem.validate();
  if (!sem.is_normal()) throw PreconditionError("type-II entailment needs a normal semantics");
  if (reference.size() != sem.n) throw std::invalid_argument("carrier size mismatch");
  const int r = static_cast<int>(sem.relation.size());
  if (r > max_relation) throw std::invalid_argument("relation too large for literal subset enumeration");

  const Mask count = reference.carrier().subset_count();
  std::vector<Mask> table(count, 0);
  for (Mask g = 0; g < count; ++g) {
    const Mask target = reference.apply(g);
    int mandatory = -1;
    for (int k = 0; k < r; ++k)
      if (sem.points[sem.relation[k].first] == g && sem.points[sem.relation[k].second] == target)
        mandatory = k;
    if (mandatory < 0) continue;
    for (int a = 0; a < reference.size(); ++a) {
      bool witnessed = false;
      for (Mask pick = 0; pick < (Mask{1} << r) && !witnessed; ++pick) {
        if (!contains(pick, mandatory)) continue;
        bool holds = true;
        for (int k = 0; k < r && holds; ++k) {
          if (!contains(pick, k)) continue;
          auto [v, w] = sem.relation[k];
          if (sem.sat.at(v, g) && !sem.sat.at(w, singleton(a))) holds = false;
        }
        witnessed = holds;
      }
      if (witnessed) table[g] |= singleton(a);
    }
  }
  return ConsequenceOperator(reference.carrier(), std::move(table));
}

bool is_atomic(const SSemantics& sem) {
  sem.validate();
  const Mask count = Mask{1} << sem.n;
  for (int v = 0; v < sem.point_count(); ++v) {
    Mask accepted = 0;
    for (int a = 0; a < sem.n; ++a)
      if (sem.sat.at(v, singleton(a))) accepted |= singleton(a);
    for (Mask g = 0; g < count; ++g)
      if (sem.sat.at(v, g) != subset_of(g, accepted)) return false;
  }
  return true;
}

SSemantics normalize(const SSemantics& sem) {
  if (!is_atomic(sem)) throw PreconditionError("normalize needs an atomic semantics");
  SSemantics out;
  out.n = sem.n;
  out.points.resize(sem.point_count());
  out.sat = SatTable(sem.point_count(), sem.n);
  const Mask count = Mask{1} << sem.n;
  for (int v = 0; v < sem.point_count(); ++v) {
    Mask value = 0;
    for (int a = 0; a < sem.n; ++a)
      if (sem.sat.at(v, singleton(a))) value |= singleton(a);
    out.points[v] = value;
    for (Mask g = 0; g < count; ++g)
      if (subset_of(g, value)) out.sat.set(v, g, true);
  }
  out.relation = sem.relation;
  return out;
}

SSemantics s_from_semantics(const GenericSemantics& source) {
  source.validate();
  SSemantics out;
  out.n = source.n;
  const int indices = source.index_count();
  out.points.assign(static_cast<std::size_t>(source.model_count) * indices, std::nullopt);
  out.sat = SatTable(static_cast<int>(out.points.size()), source.n);
  const Mask count = Mask{1} << source.n;
  for (int m = 0; m < source.model_count; ++m)
    for (int i = 0; i < indices; ++i) {
      const int point = m * indices + i;
      for (Mask g = 0; g < count; ++g)
        if (source.relations[i].at(m, g)) out.sat.set(point, g, true);
    }
  for (auto [i, j] : source.pairs)
    for (int m = 0; m < source.model_count; ++m)
      out.relation.emplace_back(m * indices + i, m * indices + j);
  return out;
}

GenericSemantics semantics_from_s(const SSemantics& sem) {
  sem.validate();
  GenericSemantics out;
  out.n = sem.n;
  if (sem.point_count() == 0 || sem.relation.empty()) {
    // Nothing constrains entailment; the empty-model semantics induces the
    // same constant-full operator. (A pair set must be nonempty, so a
    // point-per-index translation is unavailable here.)
    out.model_count = 0;
    out.relations.assign(1, SatTable(0, sem.n));
    out.pairs = {{0, 0}};
    return out;
  }
  out.model_count = 1;
  out.relations.reserve(sem.point_count());
  const Mask count = Mask{1} << sem.n;
  for (int v = 0; v < sem.point_count(); ++v) {
    SatTable rel(1, sem.n);
    for (Mask g = 0; g < count; ++g)
      if (sem.sat.at(v, g)) rel.set(0, g, true);
    out.relations.push_back(std::move(rel));
  }
  out.pairs = sem.relation;
  return out;
}

SSemantics build_s_mon(const ConsequenceOperator& op) {
  if (!classify(op).monotonic) throw PreconditionError("not monotonic: build_s_mon needs a monotonic operator");
  std::vector<std::pair<Mask, Mask>> rel;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) rel.emplace_back(g, op.apply(g));
  return SSemantics::normal(op.size(), {}, rel);
}

SSemantics build_s_q(const ConsequenceOperator& op) {
  if (!classify(op).q_type) throw PreconditionError("not q-type: build_s_q needs a q-type operator");
  std::vector<std::pair<Mask, Mask>> rel;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    rel.emplace_back(op.apply(g) | g, op.apply(g));
  return SSemantics::normal(op.size(), {}, rel);
}

SSemantics build_s_p(const ConsequenceOperator& op) {
  if (!classify(op).p_type) throw PreconditionError("not p-type: build_s_p needs a p-type operator");
  std::vector<std::pair<Mask, Mask>> rel;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    rel.emplace_back(g, g | op.apply(g));
  return SSemantics::normal(op.size(), {}, rel);
}

SSBuildResult build_s_s(const ConsequenceOperator& op, const FamilyK& family, int kappa) {
  if (!check_s_type(op, family, kappa)) throw PreconditionError("not s-type: build_s_s needs an operator passing check_s_type");
  const Mask full = op.full();
  std::vector<std::pair<Mask, Mask>> rel;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) {
    const Mask wg = op.apply(g);
    if (family.contains(g) && family.contains(full & ~wg))
      rel.emplace_back(full & ~wg, wg);
    else
      rel.emplace_back(g, wg);
  }
  SSemantics sem = SSemantics::normal(op.size(), {}, rel);
  AdequacyVerdict verdict = verify_adequacy(op, type1_table(sem));
  return {std::move(sem), std::move(verdict)};
}

SSemantics build_s_cm(const ConsequenceOperator& op) {
  // As a flat pair set the union of the per-premise relations collapses to
  // one pair per premise set, with every mandatory pair present.
  std::vector<std::pair<Mask, Mask>> rel;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) rel.emplace_back(g, op.apply(g));
  return SSemantics::normal(op.size(), {}, rel);
}

SSemantics build_s_wct(const ConsequenceOperator& op) {
  std::vector<std::pair<Mask, Mask>> rel;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g) {
    rel.emplace_back(g, op.apply(g));
    rel.emplace_back(op.apply(g), op.apply(g));
  }
  return SSemantics::normal(op.size(), {}, rel);
}

SHypothesisReport s_hypothesis_checks(const SSemantics& sem, const std::optional<FamilyK>& family) {
  sem.validate();
  if (!sem.is_normal()) throw PreconditionError("s_hypothesis_checks needs a normal semantics");
  SHypothesisReport report;
  report.q_shape = true;
  report.p_shape = true;
  for (auto [v, w] : sem.relation) {
    if (!subset_of(*sem.points[w], *sem.points[v])) report.q_shape = false;
    if (!subset_of(*sem.points[v], *sem.points[w])) report.p_shape = false;
  }
  if (family) {
    bool ok = true;
    for (Mask g : family->members)
      for (int a = 0; a < sem.n && ok; ++a) {
        if (!contains(g, a)) continue;
        bool witness = false;
        for (auto [v, w] : sem.relation)
          if (subset_of(g, *sem.points[v]) && !contains(*sem.points[w], a)) {
            witness = true;
            break;
          }
        if (!witness) ok = false;
      }
    report.s_condition = ok;
  }
  return report;
}

}  // namespace conlab
