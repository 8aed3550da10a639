#include "conlab/semantics.hpp"

#include <algorithm>

#include "conlab/properties.hpp"

namespace conlab {

SatTable::SatTable(int models, int n) : models_(models), n_(n) {
  if (models < 0 || n < 0 || n > 31) throw std::invalid_argument("bad satisfaction table shape");
  const std::size_t cells = static_cast<std::size_t>(models) << n;
  if (cells > (std::size_t{1} << 28)) throw std::invalid_argument("satisfaction table too large");
  bits_.assign(cells, false);
}

void GenericSemantics::validate() const {
  if (relations.empty()) throw std::invalid_argument("semantics needs at least one relation index");
  if (pairs.empty()) throw std::invalid_argument("semantics needs a nonempty pair set");
  for (const auto& rel : relations)
    if (rel.models() != model_count || rel.n() != n)
      throw std::invalid_argument("relation table shape mismatch");
  for (auto [i, j] : pairs)
    if (i < 0 || j < 0 || i >= index_count() || j >= index_count())
      throw std::invalid_argument("pair references an unknown relation index");
}

void FunctionalSemantics::validate() const {
  if (value_count < 1) throw std::invalid_argument("value set must be nonempty");
  if (models.empty()) throw std::invalid_argument("functional semantics needs at least one model");
  if (designated.empty()) throw std::invalid_argument("functional semantics needs at least one index");
  if (pairs.empty()) throw std::invalid_argument("functional semantics needs a nonempty pair set");
  const std::size_t width = models.front().size();
  const Mask all_values = (Mask{1} << value_count) - 1;
  Mask designated_union = 0;
  for (Mask d : designated) {
    if (d == 0) throw std::invalid_argument("designated value set must be nonempty");
    if (!subset_of(d, all_values)) throw std::invalid_argument("designated values outside the value set");
    designated_union |= d;
  }
  if (designated_union == all_values)
    throw std::invalid_argument("union of designated sets must omit at least one value");
  for (const auto& m : models) {
    if (m.size() != width) throw std::invalid_argument("valuations must share the carrier width");
    for (int v : m)
      if (v < 0 || v >= value_count) throw std::invalid_argument("valuation value out of range");
  }
  for (auto [i, j] : pairs)
    if (i < 0 || j < 0 || i >= index_count() || j >= index_count())
      throw std::invalid_argument("pair references an unknown index");
}

Mask FunctionalSemantics::designated_positions(int model, int index) const {
  const auto& valuation = models.at(model);
  const Mask d = designated.at(index);
  Mask out = 0;
  for (std::size_t p = 0; p < valuation.size(); ++p)
    if (contains(d, valuation[p])) out |= Mask{1} << p;
  return out;
}

std::vector<Mask> induced_table(const GenericSemantics& sem) {
  sem.validate();
  const Mask count = Mask{1} << sem.n;
  const Mask full = count - 1;
  std::vector<Mask> table(count, full);
  for (auto [i, j] : sem.pairs) {
    const SatTable& premise_rel = sem.relations[i];
    const SatTable& conclusion_rel = sem.relations[j];
    for (int m = 0; m < sem.model_count; ++m) {
      Mask accepted = 0;
      for (int a = 0; a < sem.n; ++a)
        if (conclusion_rel.at(m, singleton(a))) accepted |= singleton(a);
      for (Mask g = 0; g < count; ++g)
        if (premise_rel.at(m, g)) table[g] &= accepted;
    }
  }
  return table;
}

ConsequenceOperator induced_operator(const GenericSemantics& sem, const Carrier& carrier) {
  if (carrier.size() != sem.n) throw std::invalid_argument("carrier size does not match the semantics");
  return ConsequenceOperator(carrier, induced_table(sem));
}

std::vector<Mask> induced_table(const FunctionalSemantics& sem) {
  sem.validate();
  const int n = sem.n();
  const Mask count = Mask{1} << n;
  const Mask full = count - 1;
  std::vector<Mask> table(count, full);
  for (auto [i, j] : sem.pairs) {
    for (std::size_t m = 0; m < sem.models.size(); ++m) {
      const Mask premise_ok = sem.designated_positions(static_cast<int>(m), i);
      const Mask accepted = sem.designated_positions(static_cast<int>(m), j);
      for_each_subset(premise_ok, [&](Mask g) { table[g] &= accepted; });
    }
  }
  return table;
}

ConsequenceOperator induced_operator(const FunctionalSemantics& sem, const Carrier& carrier) {
  if (carrier.size() != sem.n()) throw std::invalid_argument("carrier size does not match the semantics");
  return ConsequenceOperator(carrier, induced_table(sem));
}

GenericSemantics canonical_semantics(const ConsequenceOperator& op) {
  const int n = op.size();
  const Mask count = op.carrier().subset_count();
  GenericSemantics sem;
  sem.n = n;
  sem.model_count = static_cast<int>(count);  // one model per premise set
  sem.relations.assign(2, SatTable(sem.model_count, n));
  for (Mask model = 0; model < count; ++model) {
    sem.relations[0].set(static_cast<int>(model), model, true);
    for (Mask g = 0; g < count; ++g)
      if (subset_of(g, op.apply(model))) sem.relations[1].set(static_cast<int>(model), g, true);
  }
  sem.pairs = {{0, 1}};
  return sem;
}

GranularityReport granularity(const GenericSemantics& sem) {
  sem.validate();
  const Mask count = Mask{1} << sem.n;
  GranularityReport report;
  report.per_index.assign(sem.index_count(), true);
  for (int i = 0; i < sem.index_count(); ++i) {
    for (int m = 0; m < sem.model_count && report.per_index[i]; ++m) {
      Mask accepted = 0;
      for (int a = 0; a < sem.n; ++a)
        if (sem.relations[i].at(m, singleton(a))) accepted |= singleton(a);
      for (Mask g = 0; g < count; ++g)
        if (sem.relations[i].at(m, g) != subset_of(g, accepted)) {
          report.per_index[i] = false;
          break;
        }
    }
  }
  report.strong = std::all_of(report.per_index.begin(), report.per_index.end(), [](bool b) { return b; });
  return report;
}

GenericSemantics functional_to_generic(const FunctionalSemantics& fsem) {
  fsem.validate();
  const int n = fsem.n();
  const Mask count = Mask{1} << n;
  GenericSemantics sem;
  sem.n = n;
  sem.model_count = static_cast<int>(fsem.models.size());
  sem.relations.assign(fsem.index_count(), SatTable(sem.model_count, n));
  for (int i = 0; i < fsem.index_count(); ++i)
    for (int m = 0; m < sem.model_count; ++m) {
      const Mask ok = fsem.designated_positions(m, i);
      for (Mask g = 0; g < count; ++g)
        if (subset_of(g, ok)) sem.relations[i].set(m, g, true);
    }
  sem.pairs = fsem.pairs;
  return sem;
}

GenericSemantics tarski_bivalent(const ConsequenceOperator& op) {
  if (!classify(op).tarski)
    throw PreconditionError("not tarski-type: tarski_bivalent needs a reflexive, monotonic, transitive operator");
  const Mask count = op.carrier().subset_count();
  std::vector<Mask> bivaluations;
  for (Mask s = 0; s < count; ++s) bivaluations.push_back(op.apply(s));
  std::sort(bivaluations.begin(), bivaluations.end());
  bivaluations.erase(std::unique(bivaluations.begin(), bivaluations.end()), bivaluations.end());

  GenericSemantics sem;
  sem.n = op.size();
  sem.model_count = static_cast<int>(bivaluations.size());
  sem.relations.assign(1, SatTable(sem.model_count, sem.n));
  for (int m = 0; m < sem.model_count; ++m)
    for (Mask g = 0; g < count; ++g)
      if (subset_of(g, bivaluations[m])) sem.relations[0].set(m, g, true);
  sem.pairs = {{0, 0}};
  return sem;
}

}  // namespace conlab
