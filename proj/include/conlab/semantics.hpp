#pragma once

#include <utility>
#include <vector>

#include "conlab/core.hpp"

namespace conlab {

/// One satisfaction relation as an explicit model x subset boolean table.
class SatTable {
 public:
  SatTable() = default;
  SatTable(int models, int n);

  bool at(int model, Mask premises) const { return bits_[index(model, premises)]; }
  void set(int model, Mask premises, bool value = true) { bits_[index(model, premises)] = value; }
  int models() const { return models_; }
  int n() const { return n_; }

 private:
  std::size_t index(int model, Mask premises) const {
    return (static_cast<std::size_t>(model) << n_) | premises;
  }
  int models_ = 0;
  int n_ = 0;
  std::vector<bool> bits_;
};

/// A model set with one satisfaction relation per index and a nonempty set of
/// index pairs steering entailment: alpha follows from G iff for every pair
/// (i, j) and every model m, m sat_i G implies m sat_j {alpha}. Models are
/// identified by position, never by their satisfaction behaviour.
struct GenericSemantics {
  int n = 0;
  int model_count = 0;
  std::vector<SatTable> relations;
  std::vector<std::pair<int, int>> pairs;

  int index_count() const { return static_cast<int>(relations.size()); }
  void validate() const;
};

/// Valuations of carrier elements into a finite value set, with one
/// designated value set per index. Satisfaction is containment: m sat_i G
/// iff m maps every element of G into designated[i].
struct FunctionalSemantics {
  int value_count = 0;                       // size of the value set {0..mu-1}
  std::vector<std::vector<int>> models;      // nonempty; one valuation per model
  std::vector<Mask> designated;              // per index, as a bitmask over values
  std::vector<std::pair<int, int>> pairs;

  int n() const { return models.empty() ? 0 : static_cast<int>(models.front().size()); }
  int index_count() const { return static_cast<int>(designated.size()); }

  /// Enforces: models nonempty, values in range, every designated set
  /// nonempty, and the union of designated sets a proper subset of the
  /// value set. Throws std::invalid_argument on violation.
  void validate() const;

  /// Positions whose value lies in designated[index], for one model.
  Mask designated_positions(int model, int index) const;
};

std::vector<Mask> induced_table(const GenericSemantics& sem);
ConsequenceOperator induced_operator(const GenericSemantics& sem, const Carrier& carrier);

std::vector<Mask> induced_table(const FunctionalSemantics& sem);
ConsequenceOperator induced_operator(const FunctionalSemantics& sem, const Carrier& carrier);

/// The two-relation semantics over all premise sets (first relation is
/// equality with the model, second is containment in its consequences) whose
/// induced operator reproduces any given operator exactly.
GenericSemantics canonical_semantics(const ConsequenceOperator& op);

struct GranularityReport {
  std::vector<bool> per_index;  // satisfaction decomposes over singletons
  bool strong = false;          // all indices granular
};

GranularityReport granularity(const GenericSemantics& sem);

GenericSemantics functional_to_generic(const FunctionalSemantics& sem);

/// Two-valued single-relation semantics for a reflexive, monotonic,
/// transitive operator: models are the characteristic bivaluations of the
/// consequence sets. Throws PreconditionError otherwise.
GenericSemantics tarski_bivalent(const ConsequenceOperator& op);

}  // namespace conlab
