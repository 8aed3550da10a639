#include "conlab/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace conlab {

Carrier::Carrier(std::vector<std::string> labels, int cap) : labels_(std::move(labels)) {
  if (cap < 0 || cap > 31) throw std::invalid_argument("carrier cap must be in [0, 31]");
  if (static_cast<int>(labels_.size()) > cap)
    throw std::invalid_argument("carrier exceeds cap of " + std::to_string(cap) + " elements");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate carrier label: " + l);
  }
}

Carrier Carrier::make(int n, int cap) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i < 26)
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      labels.push_back("e" + std::to_string(i));
  }
  return Carrier(std::move(labels), cap);
}

std::optional<int> Carrier::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

ConsequenceOperator::ConsequenceOperator(Carrier carrier, std::vector<Mask> table)
    : carrier_(std::move(carrier)), table_(std::move(table)) {
  if (table_.size() != carrier_.subset_count())
    throw std::invalid_argument("operator table must have exactly 2^n entries");
  const Mask full = carrier_.full();
  for (Mask value : table_)
    if (!subset_of(value, full)) throw std::invalid_argument("operator table entry is not a subset of the carrier");
}

void EntailmentRelation::insert(Mask premises, int element) {
  auto p = std::make_pair(premises, element);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) pairs.insert(it, p);
}

bool EntailmentRelation::contains(Mask premises, int element) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(premises, element));
}

ConsequenceOperator operator_from_relation(const EntailmentRelation& rel, const Carrier& carrier) {
  std::vector<Mask> table(carrier.subset_count(), 0);
  for (const auto& [premises, element] : rel.pairs) {
    if (!subset_of(premises, carrier.full()) || element < 0 || element >= carrier.size())
      throw std::invalid_argument("entailment pair references elements outside the carrier");
    table[premises] |= singleton(element);
  }
  return ConsequenceOperator(carrier, std::move(table));
}

EntailmentRelation relation_from_operator(const ConsequenceOperator& op) {
  EntailmentRelation rel;
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    for (int a = 0; a < op.size(); ++a)
      if (contains(op.apply(g), a)) rel.pairs.emplace_back(g, a);
  return rel;
}

Mask power(const ConsequenceOperator& op, Mask premises, int iterations) {
  if (iterations < 0) throw std::invalid_argument("power requires a nonnegative iteration count");
  Mask current = premises;
  for (int i = 0; i < iterations; ++i) current = op.apply(current);
  return current;
}

Mask w_infinity(const ConsequenceOperator& op, Mask premises) {
  std::vector<bool> seen(op.carrier().subset_count(), false);
  Mask current = premises;
  Mask acc = 0;
  while (!seen[current]) {
    seen[current] = true;
    acc |= current;
    current = op.apply(current);
  }
  return acc;
}

bool operators_equal(const ConsequenceOperator& a, const ConsequenceOperator& b) {
  if (!(a.carrier() == b.carrier())) throw std::invalid_argument("operators live on different carriers");
  return a.table() == b.table();
}

}  // namespace conlab
