#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conlab {

/// A subset of carrier positions packed into a machine word; bit i holds
/// element i. All tables in this library are indexed by such masks.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool contains(Mask s, int i) { return (s >> i) & 1u; }
inline Mask singleton(int i) { return Mask{1} << i; }

/// Visits every subset of `s`, including the empty set and `s` itself.
template <typename F>
void for_each_subset(Mask s, F&& f) {
  Mask t = s;
  while (true) {
    f(t);
    if (t == 0) break;
    t = (t - 1) & s;
  }
}

/// Raised when an operation's type precondition fails (e.g. a construction
/// that needs a monotonic operator is handed a non-monotonic one).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised on malformed input documents.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite, ordered universe of named elements. Masks index into it.
class Carrier {
 public:
  static constexpr int kDefaultCap = 16;

  explicit Carrier(std::vector<std::string> labels, int cap = kDefaultCap);

  /// Carrier with labels "a", "b", ... ("e10", "e11", ... past 'z' - 'a').
  static Carrier make(int n, int cap = kDefaultCap);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return size() == 0 ? 0 : (Mask{2} << (size() - 1)) - 1; }
  Mask subset_count() const { return Mask{1} << size(); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  bool operator==(const Carrier& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

/// A total map from subsets of the carrier to subsets, stored as an explicit
/// table with 2^n entries. Immutable after construction.
class ConsequenceOperator {
 public:
  ConsequenceOperator(Carrier carrier, std::vector<Mask> table);

  const Carrier& carrier() const { return carrier_; }
  int size() const { return carrier_.size(); }
  Mask full() const { return carrier_.full(); }
  Mask apply(Mask premises) const { return table_[premises]; }
  const std::vector<Mask>& table() const { return table_; }

  bool operator==(const ConsequenceOperator& other) const {
    return carrier_ == other.carrier_ && table_ == other.table_;
  }

 private:
  Carrier carrier_;
  std::vector<Mask> table_;
};

/// The relation view of an operator: the set of (premise set, element) pairs.
struct EntailmentRelation {
  std::vector<std::pair<Mask, int>> pairs;  // sorted, unique

  void insert(Mask premises, int element);
  bool contains(Mask premises, int element) const;
  bool operator==(const EntailmentRelation& other) const { return pairs == other.pairs; }
};

ConsequenceOperator operator_from_relation(const EntailmentRelation& rel, const Carrier& carrier);
EntailmentRelation relation_from_operator(const ConsequenceOperator& op);

/// i-fold application; power(op, g, 0) == g.
Mask power(const ConsequenceOperator& op, Mask premises, int iterations);

/// Union of all iterates op^i(g), i >= 0. The iterate sequence over a finite
/// table is eventually periodic, so the union stabilises once a previously
/// seen iterate recurs; no iteration budget is involved.
Mask w_infinity(const ConsequenceOperator& op, Mask premises);

/// Table equality. Throws std::invalid_argument if the carriers differ.
bool operators_equal(const ConsequenceOperator& a, const ConsequenceOperator& b);

}  // namespace conlab
