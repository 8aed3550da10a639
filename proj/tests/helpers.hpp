#pragma once

#include <random>

#include "conlab/core.hpp"

namespace conlab::testing {

inline ConsequenceOperator op_from_table(int n, std::vector<Mask> table) {
  return ConsequenceOperator(Carrier::make(n), std::move(table));
}

inline ConsequenceOperator identity_op(int n) {
  Carrier carrier = Carrier::make(n);
  std::vector<Mask> table(carrier.subset_count());
  for (Mask g = 0; g < carrier.subset_count(); ++g) table[g] = g;
  return ConsequenceOperator(carrier, std::move(table));
}

inline ConsequenceOperator constant_op(int n, Mask value) {
  Carrier carrier = Carrier::make(n);
  return ConsequenceOperator(carrier, std::vector<Mask>(carrier.subset_count(), value));
}

inline ConsequenceOperator random_op(int n, std::mt19937_64& rng) {
  Carrier carrier = Carrier::make(n);
  std::uniform_int_distribution<Mask> dist(0, carrier.full());
  std::vector<Mask> table(carrier.subset_count());
  for (auto& entry : table) entry = n == 0 ? 0 : dist(rng);
  return ConsequenceOperator(carrier, std::move(table));
}

// W({p}) = {q}, W({q}) = {p}, W({p,q}) = {p,q}, W({}) = {}
inline ConsequenceOperator swap2_op() { return op_from_table(2, {0b00, 0b10, 0b01, 0b11}); }

// Cautiously monotonic but not monotonic.
inline ConsequenceOperator cm_witness_op() { return op_from_table(2, {0b01, 0b01, 0b00, 0b00}); }

// Weakly cumulative transitive but not monotonic.
inline ConsequenceOperator wct_witness_op() { return op_from_table(2, {0b01, 0b01, 0b11, 0b01}); }

// Reflexive and monotonic, not idempotent: a forces b, b forces c.
inline ConsequenceOperator nonidempotent_p_op() {
  Carrier carrier = Carrier::make(3);
  std::vector<Mask> table(carrier.subset_count());
  for (Mask g = 0; g < carrier.subset_count(); ++g) {
    Mask out = g;
    if (contains(g, 0)) out |= singleton(1);
    if (contains(g, 1)) out |= singleton(2);
    table[g] = out;
  }
  return ConsequenceOperator(carrier, std::move(table));
}

}  // namespace conlab::testing
