#include <doctest.h>

#include <random>

#include "conlab/properties.hpp"
#include "conlab/semantics.hpp"
#include "helpers.hpp"

using namespace conlab;
using namespace conlab::testing;

namespace {

FunctionalSemantics random_functional(int n, int values, std::mt19937_64& rng,
                                      Mask designated1, Mask designated2) {
  FunctionalSemantics sem;
  sem.value_count = values;
  sem.designated = {designated1, designated2};
  sem.pairs = {{0, 1}};
  const int model_count = 1 + static_cast<int>(rng() % 6);
  for (int m = 0; m < model_count; ++m) {
    std::vector<int> valuation(n);
    for (int& v : valuation) v = static_cast<int>(rng() % values);
    sem.models.push_back(std::move(valuation));
  }
  return sem;
}

}  // namespace

TEST_CASE("canonical semantics is adequate for arbitrary operators") {
  CHECK(operators_equal(induced_operator(canonical_semantics(identity_op(3)), Carrier::make(3)),
                        identity_op(3)));
  CHECK(operators_equal(induced_operator(canonical_semantics(constant_op(3, 0)), Carrier::make(3)),
                        constant_op(3, 0)));
  CHECK(operators_equal(induced_operator(canonical_semantics(cm_witness_op()), Carrier::make(2)),
                        cm_witness_op()));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    ConsequenceOperator op = random_op(1 + trial % 4, rng);
    CHECK(operators_equal(induced_operator(canonical_semantics(op), op.carrier()), op));
  }
}

TEST_CASE("empty model set induces the constant-full operator") {
  GenericSemantics sem;
  sem.n = 3;
  sem.model_count = 0;
  sem.relations.assign(1, SatTable(0, 3));
  sem.pairs = {{0, 0}};
  for (Mask value : induced_table(sem)) CHECK(value == 0b111);
}

TEST_CASE("a model satisfying everything induces the constant-full operator") {
  GenericSemantics sem;
  sem.n = 2;
  sem.model_count = 1;
  sem.relations.assign(2, SatTable(1, 2));
  for (int i = 0; i < 2; ++i)
    for (Mask g = 0; g < 4; ++g) sem.relations[i].set(0, g, true);
  sem.pairs = {{0, 1}};
  for (Mask value : induced_table(sem)) CHECK(value == 0b11);
}

TEST_CASE("granularity") {
  std::mt19937_64 rng(29);
  FunctionalSemantics fsem = random_functional(3, 3, rng, 0b010, 0b110);
  CHECK(granularity(functional_to_generic(fsem)).strong);

  GranularityReport canonical = granularity(canonical_semantics(identity_op(2)));
  CHECK_FALSE(canonical.per_index[0]);  // equality fails on two-element sets
  CHECK_FALSE(canonical.strong);

  GenericSemantics all_full;
  all_full.n = 2;
  all_full.model_count = 2;
  all_full.relations.assign(2, SatTable(2, 2));
  for (int i = 0; i < 2; ++i)
    for (int m = 0; m < 2; ++m)
      for (Mask g = 0; g < 4; ++g) all_full.relations[i].set(m, g, true);
  all_full.pairs = {{0, 1}};
  CHECK(granularity(all_full).strong);
}

TEST_CASE("functional invariants") {
  FunctionalSemantics bad;
  bad.value_count = 2;
  bad.models = {{1, 1}};
  bad.designated = {0b01, 0b10};  // union covers the whole value set
  bad.pairs = {{0, 1}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad.designated = {0b00, 0b10};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad.designated = {0b10, 0b10};
  bad.models.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("constant-one bivaluation induces the constant-full operator") {
  FunctionalSemantics sem;
  sem.value_count = 2;
  sem.models = {{1, 1}};
  sem.designated = {0b10, 0b10};
  sem.pairs = {{0, 1}};
  ConsequenceOperator op = induced_operator(sem, Carrier::make(2));
  CHECK(operators_equal(op, constant_op(2, 0b11)));
}

TEST_CASE("functional fast path agrees with the generic evaluation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    FunctionalSemantics fsem = trial % 2 == 0 ? random_functional(n, 3, rng, 0b110, 0b010)
                                              : random_functional(n, 4, rng, 0b0110, 0b1010);
    CHECK(induced_table(fsem) == induced_table(functional_to_generic(fsem)));
  }
}

TEST_CASE("functional semantics induce monotone operators") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    FunctionalSemantics fsem = random_functional(1 + trial % 4, 3, rng, 0b010, 0b100);
    CHECK(classify(induced_operator(fsem, Carrier::make(fsem.n()))).monotonic);
  }
}

TEST_CASE("bivalent semantics for closure operators") {
  ConsequenceOperator id2 = identity_op(2);
  GenericSemantics sem = tarski_bivalent(id2);
  CHECK(operators_equal(induced_operator(sem, id2.carrier()), id2));

  ConsequenceOperator full3 = constant_op(3, 0b111);
  GenericSemantics full_sem = tarski_bivalent(full3);
  CHECK(full_sem.model_count == 1);
  CHECK(operators_equal(induced_operator(full_sem, full3.carrier()), full3));

  CHECK_THROWS_AS(tarski_bivalent(constant_op(2, 0)), PreconditionError);
}
