#include <doctest.h>

#include <random>

#include "conlab/core.hpp"
#include "helpers.hpp"

using namespace conlab;
using namespace conlab::testing;

TEST_CASE("carrier invariants") {
  CHECK_THROWS_AS(Carrier({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Carrier(std::vector<std::string>(17, "x")), std::invalid_argument);
  Carrier c = Carrier::make(3);
  CHECK(c.full() == 0b111);
  CHECK(c.label(2) == "c");
  CHECK(c.index_of("b") == 1);
  CHECK_FALSE(c.index_of("z").has_value());
  CHECK(Carrier::make(0).full() == 0);
}

TEST_CASE("operator table invariants") {
  CHECK_THROWS_AS(op_from_table(2, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(op_from_table(1, {0b10, 0}), std::invalid_argument);
}

TEST_CASE("operator from relation, single element") {
  Carrier c = Carrier::make(1);
  EntailmentRelation rel;
  rel.insert(0b1, 0);
  ConsequenceOperator op = operator_from_relation(rel, c);
  CHECK(op.apply(0b1) == 0b1);
  CHECK(op.apply(0b0) == 0b0);

  ConsequenceOperator empty = operator_from_relation(EntailmentRelation{}, c);
  CHECK(empty.apply(0) == 0);
  CHECK(empty.apply(1) == 0);
}

TEST_CASE("relation from operator") {
  EntailmentRelation rel = relation_from_operator(identity_op(2));
  EntailmentRelation expected;
  expected.insert(0b01, 0);
  expected.insert(0b10, 1);
  expected.insert(0b11, 0);
  expected.insert(0b11, 1);
  CHECK(rel == expected);

  EntailmentRelation all = relation_from_operator(constant_op(2, 0b11));
  CHECK(all.pairs.size() == 4 * 2);
}

TEST_CASE("relation round trips are exhaustive inverses on n=3") {
  std::mt19937_64 rng(7);
  Carrier c = Carrier::make(3);
  for (int trial = 0; trial < 50; ++trial) {
    EntailmentRelation rel;
    for (Mask g = 0; g < c.subset_count(); ++g)
      for (int a = 0; a < 3; ++a)
        if (rng() & 1) rel.insert(g, a);
    CHECK(relation_from_operator(operator_from_relation(rel, c)) == rel);

    ConsequenceOperator op = random_op(3, rng);
    CHECK(operators_equal(operator_from_relation(relation_from_operator(op), op.carrier()), op));
  }
}

TEST_CASE("power") {
  ConsequenceOperator swap = swap2_op();
  CHECK(power(swap, 0b01, 0) == 0b01);
  CHECK(power(swap, 0b01, 1) == 0b10);
  CHECK(power(swap, 0b01, 2) == 0b01);
  CHECK(power(constant_op(2, 0), 0b11, 3) == 0);
  CHECK_THROWS_AS(power(swap, 0b01, -1), std::invalid_argument);
}

TEST_CASE("w_infinity") {
  CHECK(w_infinity(identity_op(3), 0b101) == 0b101);
  CHECK(w_infinity(swap2_op(), 0b01) == 0b11);
  CHECK(w_infinity(constant_op(2, 0), 0b10) == 0b10);
}

TEST_CASE("iterate properties on random operators") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    ConsequenceOperator op = random_op(3, rng);
    for (Mask g = 0; g < op.carrier().subset_count(); ++g) {
      const Mask closure = w_infinity(op, g);
      CHECK(subset_of(g, closure));
      for (int i = 0; i <= 8; ++i) {
        CHECK(subset_of(power(op, g, i), closure));
        CHECK(power(op, g, i + 1) == op.apply(power(op, g, i)));
      }
    }
  }
}

TEST_CASE("operators_equal") {
  CHECK(operators_equal(identity_op(2), identity_op(2)));
  CHECK_FALSE(operators_equal(identity_op(2), constant_op(2, 0)));
  CHECK_THROWS_AS(operators_equal(identity_op(2), identity_op(3)), std::invalid_argument);
}
