#include <doctest.h>

#include <random>

#include "conlab/generators.hpp"
#include "conlab/representations.hpp"
#include "conlab/suszko.hpp"
#include "helpers.hpp"

using namespace conlab;
using namespace conlab::testing;

namespace {

SSemantics random_normal(int n, std::mt19937_64& rng) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> points;
  const int count = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < count; ++i) points.push_back(static_cast<Mask>(rng()) & full);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::pair<Mask, Mask>> rel;
  for (Mask v : points)
    for (Mask w : points)
      if (rng() % 3 == 0) rel.emplace_back(v, w);
  return SSemantics::normal(n, points, rel);
}

}  // namespace

TEST_CASE("type-1 entailment basics") {
  SSemantics empty;
  empty.n = 2;
  empty.sat = SatTable(0, 2);
  for (Mask value : type1_table(empty)) CHECK(value == 0b11);

  SSemantics isolated = SSemantics::normal(2, {0b01, 0b10}, {});
  for (Mask value : type1_table(isolated)) CHECK(value == 0b11);

  ConsequenceOperator id3 = identity_op(3);
  CHECK(operators_equal(type1_operator(build_s_mon(id3), id3.carrier()), id3));
}

TEST_CASE("type-2 entailment reproduces the reference on the witnesses") {
  ConsequenceOperator cm = cm_witness_op();
  CHECK(operators_equal(type2_operator(build_s_cm(cm), cm), cm));

  ConsequenceOperator wct = wct_witness_op();
  CHECK(operators_equal(type2_operator(build_s_wct(wct), wct), wct));

  // the reduced evaluation matches the literal subset enumeration
  std::mt19937_64 rng(67);
  std::vector<ConsequenceOperator> ops{cm, wct, identity_op(2), constant_op(2, 0)};
  for (std::uint64_t seed = 0; seed < 4; ++seed) ops.push_back(gen_random_monotone(2, seed));
  for (const ConsequenceOperator& op : ops) {
    for (const SSemantics& sem : {build_s_cm(op), build_s_wct(op)}) {
      REQUIRE(sem.relation.size() <= 12);
      CHECK(operators_equal(type2_operator(sem, op), type2_operator_literal(sem, op)));
    }
  }
  (void)rng;
}

TEST_CASE("type-2 without the mandatory pair yields nothing") {
  ConsequenceOperator id2 = identity_op(2);
  // relation covers only the empty premise set
  SSemantics sem = SSemantics::normal(2, {}, {{0b00, 0b00}});
  std::vector<Mask> missing;
  ConsequenceOperator result = type2_operator(sem, id2, &missing);
  CHECK(result.apply(0b00) == 0b00);
  CHECK(result.apply(0b01) == 0b00);
  CHECK(missing.size() == 3);
  CHECK(operators_equal(result, type2_operator_literal(sem, id2)));
}

TEST_CASE("type-2 adequacy does not need the cumulative conditions") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    ConsequenceOperator op = random_op(2, rng);  // arbitrary, mostly wildly non-monotone
    CHECK(operators_equal(type2_operator(build_s_cm(op), op), op));
    CHECK(operators_equal(type2_operator(build_s_wct(op), op), op));
  }
}

TEST_CASE("atomicity and normalization") {
  SSemantics normal = build_s_mon(identity_op(2));
  CHECK(is_atomic(normal));
  CHECK(normal.is_normal());

  SSemantics canonical_points = s_from_semantics(canonical_semantics(identity_op(2)));
  CHECK_FALSE(is_atomic(canonical_points));  // equality-based satisfaction
  CHECK_THROWS_AS(normalize(canonical_points), PreconditionError);

  // atomic but tag-only points: satisfaction built from masks without storing them
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    SSemantics source = random_normal(n, rng);
    SSemantics stripped = source;
    for (auto& p : stripped.points) p.reset();
    CHECK(is_atomic(stripped));
    CHECK_FALSE(stripped.is_normal());
    SSemantics rebuilt = normalize(stripped);
    CHECK(rebuilt.is_normal());
    CHECK(type1_table(rebuilt) == type1_table(source));
  }
}

TEST_CASE("points from a semantics preserve the induced operator") {
  ConsequenceOperator cm = cm_witness_op();
  SSemantics from_canonical = s_from_semantics(canonical_semantics(cm));
  CHECK(operators_equal(type1_operator(from_canonical, cm.carrier()), cm));

  GenericSemantics empty;
  empty.n = 2;
  empty.model_count = 0;
  empty.relations.assign(1, SatTable(0, 2));
  empty.pairs = {{0, 0}};
  SSemantics from_empty = s_from_semantics(empty);
  CHECK(from_empty.point_count() == 0);
  for (Mask value : type1_table(from_empty)) CHECK(value == 0b11);

  ConsequenceOperator empty3 = constant_op(3, 0);
  SSemantics from_q3 = s_from_semantics(functional_to_generic(build_q3(empty3)));
  CHECK(operators_equal(type1_operator(from_q3, empty3.carrier()), empty3));
}

TEST_CASE("a semantics from points preserves the operator") {
  SSemantics mon = build_s_mon(identity_op(2));
  GenericSemantics back = semantics_from_s(mon);
  CHECK(induced_table(back) == type1_table(mon));

  SSemantics none;
  none.n = 2;
  none.sat = SatTable(0, 2);
  GenericSemantics from_none = semantics_from_s(none);
  CHECK(from_none.model_count == 0);
  for (Mask value : induced_table(from_none)) CHECK(value == 0b11);

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    SSemantics sem = random_normal(2, rng);
    SSemantics twice = s_from_semantics(semantics_from_s(sem));
    CHECK(type1_table(twice) == type1_table(sem));
  }
}

TEST_CASE("typed point constructions are adequate") {
  ConsequenceOperator empty3 = constant_op(3, 0);
  CHECK(operators_equal(type1_operator(build_s_q(empty3), empty3.carrier()), empty3));
  CHECK(operators_equal(type1_operator(build_s_p(identity_op(3)), Carrier::make(3)), identity_op(3)));
  CHECK(operators_equal(type1_operator(build_s_mon(constant_op(3, 0)), Carrier::make(3)),
                        constant_op(3, 0)));

  CHECK_THROWS_AS(build_s_mon(cm_witness_op()), PreconditionError);
  CHECK_THROWS_AS(build_s_q(gen_named({"r_example", 4, 2, 0, 0}).op), PreconditionError);
  CHECK_THROWS_AS(build_s_p(constant_op(2, 0)), PreconditionError);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ConsequenceOperator mono = gen_random_monotone(4, seed);
    CHECK(operators_equal(type1_operator(build_s_mon(mono), mono.carrier()), mono));
    ConsequenceOperator q = gen_random_typed(RandomKind::q, 4, seed);
    CHECK(operators_equal(type1_operator(build_s_q(q), q.carrier()), q));
    ConsequenceOperator p = gen_random_typed(RandomKind::p, 4, seed);
    CHECK(operators_equal(type1_operator(build_s_p(p), p.carrier()), p));
  }
}

TEST_CASE("family point construction") {
  GeneratedStructure swap_fixed = gen_named({"pair_swap_fixed", 3, 0, 0, 0});
  SSBuildResult result = build_s_s(swap_fixed.op, *swap_fixed.family, *swap_fixed.kappa);
  CHECK(result.verdict.adequate);  // every premise set falls to the plain branch here

  SSBuildResult empty = build_s_s(constant_op(3, 0), FamilyK::of({0b001}), 1);
  CHECK(empty.verdict.adequate);

  SSBuildResult swap = build_s_s(swap2_op(), FamilyK::of({0b01}), 1);
  CHECK(swap.verdict.adequate);

  CHECK_THROWS_AS(build_s_s(identity_op(2), FamilyK::of({0b01}), 1), PreconditionError);
}

TEST_CASE("point shape hypotheses") {
  ConsequenceOperator empty3 = constant_op(3, 0);
  CHECK(s_hypothesis_checks(build_s_q(empty3)).q_shape);
  CHECK(s_hypothesis_checks(build_s_p(identity_op(3))).p_shape);

  // a monotone operator whose plain construction has neither shape
  ConsequenceOperator pivot = constant_op(2, 0b01);
  SHypothesisReport mon_shape = s_hypothesis_checks(build_s_mon(pivot));
  CHECK_FALSE(mon_shape.q_shape);
  CHECK_FALSE(mon_shape.p_shape);

  SSBuildResult swap = build_s_s(swap2_op(), FamilyK::of({0b01}), 1);
  CHECK(*s_hypothesis_checks(swap.semantics, FamilyK::of({0b01})).s_condition);
}

TEST_CASE("point shapes force operator types") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    SSemantics sem = random_normal(n, rng);
    ConsequenceOperator induced = type1_operator(sem, Carrier::make(n));
    CHECK(classify(induced).monotonic);  // normal semantics only induce monotone operators
    SHypothesisReport shape = s_hypothesis_checks(sem);
    if (shape.q_shape) CHECK(classify(induced).q_type);
    if (shape.p_shape) CHECK(classify(induced).p_type);
    FamilyK family = FamilyK::of({singleton(static_cast<int>(rng() % n))});
    if (*s_hypothesis_checks(sem, family).s_condition) CHECK(check_s_type(induced, family, 1));
  }
}

TEST_CASE("atomic adequacy implies the finite subset bound") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    SSemantics sem = random_normal(1 + trial % 3, rng);
    ConsequenceOperator induced = type1_operator(sem, Carrier::make(sem.n));
    CHECK(finite_subset_bound(induced));
  }

  // an operator violating the bound is adequate only for non-atomic points
  ConsequenceOperator violator = op_from_table(1, {0b1, 0b0});
  CHECK_FALSE(finite_subset_bound(violator));
  SSemantics canonical_points = s_from_semantics(canonical_semantics(violator));
  CHECK(operators_equal(type1_operator(canonical_points, violator.carrier()), violator));
  CHECK_FALSE(is_atomic(canonical_points));
}

TEST_CASE("every operator is reachable through canonical points") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    ConsequenceOperator op = random_op(1 + trial % 4, rng);
    SSemantics sem = s_from_semantics(canonical_semantics(op));
    CHECK(operators_equal(type1_operator(sem, op.carrier()), op));
  }
}
