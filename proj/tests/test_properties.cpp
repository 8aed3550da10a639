#include <doctest.h>

#include <random>

#include "conlab/generators.hpp"
#include "conlab/properties.hpp"
#include "helpers.hpp"

using namespace conlab;
using namespace conlab::testing;

namespace {

// literal all-pairs checks, independent of the library's loops
bool naive_monotonic(const ConsequenceOperator& op) {
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    for (Mask s = 0; s < op.carrier().subset_count(); ++s)
      if (subset_of(g, s) && !subset_of(op.apply(g), op.apply(s))) return false;
  return true;
}

bool naive_cm(const ConsequenceOperator& op, bool forward) {
  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    for (Mask s = 0; s < op.carrier().subset_count(); ++s) {
      if (!(subset_of(g, s) && subset_of(s, op.apply(g)))) continue;
      const Mask wg = op.apply(g);
      const Mask ws = op.apply(s);
      if (forward ? !subset_of(wg, ws) : !subset_of(ws, wg)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("classify identity and constants") {
  ClassificationReport id = classify(identity_op(3));
  CHECK(id.reflexive);
  CHECK(id.monotonic);
  CHECK(id.transitive);
  CHECK(id.tarski);
  CHECK(id.idempotent);
  CHECK(id.quasi_closed);
  CHECK(id.q_type);
  CHECK(id.p_type);
  CHECK(id.cm_type);
  CHECK(id.wct_type);
  CHECK_FALSE(id.anti_reflexive_global);

  ClassificationReport empty = classify(constant_op(3, 0));
  CHECK(empty.monotonic);
  CHECK(empty.quasi_closed);
  CHECK(empty.q_type);
  CHECK_FALSE(empty.reflexive);
  CHECK_FALSE(empty.p_type);
  CHECK(empty.anti_reflexive_global);
}

TEST_CASE("classify the cumulative witnesses") {
  ClassificationReport cm = classify(cm_witness_op());
  CHECK(cm.cm_type);
  CHECK_FALSE(cm.monotonic);

  ClassificationReport wct = classify(wct_witness_op());
  CHECK(wct.wct_type);
  CHECK_FALSE(wct.monotonic);
}

TEST_CASE("classification agrees with all-pairs evaluation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    ConsequenceOperator op = random_op(3, rng);
    ClassificationReport r = classify(op);
    CHECK(r.monotonic == naive_monotonic(op));
    CHECK(r.cm_type == naive_cm(op, true));
    CHECK(r.wct_type == naive_cm(op, false));
  }
}

TEST_CASE("downward q-closed sets") {
  for (Mask d = 0; d < 8; ++d) {
    CHECK(is_downward_q_closed(identity_op(3), d));
    CHECK(is_downward_q_closed(constant_op(3, 0), d));
  }
  GeneratedStructure r_ex = gen_named({"r_example", 4, 2, 0, 0});
  bool some_open = false;
  for (Mask d = 0; d < r_ex.op.carrier().subset_count(); ++d)
    if (!is_downward_q_closed(r_ex.op, d)) some_open = true;
  CHECK(some_open);
}

TEST_CASE("charq on fixed operators") {
  CharQReport empty = charq_equivalents(constant_op(3, 0));
  CHECK(empty.all_equal());
  CHECK(empty.q_operator);

  CharQReport id = charq_equivalents(identity_op(3));
  CHECK(id.all_equal());
  CHECK(id.q_operator);

  CharQReport r_ex = charq_equivalents(gen_named({"r_example", 4, 2, 0, 0}).op);
  CHECK(r_ex.all_equal());
  CHECK_FALSE(r_ex.q_operator);
}

TEST_CASE("charq conditions agree on random and typed operators") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    CHECK(charq_equivalents(random_op(1 + trial % 4, rng)).all_equal());
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(charq_equivalents(gen_random_typed(RandomKind::q, 4, seed)).all_equal());
    CHECK(charq_equivalents(gen_random_monotone(4, seed)).all_equal());
  }
}

TEST_CASE("internally kappa") {
  CHECK(check_internally_kappa(FamilyK::of({0b01}), 1));
  CHECK_FALSE(check_internally_kappa(FamilyK::of({0b11}), 1));
  CHECK_FALSE(check_internally_kappa(FamilyK{}, 1));
  CHECK_FALSE(check_internally_kappa(FamilyK{}, 0));
}

TEST_CASE("s-type check") {
  CHECK(check_s_type(swap2_op(), FamilyK::of({0b01}), 1));
  CHECK(check_s_type(constant_op(3, 0), FamilyK::of({0b001, 0b011}), 1));
  CHECK_FALSE(check_s_type(identity_op(3), FamilyK::of({0b001}), 1));
}

TEST_CASE("r-type check") {
  GeneratedStructure r_ex = gen_named({"r_example", 4, 2, 0, 0});
  CHECK(check_r_type(r_ex.op, 2));
  CHECK_FALSE(check_r_type(r_ex.op, 1));
  CHECK_FALSE(check_r_type(identity_op(3), 2));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial)
    CHECK_FALSE(check_r_type(random_op(3, rng), 1));
}

TEST_CASE("global anti-reflexivity and its monotone collapse") {
  CHECK(check_anti_reflexive_global(constant_op(3, 0)));
  CHECK_FALSE(check_anti_reflexive_global(identity_op(1)));
  CHECK_FALSE(check_anti_reflexive_global(swap2_op()));  // full set maps to itself

  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ConsequenceOperator op = gen_random_monotone(3, seed);
    bool empty_on_nonempty = true;
    for (Mask g = 1; g < op.carrier().subset_count(); ++g)
      if (op.apply(g) != 0) empty_on_nonempty = false;
    CHECK(check_anti_reflexive_global(op) == empty_on_nonempty);
  }
  (void)rng;
}

TEST_CASE("finite subset bound") {
  CHECK(finite_subset_bound(gen_random_monotone(4, 21)));
  CHECK(finite_subset_bound(constant_op(3, 0b111)));
  CHECK_FALSE(finite_subset_bound(op_from_table(1, {0b1, 0b0})));
}

TEST_CASE("complement properties of s-type operators") {
  RPropReport empty = r_prop_checks(constant_op(3, 0), FamilyK::of({0b001}), 1);
  CHECK(empty.all());

  RPropReport swap = r_prop_checks(swap2_op(), FamilyK::of({0b01}), 1);
  CHECK(swap.all());

  CHECK_THROWS_AS(r_prop_checks(identity_op(2), FamilyK::of({0b01}), 1), PreconditionError);
}

TEST_CASE("every non-reflexive monotone operator is s-type on a singleton") {
  std::mt19937_64 rng(17);
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    ConsequenceOperator op = gen_random_monotone(3, seed);
    if (classify(op).reflexive) continue;
    ++seen;
    auto witness = s1_witness(op);
    REQUIRE(witness.has_value());
    CHECK(check_s_type(op, FamilyK::of({singleton(*witness)}), 1));
  }
  CHECK(seen > 0);
  (void)rng;
}

TEST_CASE("p-type matches its two-sided characterisation") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    ConsequenceOperator op = trial % 3 == 0 ? gen_random_monotone(3, trial) : random_op(3, rng);
    bool characterised = true;
    for (Mask g = 0; g < op.carrier().subset_count() && characterised; ++g)
      for (Mask s = 0; s < op.carrier().subset_count(); ++s)
        if (subset_of(g, s) && !subset_of(g | op.apply(g), op.apply(s))) {
          characterised = false;
          break;
        }
    CHECK(classify(op).p_type == characterised);
  }
}
