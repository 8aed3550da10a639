#include "conlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "conlab/semantics.hpp"

namespace conlab {

namespace {

ConsequenceOperator from_function(const Carrier& carrier, Mask (*f)(Mask, Mask)) {
  std::vector<Mask> table(carrier.subset_count());
  for (Mask g = 0; g < carrier.subset_count(); ++g) table[g] = f(g, carrier.full());
  return ConsequenceOperator(carrier, std::move(table));
}

// Image of a premise set under a position permutation; empty maps to empty.
ConsequenceOperator image_operator(const Carrier& carrier, const std::vector<int>& permutation) {
  std::vector<Mask> table(carrier.subset_count(), 0);
  for (Mask g = 1; g < carrier.subset_count(); ++g) {
    Mask image = 0;
    for (int p = 0; p < carrier.size(); ++p)
      if (contains(g, p)) image |= singleton(permutation[p]);
    table[g] = image;
  }
  return ConsequenceOperator(carrier, std::move(table));
}

GeneratedStructure pair_swap(int size) {
  if (size == 2) {
    Carrier carrier = Carrier::make(2);
    GeneratedStructure out{image_operator(carrier, {1, 0}), FamilyK::of({singleton(0)}), 1};
    return out;
  }
  const int grid = static_cast<int>(std::lround(std::sqrt(size)));
  if (grid < 2 || grid * grid != size)
    throw std::invalid_argument("pair_swap size must be 2 or a perfect square >= 4");
  // carrier element (i, j), 1-based, at position (i-1)*grid + (j-1)
  std::vector<std::string> labels;
  std::vector<int> permutation(size);
  for (int i = 1; i <= grid; ++i)
    for (int j = 1; j <= grid; ++j) {
      labels.push_back("p" + std::to_string(i) + std::to_string(j));
      permutation[(i - 1) * grid + (j - 1)] = (j - 1) * grid + (i - 1);
    }
  Carrier carrier(std::move(labels));
  // off-diagonal anchors (1,2), (3,4), ... are disjoint from their swaps
  Mask anchors = 0;
  for (int k = 1; k + 1 <= grid; k += 2) anchors |= singleton((k - 1) * grid + (k + 1 - 1));
  std::vector<Mask> members;
  for_each_subset(anchors, [&](Mask m) {
    if (m != 0) members.push_back(m);
  });
  return {image_operator(carrier, permutation), FamilyK::of(std::move(members)), 1};
}

GeneratedStructure pair_swap_fixed(int size) {
  if (size < 3 || size % 2 == 0)
    throw std::invalid_argument("pair_swap_fixed needs an odd size >= 3");
  std::vector<int> permutation(size);
  for (int p = 0; p + 1 < size; p += 2) {
    permutation[p] = p + 1;
    permutation[p + 1] = p;
  }
  permutation[size - 1] = size - 1;
  Carrier carrier = Carrier::make(size);
  return {image_operator(carrier, permutation), FamilyK::of({singleton(0)}), 1};
}

GeneratedStructure partition_s(int size, int threshold) {
  if (size < 2 || size % 2 != 0) throw std::invalid_argument("partition_s needs an even size >= 2");
  const int half = size / 2;
  if (threshold < 1 || threshold > half)
    throw std::invalid_argument("partition_s threshold must lie in [1, size/2]");
  std::vector<int> permutation(size);
  for (int p = 0; p < half; ++p) {
    permutation[p] = p + half;
    permutation[p + half] = p;
  }
  Carrier carrier = Carrier::make(size);
  std::vector<Mask> table(carrier.subset_count(), 0);
  for (Mask g = 0; g < carrier.subset_count(); ++g) {
    if (popcount(g) < threshold) continue;
    Mask image = 0;
    for (int p = 0; p < size; ++p)
      if (contains(g, p)) image |= singleton(permutation[p]);
    table[g] = image;
  }
  const Mask x_half = (Mask{1} << half) - 1;
  const Mask y_half = carrier.full() & ~x_half;
  std::vector<Mask> members;
  for (Mask g = 1; g < carrier.subset_count(); ++g)
    if (popcount(g) >= threshold && (subset_of(g, x_half) || subset_of(g, y_half)))
      members.push_back(g);
  return {ConsequenceOperator(carrier, std::move(table)), FamilyK::of(std::move(members)), threshold};
}

GeneratedStructure r_example(int size, int threshold, int pivot) {
  if (size < 1) throw std::invalid_argument("r_example needs a nonempty carrier");
  if (pivot < 0 || pivot >= size) throw std::invalid_argument("r_example pivot out of range");
  if (threshold < 2 || threshold > size)
    throw std::invalid_argument("r_example threshold must lie in [2, size]");
  Carrier carrier = Carrier::make(size);
  std::vector<Mask> table(carrier.subset_count());
  for (Mask g = 0; g < carrier.subset_count(); ++g)
    table[g] = popcount(g) < threshold ? singleton(pivot) : (g | singleton(pivot));
  return {ConsequenceOperator(carrier, std::move(table)), std::nullopt, threshold};
}

ConsequenceOperator table_operator(int n, std::vector<Mask> table) {
  return ConsequenceOperator(Carrier::make(n), std::move(table));
}

}  // namespace

GeneratedStructure gen_named(const GeneratorSpec& spec) {
  if (spec.family == "identity")
    return {from_function(Carrier::make(spec.size), [](Mask g, Mask) { return g; }), std::nullopt,
            std::nullopt};
  if (spec.family == "constant_empty")
    return {from_function(Carrier::make(spec.size), [](Mask, Mask) { return Mask{0}; }), std::nullopt,
            std::nullopt};
  if (spec.family == "constant_full")
    return {from_function(Carrier::make(spec.size), [](Mask, Mask full) { return full; }), std::nullopt,
            std::nullopt};
  if (spec.family == "pair_swap") return pair_swap(spec.size);
  if (spec.family == "pair_swap_fixed") return pair_swap_fixed(spec.size);
  if (spec.family == "partition_s") return partition_s(spec.size, spec.kappa);
  if (spec.family == "r_example") return r_example(spec.size, spec.kappa, spec.pivot);
  if (spec.family == "cm_witness") {
    if (spec.size != 0 && spec.size != 2) throw std::invalid_argument("cm_witness has size 2");
    return {table_operator(2, {0b01, 0b01, 0b00, 0b00}), std::nullopt, std::nullopt};
  }
  if (spec.family == "wct_witness") {
    if (spec.size != 0 && spec.size != 2) throw std::invalid_argument("wct_witness has size 2");
    return {table_operator(2, {0b01, 0b01, 0b11, 0b01}), std::nullopt, std::nullopt};
  }
  throw std::invalid_argument("unknown generator family: " + spec.family);
}

ConsequenceOperator gen_random_monotone(int n, std::uint64_t seed) {
  Carrier carrier = Carrier::make(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Mask> dist(0, carrier.full());
  std::vector<Mask> table(carrier.subset_count());
  for (Mask g = 0; g < carrier.subset_count(); ++g) table[g] = n == 0 ? 0 : dist(rng);
  // collect outputs upward through the subset lattice
  for (int b = 0; b < n; ++b)
    for (Mask g = 0; g < carrier.subset_count(); ++g)
      if (contains(g, b)) table[g] |= table[g ^ singleton(b)];
  return ConsequenceOperator(carrier, std::move(table));
}

ConsequenceOperator gen_random_typed(RandomKind kind, int n, std::uint64_t seed) {
  Carrier carrier = Carrier::make(n);
  std::mt19937_64 rng(seed);
  FunctionalSemantics sem;
  sem.value_count = 3;
  sem.designated = kind == RandomKind::q ? std::vector<Mask>{0b110, 0b010}
                                         : std::vector<Mask>{0b010, 0b110};
  sem.pairs = {{0, 1}};
  const int model_count = 1 + static_cast<int>(rng() % std::max<std::uint64_t>(1, Mask{1} << std::min(n, 4)));
  std::uniform_int_distribution<int> value(0, 2);
  for (int m = 0; m < model_count; ++m) {
    std::vector<int> valuation(n);
    for (int& v : valuation) v = value(rng);
    sem.models.push_back(std::move(valuation));
  }
  return induced_operator(sem, carrier);
}

ConsequenceOperator gen_random_tarski(int n, std::uint64_t seed) {
  Carrier carrier = Carrier::make(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Mask> dist(0, carrier.full());
  std::vector<Mask> closed{carrier.full()};
  const int picks = 1 + static_cast<int>(rng() % (n + 2));
  for (int i = 0; i < picks; ++i) closed.push_back(n == 0 ? 0 : dist(rng));
  // each premise set maps to the intersection of the closed sets above it
  std::vector<Mask> table(carrier.subset_count());
  for (Mask g = 0; g < carrier.subset_count(); ++g) {
    Mask meet = carrier.full();
    for (Mask c : closed)
      if (subset_of(g, c)) meet &= c;
    table[g] = meet;
  }
  return ConsequenceOperator(carrier, std::move(table));
}

}  // namespace conlab
