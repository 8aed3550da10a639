#include "conlab/hierarchy.hpp"

#include <algorithm>

namespace conlab {

namespace {

bool fail(std::string* why, std::string message) {
  if (why) *why = std::move(message);
  return false;
}

// Per-level translation data: which base elements the injection covers, and
// the inverse map from base positions to level positions.
struct Translation {
  Mask image = 0;
  std::vector<int> level_position;  // indexed by base position; -1 off range

  Mask apply(Mask base_set) const {
    Mask out = 0;
    for (int p = 0; p < static_cast<int>(level_position.size()); ++p)
      if (contains(base_set, p) && level_position[p] >= 0) out |= singleton(level_position[p]);
    return out;
  }
};

Translation translation_for(const OrderedFamily& family, int level) {
  const int base_size = family.levels[0].carrier_size;
  Translation tr;
  tr.level_position.assign(base_size, -1);
  if (level == 0) {
    tr.image = family.levels[0].carrier_size == 0 ? 0 : (Mask{2} << (base_size - 1)) - 1;
    for (int p = 0; p < base_size; ++p) tr.level_position[p] = p;
    return tr;
  }
  const auto it = family.injections.find({0, level});
  if (it == family.injections.end())
    throw PreconditionError("level " + std::to_string(level) + " has no injection into the base");
  for (int upper_pos = 0; upper_pos < static_cast<int>(it->second.size()); ++upper_pos) {
    const int base_pos = it->second[upper_pos];
    tr.image |= singleton(base_pos);
    tr.level_position[base_pos] = upper_pos;
  }
  return tr;
}

}  // namespace

bool validate_family(const OrderedFamily& family, int kappa, std::string* why) {
  if (family.levels.empty()) return fail(why, "family has no levels");
  bool exact = false;
  for (std::size_t i = 0; i < family.levels.size(); ++i) {
    const auto& level = family.levels[i];
    const std::string at = "level " + std::to_string(i);
    if (level.carrier_size < 0 || level.carrier_size > 16)
      return fail(why, at + ": carrier size out of range");
    if (level.model_count < 0) return fail(why, at + ": negative model count");
    if (level.value_count < 1) return fail(why, at + ": empty value set");
    if (level.value_count < kappa) return fail(why, at + ": value set smaller than kappa");
    if (level.value_count == kappa) exact = true;
    if (static_cast<int>(level.values.size()) != level.model_count)
      return fail(why, at + ": one valuation row per model required");
    for (const auto& row : level.values) {
      if (row.size() != (std::size_t{1} << level.carrier_size))
        return fail(why, at + ": valuation must cover every premise set");
      for (int v : row)
        if (v < 0 || v >= level.value_count) return fail(why, at + ": valuation value out of range");
    }
  }
  if (!exact) return fail(why, "no level has a value set of size exactly kappa");

  for (std::size_t lower = 0; lower < family.levels.size(); ++lower)
    for (std::size_t upper = lower + 1; upper < family.levels.size(); ++upper) {
      const auto key = std::make_pair(static_cast<int>(lower), static_cast<int>(upper));
      const auto it = family.injections.find(key);
      const std::string at =
          "injection (" + std::to_string(lower) + ", " + std::to_string(upper) + ")";
      if (it == family.injections.end()) return fail(why, at + ": missing");
      const auto& map = it->second;
      if (static_cast<int>(map.size()) != family.levels[upper].carrier_size)
        return fail(why, at + ": must map every element of the upper carrier");
      std::vector<bool> hit(family.levels[lower].carrier_size, false);
      for (int target : map) {
        if (target < 0 || target >= family.levels[lower].carrier_size)
          return fail(why, at + ": target out of range");
        if (hit[target]) return fail(why, at + ": not injective");
        hit[target] = true;
      }
    }

  if (family.pairs.empty()) return fail(why, "steering pair set is empty");
  for (const auto& [from, to] : family.pairs) {
    for (const LevelValue& ref : {from, to}) {
      if (ref.level < 0 || ref.level >= static_cast<int>(family.levels.size()))
        return fail(why, "steering pair references an unknown level");
      if (ref.value < 0 || ref.value >= family.levels[ref.level].value_count)
        return fail(why, "steering pair references an unknown value");
    }
  }
  return true;
}

EntailmentRelation induced_entailment_order(const OrderedFamily& family, int kappa) {
  std::string why;
  if (!validate_family(family, kappa, &why)) throw PreconditionError("invalid family: " + why);

  const int base_size = family.levels[0].carrier_size;
  const Mask count = Mask{1} << base_size;

  std::vector<std::optional<Translation>> translations(family.levels.size());
  auto translated = [&](int level, Mask base_set) {
    if (!translations[level]) translations[level] = translation_for(family, level);
    const Translation& tr = *translations[level];
    if (!subset_of(base_set, tr.image))
      throw PreconditionError("premise set not translatable to level " + std::to_string(level));
    return tr.apply(base_set);
  };

  EntailmentRelation rel;
  for (Mask g = 0; g < count; ++g)
    for (int a = 0; a < base_size; ++a) {
      bool holds = true;
      for (const auto& [from, to] : family.pairs) {
        const Mask g_from = translated(from.level, g);
        const Mask a_to = translated(to.level, singleton(a));
        const auto& from_level = family.levels[from.level];
        const auto& to_level = family.levels[to.level];
        for (int mi = 0; mi < from_level.model_count && holds; ++mi) {
          if (from_level.values[mi][g_from] != from.value) continue;
          for (int mj = 0; mj < to_level.model_count; ++mj)
            if (to_level.values[mj][a_to] != to.value) {
              holds = false;
              break;
            }
        }
        if (!holds) break;
      }
      if (holds) rel.pairs.emplace_back(g, a);
    }
  return rel;
}

OrderMinimalityReport order_minimality_search(const OrderedFamily& shape, int mu_max,
                                              const OrderSearchCaps& caps) {
  if (static_cast<int>(shape.levels.size()) > caps.max_lambda)
    throw std::invalid_argument("too many levels for the search caps");
  for (const auto& level : shape.levels)
    if (level.carrier_size > caps.max_level_size)
      throw std::invalid_argument("level carrier too large for the search caps");
  if (mu_max > caps.max_mu) throw std::invalid_argument("value bound above the search caps");

  int template_kappa = shape.levels.front().value_count;
  for (const auto& level : shape.levels) template_kappa = std::min(template_kappa, level.value_count);
  const EntailmentRelation target = induced_entailment_order(shape, template_kappa);

  OrderMinimalityReport report;
  for (int mu = 2; mu <= mu_max; ++mu) {
    // slots: every valuation cell of every level, then both values of every
    // steering pair; each slot ranges over [0, mu)
    long long slot_count = 0;
    for (const auto& level : shape.levels)
      slot_count += static_cast<long long>(level.model_count) << level.carrier_size;
    slot_count += 2 * static_cast<long long>(shape.pairs.size());

    long long combinations = 1;
    for (long long s = 0; s < slot_count; ++s) {
      combinations *= mu;
      if (combinations > caps.max_combinations)
        throw std::invalid_argument("search space exceeds the combination budget");
    }

    OrderedFamily candidate = shape;
    for (auto& level : candidate.levels) level.value_count = mu;

    std::vector<int> slots(slot_count, 0);
    bool found = false;
    while (true) {
      std::size_t cursor = 0;
      for (auto& level : candidate.levels)
        for (auto& row : level.values)
          for (auto& cell : row) cell = slots[cursor++];
      for (auto& [from, to] : candidate.pairs) {
        from.value = slots[cursor++];
        to.value = slots[cursor++];
      }
      if (induced_entailment_order(candidate, mu) == target) {
        found = true;
        break;
      }
      std::size_t p = 0;
      for (; p < slots.size(); ++p) {
        if (++slots[p] < mu) break;
        slots[p] = 0;
      }
      if (p == slots.size()) break;
    }
    report.per_mu[mu] = found;
    if (found) {
      report.least = mu;
      break;
    }
  }
  return report;
}

}  // namespace conlab
