#include "conlab/minimality.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace conlab {

KillSet kill_set(std::span<const int> valuation, int value_count, Mask designated1,
                 Mask designated2, const Carrier& carrier) {
  if (static_cast<int>(valuation.size()) != carrier.size())
    throw std::invalid_argument("valuation width does not match the carrier");
  for (int v : valuation)
    if (v < 0 || v >= value_count) throw std::invalid_argument("valuation value out of range");
  Mask premise_ok = 0;
  Mask excluded = 0;
  for (int p = 0; p < carrier.size(); ++p) {
    if (contains(designated1, valuation[p])) premise_ok |= singleton(p);
    if (!contains(designated2, valuation[p])) excluded |= singleton(p);
  }
  KillSet ks;
  for_each_subset(premise_ok, [&](Mask g) {
    for (int a = 0; a < carrier.size(); ++a)
      if (contains(excluded, a)) ks.pairs.emplace_back(g, a);
  });
  std::sort(ks.pairs.begin(), ks.pairs.end());
  return ks;
}

void SearchLimits::check(int value_count, int n) const {
  int cap = -1;
  if (value_count == 2) cap = cap_mu2;
  else if (value_count == 3) cap = cap_mu3;
  else if (value_count == 4) cap = cap_mu4;
  if (cap >= 0) {
    if (n > cap)
      throw std::invalid_argument("carrier size " + std::to_string(n) + " exceeds the cap of " +
                                  std::to_string(cap) + " for " + std::to_string(value_count) + " values");
    return;
  }
  const double steps = std::pow(value_count, n) * std::ldexp(1.0, n);
  if (steps > static_cast<double>(max_steps))
    throw std::invalid_argument("valuation sweep exceeds the configured step budget");
}

namespace {

struct SweepResult {
  std::vector<Mask> killed;           // per premise set, union of exclusions
  std::vector<std::vector<int>> admissible;
};

// Accumulates, over all valuations in [begin, end) whose kill set stays
// inside `cap_not`, the killed pairs and the valuations themselves.
SweepResult sweep_range(long long begin, long long end, int n, int value_count, Mask designated1,
                        Mask designated2, const std::vector<Mask>& cap_not) {
  const Mask count = Mask{1} << n;
  SweepResult out;
  out.killed.assign(count, 0);

  std::vector<int> valuation(n, 0);
  {
    long long v = begin;
    for (int p = 0; p < n; ++p) {
      valuation[p] = static_cast<int>(v % value_count);
      v /= value_count;
    }
  }
  for (long long index = begin; index < end; ++index) {
    Mask premise_ok = 0;
    Mask excluded = 0;
    for (int p = 0; p < n; ++p) {
      if (contains(designated1, valuation[p])) premise_ok |= singleton(p);
      if (!contains(designated2, valuation[p])) excluded |= singleton(p);
    }
    if (subset_of(excluded, cap_not[premise_ok])) {
      out.admissible.push_back(valuation);
      if (excluded != 0)
        for_each_subset(premise_ok, [&](Mask g) { out.killed[g] |= excluded; });
    }
    // odometer increment
    for (int p = 0; p < n; ++p) {
      if (++valuation[p] < value_count) break;
      valuation[p] = 0;
    }
  }
  return out;
}

std::optional<FunctionalSemantics> try_designated_pair(const ConsequenceOperator& op,
                                                       int value_count, Mask designated1,
                                                       Mask designated2,
                                                       const std::vector<Mask>& cap_not,
                                                       const std::vector<Mask>& not_w,
                                                       int threads) {
  const int n = op.size();
  long long total = 1;
  for (int p = 0; p < n; ++p) total *= value_count;

  SweepResult merged;
  if (threads <= 1 || total < 4096) {
    merged = sweep_range(0, total, n, value_count, designated1, designated2, cap_not);
  } else {
    const int workers = std::min<long long>(threads, total);
    std::vector<SweepResult> parts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const long long begin = total * w / workers;
      const long long end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        parts[w] = sweep_range(begin, end, n, value_count, designated1, designated2, cap_not);
      });
    }
    for (auto& t : pool) t.join();
    merged.killed.assign(op.carrier().subset_count(), 0);
    for (auto& part : parts) {
      for (Mask g = 0; g < op.carrier().subset_count(); ++g) merged.killed[g] |= part.killed[g];
      merged.admissible.insert(merged.admissible.end(), part.admissible.begin(), part.admissible.end());
    }
  }

  for (Mask g = 0; g < op.carrier().subset_count(); ++g)
    if (merged.killed[g] != not_w[g]) return std::nullopt;
  if (merged.admissible.empty()) return std::nullopt;  // model set must be nonempty

  FunctionalSemantics sem;
  sem.value_count = value_count;
  sem.models = std::move(merged.admissible);
  sem.designated = {designated1, designated2};
  sem.pairs = {{0, 1}};
  return sem;
}

}  // namespace

AchievabilityResult achievable_at(const ConsequenceOperator& op, int value_count,
                                  const SearchLimits& limits) {
  if (value_count < 2) throw std::invalid_argument("achievability needs at least two values");
  const int n = op.size();
  limits.check(value_count, n);

  const Mask count = op.carrier().subset_count();
  const Mask full = op.full();
  std::vector<Mask> not_w(count);
  for (Mask g = 0; g < count; ++g) not_w[g] = full & ~op.apply(g);

  // cap_not[s] = intersection of not_w over all subsets of s: the largest
  // exclusion a valuation with premise positions s may carry.
  std::vector<Mask> cap_not = not_w;
  for (int b = 0; b < n; ++b)
    for (Mask s = 0; s < count; ++s)
      if (contains(s, b)) cap_not[s] &= cap_not[s ^ singleton(b)];

  const Mask all_values = (Mask{1} << value_count) - 1;
  for (Mask d1 = 1; d1 <= all_values; ++d1)
    for (Mask d2 = 1; d2 <= all_values; ++d2) {
      if ((d1 | d2) == all_values) continue;
      auto witness = try_designated_pair(op, value_count, d1, d2, cap_not, not_w, limits.threads);
      if (witness) return {true, std::move(witness)};
    }
  return {false, std::nullopt};
}

MinimalityResult inferential_valuedness(const ConsequenceOperator& op, int max_values,
                                        const SearchLimits& limits) {
  if (max_values < 2) throw std::invalid_argument("max_values must be at least 2");
  MinimalityResult result;
  for (int mu = 2; mu <= max_values; ++mu) {
    AchievabilityResult at = achievable_at(op, mu, limits);
    result.per_mu[mu] = at.achievable;
    if (at.achievable) {
      result.min_values = mu;
      result.witness = std::move(at.witness);
      break;
    }
  }
  return result;
}

FunctionalSemantics witness_semantics(const ConsequenceOperator& op, int value_count,
                                      const SearchLimits& limits) {
  AchievabilityResult at = achievable_at(op, value_count, limits);
  if (!at.achievable)
    throw PreconditionError("operator admits no adequate semantics over " +
                            std::to_string(value_count) + " values");
  return std::move(*at.witness);
}

}  // namespace conlab
