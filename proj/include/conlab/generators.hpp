#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "conlab/properties.hpp"

namespace conlab {

/// Parameters for minting one named operator family instance.
struct GeneratorSpec {
  std::string family;
  int size = 0;       // carrier size
  int kappa = 0;      // threshold for r_example / partition_s
  int pivot = 0;      // pivot element index for r_example
  std::uint64_t seed = 0;
};

struct GeneratedStructure {
  ConsequenceOperator op;
  std::optional<FamilyK> family;
  std::optional<int> kappa;
};

/// Families:
///   identity            W(G) = G
///   constant_empty      W(G) = {}
///   constant_full       W(G) = L
///   pair_swap           size 2: two elements swapped; size g*g: a g-by-g
///                       index grid with (i,j) mapped to (j,i); the family is
///                       every nonempty subset of the off-diagonal elements
///                       (1,2),(3,4),... whose swaps fall outside it; kappa 1
///   pair_swap_fixed     odd size: consecutive elements swapped, the last
///                       element fixed; family {{first element}}, kappa 1
///   partition_s         even size n, threshold kappa: halves X and Y swapped
///                       elementwise, W(G) empty below the size threshold;
///                       family: the subsets of X or of Y of size >= kappa
///   r_example           W(G) = {pivot} below the size threshold kappa, else
///                       G + pivot
///   cm_witness          size 2, cautiously monotonic but not monotonic
///   wct_witness         size 2, weakly cumulative transitive, not monotonic
GeneratedStructure gen_named(const GeneratorSpec& spec);

/// Monotone completion of a seeded random table: each premise set collects
/// the raw outputs of all its subsets.
ConsequenceOperator gen_random_monotone(int n, std::uint64_t seed);

enum class RandomKind { q, p };

/// Induced operator of a seeded random three-valued semantics whose
/// designated sets are nested the right way round for the requested type;
/// the result passes the corresponding type check by construction.
ConsequenceOperator gen_random_typed(RandomKind kind, int n, std::uint64_t seed);

/// Closure operator of a seeded random intersection-closed set family.
ConsequenceOperator gen_random_tarski(int n, std::uint64_t seed);

}  // namespace conlab
