// Family membership tests (telescopic sequences and free semigroups,
// generalized arithmetic generating sequences, embedding dimension 2) and
// the classification of the reflective members of each family.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nsg/reflective.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// Record of the telescopic test on an ordered sequence a_1..a_k:
//   d_j = gcd(a_1..a_j), c_j = d_{j-1} / d_j,
//   telescopic iff c_j * a_j lies in <a_1..a_{j-1}> for every j in [2, k].
struct TelescopicAnalysis {
  std::vector<Int> sequence;
  std::vector<Int> prefix_gcds;  // d_1..d_k
  std::vector<Int> ratios;       // c_2..c_k (empty when k = 1)
  bool is_telescopic = false;
  // Index into sequence of the first element whose membership test fails.
  std::optional<std::size_t> failing_index;
};

// Parameters of a generalized arithmetic sequence
// (a, h*a + d, h*a + 2d, ..., h*a + (k-1)d); h = 1 is plain arithmetic.
struct GenArithParams {
  Int a, h, d, k;
  friend bool operator==(const GenArithParams&, const GenArithParams&) = default;
};

// The five families of reflective semigroups generated by a generalized
// arithmetic sequence, keyed by multiplicity:
//   N0           <1>                        g = 0
//   Two_2g1      <2, 2g+1>                  g odd
//   Three_g1     <3, g+1>                   g = 1 mod 3
//   Three_g2_2g1 <3, g+2, 2g+1>             g = 2 mod 3
//   FullInterval <[g+1, 2g+1]>              a = g+1, any g >= 3
// (For g in {1, 2} the full-interval semigroup coincides with an earlier
// family and is tagged as that family.)
enum class GenArithFamily { N0, Two_2g1, Three_g1, Three_g2_2g1, FullInterval };

// The four families of free reflective semigroups, keyed by multiplicity:
//   One        <1>               g = 0
//   Two_4n3    <2, 4n+3>         g = 2n+1
//   Three_3n2  <3, 3n+2>         g = 3n+1, n >= 1
//   Four       <4, 4n+2, 4n+3>   g = 4n+1, n >= 1
// (At n = 0 the last two degenerate to <2, 3>, which belongs to Two_4n3.)
enum class FreeFamily { One, Two_4n3, Three_3n2, Four };

const char* to_string(GenArithFamily f);
const char* to_string(FreeFamily f);

// Per-semigroup family summary; embdim2 implies a free ordering exists.
struct FamilyReport {
  bool embdim2 = false;
  std::optional<GenArithParams> arithmetic;             // an h = 1 fit
  std::optional<GenArithParams> generalized_arithmetic; // smallest-h fit
  std::optional<std::vector<Int>> free_ordering;
};

// Runs the telescopic test on seq in the given order. seq must be nonempty
// and positive. Membership tests run on the prefix semigroup scaled down by
// d_{j-1}, which keeps the closure bounded and coprime.
TelescopicAnalysis analyze_telescopic(const std::vector<Int>& seq);

// Searches for a telescopic ordering of the minimal generators of s and
// returns one if it exists (s is then free). The search prunes orderings
// whose prefix gcds fail to strictly descend, which is sound for minimal
// generating sets, and rejects sets with three pairwise coprime elements or
// two disjoint coprime pairs up front. Below 7 generators an exhaustive
// permutation sweep backstops the pruned search.
std::optional<std::vector<Int>> is_free(const NumericalSemigroup& s);

// Fits sorted gens to a generalized arithmetic sequence, preferring the
// smallest h (so plain arithmetic wins when both fit). A singleton matches
// only as {1}, the degenerate a = h = d = k = 1 case.
std::optional<GenArithParams> match_generalized_arithmetic(
    const std::vector<Int>& gens);

// Which generalized-arithmetic family the reflective semigroup of genus g
// and multiplicity a belongs to, or nullopt if its minimal generating set is
// not a generalized arithmetic sequence. g = 0 reports N0; otherwise (g, a)
// is validated like ReflectiveParams.
std::optional<GenArithFamily> classify_reflective_genarith(Int g, Int a);

// All multiplicities a for which the reflective semigroup of genus g is
// free, with their family, sorted by a. Requires g >= 0.
std::vector<std::pair<Int, FreeFamily>> classify_reflective_free(Int g);

// Generator pairs of the reflective semigroups of genus g with embedding
// dimension exactly 2: {2, 2g+1} when g is odd, {3, g+1} when g = 1 mod 3
// (the same pair once at g = 1). Requires g >= 1.
std::vector<std::pair<Int, Int>> classify_reflective_embdim2(Int g);

// Family summary for an arbitrary semigroup.
FamilyReport analyze_families(const NumericalSemigroup& s);

}  // namespace nsg
