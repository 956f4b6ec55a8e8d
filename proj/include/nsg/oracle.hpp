// Brute-force ground truth, independent of every closed form: exhaustive
// enumeration of numerical semigroups over the standard semigroup tree.
//
// The tree has N0 at the root; the children of S are the semigroups
// S minus {x} for each minimal generator x exceeding F(S). Every semigroup
// of genus n+1 arises from exactly one parent of genus n, so a depth-first
// walk visits each semigroup exactly once. Along any root-to-node path the
// Frobenius number strictly increases, which allows walks bounded by a
// Frobenius cap instead of a genus cap.
//
// Reflectivity is decided here by the equidistribution definition only;
// nothing in this module consults the closed-form construction it is used
// to validate.

#pragma once

#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// Default cap on walk depth. The full tree to genus 22 has a few hundred
// thousand nodes and enumerates in seconds; every extra level roughly
// multiplies the node count by the golden ratio, so raise with care.
inline constexpr Int kDefaultOracleGenusLimit = 22;

// Thrown when a request would walk past the configured genus limit.
struct LimitExceeded : std::runtime_error {
  LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Every numerical semigroup of genus exactly g, sorted by gap set.
// Requires 0 <= g <= genus_limit.
std::vector<NumericalSemigroup> enumerate_all_semigroups(
    Int g, Int genus_limit = kDefaultOracleGenusLimit);

// Gap sets of every semigroup of genus 0..max_genus in one walk, bucketed
// by genus (bucket[g] is sorted). Requires 0 <= max_genus <= genus_limit.
std::vector<std::vector<GapSet>> enumerate_gap_sets_through(
    Int max_genus, Int genus_limit = kDefaultOracleGenusLimit);

// The reflective semigroups of genus g found by filtering the exhaustive
// enumeration with the equidistribution test, sorted by gap set.
std::vector<NumericalSemigroup> brute_force_reflective_by_genus(
    Int g, Int genus_limit = kDefaultOracleGenusLimit);

// The reflective semigroups with Frobenius number exactly F, found by a
// Frobenius-capped walk (children above the cap pruned; the Frobenius
// number increases strictly along every path, so the walk still sees every
// semigroup with F(S) <= F). Sorted by gap set. Requires
// 1 <= F <= 2 * genus_limit - 1.
std::vector<NumericalSemigroup> brute_force_reflective_by_frobenius(
    Int F, Int genus_limit = kDefaultOracleGenusLimit);

// Plain-text cache of enumerated gap sets, to amortize repeated
// verification runs. Format: a header line
//   nsg gap-set cache v1 max_genus=<N>
// followed by one line per semigroup, "<genus>: <gap values separated by
// spaces>" (genus 0 has no values), grouped by genus in bucket order.
void write_gap_set_cache(const std::string& path,
                         const std::vector<std::vector<GapSet>>& per_genus);

// Reads a cache written by write_gap_set_cache. Throws std::runtime_error
// on a missing file, bad header, or malformed line.
std::vector<std::vector<GapSet>> read_gap_set_cache(const std::string& path);

}  // namespace nsg
