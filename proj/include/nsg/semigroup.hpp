// Core numerical-semigroup arithmetic: construction from generators,
// membership, gap sets, Apery sets, minimal generators, pseudo-Frobenius
// data, and the symmetric / pseudo-symmetric / irreducible / Wilf predicates.
//
// A numerical semigroup S is an additively closed subset of the non-negative
// integers that contains 0 and has finite complement H(S) (the gap set).
// Invariants used throughout:
//   genus g(S)        = |H(S)|
//   Frobenius F(S)    = max H(S), with the convention F = -1 when H(S) is empty
//   multiplicity m(S) = least positive element of S
//
// All values are immutable after construction and every operation is a pure
// function, so instances may be freely shared across threads.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsg {

using Int = std::int64_t;

// Thrown by from_generators when the generator list is empty.
struct EmptyInput : std::invalid_argument {
  EmptyInput() : std::invalid_argument("generator set is empty") {}
};

// Thrown by from_generators when the generators have gcd != 1 (the
// complement would be infinite).
struct GcdNotOne : std::invalid_argument {
  explicit GcdNotOne(Int g)
      : std::invalid_argument("generators have gcd " + std::to_string(g) +
                              ", expected 1") {}
};

// Thrown by apery_set when t = 0 or t is not an element of the semigroup.
struct NotAnElement : std::domain_error {
  explicit NotAnElement(Int t)
      : std::domain_error(std::to_string(t) +
                          " is not a nonzero element of the semigroup") {}
};

// Thrown by invariants_from_apery when the claimed Apery set has the wrong
// size or two elements share a residue class.
struct MalformedApery : std::invalid_argument {
  explicit MalformedApery(const std::string& what)
      : std::invalid_argument("malformed Apery set: " + what) {}
};

// Thrown by operations that are undefined on the full semigroup N0
// (pseudo-Frobenius numbers and the predicates that need a gap).
struct GenusZero : std::domain_error {
  GenusZero() : std::domain_error("operation undefined for genus 0") {}
};

// The gap set H(S): a sorted list of the positive integers missing from S,
// backed by a dense bit view for O(1) membership questions.
class GapSet {
 public:
  GapSet() = default;

  // values must be strictly increasing positive integers.
  explicit GapSet(std::vector<Int> values);

  // True iff z is a gap. Any z outside [1, max_value()] is not a gap.
  bool contains(Int z) const {
    return z >= 0 && z < static_cast<Int>(bits_.size()) &&
           bits_[static_cast<std::size_t>(z)];
  }

  const std::vector<Int>& values() const { return values_; }
  Int size() const { return static_cast<Int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  // Largest gap, -1 when the set is empty.
  Int max_value() const { return values_.empty() ? -1 : values_.back(); }

  friend bool operator==(const GapSet& a, const GapSet& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Int> values_;
  std::vector<bool> bits_;
};

// Canonical semigroup value: the unique minimal generating set plus cached
// gap set, multiplicity, genus and Frobenius number.
class NumericalSemigroup {
 public:
  // Builds the semigroup generated by gens. Elements must be positive;
  // throws EmptyInput or GcdNotOne on invalid input. Idempotent: feeding
  // minimal_generators() back reproduces an equal value.
  static NumericalSemigroup from_generators(const std::vector<Int>& gens);

  // True iff z is an element. Every z > frobenius() is an element and every
  // z < 0 is not.
  bool contains(Int z) const {
    if (z < 0) return false;
    if (z > frobenius_) return true;
    return !gaps_.contains(z);
  }

  const std::vector<Int>& minimal_generators() const { return min_gens_; }
  const GapSet& gaps() const { return gaps_; }
  Int multiplicity() const { return multiplicity_; }
  Int genus() const { return gaps_.size(); }
  Int frobenius() const { return frobenius_; }
  Int embedding_dimension() const { return static_cast<Int>(min_gens_.size()); }

  // Two semigroups are equal iff they have the same gap set.
  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  NumericalSemigroup(std::vector<Int> min_gens, GapSet gaps, Int multiplicity,
                     Int frobenius)
      : min_gens_(std::move(min_gens)),
        gaps_(std::move(gaps)),
        multiplicity_(multiplicity),
        frobenius_(frobenius) {}

  std::vector<Int> min_gens_;
  GapSet gaps_;
  Int multiplicity_;
  Int frobenius_;
};

// Ap(S; t) = {s in S : s - t not in S}, the least element of S in each
// residue class mod t, returned in increasing order (t entries, the first
// always 0). Throws NotAnElement unless t is a nonzero element of S.
std::vector<Int> apery_set(const NumericalSemigroup& s, Int t);

// Recovers (frobenius, genus) from an Apery set relative to t:
//   frobenius = max(ap) - t
//   genus     = (1 - t)/2 + (sum of ap)/t, evaluated exactly as the sum of
//               floor(w / t) over w in ap (the two forms agree whenever the
//               residues are distinct).
// Throws MalformedApery when |ap| != t, an entry is negative, or two
// entries collide mod t.
std::pair<Int, Int> invariants_from_apery(const std::vector<Int>& ap, Int t);

// PF(S) = {h in H(S) : h + a in S for every minimal generator a}, in
// increasing order. Contains frobenius(S); its size is the type of S.
// Throws GenusZero for N0.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);

// Symmetry predicates, all requiring genus >= 1 (throw GenusZero):
//   symmetric        iff F = 2g - 1
//   pseudo-symmetric iff F = 2g - 2
//   irreducible      iff either holds
bool is_symmetric(const NumericalSemigroup& s);
bool is_pseudo_symmetric(const NumericalSemigroup& s);
bool is_irreducible(const NumericalSemigroup& s);

// Wilf inequality e(S) >= (F + 1)/(F + 1 - g), decided in exact integer
// arithmetic as e * (F + 1 - g) >= F + 1. Throws GenusZero for N0.
bool wilf_holds(const NumericalSemigroup& s);

}  // namespace nsg
