// Reflective numerical semigroups: the reflectivity predicate, gap
// equidistribution, the closed-form construction from (genus, multiplicity),
// and closed forms for every standard invariant of the constructed
// semigroup.
//
// A numerical semigroup with genus g >= 1 is reflective when, for every
// z in [0, g-1], exactly one of z and z+g is an element; equivalently, when
// its gap set has exactly one member in every residue class mod g. The full
// semigroup N0 is vacuously reflective. For each genus g >= 1 and each
// multiplicity a in [2, g+1] with a not dividing g there is exactly one
// reflective semigroup, and those are all of them.

#pragma once

#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// Thrown when a requested multiplicity lies outside [2, g+1].
struct InvalidMultiplicity : std::domain_error {
  InvalidMultiplicity(Int a, Int g)
      : std::domain_error("multiplicity " + std::to_string(a) +
                          " outside [2, " + std::to_string(g + 1) +
                          "] for genus " + std::to_string(g)) {}
};

// Thrown when the requested multiplicity divides the genus; no reflective
// semigroup exists there.
struct DividesGenus : std::domain_error {
  DividesGenus(Int a, Int g)
      : std::domain_error(std::to_string(a) + " divides " + std::to_string(g)) {}
};

// Validated parameter tuple for the closed forms: g = q*a + r with
// 2 <= a <= g+1 and 1 <= r <= a-1. Constructing one is the single
// validation choke point for every formula below.
class ReflectiveParams {
 public:
  // Throws std::domain_error when g < 1, InvalidMultiplicity when
  // a is outside [2, g+1], and DividesGenus when a divides g.
  ReflectiveParams(Int g, Int a);

  Int g() const { return g_; }
  Int a() const { return a_; }
  Int q() const { return q_; }
  Int r() const { return r_; }

 private:
  Int g_, a_, q_, r_;
};

// Classification of a reflective semigroup; determined by r = g mod a alone.
enum class ReflectiveClass { Symmetric, PseudoSymmetric, NeitherIrreducible };

const char* to_string(ReflectiveClass c);

// True iff every residue class mod m contains equally many gap values.
// Requires m >= 1. A true result forces m to divide |gaps|.
bool is_equidistributed(const GapSet& gaps, Int m);

// True iff s is reflective. Genus 0 is vacuously reflective; otherwise the
// test walks z in [0, g-1] checking that exactly one of z, z+g is an
// element. Debug builds cross-check against the equidistribution route.
bool is_reflective(const NumericalSemigroup& s);

// The reflection z + (1 - 2*floor(z/g))*g, an involution on the integers
// that exchanges band [k*g, (k+1)*g - 1] with band [(1-k)*g, (2-k)*g - 1];
// in particular z in [0, g-1] maps to z + g. Requires g >= 1.
Int reflection_partner(Int z, Int g);

// The unique reflective semigroup with the given genus and multiplicity,
// built from the generating set {a, 2g+a-r} + [g+1, g+a-1] and minimized.
// Throws like ReflectiveParams. Asserts that the result is reflective with
// the requested invariants.
NumericalSemigroup construct_reflective(Int g, Int a);

// Closed forms for the reflective semigroup of p = (g, a, q, r). Each agrees
// with the value computed directly from construct_reflective(g, a).

// F(S) = 2g - r.
Int reflective_frobenius(const ReflectiveParams& p);

// {a} + [g+1, g+a-1] minus {g+a-r}   when r != a-1,
// {a, 2g+1} + [g+2, g+a-1]           when r  = a-1.
std::vector<Int> reflective_min_generators(const ReflectiveParams& p);

// a-1 when r != a-1, else a.
Int reflective_embdim(const ReflectiveParams& p);

// Ap(S; a) = {0, 2g+a-r} + [g+1, g+a-1] minus {g+a-r}.
std::vector<Int> reflective_apery(const ReflectiveParams& p);

// PF(S) = [g-r+1, g-1] + {2g-r}; the type is exactly r.
std::vector<Int> reflective_pf(const ReflectiveParams& p);

// Symmetric iff r = 1, pseudo-symmetric iff r = 2, otherwise not
// irreducible.
ReflectiveClass classify_reflective(const ReflectiveParams& p);

}  // namespace nsg
