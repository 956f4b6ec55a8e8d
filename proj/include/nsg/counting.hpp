// Exact and asymptotic counting of reflective numerical semigroups by genus
// and by Frobenius number, plus the divisor-count utilities they rest on.
//
// Key counts, all in exact integer arithmetic:
//   by genus:     ng(g) = g + 1 - tau(g)
//   symmetric:    1 when g = 1, else tau(g-1) - 1
//   by Frobenius: nF(F) = 1 - tau_even(F) + sum_{k=2}^{F} (-1)^k floor(F/k)
//                       = 1 + #{a <= F : floor(F/a) even} - tau_even(F)
// The only floating-point value is the asymptotic estimate (1 - log 2) * F.

#pragma once

#include <optional>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// One table row: a parameter (genus or Frobenius number), the exact count,
// an optional independently computed oracle count, and an optional
// asymptotic estimate.
struct CountRecord {
  Int parameter = 0;
  Int exact = 0;
  std::optional<Int> oracle;
  std::optional<double> estimate;
};

// Number of positive divisors of n. Requires n >= 1.
Int tau(Int n);

// Number of positive even divisors of n; 0 when n is odd.
Int tau_even(Int n);

// Count of reflective semigroups with genus exactly g; requires g >= 1.
Int count_reflective_by_genus(Int g);

// Count of symmetric reflective semigroups with genus g; requires g >= 1.
Int count_symmetric_reflective_by_genus(Int g);

// The reflective semigroups of genus g, one per valid multiplicity
// a in [2, g+1] with a not dividing g, sorted by a. Requires g >= 1.
std::vector<NumericalSemigroup> enumerate_reflective_by_genus(Int g);

// Count of reflective semigroups with Frobenius number exactly F; requires
// F >= 1. Evaluates the alternating sum with overflow-checked accumulation.
Int count_reflective_by_frobenius(Int F);

// The reflective semigroups with Frobenius number F: one for each
// a in [2, F+1] with a not dividing F and floor(F/a) even, built at genus
// g = (F + F mod a) / 2, sorted by a. Requires F >= 1.
std::vector<NumericalSemigroup> enumerate_reflective_by_frobenius(Int F);

// #{k <= n : floor(n/k) odd}, equal to the alternating sum
// sum_{k=1}^{n} (-1)^{k+1} floor(n/k), which grows as n log 2 + O(sqrt n).
// Requires n >= 1. Debug builds evaluate both forms and compare.
Int odd_floor_count(Int n);

// (1 - log 2) * F, the linear asymptotic for the count by Frobenius number.
// Requires F >= 1.
double asymptotic_estimate(Int F);

}  // namespace nsg
