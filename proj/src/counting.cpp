#include "nsg/counting.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "nsg/reflective.hpp"

namespace nsg {

namespace {

void require_ge(Int value, Int least, const char* name) {
  if (value < least)
    throw std::domain_error(std::string(name) + " must be >= " +
                            std::to_string(least) + ", got " +
                            std::to_string(value));
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in alternating sum");
  return out;
}

}  // namespace

Int tau(Int n) {
  require_ge(n, 1, "n");
  Int count = 0;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    count += (d * d == n) ? 1 : 2;
  }
  return count;
}

Int tau_even(Int n) {
  require_ge(n, 1, "n");
  // Even divisors of n are 2 * (divisors of n/2).
  return n % 2 == 0 ? tau(n / 2) : 0;
}

Int count_reflective_by_genus(Int g) {
  require_ge(g, 1, "genus");
  return g + 1 - tau(g);
}

Int count_symmetric_reflective_by_genus(Int g) {
  require_ge(g, 1, "genus");
  return g == 1 ? 1 : tau(g - 1) - 1;
}

std::vector<NumericalSemigroup> enumerate_reflective_by_genus(Int g) {
  require_ge(g, 1, "genus");
  std::vector<NumericalSemigroup> out;
  for (Int a = 2; a <= g + 1; ++a) {
    if (g % a == 0) continue;
    out.push_back(construct_reflective(g, a));
  }
  assert(static_cast<Int>(out.size()) == count_reflective_by_genus(g));
  return out;
}

Int count_reflective_by_frobenius(Int F) {
  require_ge(F, 1, "frobenius");
  Int sum = checked_add(1, -tau_even(F));
  for (Int k = 2; k <= F; ++k) {
    const Int term = F / k;
    sum = checked_add(sum, k % 2 == 0 ? term : -term);
  }
#ifndef NDEBUG
  // Second route: 1 + #{a <= F : floor(F/a) even} - tau_even(F).
  Int even_floors = 0;
  for (Int a = 1; a <= F; ++a)
    if ((F / a) % 2 == 0) ++even_floors;
  assert(sum == 1 + even_floors - tau_even(F));
#endif
  return sum;
}

std::vector<NumericalSemigroup> enumerate_reflective_by_frobenius(Int F) {
  require_ge(F, 1, "frobenius");
  std::vector<NumericalSemigroup> out;
  for (Int a = 2; a <= F + 1; ++a) {
    if (F % a == 0 || (F / a) % 2 != 0) continue;
    const Int r = F % a;
    const Int g = (F + r) / 2;  // F = 2g - r pins the genus
    out.push_back(construct_reflective(g, a));
    assert(out.back().frobenius() == F);
  }
  return out;
}

Int odd_floor_count(Int n) {
  require_ge(n, 1, "n");
  Int direct = 0;
  for (Int k = 1; k <= n; ++k)
    if ((n / k) % 2 != 0) ++direct;
#ifndef NDEBUG
  Int alternating = 0;
  for (Int k = 1; k <= n; ++k) {
    const Int term = n / k;
    alternating = checked_add(alternating, k % 2 != 0 ? term : -term);
  }
  assert(alternating == direct);
#endif
  return direct;
}

double asymptotic_estimate(Int F) {
  require_ge(F, 1, "frobenius");
  return (1.0 - std::log(2.0)) * static_cast<double>(F);
}

}  // namespace nsg
