#include "nsg/reflective.hpp"

#include <algorithm>
#include <cassert>

namespace nsg {

ReflectiveParams::ReflectiveParams(Int g, Int a) : g_(g), a_(a) {
  if (g < 1) throw std::domain_error("genus must be >= 1, got " + std::to_string(g));
  if (a < 2 || a > g + 1) throw InvalidMultiplicity(a, g);
  if (g % a == 0) throw DividesGenus(a, g);
  q_ = g / a;
  r_ = g % a;
}

const char* to_string(ReflectiveClass c) {
  switch (c) {
    case ReflectiveClass::Symmetric: return "symmetric";
    case ReflectiveClass::PseudoSymmetric: return "pseudo_symmetric";
    case ReflectiveClass::NeitherIrreducible: return "neither_irreducible";
  }
  return "unknown";
}

bool is_equidistributed(const GapSet& gaps, Int m) {
  if (m < 1) throw std::domain_error("modulus must be >= 1, got " + std::to_string(m));
  if (m == 1) return true;
  if (gaps.size() % m != 0) return false;
  std::vector<Int> counts(static_cast<std::size_t>(m), 0);
  for (Int v : gaps.values()) ++counts[static_cast<std::size_t>(v % m)];
  const Int want = gaps.size() / m;
  return std::all_of(counts.begin(), counts.end(),
                     [want](Int c) { return c == want; });
}

bool is_reflective(const NumericalSemigroup& s) {
  const Int g = s.genus();
  if (g == 0) return true;
  bool ok = true;
  for (Int z = 0; z < g; ++z) {
    if (s.contains(z) == s.contains(z + g)) {
      ok = false;
      break;
    }
  }
  // The pairing route and the equidistribution route are equivalent.
  assert(ok == is_equidistributed(s.gaps(), g));
  return ok;
}

Int reflection_partner(Int z, Int g) {
  if (g < 1) throw std::domain_error("genus must be >= 1, got " + std::to_string(g));
  Int quot = z / g;
  if (z % g != 0 && ((z < 0) != (g < 0))) --quot;  // floored division
  return z + (1 - 2 * quot) * g;
}

NumericalSemigroup construct_reflective(Int g, Int a) {
  const ReflectiveParams p(g, a);
  std::vector<Int> gens{a, 2 * g + a - p.r()};
  for (Int x = g + 1; x <= g + a - 1; ++x) gens.push_back(x);
  NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  assert(s.genus() == g);
  assert(s.multiplicity() == a);
  assert(is_reflective(s));
  assert(s.minimal_generators() == reflective_min_generators(p));
  return s;
}

Int reflective_frobenius(const ReflectiveParams& p) { return 2 * p.g() - p.r(); }

std::vector<Int> reflective_min_generators(const ReflectiveParams& p) {
  const Int g = p.g(), a = p.a(), r = p.r();
  std::vector<Int> out{a};
  if (r != a - 1) {
    for (Int x = g + 1; x <= g + a - 1; ++x)
      if (x != g + a - r) out.push_back(x);
  } else {
    for (Int x = g + 2; x <= g + a - 1; ++x) out.push_back(x);
    out.push_back(2 * g + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int reflective_embdim(const ReflectiveParams& p) {
  return p.r() != p.a() - 1 ? p.a() - 1 : p.a();
}

std::vector<Int> reflective_apery(const ReflectiveParams& p) {
  const Int g = p.g(), a = p.a(), r = p.r();
  std::vector<Int> out{0, 2 * g + a - r};
  for (Int x = g + 1; x <= g + a - 1; ++x)
    if (x != g + a - r) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> reflective_pf(const ReflectiveParams& p) {
  const Int g = p.g(), r = p.r();
  std::vector<Int> out;
  for (Int x = g - r + 1; x <= g - 1; ++x) out.push_back(x);
  out.push_back(2 * g - r);
  return out;
}

ReflectiveClass classify_reflective(const ReflectiveParams& p) {
  if (p.r() == 1) return ReflectiveClass::Symmetric;
  if (p.r() == 2) return ReflectiveClass::PseudoSymmetric;
  return ReflectiveClass::NeitherIrreducible;
}

}  // namespace nsg
