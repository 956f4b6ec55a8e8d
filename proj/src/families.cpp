#include "nsg/families.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace nsg {

const char* to_string(GenArithFamily f) {
  switch (f) {
    case GenArithFamily::N0: return "n0";
    case GenArithFamily::Two_2g1: return "two_2g1";
    case GenArithFamily::Three_g1: return "three_g1";
    case GenArithFamily::Three_g2_2g1: return "three_g2_2g1";
    case GenArithFamily::FullInterval: return "full_interval";
  }
  return "unknown";
}

const char* to_string(FreeFamily f) {
  switch (f) {
    case FreeFamily::One: return "one";
    case FreeFamily::Two_4n3: return "two_4n3";
    case FreeFamily::Three_3n2: return "three_3n2";
    case FreeFamily::Four: return "four";
  }
  return "unknown";
}

namespace {

// target in <gens>? Plain dynamic-programming closure over [0, target];
// gens need not be coprime, target >= 0.
bool closure_contains(const std::vector<Int>& gens, Int target) {
  if (target == 0) return true;
  std::vector<bool> member(static_cast<std::size_t>(target) + 1, false);
  member[0] = true;
  for (Int z = 1; z <= target; ++z) {
    for (Int a : gens) {
      if (a <= z && member[static_cast<std::size_t>(z - a)]) {
        member[static_cast<std::size_t>(z)] = true;
        break;
      }
    }
  }
  return member[static_cast<std::size_t>(target)];
}

// c * x in <prefix>, where every element of <prefix> is a multiple of the
// prefix gcd d. Divides through by d so the closure stays small.
bool scaled_prefix_contains(const std::vector<Int>& prefix, Int d, Int c, Int x) {
  const Int target = c * x;
  assert(target % d == 0);
  std::vector<Int> scaled;
  scaled.reserve(prefix.size());
  for (Int v : prefix) scaled.push_back(v / d);
  return closure_contains(scaled, target / d);
}

bool has_three_pairwise_coprime(const std::vector<Int>& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::gcd(s[i], s[j]) != 1) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (std::gcd(s[i], s[k]) == 1 && std::gcd(s[j], s[k]) == 1) return true;
    }
  return false;
}

bool has_two_disjoint_coprime_pairs(const std::vector<Int>& s) {
  const std::size_t n = s.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::gcd(s[i], s[j]) == 1) pairs.emplace_back(i, j);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      auto [a, b] = pairs[p];
      auto [c, d] = pairs[q];
      if (a != c && a != d && b != c && b != d) return true;
    }
  return false;
}

// Depth-first search for a telescopic ordering. For a minimal generating
// set the prefix gcds of any telescopic ordering strictly descend (a ratio
// of 1 would place the element inside the prefix semigroup, contradicting
// minimality), so extensions that keep the gcd are pruned.
bool telescopic_ordering_dfs(std::vector<Int>& seq, std::vector<Int>& rest, Int d) {
  if (rest.empty()) return true;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const Int x = rest[i];
    const Int nd = std::gcd(d, x);
    if (nd == d) continue;
    if (!scaled_prefix_contains(seq, d, d / nd, x)) continue;
    seq.push_back(x);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (telescopic_ordering_dfs(seq, rest, nd)) return true;
    rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(i), x);
    seq.pop_back();
  }
  return false;
}

}  // namespace

TelescopicAnalysis analyze_telescopic(const std::vector<Int>& seq) {
  if (seq.empty()) throw std::invalid_argument("sequence is empty");
  for (Int v : seq)
    if (v < 1)
      throw std::invalid_argument("sequence elements must be positive, got " +
                                  std::to_string(v));
  TelescopicAnalysis out;
  out.sequence = seq;
  out.prefix_gcds.push_back(seq[0]);
  out.is_telescopic = true;
  for (std::size_t j = 1; j < seq.size(); ++j) {
    const Int d_prev = out.prefix_gcds.back();
    const Int d = std::gcd(d_prev, seq[j]);
    out.prefix_gcds.push_back(d);
    out.ratios.push_back(d_prev / d);
    if (out.is_telescopic) {
      std::vector<Int> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(j));
      if (!scaled_prefix_contains(prefix, d_prev, d_prev / d, seq[j])) {
        out.is_telescopic = false;
        out.failing_index = j;
      }
    }
  }
  return out;
}

std::optional<std::vector<Int>> is_free(const NumericalSemigroup& s) {
  const std::vector<Int>& gens = s.minimal_generators();
  const std::size_t k = gens.size();
  if (k <= 2) return gens;  // single generator or coprime pair, always free
  if (has_three_pairwise_coprime(gens) || has_two_disjoint_coprime_pairs(gens))
    return std::nullopt;

  // Any element may lead; the multiplicity is tried first as the common case.
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<Int> seq{gens[lead]};
    std::vector<Int> rest;
    for (std::size_t i = 0; i < k; ++i)
      if (i != lead) rest.push_back(gens[i]);
    if (telescopic_ordering_dfs(seq, rest, gens[lead])) {
      assert(analyze_telescopic(seq).is_telescopic);
      return seq;
    }
  }

  if (k < 7) {
    // Exhaustive backstop; the pruned search above should already be
    // complete for minimal generating sets.
    std::vector<Int> perm(gens);
    std::sort(perm.begin(), perm.end());
    do {
      if (analyze_telescopic(perm).is_telescopic) {
        assert(false && "pruned ordering search missed a telescopic ordering");
        return perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::optional<GenArithParams> match_generalized_arithmetic(
    const std::vector<Int>& gens) {
  if (gens.empty()) throw std::invalid_argument("generator set is empty");
  std::vector<Int> s(gens);
  std::sort(s.begin(), s.end());
  const Int a = s.front();
  const Int k = static_cast<Int>(s.size());
  if (k == 1)
    return a == 1 ? std::optional<GenArithParams>({1, 1, 1, 1}) : std::nullopt;

  // The step d is s[i+1] - s[i] for i >= 1; for k = 2 it is free. Scan h
  // upward so the smallest h (arithmetic when h = 1) wins.
  for (Int h = 1; h * a < s[1]; ++h) {
    const Int d = s[1] - h * a;
    bool fits = true;
    for (Int i = 2; i < k; ++i) {
      if (s[static_cast<std::size_t>(i)] != h * a + i * d) {
        fits = false;
        break;
      }
    }
    if (fits) return GenArithParams{a, h, d, k};
  }
  return std::nullopt;
}

std::optional<GenArithFamily> classify_reflective_genarith(Int g, Int a) {
  if (g == 0) {
    if (a != 1)
      throw std::domain_error("genus 0 has multiplicity 1, got " + std::to_string(a));
    return GenArithFamily::N0;
  }
  const ReflectiveParams p(g, a);
  std::optional<GenArithFamily> family;
  if (a == 2) {
    family = GenArithFamily::Two_2g1;
  } else if (a == 3) {
    family = p.r() == 1 ? GenArithFamily::Three_g1 : GenArithFamily::Three_g2_2g1;
  } else if (a == g + 1) {
    family = GenArithFamily::FullInterval;
  }
  assert(family.has_value() ==
         match_generalized_arithmetic(reflective_min_generators(p)).has_value());
  return family;
}

std::vector<std::pair<Int, FreeFamily>> classify_reflective_free(Int g) {
  if (g < 0) throw std::domain_error("genus must be >= 0, got " + std::to_string(g));
  if (g == 0) return {{1, FreeFamily::One}};
  std::vector<std::pair<Int, FreeFamily>> out;
  if (g % 2 == 1) out.emplace_back(2, FreeFamily::Two_4n3);
  // <3, 3n+2> and <4, 4n+2, 4n+3> have multiplicity 3 resp. 4 only from
  // n = 1 on; at n = 0 both coincide with <2, 3>, covered above.
  if (g % 3 == 1 && g >= 4) out.emplace_back(3, FreeFamily::Three_3n2);
  if (g % 4 == 1 && g >= 5) out.emplace_back(4, FreeFamily::Four);
  return out;
}

std::vector<std::pair<Int, Int>> classify_reflective_embdim2(Int g) {
  if (g < 1) throw std::domain_error("genus must be >= 1, got " + std::to_string(g));
  std::vector<std::pair<Int, Int>> out;
  if (g % 2 == 1) out.emplace_back(2, 2 * g + 1);
  if (g % 3 == 1 && g != 1)  // at g = 1, {3, g+1} is {2, 3} again
    out.emplace_back(3, g + 1);
  return out;
}

FamilyReport analyze_families(const NumericalSemigroup& s) {
  FamilyReport out;
  out.embdim2 = s.embedding_dimension() == 2;
  out.generalized_arithmetic = match_generalized_arithmetic(s.minimal_generators());
  if (out.generalized_arithmetic && out.generalized_arithmetic->h == 1)
    out.arithmetic = out.generalized_arithmetic;
  out.free_ordering = is_free(s);
  assert(!out.embdim2 || out.free_ordering.has_value());
  return out;
}

}  // namespace nsg
