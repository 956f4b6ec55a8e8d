#include "nsg/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace nsg {

GapSet::GapSet(std::vector<Int> values) : values_(std::move(values)) {
  if (values_.empty()) return;
  bits_.assign(static_cast<std::size_t>(values_.back()) + 1, false);
  Int prev = 0;
  for (Int v : values_) {
    if (v <= prev)
      throw std::invalid_argument("gap values must be strictly increasing and positive");
    bits_[static_cast<std::size_t>(v)] = true;
    prev = v;
  }
}

namespace {

// Membership table for <gens> over [0, F + m]: member[z] is true iff z is a
// sum of generators. Grows until `multiplicity` consecutive members are seen,
// at which point every later integer is a member too. Works without an
// a-priori bound on the Frobenius number.
std::vector<bool> closure_table(const std::vector<Int>& gens, Int multiplicity) {
  std::vector<bool> member{true};
  Int run = 0;
  for (Int z = 1; run < multiplicity; ++z) {
    bool in = false;
    for (Int a : gens) {
      if (a > z) continue;
      if (member[static_cast<std::size_t>(z - a)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  return member;
}

// True iff x is a sum of two nonzero members, per the membership table.
bool decomposable(const std::vector<bool>& member, Int multiplicity, Int x) {
  for (Int s = multiplicity; s + multiplicity <= x; ++s) {
    if (member[static_cast<std::size_t>(s)] &&
        member[static_cast<std::size_t>(x - s)])
      return true;
  }
  return false;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(
    const std::vector<Int>& gens) {
  if (gens.empty()) throw EmptyInput();
  Int g = 0;
  for (Int a : gens) {
    if (a < 1)
      throw std::invalid_argument("generators must be positive, got " +
                                  std::to_string(a));
    g = std::gcd(g, a);
  }
  if (g != 1) throw GcdNotOne(g);

  std::vector<Int> sorted_gens(gens);
  std::sort(sorted_gens.begin(), sorted_gens.end());
  sorted_gens.erase(std::unique(sorted_gens.begin(), sorted_gens.end()),
                    sorted_gens.end());
  const Int m = sorted_gens.front();

  // member covers [0, F + m] exactly: the table stops right after the first
  // m consecutive members, which are F+1 .. F+m.
  const std::vector<bool> member = closure_table(sorted_gens, m);

  Int frobenius = -1;
  std::vector<Int> gap_values;
  for (Int z = 1; z < static_cast<Int>(member.size()); ++z) {
    if (!member[static_cast<std::size_t>(z)]) {
      gap_values.push_back(z);
      frobenius = z;
    }
  }

  // Minimal generators: m plus the nonzero Apery elements mod m that are not
  // sums of two nonzero members. All candidates are <= F + m, within range
  // of the table.
  std::vector<Int> candidates{m};
  if (m > 1) {
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    seen[0] = true;
    Int found = 1;
    for (Int z = m; found < m; ++z) {
      if (!member[static_cast<std::size_t>(z)]) continue;
      auto r = static_cast<std::size_t>(z % m);
      if (!seen[r]) {
        seen[r] = true;
        candidates.push_back(z);
        ++found;
      }
    }
  }
  std::vector<Int> min_gens;
  for (Int x : candidates) {
    if (!decomposable(member, m, x)) min_gens.push_back(x);
  }
  std::sort(min_gens.begin(), min_gens.end());

  return NumericalSemigroup(std::move(min_gens), GapSet(std::move(gap_values)),
                            m, frobenius);
}

std::vector<Int> apery_set(const NumericalSemigroup& s, Int t) {
  if (t <= 0 || !s.contains(t)) throw NotAnElement(t);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(t));
  std::vector<bool> seen(static_cast<std::size_t>(t), false);
  Int found = 0;
  // Every residue class is hit by F + t at the latest, since F+1 .. F+t are
  // all elements.
  for (Int z = 0; found < t; ++z) {
    if (!s.contains(z)) continue;
    auto r = static_cast<std::size_t>(z % t);
    if (!seen[r]) {
      seen[r] = true;
      out.push_back(z);
      ++found;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Int, Int> invariants_from_apery(const std::vector<Int>& ap, Int t) {
  if (t < 1) throw MalformedApery("t must be positive");
  if (static_cast<Int>(ap.size()) != t)
    throw MalformedApery("expected " + std::to_string(t) + " elements, got " +
                         std::to_string(ap.size()));
  std::vector<bool> seen(static_cast<std::size_t>(t), false);
  Int max_w = 0;
  Int genus = 0;
  for (Int w : ap) {
    if (w < 0) throw MalformedApery("negative element " + std::to_string(w));
    auto r = static_cast<std::size_t>(w % t);
    if (seen[r])
      throw MalformedApery("two elements share residue " + std::to_string(w % t) +
                           " mod " + std::to_string(t));
    seen[r] = true;
    max_w = std::max(max_w, w);
    genus += w / t;
  }
  return {max_w - t, genus};
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.genus() == 0) throw GenusZero();
  std::vector<Int> out;
  for (Int h : s.gaps().values()) {
    bool all_in = true;
    for (Int a : s.minimal_generators()) {
      if (!s.contains(h + a)) {
        all_in = false;
        break;
      }
    }
    if (all_in) out.push_back(h);
  }
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) {
  if (s.genus() == 0) throw GenusZero();
  const bool sym = s.frobenius() == 2 * s.genus() - 1;
  // Equivalent characterization: type 1.
  assert(sym == (pseudo_frobenius(s).size() == 1));
  return sym;
}

bool is_pseudo_symmetric(const NumericalSemigroup& s) {
  if (s.genus() == 0) throw GenusZero();
  const bool ps = s.frobenius() == 2 * s.genus() - 2;
  // Equivalent characterization: F even and PF(S) = {F/2, F}.
  assert(ps == (s.frobenius() % 2 == 0 &&
                pseudo_frobenius(s) ==
                    std::vector<Int>{s.frobenius() / 2, s.frobenius()}));
  return ps;
}

bool is_irreducible(const NumericalSemigroup& s) {
  return is_symmetric(s) || is_pseudo_symmetric(s);
}

bool wilf_holds(const NumericalSemigroup& s) {
  if (s.genus() == 0) throw GenusZero();
  const Int f1 = s.frobenius() + 1;
  return s.embedding_dimension() * (f1 - s.genus()) >= f1;
}

}  // namespace nsg
