#include "nsg/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nsg/counting.hpp"
#include "nsg/families.hpp"
#include "nsg/reflective.hpp"

namespace nsg {

namespace {

struct CheckResult {
  explicit CheckResult(std::string name_in) : name(std::move(name_in)) {}

  std::string name;
  Int cases = 0;
  bool ok = true;
  std::string detail;
};

// Records the first counterexample only; later ones add nothing.
void fail(CheckResult& check, const std::string& detail) {
  if (check.ok) {
    check.ok = false;
    check.detail = detail;
  }
}

void emit(std::ostream& out, const CheckResult& check) {
  if (check.ok) {
    out << "pass " << check.name << " (" << check.cases << " cases)\n";
  } else {
    out << "FAIL " << check.name << ": " << check.detail << "\n";
  }
}

std::string join(const std::vector<Int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i == 0 ? "" : " ") << values[i];
  }
  return out.str();
}

std::vector<Int> valid_multiplicities(Int g) {
  std::vector<Int> out;
  for (Int a = 2; a <= g + 1; ++a) {
    if (g % a != 0) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<std::vector<Int>> sorted_gap_lists(
    const std::vector<NumericalSemigroup>& semigroups) {
  std::vector<std::vector<Int>> out;
  out.reserve(semigroups.size());
  for (const NumericalSemigroup& s : semigroups) {
    out.push_back(s.gaps().values());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Describes the first difference between two sorted lists of gap lists.
std::string describe_difference(const std::string& where,
                                const std::vector<std::vector<Int>>& oracle,
                                const std::vector<std::vector<Int>>& formula) {
  if (oracle.size() != formula.size()) {
    return where + ": oracle found " + std::to_string(oracle.size()) +
           ", construction yields " + std::to_string(formula.size());
  }
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    if (oracle[i] != formula[i]) {
      return where + ": gaps {" + join(oracle[i]) + "} vs {" +
             join(formula[i]) + "}";
    }
  }
  return where + ": lists differ";
}

bool contains_multiplicity(const std::vector<std::pair<Int, FreeFamily>>& list,
                           Int a) {
  for (const auto& entry : list) {
    if (entry.first == a) {
      return true;
    }
  }
  return false;
}

bool contains_multiplicity(const std::vector<std::pair<Int, Int>>& list,
                           Int a) {
  for (const auto& entry : list) {
    if (entry.first == a) {
      return true;
    }
  }
  return false;
}

}  // namespace

VerifyHooks::VerifyHooks()
    : genus_count([](Int g) { return count_reflective_by_genus(g); }),
      frobenius_count([](Int F) { return count_reflective_by_frobenius(F); }) {
}

int run_verification(const VerifyRequest& request, const VerifyHooks& hooks,
                     std::ostream& out) {
  if (request.max_genus < 0) {
    throw std::domain_error("max_genus must be nonnegative, got " +
                            std::to_string(request.max_genus));
  }
  if (request.max_genus > request.genus_limit) {
    throw LimitExceeded("verification to genus " +
                        std::to_string(request.max_genus) +
                        " exceeds the oracle genus limit " +
                        std::to_string(request.genus_limit));
  }
  Int max_frobenius = request.max_frobenius;
  if (max_frobenius < 0) {
    max_frobenius = std::min(2 * request.max_genus - 1,
                             2 * request.genus_limit - 1);
  } else if (max_frobenius > 2 * request.genus_limit - 1) {
    throw LimitExceeded("verification to Frobenius number " +
                        std::to_string(max_frobenius) + " exceeds 2 * " +
                        std::to_string(request.genus_limit) +
                        " - 1, the largest value the genus limit supports");
  }

  CheckResult genus_counts("reflective count by genus");
  CheckResult genus_sets("reflective gap sets by genus");
  CheckResult frobenius_counts("reflective count by Frobenius number");
  CheckResult frobenius_sets("reflective gap sets by Frobenius number");
  CheckResult closed_forms("closed forms vs direct computation");
  CheckResult classification("classification and family membership");
  CheckResult wilf("Wilf inequality");

  // Genus-indexed sweeps share one exhaustive walk.
  const auto buckets =
      enumerate_gap_sets_through(request.max_genus, request.genus_limit);
  for (Int g = 1; g <= request.max_genus; ++g) {
    std::vector<std::vector<Int>> oracle_lists;
    for (const GapSet& gaps : buckets[static_cast<std::size_t>(g)]) {
      if (is_equidistributed(gaps, g)) {
        oracle_lists.push_back(gaps.values());
      }
    }
    ++genus_counts.cases;
    const Int formula_count = hooks.genus_count(g);
    if (static_cast<Int>(oracle_lists.size()) != formula_count) {
      fail(genus_counts,
           "g=" + std::to_string(g) + ": oracle " +
               std::to_string(oracle_lists.size()) + ", formula " +
               std::to_string(formula_count));
    }
    ++genus_sets.cases;
    const auto formula_lists = sorted_gap_lists(enumerate_reflective_by_genus(g));
    if (oracle_lists != formula_lists) {
      fail(genus_sets, describe_difference("g=" + std::to_string(g),
                                           oracle_lists, formula_lists));
    }
  }

  for (Int F = 1; F <= max_frobenius; ++F) {
    const auto oracle_lists = sorted_gap_lists(
        brute_force_reflective_by_frobenius(F, request.genus_limit));
    ++frobenius_counts.cases;
    const Int formula_count = hooks.frobenius_count(F);
    if (static_cast<Int>(oracle_lists.size()) != formula_count) {
      fail(frobenius_counts,
           "F=" + std::to_string(F) + ": oracle " +
               std::to_string(oracle_lists.size()) + ", formula " +
               std::to_string(formula_count));
    }
    ++frobenius_sets.cases;
    const auto formula_lists =
        sorted_gap_lists(enumerate_reflective_by_frobenius(F));
    if (oracle_lists != formula_lists) {
      fail(frobenius_sets, describe_difference("F=" + std::to_string(F),
                                               oracle_lists, formula_lists));
    }
  }

  for (Int g = 1; g <= request.max_genus; ++g) {
    Int symmetric_seen = 0;
    const auto free_list = classify_reflective_free(g);
    const auto embdim2_list = classify_reflective_embdim2(g);
    for (Int a : valid_multiplicities(g)) {
      const ReflectiveParams p(g, a);
      const NumericalSemigroup s = construct_reflective(g, a);
      const std::string where =
          "g=" + std::to_string(g) + " a=" + std::to_string(a);

      ++closed_forms.cases;
      if (!is_reflective(s)) {
        fail(closed_forms, where + ": constructed semigroup not reflective");
      }
      if (s.frobenius() != reflective_frobenius(p)) {
        fail(closed_forms, where + ": Frobenius number differs");
      }
      if (s.minimal_generators() != reflective_min_generators(p)) {
        fail(closed_forms, where + ": minimal generators differ");
      }
      if (s.embedding_dimension() != reflective_embdim(p)) {
        fail(closed_forms, where + ": embedding dimension differs");
      }
      const auto ap = apery_set(s, a);
      if (ap != reflective_apery(p)) {
        fail(closed_forms, where + ": Apery set differs");
      }
      const auto inv = invariants_from_apery(ap, a);
      if (inv.first != s.frobenius() || inv.second != s.genus()) {
        fail(closed_forms, where + ": Apery invariants differ");
      }
      if (pseudo_frobenius(s) != reflective_pf(p)) {
        fail(closed_forms, where + ": pseudo-Frobenius elements differ");
      }

      ++classification.cases;
      const ReflectiveClass cls = classify_reflective(p);
      if (cls == ReflectiveClass::Symmetric) {
        ++symmetric_seen;
      }
      if ((cls == ReflectiveClass::Symmetric) != is_symmetric(s)) {
        fail(classification, where + ": symmetry classification differs");
      }
      if ((cls == ReflectiveClass::PseudoSymmetric) != is_pseudo_symmetric(s)) {
        fail(classification,
             where + ": pseudo-symmetry classification differs");
      }
      const bool genarith_tagged =
          classify_reflective_genarith(g, a).has_value();
      const bool genarith_direct =
          match_generalized_arithmetic(s.minimal_generators()).has_value();
      if (genarith_tagged != genarith_direct) {
        fail(classification,
             where + ": generalized-arithmetic membership differs");
      }
      const bool free_tagged = contains_multiplicity(free_list, a);
      const bool free_direct = is_free(s).has_value();
      if (free_tagged != free_direct) {
        fail(classification, where + ": free membership differs");
      }
      const bool embdim2_tagged = contains_multiplicity(embdim2_list, a);
      if (embdim2_tagged != (s.embedding_dimension() == 2)) {
        fail(classification,
             where + ": embedding dimension 2 membership differs");
      }

      ++wilf.cases;
      if (!wilf_holds(s)) {
        fail(wilf, where + ": inequality violated");
      }
    }
    const Int symmetric_formula = count_symmetric_reflective_by_genus(g);
    if (symmetric_seen != symmetric_formula) {
      fail(classification, "g=" + std::to_string(g) + ": symmetric count " +
                               std::to_string(symmetric_seen) +
                               ", formula " +
                               std::to_string(symmetric_formula));
    }
  }

  const CheckResult* results[] = {&genus_counts,     &genus_sets,
                                  &frobenius_counts, &frobenius_sets,
                                  &closed_forms,     &classification,
                                  &wilf};
  bool all_ok = true;
  for (const CheckResult* check : results) {
    emit(out, *check);
    all_ok = all_ok && check->ok;
  }
  out << "verification: " << (all_ok ? "pass" : "FAIL") << "\n";
  return all_ok ? 0 : 3;
}

int run_verification(const VerifyRequest& request, std::ostream& out) {
  return run_verification(request, VerifyHooks(), out);
}

}  // namespace nsg
