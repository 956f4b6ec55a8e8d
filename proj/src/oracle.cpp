#include "nsg/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "nsg/reflective.hpp"

namespace nsg {

namespace {

// Visits every node of the semigroup tree with genus <= max_genus and, when
// max_frobenius >= 0, Frobenius number <= max_frobenius. The membership
// table passed to the visitor is borrowed; copy out of it, do not keep it.
using NodeVisitor =
    std::function<void(const std::vector<char>&, Int m, Int F, Int genus)>;

void walk_children(std::vector<char>& member, Int m, Int F, Int genus,
                   Int max_genus, Int max_frobenius,
                   const NodeVisitor& visit) {
  visit(member, m, F, genus);
  if (genus == max_genus) {
    return;
  }
  // Children remove one minimal generator above F. The multiplicity is such
  // a generator exactly when F = m - 1; every other one lies in
  // [max(F, m) + 1, F + m], is a member, and is not a sum of two positive
  // members. Removing x yields the child with Frobenius number x.
  if (m > F && (max_frobenius < 0 || m <= max_frobenius)) {
    member[m] = 0;
    walk_children(member, m + 1, m, genus + 1, max_genus, max_frobenius,
                  visit);
    member[m] = 1;
  }
  const Int hi = F + m;
  for (Int x = std::max(F, m) + 1; x <= hi; ++x) {
    if (max_frobenius >= 0 && x > max_frobenius) {
      break;
    }
    if (!member[x]) {
      continue;
    }
    bool decomposable = false;
    for (Int s = m; s <= x - m; ++s) {
      if (member[s] && member[x - s]) {
        decomposable = true;
        break;
      }
    }
    if (decomposable) {
      continue;
    }
    member[x] = 0;
    walk_children(member, m, x, genus + 1, max_genus, max_frobenius, visit);
    member[x] = 1;
  }
}

void walk_tree(Int max_genus, Int max_frobenius, const NodeVisitor& visit) {
  // The table must cover every index a candidate scan or a visitor can
  // touch: F + m stays below 3 * max_genus + 4 on a genus-capped walk and
  // below 2 * max_frobenius + 3 on a Frobenius-capped one.
  const Int bound = max_frobenius >= 0 ? 2 * max_frobenius + 3
                                       : 3 * max_genus + 4;
  std::vector<char> member(static_cast<std::size_t>(bound), 1);
  walk_children(member, 1, -1, 0, max_genus, max_frobenius, visit);
}

GapSet gaps_from_table(const std::vector<char>& member, Int F) {
  std::vector<Int> values;
  for (Int z = 1; z <= F; ++z) {
    if (!member[static_cast<std::size_t>(z)]) {
      values.push_back(z);
    }
  }
  return GapSet(values);
}

NumericalSemigroup semigroup_from_table(const std::vector<char>& member,
                                        Int m, Int F) {
  // Every minimal generator is at most F + m, so the members up to there
  // generate; from_generators reduces them to the minimal set.
  std::vector<Int> gens;
  const Int hi = std::max(F + m, m);
  for (Int z = 1; z <= hi; ++z) {
    if (member[static_cast<std::size_t>(z)]) {
      gens.push_back(z);
    }
  }
  return NumericalSemigroup::from_generators(gens);
}

void require_genus_within(Int g, Int genus_limit) {
  if (g < 0) {
    throw std::domain_error("genus must be nonnegative, got " +
                            std::to_string(g));
  }
  if (g > genus_limit) {
    throw LimitExceeded("exhaustive enumeration requested for genus " +
                        std::to_string(g) + " exceeds the limit " +
                        std::to_string(genus_limit));
  }
}

bool gap_set_less(const GapSet& a, const GapSet& b) {
  return a.values() < b.values();
}

bool semigroup_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return a.gaps().values() < b.gaps().values();
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_all_semigroups(Int g,
                                                         Int genus_limit) {
  require_genus_within(g, genus_limit);
  std::vector<NumericalSemigroup> out;
  walk_tree(g, -1,
            [&](const std::vector<char>& member, Int m, Int F, Int genus) {
              if (genus == g) {
                out.push_back(semigroup_from_table(member, m, F));
              }
            });
  std::sort(out.begin(), out.end(), semigroup_less);
  return out;
}

std::vector<std::vector<GapSet>> enumerate_gap_sets_through(Int max_genus,
                                                            Int genus_limit) {
  require_genus_within(max_genus, genus_limit);
  std::vector<std::vector<GapSet>> buckets(
      static_cast<std::size_t>(max_genus) + 1);
  walk_tree(max_genus, -1,
            [&](const std::vector<char>& member, Int, Int F, Int genus) {
              buckets[static_cast<std::size_t>(genus)].push_back(
                  gaps_from_table(member, F));
            });
  for (auto& bucket : buckets) {
    std::sort(bucket.begin(), bucket.end(), gap_set_less);
  }
  return buckets;
}

std::vector<NumericalSemigroup> brute_force_reflective_by_genus(
    Int g, Int genus_limit) {
  require_genus_within(g, genus_limit);
  std::vector<NumericalSemigroup> out;
  walk_tree(g, -1,
            [&](const std::vector<char>& member, Int m, Int F, Int genus) {
              if (genus == g && is_equidistributed(gaps_from_table(member, F),
                                                   genus == 0 ? 1 : genus)) {
                out.push_back(semigroup_from_table(member, m, F));
              }
            });
  std::sort(out.begin(), out.end(), semigroup_less);
  return out;
}

std::vector<NumericalSemigroup> brute_force_reflective_by_frobenius(
    Int F, Int genus_limit) {
  if (F < 1) {
    throw std::domain_error("Frobenius number must be positive, got " +
                            std::to_string(F));
  }
  if (F > 2 * genus_limit - 1) {
    throw LimitExceeded(
        "exhaustive enumeration requested for Frobenius number " +
        std::to_string(F) + " exceeds 2 * " + std::to_string(genus_limit) +
        " - 1, the largest value the genus limit supports");
  }
  std::vector<NumericalSemigroup> out;
  walk_tree(F, F,
            [&](const std::vector<char>& member, Int m, Int f, Int genus) {
              if (f == F &&
                  is_equidistributed(gaps_from_table(member, f), genus)) {
                out.push_back(semigroup_from_table(member, m, f));
              }
            });
  std::sort(out.begin(), out.end(), semigroup_less);
  return out;
}

void write_gap_set_cache(const std::string& path,
                         const std::vector<std::vector<GapSet>>& per_genus) {
  if (per_genus.empty()) {
    throw std::invalid_argument("cache must hold at least the genus 0 bucket");
  }
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open cache file for writing: " + path);
  }
  file << "nsg gap-set cache v1 max_genus=" << per_genus.size() - 1 << "\n";
  for (std::size_t g = 0; g < per_genus.size(); ++g) {
    for (const GapSet& gaps : per_genus[g]) {
      file << g << ":";
      for (Int v : gaps.values()) {
        file << " " << v;
      }
      file << "\n";
    }
  }
  if (!file) {
    throw std::runtime_error("failed while writing cache file: " + path);
  }
}

std::vector<std::vector<GapSet>> read_gap_set_cache(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open cache file: " + path);
  }
  std::string header;
  std::getline(file, header);
  const std::string prefix = "nsg gap-set cache v1 max_genus=";
  if (header.rfind(prefix, 0) != 0) {
    throw std::runtime_error("unrecognized cache header in " + path);
  }
  Int max_genus = -1;
  try {
    max_genus = std::stoll(header.substr(prefix.size()));
  } catch (const std::exception&) {
    throw std::runtime_error("unreadable max_genus in cache header of " +
                             path);
  }
  if (max_genus < 0) {
    throw std::runtime_error("negative max_genus in cache header of " + path);
  }
  std::vector<std::vector<GapSet>> buckets(
      static_cast<std::size_t>(max_genus) + 1);
  std::string line;
  std::size_t line_number = 1;
  while (std::getline(file, line)) {
    ++line_number;
    if (line.empty()) {
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("malformed line " + std::to_string(line_number) +
                               " in cache file " + path);
    }
    Int genus = -1;
    try {
      genus = std::stoll(line.substr(0, colon));
    } catch (const std::exception&) {
      throw std::runtime_error("unreadable genus on line " +
                               std::to_string(line_number) + " of " + path);
    }
    if (genus < 0 || genus > max_genus) {
      throw std::runtime_error("genus out of range on line " +
                               std::to_string(line_number) + " of " + path);
    }
    std::istringstream rest(line.substr(colon + 1));
    std::vector<Int> values;
    Int v = 0;
    while (rest >> v) {
      values.push_back(v);
    }
    if (!rest.eof()) {
      throw std::runtime_error("unreadable gap value on line " +
                               std::to_string(line_number) + " of " + path);
    }
    if (static_cast<Int>(values.size()) != genus) {
      throw std::runtime_error("gap count does not match genus on line " +
                               std::to_string(line_number) + " of " + path);
    }
    buckets[static_cast<std::size_t>(genus)].push_back(GapSet(values));
  }
  return buckets;
}

}  // namespace nsg
