#include <algorithm>
#include <vector>

#include "doctest.h"
#include "nsg/semigroup.hpp"

using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

const std::vector<Int> kGaps479 = {1, 2, 3, 5, 6, 10};

}  // namespace

TEST_CASE("from_generators computes gaps and invariants") {
  const auto s = NumericalSemigroup::from_generators({4, 7, 9});
  CHECK(s.gaps().values() == kGaps479);
  CHECK(s.genus() == 6);
  CHECK(s.frobenius() == 10);
  CHECK(s.multiplicity() == 4);
  CHECK(s.embedding_dimension() == 3);
  CHECK(s.minimal_generators() == std::vector<Int>{4, 7, 9});
}

TEST_CASE("from_generators reduces redundant generators") {
  const auto a = NumericalSemigroup::from_generators({2, 3});
  const auto b = NumericalSemigroup::from_generators({2, 3, 4, 7});
  CHECK(a == b);
  CHECK(b.minimal_generators() == std::vector<Int>{2, 3});
  const auto c = NumericalSemigroup::from_generators({9, 4, 7, 4, 8});
  CHECK(c.minimal_generators() == std::vector<Int>{4, 7, 9});
}

TEST_CASE("the full semigroup has genus 0 and Frobenius number -1") {
  const auto s = NumericalSemigroup::from_generators({1});
  CHECK(s.genus() == 0);
  CHECK(s.frobenius() == -1);
  CHECK(s.multiplicity() == 1);
  CHECK(s.embedding_dimension() == 1);
  CHECK(s.gaps().empty());
  CHECK(s.contains(0));
  CHECK(s.contains(12345));
  CHECK_FALSE(s.contains(-1));
  CHECK(nsg::apery_set(s, 1) == std::vector<Int>{0});
  CHECK_THROWS_AS(nsg::pseudo_frobenius(s), nsg::GenusZero);
  CHECK_THROWS_AS(nsg::wilf_holds(s), nsg::GenusZero);
}

TEST_CASE("membership agrees with the gap set") {
  const auto s = NumericalSemigroup::from_generators({4, 7, 9});
  for (Int z = -3; z <= 30; ++z) {
    const bool expected = z >= 0 && !(z <= 10 && s.gaps().contains(z));
    CHECK(s.contains(z) == expected);
  }
  CHECK(s.contains(11));
  CHECK_FALSE(s.contains(10));
  CHECK_FALSE(s.contains(-4));
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), nsg::EmptyInput);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 4}),
                  nsg::GcdNotOne);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({6, 9}),
                  nsg::GcdNotOne);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}),
                  std::invalid_argument);
}

TEST_CASE("Apery sets") {
  const auto s = NumericalSemigroup::from_generators({4, 7, 9});
  CHECK(nsg::apery_set(s, 4) == std::vector<Int>{0, 7, 9, 14});

  const auto mcnugget = NumericalSemigroup::from_generators({6, 9, 20});
  CHECK(mcnugget.frobenius() == 43);
  CHECK(mcnugget.genus() == 22);
  CHECK(nsg::apery_set(mcnugget, 6) ==
        std::vector<Int>{0, 9, 20, 29, 40, 49});

  SUBCASE("t must be a nonzero element") {
    CHECK_THROWS_AS(nsg::apery_set(s, 5), nsg::NotAnElement);
    CHECK_THROWS_AS(nsg::apery_set(s, 0), nsg::NotAnElement);
    CHECK_THROWS_AS(nsg::apery_set(s, -4), nsg::NotAnElement);
  }

  SUBCASE("every element is least in its residue class") {
    const auto ap = nsg::apery_set(mcnugget, 9);
    REQUIRE(ap.size() == 9);
    std::vector<bool> residue_seen(9, false);
    for (Int w : ap) {
      CHECK(mcnugget.contains(w));
      CHECK_FALSE(mcnugget.contains(w - 9));
      residue_seen[static_cast<std::size_t>(w % 9)] = true;
    }
    CHECK(std::count(residue_seen.begin(), residue_seen.end(), true) == 9);
  }
}

TEST_CASE("invariants_from_apery recovers Frobenius number and genus") {
  const auto inv = nsg::invariants_from_apery({0, 7, 9, 14}, 4);
  CHECK(inv.first == 10);
  CHECK(inv.second == 6);

  const auto full = nsg::invariants_from_apery({0}, 1);
  CHECK(full.first == -1);
  CHECK(full.second == 0);

  SUBCASE("agrees with the semigroup for several fixtures") {
    for (const auto& gens : {std::vector<Int>{4, 7, 9},
                             std::vector<Int>{6, 9, 20},
                             std::vector<Int>{3, 13},
                             std::vector<Int>{5, 7, 8, 9}}) {
      const auto s = NumericalSemigroup::from_generators(gens);
      for (Int t : s.minimal_generators()) {
        const auto inv2 = nsg::invariants_from_apery(nsg::apery_set(s, t), t);
        CHECK(inv2.first == s.frobenius());
        CHECK(inv2.second == s.genus());
      }
    }
  }

  SUBCASE("malformed sets are rejected") {
    CHECK_THROWS_AS(nsg::invariants_from_apery({0, 7, 9}, 4),
                    nsg::MalformedApery);
    CHECK_THROWS_AS(nsg::invariants_from_apery({0, 7, 9, 13}, 4),
                    nsg::MalformedApery);
    CHECK_THROWS_AS(nsg::invariants_from_apery({0, 7, 9, -2}, 4),
                    nsg::MalformedApery);
    CHECK_THROWS_AS(nsg::invariants_from_apery({1, 7, 9, 14}, 4),
                    nsg::MalformedApery);
    CHECK_THROWS_AS(nsg::invariants_from_apery({0, 7, 9, 14}, 0),
                    nsg::MalformedApery);
  }
}

TEST_CASE("pseudo-Frobenius elements and type") {
  const auto s = NumericalSemigroup::from_generators({4, 7, 9});
  CHECK(nsg::pseudo_frobenius(s) == std::vector<Int>{5, 10});

  const auto half = NumericalSemigroup::from_generators({2, 3});
  CHECK(nsg::pseudo_frobenius(half) == std::vector<Int>{1});

  const auto t34 = NumericalSemigroup::from_generators({3, 4});
  CHECK(nsg::pseudo_frobenius(t34) == std::vector<Int>{5});

  SUBCASE("the Frobenius number is always pseudo-Frobenius") {
    for (const auto& gens : {std::vector<Int>{6, 9, 20},
                             std::vector<Int>{5, 7, 11},
                             std::vector<Int>{4, 9, 10, 15}}) {
      const auto t = NumericalSemigroup::from_generators(gens);
      const auto pf = nsg::pseudo_frobenius(t);
      REQUIRE_FALSE(pf.empty());
      CHECK(pf.back() == t.frobenius());
    }
  }
}

TEST_CASE("symmetry predicates") {
  const auto sym = NumericalSemigroup::from_generators({3, 4});
  CHECK(nsg::is_symmetric(sym));
  CHECK_FALSE(nsg::is_pseudo_symmetric(sym));
  CHECK(nsg::is_irreducible(sym));

  const auto ps = NumericalSemigroup::from_generators({4, 7, 9});
  CHECK_FALSE(nsg::is_symmetric(ps));
  CHECK(nsg::is_pseudo_symmetric(ps));
  CHECK(nsg::is_irreducible(ps));

  const auto sym2 = NumericalSemigroup::from_generators({3, 11});
  CHECK(nsg::is_symmetric(sym2));

  const auto ps2 = NumericalSemigroup::from_generators({3, 10, 17});
  CHECK_FALSE(nsg::is_symmetric(ps2));
  CHECK(nsg::is_pseudo_symmetric(ps2));

  // Gaps {1,2,3,4}: F = 4 is neither 2g-1 = 7 nor 2g-2 = 6.
  const auto neither = NumericalSemigroup::from_generators({5, 6, 7, 8, 9});
  CHECK_FALSE(nsg::is_symmetric(neither));
  CHECK_FALSE(nsg::is_pseudo_symmetric(neither));
  CHECK_FALSE(nsg::is_irreducible(neither));

  const auto neither2 = NumericalSemigroup::from_generators({4, 9, 10, 15});
  CHECK_FALSE(nsg::is_irreducible(neither2));

  const auto full = NumericalSemigroup::from_generators({1});
  CHECK_THROWS_AS(nsg::is_symmetric(full), nsg::GenusZero);
  CHECK_THROWS_AS(nsg::is_pseudo_symmetric(full), nsg::GenusZero);
  CHECK_THROWS_AS(nsg::is_irreducible(full), nsg::GenusZero);
}

TEST_CASE("Wilf inequality on fixtures") {
  for (const auto& gens : {std::vector<Int>{4, 7, 9},
                           std::vector<Int>{6, 9, 20},
                           std::vector<Int>{2, 3},
                           std::vector<Int>{13, 14, 15, 16, 17}}) {
    CHECK(nsg::wilf_holds(NumericalSemigroup::from_generators(gens)));
  }
}

TEST_CASE("gap sets determine equality") {
  const auto a = NumericalSemigroup::from_generators({3, 5});
  const auto b = NumericalSemigroup::from_generators({3, 7});
  CHECK(a == a);
  CHECK_FALSE(a == b);
  CHECK(a.gaps().values() == std::vector<Int>{1, 2, 4, 7});
  CHECK(b.gaps().values() == std::vector<Int>{1, 2, 4, 5, 8, 11});
}

TEST_CASE("basic gap bounds hold on assorted semigroups") {
  for (const auto& gens :
       {std::vector<Int>{4, 7, 9}, std::vector<Int>{6, 9, 20},
        std::vector<Int>{3, 13}, std::vector<Int>{11, 13},
        std::vector<Int>{5, 6, 7, 8, 9}, std::vector<Int>{2, 101}}) {
    const auto s = NumericalSemigroup::from_generators(gens);
    const Int g = s.genus();
    const Int F = s.frobenius();
    CHECK(g <= F);
    CHECK(F <= 2 * g - 1);
    CHECK(s.gaps().max_value() == F);
    CHECK(s.multiplicity() >= 2);
    CHECK(s.embedding_dimension() <= s.multiplicity());
  }
}
