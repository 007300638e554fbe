#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sgsize/error.hpp"
#include "sgsize/setfam.hpp"

using namespace sgsize;

namespace {
  std::vector<Family> every_family(int n) {
    std::vector<Family> out;
    for (auto const& F : oracle::all_families(n)) {
      out.push_back(oracle::to_family(F, n));
    }
    return out;
  }

  Family random_family(std::mt19937_64& rng, int n) {
    auto const width = std::size_t{1} << n;
    auto       bits  = rng();
    if (width < 64) {
      bits &= (Family::bits_type{1} << width) - 1;
    }
    return Family(bits, n);
  }
}  // namespace

TEST_CASE("subset masks") {
  auto const A = SubsetMask::of({0, 2}, 4);
  CHECK(A.bits() == 0b0101);
  CHECK(A.complement() == SubsetMask::of({1, 3}, 4));
  CHECK(A.count() == 2);
  CHECK(A.elements() == std::vector<int>{0, 2});
  CHECK(to_string(A) == "{0,2}");
  CHECK(to_string(SubsetMask::empty(3)) == "{}");
  CHECK(SubsetMask::full(16).count() == 16);
  CHECK_THROWS_AS(SubsetMask(0b1000, 3), PreconditionError);
  CHECK_THROWS_AS(SubsetMask(0, 17), SizeLimitError);
  CHECK_THROWS_AS(A | SubsetMask::empty(3), PreconditionError);
}

TEST_CASE("families reject oversize ground sets") {
  CHECK_THROWS_AS(Family(0, 7), SizeLimitError);
  CHECK_THROWS_AS(Family(Family::bits_type{1} << 8, 3), PreconditionError);
  CHECK_THROWS_AS(Family::none(2) | Family::none(3), PreconditionError);
  CHECK_THROWS_AS(enumerate_stacks(5), SizeLimitError);
  CHECK_THROWS_AS(enumerate_filters(7), SizeLimitError);
}

TEST_CASE("classification agrees with the definitions on every family, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& F : oracle::all_families(n)) {
      auto const c = classify(oracle::to_family(F, n));
      CHECK(c.is_stack == oracle::is_stack(F, n));
      CHECK(c.is_filter == oracle::is_filter(F, n));
      CHECK(c.is_grill == oracle::is_grill(F, n));
      CHECK(c.is_ultrafilter == oracle::is_ultrafilter(F, n));
    }
  }
}

TEST_CASE("classification agrees with the definitions on random families, n = 4") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    auto F = random_family(rng, 4);
    if (trial % 2 == 0) {
      F = upward_closure(F);  // hit the stack cases often
    }
    auto const O = oracle::to_fam(F);
    auto const c = classify(F);
    REQUIRE(c.is_stack == oracle::is_stack(O, 4));
    REQUIRE(c.is_filter == oracle::is_filter(O, 4));
    REQUIRE(c.is_grill == oracle::is_grill(O, 4));
  }
}

TEST_CASE("most specific class") {
  CHECK(classify(Family::none(2)).most_specific() == FamilyClass::arbitrary);
  CHECK(classify(Family::power_set(2)).most_specific()
        == FamilyClass::arbitrary);
  auto const U = Family::of({SubsetMask::of({0}, 2), SubsetMask::full(2)}, 2);
  CHECK(classify(U).most_specific() == FamilyClass::ultrafilter);
  auto const S = Family::of({SubsetMask::full(2)}, 2);
  CHECK(classify(S).most_specific() == FamilyClass::filter);
  CHECK(classify(mesh(S)).most_specific() == FamilyClass::grill);
  CHECK(to_string(FamilyClass::grill) == "grill");
}

TEST_CASE("mesh, Schmidt mesh and intersections match the set oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& F : every_family(n)) {
      auto const O = oracle::to_fam(F);
      CHECK(oracle::to_fam(mesh(F)) == oracle::mesh(O, n));
      CHECK(oracle::to_fam(schmidt_mesh(F)) == oracle::meeting_every(O, n));
      CHECK(mesh(mesh(F)) == F);
    }
  }
  auto const stacks = enumerate_stacks(3);
  for (auto const& F : stacks) {
    for (auto const& G : stacks) {
      CHECK(oracle::to_fam(intersection_family(F, G))
            == oracle::intersections(oracle::to_fam(F), oracle::to_fam(G)));
    }
  }
}

TEST_CASE("the two meshes agree on stacks but not in general") {
  for (auto const& F : enumerate_stacks(4)) {
    REQUIRE(schmidt_mesh(F) == mesh(F));
  }
  // {{0}} is not upward closed: the empty set has complement {0,1} outside
  // it, but meets no member.
  auto const F = Family::of({SubsetMask::of({0}, 2)}, 2);
  CHECK(schmidt_mesh(F) != mesh(F));
  CHECK(mesh(F).contains(SubsetMask::empty(2)));
  CHECK_FALSE(schmidt_mesh(F).contains(SubsetMask::empty(2)));
  CHECK_FALSE(mesh(F).contains(SubsetMask::of({1}, 2)));
}

TEST_CASE("enumerated universes match brute-force counts") {
  // Counts of upward closed families without the empty set, n = 1..4.
  std::vector<std::size_t> const stacks = {1, 4, 18, 166};
  for (int n = 1; n <= 4; ++n) {
    auto const S = enumerate_stacks(n);
    CHECK(S.size() == stacks[n - 1]);
    for (auto const& F : S) {
      REQUIRE(is_stack(F));
    }
    CHECK(enumerate_grills(n).size()
          == std::count_if(S.begin(), S.end(), [](Family const& F) {
               return is_grill(F);
             }));
  }
  for (int n = 1; n <= 3; ++n) {
    auto const all = oracle::all_families(n);
    CHECK(enumerate_stacks(n).size()
          == static_cast<std::size_t>(std::count_if(
              all.begin(), all.end(), [n](auto const& F) {
                return oracle::is_stack(F, n);
              })));
  }
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_filters(n).size() == (std::size_t{1} << n) - 1);
    CHECK(enumerate_ultrafilters(n).size() == static_cast<std::size_t>(n));
    for (auto const& U : enumerate_ultrafilters(n)) {
      REQUIRE(is_ultrafilter(U));
    }
  }
}

TEST_CASE("enumeration order is deterministic and duplicate free") {
  auto const a = enumerate_stacks(4);
  auto const b = enumerate_stacks(4);
  CHECK(a == b);
  std::set<Family::bits_type> seen;
  for (auto const& F : a) {
    seen.insert(F.bits());
  }
  CHECK(seen.size() == a.size());
  std::size_t visited = 0;
  for_each_stack(3, [&](Family const&) { ++visited; });
  CHECK(visited == 18);
}

TEST_CASE("mesh reverses inclusion between stacks") {
  std::mt19937_64 rng(7);
  auto const      S = enumerate_stacks(4);
  std::uniform_int_distribution<std::size_t> pick(0, S.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    auto const& F = S[pick(rng)];
    auto const& G = S[pick(rng)];
    if (F.subset_of(G)) {
      REQUIRE(mesh(G).subset_of(mesh(F)));
    }
    REQUIRE(is_stack(mesh(F)));
    // Filters and grills are exchanged by the mesh.
    REQUIRE(is_filter(F) == is_grill(mesh(F)));
  }
}

TEST_CASE("minimal members and upward closure") {
  auto const F = Family::of({SubsetMask::of({0}, 3), SubsetMask::of({1, 2}, 3)},
                            3);
  auto const U = upward_closure(F);
  CHECK(U.count() == 5);
  CHECK(minimal_members(U)
        == std::vector<SubsetMask>{SubsetMask::of({0}, 3),
                                   SubsetMask::of({1, 2}, 3)});
  CHECK(upward_closure(U) == U);
}
