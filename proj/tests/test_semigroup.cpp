#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sgsize/error.hpp"
#include "sgsize/semigroup.hpp"

using namespace sgsize;

namespace {
  CayleyTable from(oracle::Table const& T) {
    return CayleyTable::from_rows(T);
  }

  std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }
}  // namespace

TEST_CASE("table construction checks ranges") {
  CHECK_THROWS_AS(CayleyTable::from_rows({{0, 2}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(CayleyTable::from_rows({{0, 1}, {0}}), PreconditionError);
  CHECK_THROWS_AS(CayleyTable::from_rows({}), SizeLimitError);
  auto const t = tables::cyclic_group(3);
  CHECK(t.order() == 3);
  CHECK(t(2, 2) == 1);
  CHECK(t.rows() == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

TEST_CASE("associativity violations are the least triple") {
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_operation(n, [&](oracle::Table const& T) {
      auto const v = find_associativity_violation(from(T));
      auto const o = oracle::first_violation(T);
      REQUIRE(v.has_value() == o.has_value());
      if (v) {
        REQUIRE(v->i == o->i);
        REQUIRE(v->j == o->j);
        REQUIRE(v->k == o->k);
      }
      ++checked;
    });
  }
  CHECK(checked == 1 + 16 + 19683);

  auto const bad = CayleyTable::from_rows({{1, 0}, {0, 0}});
  auto const v   = find_associativity_violation(bad);
  REQUIRE(v.has_value());
  CHECK(*v == AssociativityViolation{0, 0, 1});
  CHECK_FALSE(is_associative(bad));
  CHECK_THROWS_AS(require_semigroup(bad), PreconditionError);
  CHECK_NOTHROW(require_semigroup(tables::mult_mod(5)));
}

TEST_CASE("raw enumeration matches the brute-force scan of all operations") {
  for (int n = 1; n <= 3; ++n) {
    auto const oracle_tables = oracle::all_semigroups(n);
    auto const ours          = enumerate_semigroups(n, Dedupe::none);
    REQUIRE(ours.size() == oracle_tables.size());
    for (std::size_t i = 0; i < ours.size(); ++i) {
      REQUIRE(oracle::to_table(ours[i]) == oracle_tables[i]);
    }
  }
  CHECK(enumerate_semigroups(2, Dedupe::none).size() == 8);
  CHECK(enumerate_semigroups(3, Dedupe::none).size() == 113);
}

TEST_CASE("isomorphism classes") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(enumerate_semigroups(n, Dedupe::iso).size()
          == oracle::count_classes(oracle::all_semigroups(n)));
  }
  // Semigroups of order 1..5 up to relabeling (anti-isomorphic pairs counted
  // separately).
  CHECK(enumerate_semigroups(1, Dedupe::iso).size() == 1);
  CHECK(enumerate_semigroups(2, Dedupe::iso).size() == 5);
  CHECK(enumerate_semigroups(3, Dedupe::iso).size() == 24);
  CHECK(enumerate_semigroups(4, Dedupe::iso).size() == 188);
  CHECK_THROWS_AS(enumerate_semigroups(4, Dedupe::none), SizeLimitError);
  CHECK_THROWS_AS(enumerate_semigroups(6, Dedupe::iso), SizeLimitError);
}

TEST_CASE("iso representatives are canonical and cover every class") {
  auto const reps = enumerate_semigroups(3, Dedupe::iso);
  std::set<CayleyTable> rep_set(reps.begin(), reps.end());
  for (auto const& t : reps) {
    REQUIRE(is_canonical(t));
  }
  for (auto const& t : enumerate_semigroups(3, Dedupe::none)) {
    REQUIRE(rep_set.count(canonical_form(t)) == 1);
  }
}

TEST_CASE("relabeling matches the oracle and preserves associativity") {
  std::mt19937_64 rng(42);
  auto const      reps = enumerate_semigroups(4, Dedupe::iso);
  for (auto const& t : reps) {
    auto p = identity_perm(4);
    std::shuffle(p.begin(), p.end(), rng);
    auto const r = relabel(t, p);
    REQUIRE(oracle::to_table(r) == oracle::relabel(oracle::to_table(t), p));
    REQUIRE(is_associative(r));
    REQUIRE(canonical_form(r) == t);
  }
}

TEST_CASE("for_each_semigroup stops early") {
  int seen = 0;
  for_each_semigroup(3, Dedupe::none, [&](CayleyTable const&) {
    return ++seen < 10;
  });
  CHECK(seen == 10);
}

TEST_CASE("translates, products and ideals match the oracle") {
  for (auto const& t : enumerate_semigroups(3, Dedupe::none)) {
    auto const T = oracle::to_table(t);
    for (unsigned a = 0; a < 8; ++a) {
      SubsetMask const A(a, 3);
      auto const       OA = oracle::to_set(A);
      for (int h = 0; h < 3; ++h) {
        REQUIRE(oracle::to_set(preimage_translate(t, h, A))
                == oracle::preimage(T, h, OA));
      }
      for (unsigned b = 0; b < 8; ++b) {
        SubsetMask const B(b, 3);
        REQUIRE(oracle::to_set(set_product(t, A, B))
                == oracle::product(T, OA, oracle::to_set(B)));
      }
      REQUIRE(is_left_ideal(t, A) == oracle::is_left_ideal(T, OA));
    }
    auto const mins = minimal_left_ideals(t);
    auto const omin = oracle::minimal_left_ideals(T);
    REQUIRE(mins.size() == omin.size());
    oracle::Set K;
    for (std::size_t i = 0; i < mins.size(); ++i) {
      REQUIRE(oracle::to_set(mins[i]) == omin[i]);
      K = oracle::unite(K, omin[i]);
    }
    REQUIRE(oracle::to_set(smallest_ideal(t)) == K);
    REQUIRE(is_two_sided_ideal(t, smallest_ideal(t)));
  }
}

TEST_CASE("minimal left ideals of named semigroups") {
  // In a right zero semigroup every singleton is a left ideal.
  CHECK(minimal_left_ideals(tables::right_zero(3)).size() == 3);
  // A left zero semigroup has S as its only left ideal.
  CHECK(minimal_left_ideals(tables::left_zero(3))
        == std::vector<SubsetMask>{SubsetMask::full(3)});
  CHECK(minimal_left_ideals(tables::null_semigroup(4))
        == std::vector<SubsetMask>{SubsetMask::singleton(0, 4)});
  CHECK(smallest_ideal(tables::cyclic_group(5)) == SubsetMask::full(5));
  CHECK(principal_left_ideal(tables::null_semigroup(3), 2)
        == SubsetMask::of({0, 2}, 3));
}

TEST_CASE("idempotents and ideal predicates") {
  CHECK(idempotents(tables::mult_mod(6)) == SubsetMask::of({0, 1, 3, 4}, 6));
  auto const t = tables::mult_mod(4);
  CHECK(is_subsemigroup(t, SubsetMask::of({0, 2}, 4)));
  CHECK_FALSE(is_subsemigroup(t, SubsetMask::empty(4)));
  CHECK(is_two_sided_ideal(t, SubsetMask::of({0, 2}, 4)));
  CHECK(satisfies(t, {SubsetMask::of({0}, 4), IdealKind::minimal_left}));
  CHECK_FALSE(satisfies(t, {SubsetMask::of({0, 2}, 4), IdealKind::minimal_left}));
  CHECK(satisfies(t, {SubsetMask::of({0, 2}, 4), IdealKind::right}));
}
