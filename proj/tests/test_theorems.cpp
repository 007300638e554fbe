#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "sgsize/claims.hpp"
#include "sgsize/error.hpp"
#include "sgsize/notions.hpp"
#include "sgsize/report_json.hpp"
#include "sgsize/theorems.hpp"

using namespace sgsize;

namespace {
  Family top(int n) {
    return Family::of({SubsetMask::full(n)}, n);
  }

  std::vector<std::string> lines(SuiteResult const& r) {
    std::vector<std::string> out;
    for (auto const& rep : r.reports) {
      out.push_back(report_line(rep, false));
    }
    return out;
  }

  std::map<ClaimId, ClaimSummary> by_claim(SuiteResult const& r) {
    std::map<ClaimId, ClaimSummary> out;
    for (auto const& s : r.summary) {
      out[s.claim] = s;
    }
    return out;
  }
}  // namespace

TEST_CASE("claim names round trip") {
  CHECK(all_claims().size() == 40);
  for (auto id : all_claims()) {
    REQUIRE(claim_from_string(to_string(id)) == id);
  }
  CHECK(claim_from_string("L3_8b'") == ClaimId::L3_8b_prime);
  CHECK(claim_from_string("L3_8b′") == ClaimId::L3_8b_prime);
  CHECK_FALSE(claim_from_string("T9_9").has_value());
  CHECK(parse_claim_list("T1_4")
        == std::vector<ClaimId>{ClaimId::T1_4a, ClaimId::T1_4b, ClaimId::T1_4c});
  CHECK(parse_claim_list("C4_5,T1_4b,C4_5")
        == std::vector<ClaimId>{ClaimId::T1_4b, ClaimId::C4_5});
  CHECK(parse_claim_list("L3_8").size() == 8);
  CHECK(parse_claim_list("all").size() == 40);
  CHECK_THROWS_AS(parse_claim_list(""), ParseError);
  CHECK_THROWS_AS(parse_claim_list("T1_4a,nope"), ParseError);
  CHECK(to_string(Status::skipped) == "skipped");
}

TEST_CASE("evaluate checks the instance shape and the hypotheses") {
  auto const t = tables::left_zero(2);
  CHECK_THROWS_AS(evaluate(ClaimId::T1_4a, Instance{2, std::nullopt, {}, {}, {}}),
                  PreconditionError);
  CHECK_THROWS_AS(
      evaluate(ClaimId::L3_8a, Instance{2, t, mesh(top(2)), top(2), {}}),
      PreconditionError);
  CHECK(evaluate(ClaimId::T1_4a, Instance{2, t, {}, {}, {}}).status
        == Status::pass);
  auto const not_stack = Family::of({SubsetMask::of({0}, 2)}, 2);
  CHECK(evaluate(ClaimId::P2_4a, Instance{2, {}, not_stack, {}, {}}).status
        == Status::skipped);
  // {1} is not closed under addition mod 3.
  auto const F = principal_filter(SubsetMask::of({1}, 3));
  auto const v = evaluate(ClaimId::T4_4,
                          Instance{3, tables::cyclic_group(3), F, top(3), {}});
  CHECK(v.status == Status::skipped);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("every claim passes on named semigroups") {
  for (auto const& t : {tables::left_zero(3), tables::right_zero(3),
                        tables::cyclic_group(3), tables::mult_mod(3),
                        tables::null_semigroup(3), tables::mult_mod(4)}) {
    for (auto id : all_claims()) {
      if (!needs_table(id)) {
        continue;
      }
      auto const r = check_claim(id, t);
      INFO(to_string(id), " on order ", t.order());
      REQUIRE(r.status != Status::fail);
      REQUIRE(r.passed + r.skipped == r.instances);
      REQUIRE_FALSE(reverify(r));
    }
  }
}

TEST_CASE("the finite identities agree with the oracle") {
  // Thick(F, G) = { A : some y in the base of G has (base F) y inside A }.
  for (auto const& t : enumerate_semigroups(3, Dedupe::iso)) {
    auto const T = oracle::to_table(t);
    for (auto const& F : enumerate_filters(3)) {
      auto const B = oracle::to_set(filter_base(F));
      for (auto const& G : enumerate_filters(3)) {
        auto const C = oracle::to_set(filter_base(G));
        for (auto const& A : oracle::all_subsets(3)) {
          bool direct = false;
          for (int y : C) {
            direct = direct || oracle::subset(oracle::product(T, B, {y}), A);
          }
          REQUIRE(oracle::rel_thick(T, A, oracle::to_fam(F), oracle::to_fam(G))
                  == direct);
        }
      }
    }
  }
}

TEST_CASE("mesh statements: brute force and constructive scans agree") {
  for (int n = 1; n <= 2; ++n) {
    auto const brute = check_prop_2_4(n, FamilyScan::brute_force);
    auto const cons  = check_prop_2_4(n, FamilyScan::constructive);
    REQUIRE(brute.size() == 8);
    REQUIRE(cons.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(brute[i].status == Status::pass);
      CHECK(cons[i].status == Status::pass);
      CHECK(brute[i].claim == cons[i].claim);
      CHECK(brute[i].passed == cons[i].passed);
    }
  }
  auto const three = check_prop_2_4(3, FamilyScan::constructive);
  for (auto const& r : three) {
    CHECK(r.status == Status::pass);
  }
  // For odd n the majority sets form a self-dual stack that is no filter.
  CHECK(three[5].claim == ClaimId::P2_4f);
  CHECK(three[5].detail.find("self-dual non-filter") != std::string::npos);
  CHECK(three[5].detail.find("unexpected") == std::string::npos);
  CHECK_THROWS_AS(check_prop_2_4(5, FamilyScan::constructive), SizeLimitError);
}

TEST_CASE("suite through order 2") {
  SuiteConfig cfg;
  cfg.max_order = 2;
  auto const r  = run_suite(cfg);
  CHECK_FALSE(r.any_fail());
  CHECK(r.tables_per_order == std::vector<std::size_t>{1, 8});
  CHECK(r.summary.size() == 40);
  for (auto const& s : r.summary) {
    CHECK(s.universes_failed == 0);
    CHECK_FALSE(s.first_counterexample.has_value());
  }
  cfg.jobs      = 3;
  auto const r3 = run_suite(cfg);
  CHECK(lines(r) == lines(r3));
  CHECK(suite_summary_json(r, false) == suite_summary_json(r3, false));
}

TEST_CASE("suite through order 3 reproduces the pinned instance counts") {
  SuiteConfig cfg;
  cfg.max_order = 3;
  auto const r  = run_suite(cfg);
  REQUIRE_FALSE(r.any_fail());
  CHECK(r.tables_per_order == std::vector<std::size_t>{1, 8, 113});
  auto const s = by_claim(r);
  CHECK(s.at(ClaimId::P3_2).instances == 36741);
  CHECK(s.at(ClaimId::P3_5).instances == 262675);
  CHECK(s.at(ClaimId::L3_8a).instances == 5610);
  CHECK(s.at(ClaimId::L3_8d_prime).instances == 5610);
  CHECK(s.at(ClaimId::T3_11).instances == 38976);
  CHECK(s.at(ClaimId::C3_12a).instances == 816);
  CHECK(s.at(ClaimId::T4_2).instances == 36741);
  CHECK(s.at(ClaimId::P2_4c).instances == 596);
  CHECK(s.at(ClaimId::P2_4g).instances == 293);
  // Strict inclusions occur for the two one-sided statements.
  CHECK(s.at(ClaimId::P4_3a).strict == 710);
  CHECK(s.at(ClaimId::P4_3d).strict == 710);
  CHECK(s.at(ClaimId::P4_3a).first_strict_example.has_value());
}

TEST_CASE("suite limits") {
  SuiteConfig cfg;
  cfg.max_order = 4;
  CHECK_THROWS_AS(run_suite(cfg), SizeLimitError);
  cfg.dedupe    = Dedupe::iso;
  cfg.max_order = 6;
  CHECK_THROWS_AS(run_suite(cfg), SizeLimitError);
}

TEST_CASE("suite restricted to a few claims at order 4 up to isomorphism") {
  SuiteConfig cfg;
  cfg.max_order = 4;
  cfg.dedupe    = Dedupe::iso;
  cfg.claims    = parse_claim_list("T1_4,C2_6,P3_7,L3_8");
  auto const r  = run_suite(cfg);
  CHECK_FALSE(r.any_fail());
  CHECK(r.tables_per_order == std::vector<std::size_t>{1, 5, 24, 188});
  CHECK(r.summary.size() == cfg.claims.size());
}

TEST_CASE("the converse search finds nothing in small orders") {
  struct Pin {
    int           order;
    std::uint64_t tables, universes, sets;
  };
  for (auto const& p : {Pin{1, 1, 1, 2}, Pin{2, 6, 14, 54}, Pin{3, 30, 142, 1078},
                        Pin{4, 218, 1999, 30790}}) {
    auto const r = search_question_4_6(p.order, std::nullopt);
    INFO("order ", p.order);
    CHECK_FALSE(r.candidate.has_value());
    CHECK_FALSE(r.partial);
    CHECK(r.tables_examined == p.tables);
    CHECK(r.universes_examined == p.universes);
    CHECK(r.sets_examined == p.sets);
  }
}

TEST_CASE("the converse search honours its budget") {
  auto const r = search_question_4_6(3, 10);
  CHECK(r.partial);
  CHECK(r.universes_examined == 10);
  CHECK_FALSE(r.candidate.has_value());
  auto const json = search_report_json(r, false);
  CHECK(json.find("\"partial\": true") != std::string::npos);
  CHECK(json.find("elapsed") == std::string::npos);
  CHECK_THROWS_AS(search_question_4_6(6, std::nullopt), SizeLimitError);
}

TEST_CASE("reverification of a search candidate uses the literal sweeps") {
  // Exhaustive over order 3: no (table, filter, set, point) is a genuine
  // candidate, matching the search outcome.
  for (auto const& t : enumerate_semigroups(3, Dedupe::iso)) {
    for (auto const& F : enumerate_filters(3)) {
      auto const base = filter_base(F);
      if (!is_subsemigroup(t, base)) {
        continue;
      }
      for (int y : base.elements()) {
        for (unsigned a = 0; a < 8; ++a) {
          REQUIRE_FALSE(reverify(SearchCandidate{t, F, SubsetMask(a, 3), y}));
        }
      }
    }
  }
}
