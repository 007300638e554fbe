#ifndef SGSIZE_THEOREMS_HPP_
#define SGSIZE_THEOREMS_HPP_

// Checking statements over universes of instances: per-table checkers, the
// suite runner over enumerated semigroups and the counterexample search for
// the converse of the point-of-closure characterization.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgsize/claims.hpp"
#include "sgsize/semigroup.hpp"
#include "sgsize/setfam.hpp"

namespace sgsize {

  struct Counterexample {
    Instance                  instance;
    std::optional<SubsetMask> witness;
    std::string               note;
  };

  // Where a report's instances came from.
  struct Universe {
    int                        order = 0;
    std::optional<std::size_t> table_index;  // position in the enumeration
    std::optional<CayleyTable> table;
    std::string                scope;  // e.g. "filter pairs"
  };

  struct CheckReport {
    ClaimId                       claim{};
    Universe                      universe;
    Status                        status = Status::pass;
    std::optional<Counterexample> counterexample;  // first failing instance
    std::uint64_t                 instances = 0;
    std::uint64_t                 passed    = 0;
    std::uint64_t                 skipped   = 0;
    // Instances in which an inclusion was witnessed to be strict, for the
    // statements that record strictness.
    std::uint64_t                 strict = 0;
    std::optional<Counterexample> strict_example;
    std::string                   detail;
    std::chrono::nanoseconds      elapsed{0};
  };

  // Re-evaluates the stored counterexample from scratch; true iff it still
  // fails.
  bool reverify(CheckReport const& report);

  ////////////////////////////////////////////////////////////////////////
  // Checkers
  ////////////////////////////////////////////////////////////////////////

  enum class FamilyScan {
    constructive,  // enumerated stacks, filters and ultrafilters
    brute_force    // every one of the 2^(2^n) families, n <= 4
  };

  // The eight mesh operator statements over the ground set {0..n-1}, n <= 4.
  std::vector<CheckReport> check_prop_2_4(int n, FamilyScan scan);

  // All instances of `id` over table t: the single table, every filter,
  // filter pair or triple, or every stack pair, as the claim requires.  Stack
  // universes are used up to order 3 and filter universes above it.
  CheckReport check_claim(ClaimId id, CayleyTable const& t);

  std::vector<CheckReport> check_thm_1_4(CayleyTable const& t);
  std::vector<CheckReport> check_lemma_3_8(CayleyTable const& t,
                                           Family const&      F,
                                           Family const&      G);
  std::vector<CheckReport> check_thm_3_10(CayleyTable const& t,
                                          Family const&      F,
                                          Family const&      G);
  CheckReport              check_thm_3_11(CayleyTable const& t,
                                          Family const&      F,
                                          Family const&      G,
                                          Family const&      H);
  std::vector<CheckReport> check_cor_3_12(CayleyTable const& t,
                                          Family const&      F);
  // T4_2, P4_3a-d, T4_4 and C4_5 on a pair of filters.
  std::vector<CheckReport> check_sec4(CayleyTable const& t,
                                      Family const&      F,
                                      Family const&      G);

  ////////////////////////////////////////////////////////////////////////
  // Suite
  ////////////////////////////////////////////////////////////////////////

  struct SuiteConfig {
    int                  max_order = 2;
    std::vector<ClaimId> claims;  // empty means all
    Dedupe               dedupe = Dedupe::none;
    int                  jobs   = 1;
  };

  struct ClaimSummary {
    ClaimId                       claim{};
    std::uint64_t                 universes_passed  = 0;
    std::uint64_t                 universes_failed  = 0;
    std::uint64_t                 universes_skipped = 0;
    std::uint64_t                 instances         = 0;
    std::uint64_t                 strict            = 0;
    std::optional<Counterexample> first_counterexample;
    std::optional<Counterexample> first_strict_example;
  };

  struct SuiteResult {
    SuiteConfig               config;
    std::vector<std::size_t>  tables_per_order;  // index 0 is order 1
    std::vector<CheckReport>  reports;
    std::vector<ClaimSummary> summary;  // one per selected claim, in order
    std::chrono::nanoseconds  elapsed{0};

    [[nodiscard]] bool any_fail() const noexcept;
  };

  // Mesh statements run by brute force for n <= 2 and constructively for
  // 3 <= n <= 4.  The reports are in a fixed order independent of `jobs`.
  // Throws SizeLimitError if the enumeration limits are exceeded.
  SuiteResult run_suite(SuiteConfig const& config);

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  // A set A with A in Syn(F, Thick(F, q_y)) for a point y of the closure of F
  // while A is not in PS(F, F).
  struct SearchCandidate {
    CayleyTable table;
    Family      F;
    SubsetMask  A;
    int         y;
  };

  struct SearchReport {
    int                            max_order = 0;
    std::optional<std::uint64_t>   budget;
    std::uint64_t                  tables_examined    = 0;
    std::uint64_t                  universes_examined = 0;  // (table, F)
    std::uint64_t                  sets_examined      = 0;
    bool                           partial            = false;
    std::optional<SearchCandidate> candidate;
    bool                           candidate_reverified = false;
    std::chrono::nanoseconds       elapsed{0};
  };

  // Tables up to isomorphism by increasing order, filters whose base is a
  // subsemigroup by base size descending, sets by size ascending.  Stops at
  // the first candidate or when `budget` (table, filter) universes have been
  // examined.  max_order <= 5.
  SearchReport search_question_4_6(int                          max_order,
                                   std::optional<std::uint64_t> budget);

  // Recomputes both sides with the literal quantifier sweeps.
  bool reverify(SearchCandidate const& candidate);

}  // namespace sgsize

#endif  // SGSIZE_THEOREMS_HPP_
