#ifndef SGSIZE_CLAIMS_HPP_
#define SGSIZE_CLAIMS_HPP_

// One decision procedure per checked statement.  `evaluate` takes a single
// instance (a ground set or table together with the families the statement
// quantifies over), computes both sides of the statement independently and
// compares them.  Universes of instances are iterated by the suite.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgsize/semigroup.hpp"
#include "sgsize/setfam.hpp"

namespace sgsize {

  enum class ClaimId : std::uint8_t {
    T1_4a,
    T1_4b,
    T1_4c,
    P2_4a,
    P2_4b,
    P2_4c,
    P2_4d,
    P2_4e,
    P2_4f,
    P2_4g,
    P2_4h,
    C2_6,
    P3_2,
    P3_5,
    P3_7a,
    P3_7b,
    P3_7c,
    P3_7d,
    L3_8a,
    L3_8b,
    L3_8c,
    L3_8d,
    L3_8a_prime,
    L3_8b_prime,
    L3_8c_prime,
    L3_8d_prime,
    T3_10a,
    T3_10b,
    T3_11,
    C3_12a,
    C3_12b,
    C3_12c,
    C3_12d,
    T4_2,
    P4_3a,
    P4_3b,
    P4_3c,
    P4_3d,
    T4_4,
    C4_5
  };

  std::span<ClaimId const> all_claims();

  std::string_view to_string(ClaimId id);
  // Accepts the names produced by to_string; a trailing ' or the Unicode
  // prime may stand for "_prime".
  std::optional<ClaimId> claim_from_string(std::string_view name);

  // Comma separated list of claim names, group names ("P2_4", "L3_8", ...)
  // or "all".  The result is sorted and duplicate free.  Throws ParseError.
  std::vector<ClaimId> parse_claim_list(std::string_view list);

  // What a single instance of a claim consists of.
  enum class Domain {
    family,              // F on a ground set
    family_pair,         // F, G on a ground set
    table,               // a table
    table_filter,        // a table and a filter F
    table_filter_pair,   // a table and filters F, G
    table_filter_triple, // a table and filters F, G, H
    table_stack_pair,    // a table and stacks F, G
    table_stack_chain    // a table and stacks F, G, H with F inside G
  };

  Domain domain(ClaimId id);
  bool   needs_table(ClaimId id);

  struct Instance {
    int                        n;
    std::optional<CayleyTable> table;
    std::optional<Family>      F;
    std::optional<Family>      G;
    std::optional<Family>      H;
  };

  enum class Status { pass, fail, skipped };

  std::string_view to_string(Status s);

  struct Verdict {
    Status status = Status::pass;
    // For fail: the least set on which the two sides differ, when the
    // statement is an identity of families.  For pass: a witness of strict
    // inclusion where the statement records one.
    std::optional<SubsetMask> witness;
    bool                      strict = false;
    std::string               note;
  };

  // Throws PreconditionError if the instance does not carry the data the
  // claim's domain requires.  A stated hypothesis that fails gives
  // Status::skipped with the reason in `note`.
  Verdict evaluate(ClaimId id, Instance const& instance);

}  // namespace sgsize

#endif  // SGSIZE_CLAIMS_HPP_
