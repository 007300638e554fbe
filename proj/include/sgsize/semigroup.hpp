#ifndef SGSIZE_SEMIGROUP_HPP_
#define SGSIZE_SEMIGROUP_HPP_

// Finite semigroups given by Cayley tables over the elements {0, ..., n-1}.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sgsize/setfam.hpp"

namespace sgsize {

  inline constexpr int kMaxTableOrder   = 16;
  inline constexpr int kMaxEnumOrderIso = 5;
  inline constexpr int kMaxEnumOrderRaw = 3;

  // An n x n table whose entry (i, j) is the product i * j.  Entries are
  // range checked on construction; associativity is checked separately so
  // that non-associative tables can be reported on.
  class CayleyTable {
   public:
    CayleyTable(int n, std::vector<std::uint8_t> cells);

    static CayleyTable from_rows(std::vector<std::vector<int>> const& rows);

    [[nodiscard]] int order() const noexcept {
      return _n;
    }
    [[nodiscard]] int operator()(int i, int j) const noexcept {
      return _cells[static_cast<std::size_t>(i * _n + j)];
    }
    [[nodiscard]] std::span<std::uint8_t const> row(int i) const noexcept {
      return {_cells.data() + static_cast<std::size_t>(i * _n),
              static_cast<std::size_t>(_n)};
    }
    [[nodiscard]] std::span<std::uint8_t const> cells() const noexcept {
      return _cells;
    }
    [[nodiscard]] std::vector<std::vector<int>> rows() const;

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;
    friend auto operator<=>(CayleyTable const& a, CayleyTable const& b) {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      return a._cells <=> b._cells;
    }

   private:
    int                       _n;
    std::vector<std::uint8_t> _cells;
  };

  struct AssociativityViolation {
    int i;
    int j;
    int k;

    friend bool operator==(AssociativityViolation const&,
                           AssociativityViolation const&)
        = default;
  };

  // The lexicographically least (i, j, k) with (i*j)*k != i*(j*k), if any.
  std::optional<AssociativityViolation>
       find_associativity_violation(CayleyTable const& t);
  bool is_associative(CayleyTable const& t);
  // Throws PreconditionError naming the violating triple.
  void require_semigroup(CayleyTable const& t);

  // h^{-1}A = { y : h*y in A }.
  SubsetMask preimage_translate(CayleyTable const& t, int h, SubsetMask A);

  // X*Y = { x*y : x in X, y in Y }.
  SubsetMask set_product(CayleyTable const& t, SubsetMask X, SubsetMask Y);

  // S^1 a = S*a u {a}.
  SubsetMask principal_left_ideal(CayleyTable const& t, int a);

  // The inclusion-minimal left ideals, sorted by mask.
  std::vector<SubsetMask> minimal_left_ideals(CayleyTable const& t);

  // K(S): union of the minimal left ideals.
  SubsetMask smallest_ideal(CayleyTable const& t);

  // Definitional checks; the empty set is reported false for all of them.
  bool is_subsemigroup(CayleyTable const& t, SubsetMask B);
  bool is_left_ideal(CayleyTable const& t, SubsetMask B);
  bool is_right_ideal(CayleyTable const& t, SubsetMask B);
  bool is_two_sided_ideal(CayleyTable const& t, SubsetMask B);

  enum class IdealKind { left, right, two_sided, minimal_left };

  struct IdealSet {
    SubsetMask mask;
    IdealKind  kind;
  };

  bool satisfies(CayleyTable const& t, IdealSet const& ideal);

  SubsetMask idempotents(CayleyTable const& t);

  enum class Dedupe { none, iso };

  // perm[i] is the new label of element i.
  CayleyTable relabel(CayleyTable const& t, std::span<int const> perm);
  // Lexicographically least table over all relabelings.
  CayleyTable canonical_form(CayleyTable const& t);
  bool        is_canonical(CayleyTable const& t);

  // Backtracking fill of the table in row-major order with incremental
  // associativity pruning.  Tables are produced in lexicographic order; with
  // Dedupe::iso only canonical forms are produced.  `fn` returns false to
  // stop early.  Limits: n <= 3 without dedupe, n <= 5 with.
  void for_each_semigroup(int                                          n,
                          Dedupe                                       dedupe,
                          std::function<bool(CayleyTable const&)> const& fn);
  std::vector<CayleyTable> enumerate_semigroups(int n, Dedupe dedupe);

  namespace tables {
    CayleyTable left_zero(int n);     // i*j = i
    CayleyTable right_zero(int n);    // i*j = j
    CayleyTable cyclic_group(int n);  // i*j = i + j mod n
    CayleyTable mult_mod(int n);      // i*j = i j mod n
    CayleyTable null_semigroup(int n);  // i*j = 0
  }  // namespace tables

}  // namespace sgsize

#endif  // SGSIZE_SEMIGROUP_HPP_
