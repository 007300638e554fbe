#ifndef SGSIZE_NATWIN_HPP_
#define SGSIZE_NATWIN_HPP_

// Subsets of {1, ..., N} and scans over them: gap bounds, runs, piecewise
// syndetic windows, arithmetic progressions and finite embeddability.  Every
// result is relative to the window [1, N] and says nothing about the
// positive integers beyond it.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sgsize {

  inline constexpr std::uint64_t kMaxHorizon = 100'000'000;

  class WindowSet {
   public:
    // The empty subset of [1, N]; 1 <= N <= 10^8.
    explicit WindowSet(std::uint64_t horizon);

    static WindowSet of(std::uint64_t                     horizon,
                        std::vector<std::uint64_t> const& elements);
    // Every k in [1, N] with pred(k).
    template <typename Pred>
    static WindowSet where(std::uint64_t horizon, Pred pred) {
      WindowSet W(horizon);
      for (std::uint64_t k = 1; k <= horizon; ++k) {
        if (pred(k)) {
          W.insert(k);
        }
      }
      return W;
    }

    [[nodiscard]] std::uint64_t horizon() const noexcept {
      return _n;
    }
    // False for k outside [1, N].
    [[nodiscard]] bool contains(std::uint64_t k) const noexcept {
      return k >= 1 && k <= _n && ((_words[(k - 1) / 64] >> ((k - 1) % 64)) & 1U);
    }
    // Throws PreconditionError for k outside [1, N].
    void insert(std::uint64_t k);

    [[nodiscard]] std::uint64_t count() const noexcept;
    [[nodiscard]] bool          is_empty() const noexcept;
    // The least member >= k, if any.
    [[nodiscard]] std::optional<std::uint64_t> next(std::uint64_t k) const;
    [[nodiscard]] std::optional<std::uint64_t> first() const {
      return next(1);
    }
    [[nodiscard]] std::optional<std::uint64_t> last() const;
    [[nodiscard]] std::vector<std::uint64_t>   elements() const;
    // Maximal runs [a, b] of consecutive members, ascending.
    [[nodiscard]] std::vector<std::pair<std::uint64_t, std::uint64_t>>
    runs() const;

    [[nodiscard]] std::vector<std::uint64_t> const& words() const noexcept {
      return _words;
    }

    friend bool operator==(WindowSet const&, WindowSet const&) = default;

   private:
    std::uint64_t              _n;
    std::vector<std::uint64_t> _words;
  };

  struct GapBound {
    // Least b such that every window {x+1, ..., x+b} inside [1, N] meets A;
    // none if the tail after the last element leaves such a window empty.
    std::optional<std::uint64_t> b;
    // The b tested: max(first element, largest difference of consecutive
    // elements).  Zero for the empty set.
    std::uint64_t candidate = 0;
    // Largest x whose window lies inside [1, N].
    std::uint64_t largest_x_checked = 0;
  };

  GapBound gap_bound(WindowSet const& W);

  std::uint64_t max_block_run(WindowSet const& W);

  struct Interval {
    std::uint64_t first;
    std::uint64_t last;

    friend bool operator==(Interval const&, Interval const&) = default;
  };

  // The leftmost window [s, s+L-1] inside [1, N] containing no b consecutive
  // non-members, i.e. all its gaps are at most b.  b, L >= 1.
  std::optional<Interval> ps_witness(WindowSet const& W,
                                     std::uint64_t    b,
                                     std::uint64_t    L);

  struct Progression {
    std::uint64_t a;
    std::uint64_t d;

    friend bool operator==(Progression const&, Progression const&) = default;
  };

  // Lexicographically least (a, d), d >= 1, with a, a+d, ..., a+(k-1)d all
  // in W.  k >= 1.
  std::optional<Progression> find_ap(WindowSet const& W, std::uint64_t k);

  // The least x >= 0 with (A n [1, m]) + x inside B, if any; m <= horizon
  // of A.
  std::optional<std::uint64_t> embedding_shift(WindowSet const& A,
                                               WindowSet const& B,
                                               std::uint64_t    m);
  bool finite_embeddable(WindowSet const& A, WindowSet const& B, std::uint64_t m);

  namespace literal {
    // Every nonempty F inside A n [1, m] is tried separately; at most 16
    // elements in A n [1, m].
    bool finite_embeddable(WindowSet const& A,
                           WindowSet const& B,
                           std::uint64_t    m);
  }  // namespace literal

  struct Example34Report {
    std::uint64_t horizon;
    std::uint64_t m;
    // Least x >= 1 with 2*[1, m] + x inside the evens of [1, N].
    std::optional<std::uint64_t> shift;
    // Longest run of consecutive evens within [1, N].
    std::uint64_t max_run;

    [[nodiscard]] bool shifts_found() const noexcept {
      return shift.has_value();
    }
    [[nodiscard]] bool not_thick() const noexcept {
      return max_run < 2;
    }
    [[nodiscard]] bool passed() const noexcept {
      return shifts_found() && not_thick();
    }
  };

  // The evens are relatively thick along 2F but contain no two consecutive
  // integers.  Every F inside [1, m] is covered by F = [1, m].  Throws
  // PreconditionError unless 2m <= N.
  Example34Report example_3_4_probe(std::uint64_t horizon, std::uint64_t m);

}  // namespace sgsize

#endif  // SGSIZE_NATWIN_HPP_
