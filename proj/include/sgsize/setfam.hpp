#ifndef SGSIZE_SETFAM_HPP_
#define SGSIZE_SETFAM_HPP_

// Families of subsets of a finite ground set {0, ..., n-1}.
//
// A subset is an n-bit mask.  A family is a 2^n-bit vector in which bit m is
// set iff the subset whose mask is m belongs to the family, so membership is a
// single bit test and the natural order on families is the order of masks.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sgsize {

  inline constexpr int kMaxGroundSet       = 16;
  inline constexpr int kMaxFamilyGroundSet = 6;
  inline constexpr int kMaxStackEnumGround = 4;

  class SubsetMask {
   public:
    using bits_type = std::uint32_t;

    // Throws SizeLimitError unless 1 <= n <= 16 and PreconditionError if a
    // bit >= n is set.
    SubsetMask(bits_type bits, int n);

    static SubsetMask empty(int n) {
      return SubsetMask(0, n);
    }
    static SubsetMask full(int n);
    static SubsetMask singleton(int x, int n);
    static SubsetMask of(std::initializer_list<int> elements, int n);
    static SubsetMask of(std::span<int const> elements, int n);

    [[nodiscard]] bits_type bits() const noexcept {
      return _bits;
    }
    [[nodiscard]] int ground_size() const noexcept {
      return _n;
    }
    [[nodiscard]] bool is_empty() const noexcept {
      return _bits == 0;
    }
    [[nodiscard]] bool is_full() const noexcept;
    [[nodiscard]] bool contains(int x) const noexcept {
      return x >= 0 && x < _n && ((_bits >> x) & 1U) != 0;
    }
    [[nodiscard]] int count() const noexcept;
    [[nodiscard]] std::vector<int> elements() const;

    [[nodiscard]] SubsetMask complement() const noexcept;
    [[nodiscard]] bool subset_of(SubsetMask other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    [[nodiscard]] bool meets(SubsetMask other) const noexcept {
      return (_bits & other._bits) != 0;
    }

    SubsetMask operator|(SubsetMask other) const;
    SubsetMask operator&(SubsetMask other) const;
    SubsetMask operator-(SubsetMask other) const;

    friend bool operator==(SubsetMask const&, SubsetMask const&) = default;
    friend auto operator<=>(SubsetMask const& a, SubsetMask const& b) {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      return a._bits <=> b._bits;
    }

   private:
    struct unchecked_t {};
    SubsetMask(bits_type bits, int n, unchecked_t) noexcept
        : _bits(bits), _n(n) {}

    bits_type _bits;
    int       _n;
  };

  // "{0,2}" style rendering, used in diagnostics.
  std::string to_string(SubsetMask const& A);

  class Family {
   public:
    using bits_type = std::uint64_t;

    // Throws SizeLimitError unless 1 <= n <= 6 and PreconditionError if a
    // bit >= 2^n is set.
    Family(bits_type members, int n);

    // The empty family, i.e. no members at all.
    static Family none(int n) {
      return Family(0, n);
    }
    // Every subset of X, the improper filter P(X).
    static Family power_set(int n);
    static Family of(std::initializer_list<SubsetMask> members, int n);
    static Family of(std::span<SubsetMask const> members, int n);

    [[nodiscard]] bits_type bits() const noexcept {
      return _bits;
    }
    [[nodiscard]] int ground_size() const noexcept {
      return _n;
    }
    [[nodiscard]] SubsetMask::bits_type full_mask() const noexcept {
      return (SubsetMask::bits_type{1} << _n) - 1;
    }
    [[nodiscard]] std::size_t universe_size() const noexcept {
      return std::size_t{1} << _n;
    }

    [[nodiscard]] bool contains(SubsetMask const& A) const noexcept;
    [[nodiscard]] bool contains_mask(SubsetMask::bits_type m) const noexcept {
      return ((_bits >> m) & 1U) != 0;
    }
    [[nodiscard]] bool is_empty() const noexcept {
      return _bits == 0;
    }
    [[nodiscard]] int count() const noexcept;
    [[nodiscard]] bool subset_of(Family const& other) const;

    [[nodiscard]] Family with(SubsetMask const& A) const;
    [[nodiscard]] std::vector<SubsetMask> members() const;

    Family operator|(Family const& other) const;
    Family operator&(Family const& other) const;
    Family operator-(Family const& other) const;

    friend bool operator==(Family const&, Family const&) = default;

   private:
    bits_type _bits;
    int       _n;
  };

  std::string to_string(Family const& F);

  enum class FamilyClass { arbitrary, stack, filter, grill, ultrafilter };

  std::string to_string(FamilyClass c);

  struct Classification {
    bool is_stack       = false;
    bool is_filter      = false;
    bool is_grill       = false;
    bool is_ultrafilter = false;

    // The most specific class: ultrafilter > filter > grill > stack.
    [[nodiscard]] FamilyClass most_specific() const noexcept;

    friend bool operator==(Classification const&, Classification const&)
        = default;
  };

  // Smallest superset-closed family containing F.
  Family upward_closure(Family const& F);

  // Evaluates the stack, filter, grill and ultrafilter conditions verbatim:
  // (1) F nonempty and the empty set not in F, (2) closed under supersets,
  // (3) closed under binary intersection, (4) A u B in F implies A in F or B
  // in F.  Filters and grills must be stacks; ultrafilters are both.
  Classification classify(Family const& F);

  bool is_stack(Family const& F);
  bool is_filter(Family const& F);
  bool is_grill(Family const& F);
  bool is_ultrafilter(Family const& F);

  // F* = { A : X \ A not in F }.
  Family mesh(Family const& F);

  // { A : A meets every member of F }.  Agrees with mesh on stacks.
  Family schmidt_mesh(Family const& F);

  // { B n C : B in F, C in G }.
  Family intersection_family(Family const& F, Family const& G);

  // Inclusion-minimal members of F, in increasing mask order.
  std::vector<SubsetMask> minimal_members(Family const& F);

  // Universe generators.  Each family of the class is produced exactly once,
  // in a deterministic order.  Stacks and grills: n <= 4; filters and
  // ultrafilters: n <= 6.  Larger n throws SizeLimitError.
  //
  // Stacks are upward closures of nonempty antichains of nonempty subsets,
  // filters are principal over nonempty bases, ultrafilters are principal at
  // points, and grills are the meshes of filters.
  std::vector<Family> enumerate_stacks(int n);
  std::vector<Family> enumerate_filters(int n);
  std::vector<Family> enumerate_ultrafilters(int n);
  std::vector<Family> enumerate_grills(int n);

  void for_each_stack(int n, std::function<void(Family const&)> const& fn);

}  // namespace sgsize

#endif  // SGSIZE_SETFAM_HPP_
