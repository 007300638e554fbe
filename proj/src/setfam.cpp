#include "sgsize/setfam.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sgsize/error.hpp"

namespace sgsize {

  namespace {
    using Mask = SubsetMask::bits_type;

    void check_ground(int n, int limit, char const* what) {
      if (n < 1 || n > limit) {
        throw SizeLimitError(std::string(what) + ": ground set size "
                             + std::to_string(n) + " outside [1, "
                             + std::to_string(limit) + "]");
      }
    }

    Family::bits_type universe_bits(int n) {
      int const size = 1 << n;
      return size == 64 ? ~Family::bits_type{0}
                        : (Family::bits_type{1} << size) - 1;
    }

    Family::bits_type up_set_bits(Mask base, int n) {
      Family::bits_type out = 0;
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if ((m & base) == base) {
          out |= Family::bits_type{1} << m;
        }
      }
      return out;
    }

    void check_same_ground(Family const& F, Family const& G) {
      if (F.ground_size() != G.ground_size()) {
        throw PreconditionError("families over different ground sets");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SubsetMask
  ////////////////////////////////////////////////////////////////////////

  SubsetMask::SubsetMask(bits_type bits, int n) : _bits(bits), _n(n) {
    if (n < 1 || n > kMaxGroundSet) {
      throw SizeLimitError("subset: ground set size " + std::to_string(n)
                           + " outside [1, 16]");
    }
    if ((bits >> n) != 0) {
      throw PreconditionError("subset: bits set above position n - 1");
    }
  }

  SubsetMask SubsetMask::full(int n) {
    return SubsetMask(n >= 1 && n <= kMaxGroundSet ? (Mask{1} << n) - 1 : 0,
                      n);
  }

  SubsetMask SubsetMask::singleton(int x, int n) {
    if (x < 0 || x >= n) {
      throw PreconditionError("subset: element " + std::to_string(x)
                              + " outside ground set");
    }
    return SubsetMask(Mask{1} << x, n);
  }

  SubsetMask SubsetMask::of(std::initializer_list<int> elements, int n) {
    return of(std::span<int const>(elements.begin(), elements.size()), n);
  }

  SubsetMask SubsetMask::of(std::span<int const> elements, int n) {
    Mask bits = 0;
    for (int x : elements) {
      if (x < 0 || x >= n) {
        throw PreconditionError("subset: element " + std::to_string(x)
                                + " outside ground set");
      }
      bits |= Mask{1} << x;
    }
    return SubsetMask(bits, n);
  }

  bool SubsetMask::is_full() const noexcept {
    return _bits == (Mask{1} << _n) - 1;
  }

  int SubsetMask::count() const noexcept {
    return std::popcount(_bits);
  }

  std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int x = 0; x < _n; ++x) {
      if (contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  SubsetMask SubsetMask::complement() const noexcept {
    return SubsetMask(~_bits & ((Mask{1} << _n) - 1), _n, unchecked_t{});
  }

  SubsetMask SubsetMask::operator|(SubsetMask other) const {
    if (_n != other._n) {
      throw PreconditionError("subsets over different ground sets");
    }
    return SubsetMask(_bits | other._bits, _n, unchecked_t{});
  }

  SubsetMask SubsetMask::operator&(SubsetMask other) const {
    if (_n != other._n) {
      throw PreconditionError("subsets over different ground sets");
    }
    return SubsetMask(_bits & other._bits, _n, unchecked_t{});
  }

  SubsetMask SubsetMask::operator-(SubsetMask other) const {
    if (_n != other._n) {
      throw PreconditionError("subsets over different ground sets");
    }
    return SubsetMask(_bits & ~other._bits, _n, unchecked_t{});
  }

  std::string to_string(SubsetMask const& A) {
    std::string out = "{";
    bool        first = true;
    for (int x : A.elements()) {
      if (!first) {
        out += ",";
      }
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Family
  ////////////////////////////////////////////////////////////////////////

  Family::Family(bits_type members, int n) : _bits(members), _n(n) {
    if (n < 1 || n > kMaxFamilyGroundSet) {
      throw SizeLimitError("family: ground set size " + std::to_string(n)
                           + " outside [1, 6]");
    }
    if ((members & ~universe_bits(n)) != 0) {
      throw PreconditionError("family: member index beyond 2^n - 1");
    }
  }

  Family Family::power_set(int n) {
    check_ground(n, kMaxFamilyGroundSet, "family");
    return Family(universe_bits(n), n);
  }

  Family Family::of(std::initializer_list<SubsetMask> members, int n) {
    return of(std::span<SubsetMask const>(members.begin(), members.size()),
              n);
  }

  Family Family::of(std::span<SubsetMask const> members, int n) {
    Family F = none(n);
    for (auto const& A : members) {
      F = F.with(A);
    }
    return F;
  }

  bool Family::contains(SubsetMask const& A) const noexcept {
    return A.ground_size() == _n && contains_mask(A.bits());
  }

  int Family::count() const noexcept {
    return std::popcount(_bits);
  }

  bool Family::subset_of(Family const& other) const {
    check_same_ground(*this, other);
    return (_bits & ~other._bits) == 0;
  }

  Family Family::with(SubsetMask const& A) const {
    if (A.ground_size() != _n) {
      throw PreconditionError("family: member over a different ground set");
    }
    return Family(_bits | (bits_type{1} << A.bits()), _n);
  }

  std::vector<SubsetMask> Family::members() const {
    std::vector<SubsetMask> out;
    out.reserve(count());
    for (Mask m = 0; m < universe_size(); ++m) {
      if (contains_mask(m)) {
        out.emplace_back(m, _n);
      }
    }
    return out;
  }

  Family Family::operator|(Family const& other) const {
    check_same_ground(*this, other);
    return Family(_bits | other._bits, _n);
  }

  Family Family::operator&(Family const& other) const {
    check_same_ground(*this, other);
    return Family(_bits & other._bits, _n);
  }

  Family Family::operator-(Family const& other) const {
    check_same_ground(*this, other);
    return Family(_bits & ~other._bits, _n);
  }

  std::string to_string(Family const& F) {
    std::string out = "{";
    bool        first = true;
    for (auto const& A : F.members()) {
      if (!first) {
        out += ",";
      }
      out += to_string(A);
      first = false;
    }
    return out + "}";
  }

  std::string to_string(FamilyClass c) {
    switch (c) {
      case FamilyClass::arbitrary:
        return "arbitrary";
      case FamilyClass::stack:
        return "stack";
      case FamilyClass::filter:
        return "filter";
      case FamilyClass::grill:
        return "grill";
      case FamilyClass::ultrafilter:
        return "ultrafilter";
    }
    return "arbitrary";
  }

  FamilyClass Classification::most_specific() const noexcept {
    if (is_ultrafilter) {
      return FamilyClass::ultrafilter;
    }
    if (is_filter) {
      return FamilyClass::filter;
    }
    if (is_grill) {
      return FamilyClass::grill;
    }
    if (is_stack) {
      return FamilyClass::stack;
    }
    return FamilyClass::arbitrary;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operators on families
  ////////////////////////////////////////////////////////////////////////

  Family upward_closure(Family const& F) {
    int const         n    = F.ground_size();
    Mask const        size = Mask{1} << n;
    Family::bits_type bits = F.bits();
    for (int i = 0; i < n; ++i) {
      Mask const bit = Mask{1} << i;
      for (Mask m = 0; m < size; ++m) {
        if ((m & bit) == 0 && ((bits >> m) & 1U) != 0) {
          bits |= Family::bits_type{1} << (m | bit);
        }
      }
    }
    return Family(bits, n);
  }

  Classification classify(Family const& F) {
    Mask const size = static_cast<Mask>(F.universe_size());

    // (1)
    bool const proper = !F.is_empty() && !F.contains_mask(0);
    // (2)
    bool up_closed = true;
    for (Mask a = 0; a < size && up_closed; ++a) {
      if (!F.contains_mask(a)) {
        continue;
      }
      for (Mask b = 0; b < size; ++b) {
        if ((a & ~b) == 0 && !F.contains_mask(b)) {
          up_closed = false;
          break;
        }
      }
    }
    Classification c;
    c.is_stack = proper && up_closed;
    if (!c.is_stack) {
      return c;
    }
    // (3)
    bool meet_closed = true;
    for (Mask a = 0; a < size && meet_closed; ++a) {
      for (Mask b = 0; b < size; ++b) {
        if (F.contains_mask(a) && F.contains_mask(b)
            && !F.contains_mask(a & b)) {
          meet_closed = false;
          break;
        }
      }
    }
    // (4)
    bool prime = true;
    for (Mask a = 0; a < size && prime; ++a) {
      for (Mask b = 0; b < size; ++b) {
        if (F.contains_mask(a | b) && !F.contains_mask(a)
            && !F.contains_mask(b)) {
          prime = false;
          break;
        }
      }
    }
    c.is_filter      = meet_closed;
    c.is_grill       = prime;
    c.is_ultrafilter = meet_closed && prime;
    return c;
  }

  bool is_stack(Family const& F) {
    return classify(F).is_stack;
  }

  bool is_filter(Family const& F) {
    return classify(F).is_filter;
  }

  bool is_grill(Family const& F) {
    return classify(F).is_grill;
  }

  bool is_ultrafilter(Family const& F) {
    return classify(F).is_ultrafilter;
  }

  Family mesh(Family const& F) {
    Mask const        full = F.full_mask();
    Family::bits_type bits = 0;
    for (Mask m = 0; m <= full; ++m) {
      if (!F.contains_mask(full ^ m)) {
        bits |= Family::bits_type{1} << m;
      }
    }
    return Family(bits, F.ground_size());
  }

  Family schmidt_mesh(Family const& F) {
    Mask const        full = F.full_mask();
    Family::bits_type bits = 0;
    for (Mask a = 0; a <= full; ++a) {
      bool meets_all = true;
      for (Mask b = 0; b <= full; ++b) {
        if (F.contains_mask(b) && (a & b) == 0) {
          meets_all = false;
          break;
        }
      }
      if (meets_all) {
        bits |= Family::bits_type{1} << a;
      }
    }
    return Family(bits, F.ground_size());
  }

  Family intersection_family(Family const& F, Family const& G) {
    check_same_ground(F, G);
    Mask const        full = F.full_mask();
    Family::bits_type bits = 0;
    for (Mask b = 0; b <= full; ++b) {
      if (!F.contains_mask(b)) {
        continue;
      }
      for (Mask c = 0; c <= full; ++c) {
        if (G.contains_mask(c)) {
          bits |= Family::bits_type{1} << (b & c);
        }
      }
    }
    return Family(bits, F.ground_size());
  }

  std::vector<SubsetMask> minimal_members(Family const& F) {
    std::vector<SubsetMask> out;
    Mask const              full = F.full_mask();
    for (Mask m = 0; m <= full; ++m) {
      if (!F.contains_mask(m)) {
        continue;
      }
      bool minimal = true;
      // proper submasks of m
      for (Mask s = (m - 1) & m; m != 0; s = (s - 1) & m) {
        if (F.contains_mask(s)) {
          minimal = false;
          break;
        }
        if (s == 0) {
          break;
        }
      }
      if (minimal) {
        out.emplace_back(m, F.ground_size());
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void extend_antichains(Mask                                      next,
                           Mask                                      full,
                           std::vector<Mask>&                        chosen,
                           int                                       n,
                           std::function<void(Family const&)> const& fn) {
      for (Mask m = next; m <= full; ++m) {
        bool comparable = false;
        for (Mask c : chosen) {
          if ((c & ~m) == 0 || (m & ~c) == 0) {
            comparable = true;
            break;
          }
        }
        if (comparable) {
          continue;
        }
        chosen.push_back(m);
        Family::bits_type generators = 0;
        for (Mask c : chosen) {
          generators |= Family::bits_type{1} << c;
        }
        fn(upward_closure(Family(generators, n)));
        extend_antichains(m + 1, full, chosen, n, fn);
        chosen.pop_back();
      }
    }
  }  // namespace

  void for_each_stack(int n, std::function<void(Family const&)> const& fn) {
    check_ground(n, kMaxStackEnumGround, "enumerate_stacks");
    std::vector<Mask> chosen;
    extend_antichains(1, (Mask{1} << n) - 1, chosen, n, fn);
  }

  std::vector<Family> enumerate_stacks(int n) {
    std::vector<Family> out;
    for_each_stack(n, [&out](Family const& F) { out.push_back(F); });
    std::sort(out.begin(), out.end(), [](Family const& a, Family const& b) {
      return a.bits() < b.bits();
    });
    return out;
  }

  std::vector<Family> enumerate_filters(int n) {
    check_ground(n, kMaxFamilyGroundSet, "enumerate_filters");
    std::vector<Family> out;
    for (Mask base = 1; base < (Mask{1} << n); ++base) {
      out.emplace_back(up_set_bits(base, n), n);
    }
    return out;
  }

  std::vector<Family> enumerate_ultrafilters(int n) {
    check_ground(n, kMaxFamilyGroundSet, "enumerate_ultrafilters");
    std::vector<Family> out;
    for (int x = 0; x < n; ++x) {
      out.emplace_back(up_set_bits(Mask{1} << x, n), n);
    }
    return out;
  }

  std::vector<Family> enumerate_grills(int n) {
    check_ground(n, kMaxStackEnumGround, "enumerate_grills");
    std::vector<Family> out;
    for (auto const& F : enumerate_filters(n)) {
      out.push_back(mesh(F));
    }
    if (n <= 3) {
      std::vector<Family::bits_type> direct;
      for (auto const& F : enumerate_stacks(n)) {
        if (is_grill(F)) {
          direct.push_back(F.bits());
        }
      }
      std::vector<Family::bits_type> via_mesh;
      for (auto const& F : out) {
        via_mesh.push_back(F.bits());
      }
      std::sort(direct.begin(), direct.end());
      std::sort(via_mesh.begin(), via_mesh.end());
      if (direct != via_mesh) {
        throw std::logic_error("enumerate_grills: meshes of filters differ "
                               "from the grills found by direct check");
      }
    }
    return out;
  }

}  // namespace sgsize
