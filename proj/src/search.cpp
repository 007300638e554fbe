#include <algorithm>
#include <bit>

#include "sgsize/error.hpp"
#include "sgsize/notions.hpp"
#include "sgsize/theorems.hpp"

namespace sgsize {

  namespace {
    using Mask = SubsetMask::bits_type;

    // Nonempty masks ordered by size, then by value.
    std::vector<Mask> by_size(int n, bool descending) {
      std::vector<Mask> out;
      for (Mask m = 1; m < (Mask{1} << n); ++m) {
        out.push_back(m);
      }
      std::stable_sort(out.begin(), out.end(), [&](Mask a, Mask b) {
        return descending ? std::popcount(a) > std::popcount(b)
                          : std::popcount(a) < std::popcount(b);
      });
      return out;
    }

    Family literal_family(int n, auto const& member) {
      Family::bits_type out = 0;
      for (Mask A = 0; A < (Mask{1} << n); ++A) {
        if (member(SubsetMask(A, n))) {
          out |= Family::bits_type{1} << A;
        }
      }
      return Family(out, n);
    }
  }  // namespace

  SearchReport search_question_4_6(int                          max_order,
                                   std::optional<std::uint64_t> budget) {
    auto const start = std::chrono::steady_clock::now();
    if (max_order < 1 || max_order > kMaxEnumOrderIso) {
      throw SizeLimitError("search max order must lie in [1, 5]");
    }
    SearchReport report;
    report.max_order = max_order;
    report.budget    = budget;

    for (int n = 1; n <= max_order && !report.candidate && !report.partial;
         ++n) {
      auto const bases = by_size(n, true);
      auto const sets  = [&] {
        std::vector<Mask> out{0};
        auto const        rest = by_size(n, false);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }();
      for_each_semigroup(n, Dedupe::iso, [&](CayleyTable const& t) {
        ++report.tables_examined;
        for (Mask b : bases) {
          SubsetMask const base(b, n);
          if (!is_subsemigroup(t, base)) {
            continue;
          }
          if (budget && report.universes_examined >= *budget) {
            report.partial = true;
            return false;
          }
          ++report.universes_examined;
          Family const F     = principal_filter(base);
          Family const ps    = rel_ps_family(t, {F, F});
          Family const point = point_ps_family(t, F, base);
          for (Mask a : sets) {
            ++report.sets_examined;
            if (point.contains_mask(a) && !ps.contains_mask(a)) {
              SubsetMask const A(a, n);
              report.candidate
                  = SearchCandidate{t, F, A, *point_ps_witness(t, A, F, base)};
              report.candidate_reverified = reverify(*report.candidate);
              return false;
            }
          }
        }
        return true;
      });
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  bool reverify(SearchCandidate const& c) {
    CayleyTable const& t = c.table;
    int const          n = t.order();
    if (!is_associative(t) || !is_filter(c.F)) {
      return false;
    }
    SubsetMask const base = filter_base(c.F);
    if (!is_subsemigroup(t, base) || !base.contains(c.y)) {
      return false;
    }
    Family const q = principal_ultrafilter(c.y, n);
    Family const thick_q
        = literal_family(n, [&](SubsetMask A) {
            return literal::is_rel_thick(t, A, c.F, q);
          });
    if (!literal::is_rel_syndetic(t, c.A, c.F, thick_q)) {
      return false;
    }
    Family const syn = literal_family(n, [&](SubsetMask A) {
      return literal::is_rel_syndetic(t, A, c.F, c.F);
    });
    Family const thick = literal_family(n, [&](SubsetMask A) {
      return literal::is_rel_thick(t, A, c.F, c.F);
    });
    return !intersection_family(syn, thick).contains(c.A);
  }

}  // namespace sgsize
