#include "sgsize/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgsize/error.hpp"

namespace sgsize {

  namespace {
    using Mask = SubsetMask::bits_type;

    // Largest order for which the exhaustive sub-ideal scan runs.
    constexpr int kMaxMinimalityScan = 12;

    void check_subset(CayleyTable const& t, SubsetMask const& A) {
      if (A.ground_size() != t.order()) {
        throw PreconditionError("subset ground set size "
                                + std::to_string(A.ground_size())
                                + " does not match table order "
                                + std::to_string(t.order()));
      }
    }
  }  // namespace

  CayleyTable::CayleyTable(int n, std::vector<std::uint8_t> cells)
      : _n(n), _cells(std::move(cells)) {
    if (n < 1 || n > kMaxTableOrder) {
      throw SizeLimitError("table order " + std::to_string(n)
                           + " outside [1, 16]");
    }
    if (_cells.size() != static_cast<std::size_t>(n * n)) {
      throw PreconditionError("table: expected " + std::to_string(n * n)
                              + " entries, got "
                              + std::to_string(_cells.size()));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int const v = _cells[static_cast<std::size_t>(i * n + j)];
        if (v >= n) {
          throw PreconditionError("table: entry (" + std::to_string(i) + ","
                                  + std::to_string(j)
                                  + ") = " + std::to_string(v)
                                  + " out of range");
        }
      }
    }
  }

  CayleyTable CayleyTable::from_rows(std::vector<std::vector<int>> const& rows) {
    int const n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxTableOrder) {
      throw SizeLimitError("table order " + std::to_string(n)
                           + " outside [1, 16]");
    }
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) {
        throw PreconditionError("table: row " + std::to_string(i) + " has "
                                + std::to_string(rows[i].size())
                                + " entries, expected " + std::to_string(n));
      }
      for (int j = 0; j < n; ++j) {
        int const v = rows[i][j];
        if (v < 0 || v >= n) {
          throw PreconditionError("table: entry (" + std::to_string(i) + ","
                                  + std::to_string(j)
                                  + ") = " + std::to_string(v)
                                  + " out of range");
        }
        cells.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return CayleyTable(n, std::move(cells));
  }

  std::vector<std::vector<int>> CayleyTable::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(_n));
    for (int i = 0; i < _n; ++i) {
      auto r = row(i);
      out[i].assign(r.begin(), r.end());
    }
    return out;
  }

  std::optional<AssociativityViolation>
  find_associativity_violation(CayleyTable const& t) {
    int const n = t.order();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (t(t(i, j), k) != t(i, t(j, k))) {
            return AssociativityViolation{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_associative(CayleyTable const& t) {
    return !find_associativity_violation(t).has_value();
  }

  void require_semigroup(CayleyTable const& t) {
    if (auto v = find_associativity_violation(t)) {
      throw PreconditionError("table is not associative at ("
                              + std::to_string(v->i) + ","
                              + std::to_string(v->j) + ","
                              + std::to_string(v->k) + ")");
    }
  }

  SubsetMask preimage_translate(CayleyTable const& t, int h, SubsetMask A) {
    check_subset(t, A);
    Mask out = 0;
    for (int y = 0; y < t.order(); ++y) {
      if (A.contains(t(h, y))) {
        out |= Mask{1} << y;
      }
    }
    return SubsetMask(out, t.order());
  }

  SubsetMask set_product(CayleyTable const& t, SubsetMask X, SubsetMask Y) {
    check_subset(t, X);
    check_subset(t, Y);
    Mask out = 0;
    for (int x = 0; x < t.order(); ++x) {
      if (!X.contains(x)) {
        continue;
      }
      for (int y = 0; y < t.order(); ++y) {
        if (Y.contains(y)) {
          out |= Mask{1} << t(x, y);
        }
      }
    }
    return SubsetMask(out, t.order());
  }

  SubsetMask principal_left_ideal(CayleyTable const& t, int a) {
    Mask out = Mask{1} << a;
    for (int s = 0; s < t.order(); ++s) {
      out |= Mask{1} << t(s, a);
    }
    return SubsetMask(out, t.order());
  }

  bool is_subsemigroup(CayleyTable const& t, SubsetMask B) {
    return !B.is_empty() && set_product(t, B, B).subset_of(B);
  }

  bool is_left_ideal(CayleyTable const& t, SubsetMask B) {
    return !B.is_empty()
           && set_product(t, SubsetMask::full(t.order()), B).subset_of(B);
  }

  bool is_right_ideal(CayleyTable const& t, SubsetMask B) {
    return !B.is_empty()
           && set_product(t, B, SubsetMask::full(t.order())).subset_of(B);
  }

  bool is_two_sided_ideal(CayleyTable const& t, SubsetMask B) {
    return is_left_ideal(t, B) && is_right_ideal(t, B);
  }

  namespace {
    // No nonempty proper subset of L is a left ideal.  Only called on left
    // ideals, so the scan stays within L.
    bool has_no_proper_left_subideal(CayleyTable const& t, SubsetMask L) {
      Mask const m = L.bits();
      for (Mask s = (m - 1) & m; s != 0; s = (s - 1) & m) {
        if (is_left_ideal(t, SubsetMask(s, t.order()))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::vector<SubsetMask> minimal_left_ideals(CayleyTable const& t) {
    int const               n = t.order();
    std::vector<SubsetMask> principal;
    principal.reserve(n);
    for (int a = 0; a < n; ++a) {
      principal.push_back(principal_left_ideal(t, a));
    }
    std::vector<SubsetMask> out;
    for (auto const& L : principal) {
      bool minimal = true;
      for (auto const& M : principal) {
        if (M.subset_of(L) && M != L) {
          minimal = false;
          break;
        }
      }
      if (minimal
          && std::find(out.begin(), out.end(), L) == out.end()) {
        out.push_back(L);
      }
    }
    std::sort(out.begin(), out.end());
    for (auto const& L : out) {
      if (!is_left_ideal(t, L)
          || (n <= kMaxMinimalityScan
              && !has_no_proper_left_subideal(t, L))) {
        throw std::logic_error("minimal_left_ideals: "
                               + to_string(L)
                               + " failed the definitional minimality check");
      }
    }
    return out;
  }

  SubsetMask smallest_ideal(CayleyTable const& t) {
    Mask k = 0;
    for (auto const& L : minimal_left_ideals(t)) {
      k |= L.bits();
    }
    SubsetMask K(k, t.order());
    if (!is_two_sided_ideal(t, K)) {
      throw std::logic_error("smallest_ideal: union of minimal left ideals "
                             "is not a two-sided ideal");
    }
    return K;
  }

  bool satisfies(CayleyTable const& t, IdealSet const& ideal) {
    switch (ideal.kind) {
      case IdealKind::left:
        return is_left_ideal(t, ideal.mask);
      case IdealKind::right:
        return is_right_ideal(t, ideal.mask);
      case IdealKind::two_sided:
        return is_two_sided_ideal(t, ideal.mask);
      case IdealKind::minimal_left:
        return is_left_ideal(t, ideal.mask)
               && has_no_proper_left_subideal(t, ideal.mask);
    }
    return false;
  }

  SubsetMask idempotents(CayleyTable const& t) {
    Mask out = 0;
    for (int e = 0; e < t.order(); ++e) {
      if (t(e, e) == e) {
        out |= Mask{1} << e;
      }
    }
    return SubsetMask(out, t.order());
  }

  ////////////////////////////////////////////////////////////////////////
  // Relabeling and canonical forms
  ////////////////////////////////////////////////////////////////////////

  CayleyTable relabel(CayleyTable const& t, std::span<int const> perm) {
    int const n = t.order();
    if (static_cast<int>(perm.size()) != n) {
      throw PreconditionError("relabel: permutation has wrong length");
    }
    std::vector<int> seen(n, 0);
    for (int p : perm) {
      if (p < 0 || p >= n || seen[p]++ != 0) {
        throw PreconditionError("relabel: not a permutation");
      }
    }
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cells[static_cast<std::size_t>(perm[i] * n + perm[j])]
            = static_cast<std::uint8_t>(perm[t(i, j)]);
      }
    }
    return CayleyTable(n, std::move(cells));
  }

  namespace {
    // Compares relabel(t, perm) against `best` cell by cell in row-major
    // order without materializing the relabeled table.
    std::strong_ordering compare_relabeled(CayleyTable const&        t,
                                           std::vector<int> const&   perm,
                                           std::vector<int> const&   inverse,
                                           std::span<std::uint8_t const> best) {
      int const n = t.order();
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          int const v = perm[t(inverse[r], inverse[c])];
          int const b = best[static_cast<std::size_t>(r * n + c)];
          if (v != b) {
            return v <=> b;
          }
        }
      }
      return std::strong_ordering::equal;
    }
  }  // namespace

  CayleyTable canonical_form(CayleyTable const& t) {
    int const        n = t.order();
    std::vector<int> perm(n), inverse(n);
    std::iota(perm.begin(), perm.end(), 0);
    CayleyTable best = t;
    do {
      for (int i = 0; i < n; ++i) {
        inverse[perm[i]] = i;
      }
      if (compare_relabeled(t, perm, inverse, best.cells()) < 0) {
        best = relabel(t, perm);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  bool is_canonical(CayleyTable const& t) {
    int const        n = t.order();
    std::vector<int> perm(n), inverse(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (int i = 0; i < n; ++i) {
        inverse[perm[i]] = i;
      }
      if (compare_relabeled(t, perm, inverse, t.cells()) < 0) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class TableFiller {
     public:
      TableFiller(int                                            n,
                  Dedupe                                         dedupe,
                  std::function<bool(CayleyTable const&)> const& fn)
          : _n(n),
            _dedupe(dedupe),
            _fn(fn),
            _cells(static_cast<std::size_t>(n * n), -1) {}

      void run() {
        fill(0);
      }

     private:
      int at(int i, int j) const {
        return _cells[static_cast<std::size_t>(i * _n + j)];
      }

      // Checks every triple in which cell (i, j) takes part and whose four
      // products are already assigned.
      bool consistent(int i, int j, int v) const {
        int const n = _n;
        // (i*j)*c == i*(j*c)
        for (int c = 0; c < n; ++c) {
          int const jc = at(j, c);
          int const lhs = at(v, c);
          if (jc < 0 || lhs < 0) {
            continue;
          }
          int const rhs = at(i, jc);
          if (rhs >= 0 && lhs != rhs) {
            return false;
          }
        }
        // (a*b)*j with a*b == i
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (at(a, b) != i) {
              continue;
            }
            int const bj = at(b, j);
            if (bj < 0) {
              continue;
            }
            int const rhs = at(a, bj);
            if (rhs >= 0 && rhs != v) {
              return false;
            }
          }
        }
        // (a*i)*j == a*(i*j)
        for (int a = 0; a < n; ++a) {
          int const ai = at(a, i);
          if (ai < 0) {
            continue;
          }
          int const lhs = at(ai, j);
          int const rhs = at(a, v);
          if (lhs >= 0 && rhs >= 0 && lhs != rhs) {
            return false;
          }
        }
        // (i*b)*c == i*(b*c) with b*c == j
        for (int b = 0; b < n; ++b) {
          int const ib = at(i, b);
          if (ib < 0) {
            continue;
          }
          for (int c = 0; c < n; ++c) {
            if (at(b, c) != j) {
              continue;
            }
            int const lhs = at(ib, c);
            if (lhs >= 0 && lhs != v) {
              return false;
            }
          }
        }
        return true;
      }

      bool fill(int idx) {
        if (idx == _n * _n) {
          std::vector<std::uint8_t> cells(_cells.begin(), _cells.end());
          CayleyTable               t(_n, std::move(cells));
          if (_dedupe == Dedupe::iso && !is_canonical(t)) {
            return true;
          }
          return _fn(t);
        }
        int const i = idx / _n;
        int const j = idx % _n;
        for (int v = 0; v < _n; ++v) {
          _cells[static_cast<std::size_t>(idx)] = static_cast<std::int8_t>(v);
          if (consistent(i, j, v) && !fill(idx + 1)) {
            _cells[static_cast<std::size_t>(idx)] = -1;
            return false;
          }
        }
        _cells[static_cast<std::size_t>(idx)] = -1;
        return true;
      }

      int                                            _n;
      Dedupe                                         _dedupe;
      std::function<bool(CayleyTable const&)> const& _fn;
      std::vector<std::int8_t>                       _cells;
    };
  }  // namespace

  void for_each_semigroup(int                                            n,
                          Dedupe                                         dedupe,
                          std::function<bool(CayleyTable const&)> const& fn) {
    int const limit
        = dedupe == Dedupe::iso ? kMaxEnumOrderIso : kMaxEnumOrderRaw;
    if (n < 1 || n > limit) {
      throw SizeLimitError("enumerate_semigroups: order " + std::to_string(n)
                           + " outside [1, " + std::to_string(limit) + "]"
                           + (dedupe == Dedupe::none ? " without dedupe"
                                                     : " with dedupe"));
    }
    TableFiller(n, dedupe, fn).run();
  }

  std::vector<CayleyTable> enumerate_semigroups(int n, Dedupe dedupe) {
    std::vector<CayleyTable> out;
    for_each_semigroup(n, dedupe, [&out](CayleyTable const& t) {
      out.push_back(t);
      return true;
    });
    return out;
  }

  namespace tables {
    namespace {
      template <typename Op>
      CayleyTable build(int n, Op op) {
        if (n < 1 || n > kMaxTableOrder) {
          throw SizeLimitError("table order " + std::to_string(n)
                               + " outside [1, 16]");
        }
        std::vector<std::uint8_t> cells;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            cells.push_back(static_cast<std::uint8_t>(op(i, j)));
          }
        }
        return CayleyTable(n, std::move(cells));
      }
    }  // namespace

    CayleyTable left_zero(int n) {
      return build(n, [](int i, int) { return i; });
    }
    CayleyTable right_zero(int n) {
      return build(n, [](int, int j) { return j; });
    }
    CayleyTable cyclic_group(int n) {
      return build(n, [n](int i, int j) { return (i + j) % n; });
    }
    CayleyTable mult_mod(int n) {
      return build(n, [n](int i, int j) { return (i * j) % n; });
    }
    CayleyTable null_semigroup(int n) {
      return build(n, [](int, int) { return 0; });
    }
  }  // namespace tables

}  // namespace sgsize
