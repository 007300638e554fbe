#include "sgsize/notions.hpp"

#include "sgsize/error.hpp"

namespace sgsize {

  namespace {
    using Mask = SubsetMask::bits_type;

    constexpr int kMaxLiteralPsOrder = 10;

    void check_subset(CayleyTable const& t, SubsetMask const& A) {
      if (A.ground_size() != t.order()) {
        throw PreconditionError("subset ground set size "
                                + std::to_string(A.ground_size())
                                + " does not match table order "
                                + std::to_string(t.order()));
      }
    }

    void check_family(CayleyTable const& t, Family const& F) {
      if (F.ground_size() != t.order()) {
        throw PreconditionError("family ground set size "
                                + std::to_string(F.ground_size())
                                + " does not match table order "
                                + std::to_string(t.order()));
      }
    }

    Mask full_bits(int n) {
      return (Mask{1} << n) - 1;
    }

    Mask preimage_bits(CayleyTable const& t, int h, Mask A) {
      Mask out = 0;
      for (int y = 0; y < t.order(); ++y) {
        if (((A >> t(h, y)) & 1U) != 0) {
          out |= Mask{1} << y;
        }
      }
      return out;
    }

    // h^{-1}A for every h and every A, n <= 6.
    class TranslateTable {
     public:
      explicit TranslateTable(CayleyTable const& t)
          : _n(t.order()),
            _pre(static_cast<std::size_t>(_n) << _n) {
        if (_n > kMaxFamilyGroundSet) {
          throw SizeLimitError("whole-family computation needs order <= 6");
        }
        for (Mask A = 0; A <= full_bits(_n); ++A) {
          for (int h = 0; h < _n; ++h) {
            _pre[A * _n + h] = static_cast<std::uint8_t>(preimage_bits(t, h, A));
          }
        }
      }

      [[nodiscard]] Mask pre(int h, Mask A) const noexcept {
        return _pre[A * _n + h];
      }

      [[nodiscard]] Mask union_over(Mask H, Mask A) const noexcept {
        Mask out = 0;
        for (int h = 0; h < _n; ++h) {
          if (((H >> h) & 1U) != 0) {
            out |= pre(h, A);
          }
        }
        return out;
      }

      [[nodiscard]] Mask intersection_over(Mask H, Mask A) const noexcept {
        Mask out = full_bits(_n);
        for (int h = 0; h < _n; ++h) {
          if (((H >> h) & 1U) != 0) {
            out &= pre(h, A);
          }
        }
        return out;
      }

     private:
      int                       _n;
      std::vector<std::uint8_t> _pre;
    };

    Mask union_over(CayleyTable const& t, Mask H, Mask A) {
      Mask out = 0;
      for (int h = 0; h < t.order(); ++h) {
        if (((H >> h) & 1U) != 0) {
          out |= preimage_bits(t, h, A);
        }
      }
      return out;
    }

    Mask intersection_over(CayleyTable const& t, Mask H, Mask A) {
      Mask out = full_bits(t.order());
      for (int h = 0; h < t.order(); ++h) {
        if (((H >> h) & 1U) != 0) {
          out &= preimage_bits(t, h, A);
        }
      }
      return out;
    }

    std::vector<Mask> minimal_bits(Family const& F) {
      std::vector<Mask> out;
      for (auto const& B : minimal_members(F)) {
        out.push_back(B.bits());
      }
      return out;
    }

    Family::bits_type bit(Mask A) {
      return Family::bits_type{1} << A;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Classical notions
  ////////////////////////////////////////////////////////////////////////

  bool is_syndetic(CayleyTable const& t, SubsetMask A) {
    check_subset(t, A);
    Mask const S = full_bits(t.order());
    return union_over(t, S, A.bits()) == S;
  }

  bool is_thick(CayleyTable const& t, SubsetMask A) {
    check_subset(t, A);
    return intersection_over(t, full_bits(t.order()), A.bits()) != 0;
  }

  bool is_piecewise_syndetic(CayleyTable const& t, SubsetMask A) {
    check_subset(t, A);
    Mask const S = full_bits(t.order());
    return intersection_over(t, S, union_over(t, S, A.bits())) != 0;
  }

  SizeFamilies size_families(CayleyTable const& t) {
    int const n = t.order();
    if (n > kMaxFamilyGroundSet) {
      throw SizeLimitError("size_families: order " + std::to_string(n)
                           + " exceeds 6");
    }
    TranslateTable const tr(t);
    Mask const           S = full_bits(n);
    Family::bits_type    syn = 0, thick = 0, ps = 0;
    for (Mask A = 0; A <= S; ++A) {
      Mask const U = tr.union_over(S, A);
      if (U == S) {
        syn |= bit(A);
      }
      if (tr.intersection_over(S, A) != 0) {
        thick |= bit(A);
      }
      if (tr.intersection_over(S, U) != 0) {
        ps |= bit(A);
      }
    }
    return {Family(syn, n), Family(thick, n), Family(ps, n)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Filters
  ////////////////////////////////////////////////////////////////////////

  Family principal_filter(SubsetMask B) {
    if (B.is_empty()) {
      throw PreconditionError("principal_filter: base must be nonempty");
    }
    return upward_closure(Family::of({B}, B.ground_size()));
  }

  Family principal_ultrafilter(int x, int n) {
    return principal_filter(SubsetMask::singleton(x, n));
  }

  SubsetMask filter_base(Family const& F) {
    if (!is_filter(F)) {
      throw PreconditionError("filter_base: " + to_string(F)
                              + " is not a proper filter");
    }
    Mask base = F.full_mask();
    for (Mask m = 0; m <= F.full_mask(); ++m) {
      if (F.contains_mask(m)) {
        base &= m;
      }
    }
    return SubsetMask(base, F.ground_size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Relative notions
  ////////////////////////////////////////////////////////////////////////

  RelParams::RelParams(Family F, Family G) : _F(F), _G(G) {
    if (F.ground_size() != G.ground_size()) {
      throw PreconditionError("relative notion: F and G over different "
                              "ground sets");
    }
    if (!is_stack(F)) {
      throw PreconditionError("relative notion: F = " + to_string(F)
                              + " is not a stack");
    }
    if (!is_stack(G)) {
      throw PreconditionError("relative notion: G = " + to_string(G)
                              + " is not a stack");
    }
  }

  bool is_rel_syndetic(CayleyTable const& t, SubsetMask A, RelParams const& p) {
    check_subset(t, A);
    check_family(t, p.left());
    for (Mask B : minimal_bits(p.left())) {
      if (!p.right().contains_mask(union_over(t, B, A.bits()))) {
        return false;
      }
    }
    return true;
  }

  bool is_rel_thick(CayleyTable const& t, SubsetMask A, RelParams const& p) {
    check_subset(t, A);
    check_family(t, p.left());
    Family const G_mesh = mesh(p.right());
    for (Mask B : minimal_bits(p.left())) {
      if (G_mesh.contains_mask(intersection_over(t, B, A.bits()))) {
        return true;
      }
    }
    return false;
  }

  Family rel_syn_family(CayleyTable const& t, RelParams const& p) {
    check_family(t, p.left());
    TranslateTable const tr(t);
    auto const           minimal = minimal_bits(p.left());
    Family::bits_type    out     = 0;
    for (Mask A = 0; A <= full_bits(t.order()); ++A) {
      bool syndetic = true;
      for (Mask B : minimal) {
        if (!p.right().contains_mask(tr.union_over(B, A))) {
          syndetic = false;
          break;
        }
      }
      if (syndetic) {
        out |= bit(A);
      }
    }
    return Family(out, t.order());
  }

  Family rel_thick_family(CayleyTable const& t, RelParams const& p) {
    check_family(t, p.left());
    TranslateTable const tr(t);
    auto const           minimal = minimal_bits(p.left());
    Family const         G_mesh  = mesh(p.right());
    Family::bits_type    out     = 0;
    for (Mask A = 0; A <= full_bits(t.order()); ++A) {
      for (Mask B : minimal) {
        if (G_mesh.contains_mask(tr.intersection_over(B, A))) {
          out |= bit(A);
          break;
        }
      }
    }
    return Family(out, t.order());
  }

  Family rel_ps_family(CayleyTable const& t, RelParams const& p) {
    return intersection_family(rel_syn_family(t, p), rel_thick_family(t, p));
  }

  Family stack_product(CayleyTable const& t, Family const& F, Family const& G) {
    RelParams const p(F, G);  // validates both as stacks
    check_family(t, F);
    TranslateTable const tr(t);
    Family::bits_type    out = 0;
    for (Mask A = 0; A <= full_bits(t.order()); ++A) {
      Mask returns = 0;  // { x : x^{-1}A in G }
      for (int x = 0; x < t.order(); ++x) {
        if (G.contains_mask(tr.pre(x, A))) {
          returns |= Mask{1} << x;
        }
      }
      if (F.contains_mask(returns)) {
        out |= bit(A);
      }
    }
    return Family(out, t.order());
  }

  ////////////////////////////////////////////////////////////////////////
  // Piecewise syndeticity through a point of the closure
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Family point_syn_family(CayleyTable const& t, Family const& F, int y) {
      Family const thick_at_y
          = rel_thick_family(t, {F, principal_ultrafilter(y, t.order())});
      return rel_syn_family(t, {F, thick_at_y});
    }

    void require_filter(CayleyTable const& t, Family const& F) {
      check_family(t, F);
      if (!is_filter(F)) {
        throw PreconditionError(to_string(F) + " is not a proper filter");
      }
    }
  }  // namespace

  Family point_ps_family(CayleyTable const& t,
                         Family const&      F,
                         SubsetMask         points) {
    require_filter(t, F);
    check_subset(t, points);
    Family out = Family::none(t.order());
    for (int y : points.elements()) {
      out = out | point_syn_family(t, F, y);
    }
    return out;
  }

  std::optional<int> point_ps_witness(CayleyTable const& t,
                                      SubsetMask         A,
                                      Family const&      F,
                                      SubsetMask         points) {
    require_filter(t, F);
    check_subset(t, A);
    check_subset(t, points);
    for (int y : points.elements()) {
      Family const thick_at_y
          = rel_thick_family(t, {F, principal_ultrafilter(y, t.order())});
      if (is_rel_syndetic(t, A, {F, thick_at_y})) {
        return y;
      }
    }
    return std::nullopt;
  }

  bool is_szz_piecewise_syndetic(CayleyTable const& t,
                                 SubsetMask         A,
                                 Family const&      F) {
    require_filter(t, F);
    SubsetMask const base = filter_base(F);
    if (!is_subsemigroup(t, base)) {
      throw PreconditionError("the base " + to_string(base)
                              + " of F is not a subsemigroup");
    }
    return point_ps_witness(t, A, F, base).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Literal quantifier sweeps
  ////////////////////////////////////////////////////////////////////////

  namespace literal {
    bool is_syndetic(CayleyTable const& t, SubsetMask A) {
      check_subset(t, A);
      Mask const S = full_bits(t.order());
      for (Mask H = 1; H <= S; ++H) {
        if (union_over(t, H, A.bits()) == S) {
          return true;
        }
      }
      return false;
    }

    bool is_thick(CayleyTable const& t, SubsetMask A) {
      check_subset(t, A);
      Mask const S = full_bits(t.order());
      for (Mask H = 1; H <= S; ++H) {
        if (intersection_over(t, H, A.bits()) == 0) {
          return false;
        }
      }
      return true;
    }

    bool is_piecewise_syndetic(CayleyTable const& t, SubsetMask A) {
      check_subset(t, A);
      if (t.order() > kMaxLiteralPsOrder) {
        throw SizeLimitError("literal piecewise syndetic sweep needs "
                             "order <= 10");
      }
      Mask const S = full_bits(t.order());
      for (Mask H = 1; H <= S; ++H) {
        Mask const U = union_over(t, H, A.bits());
        if (literal::is_thick(t, SubsetMask(U, t.order()))) {
          return true;
        }
      }
      return false;
    }

    bool is_rel_syndetic(CayleyTable const& t,
                         SubsetMask         A,
                         Family const&      F,
                         Family const&      G) {
      check_subset(t, A);
      check_family(t, F);
      check_family(t, G);
      for (Mask B = 0; B <= F.full_mask(); ++B) {
        if (!F.contains_mask(B)) {
          continue;
        }
        bool found = false;
        // nonempty H inside B
        for (Mask H = B; H != 0; H = (H - 1) & B) {
          if (G.contains_mask(union_over(t, H, A.bits()))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }

    bool is_rel_thick(CayleyTable const& t,
                      SubsetMask         A,
                      Family const&      F,
                      Family const&      G) {
      check_subset(t, A);
      check_family(t, F);
      check_family(t, G);
      Family const G_mesh = mesh(G);
      for (Mask B = 0; B <= F.full_mask(); ++B) {
        if (!F.contains_mask(B)) {
          continue;
        }
        bool all = true;
        for (Mask H = B; H != 0; H = (H - 1) & B) {
          if (!G_mesh.contains_mask(intersection_over(t, H, A.bits()))) {
            all = false;
            break;
          }
        }
        if (all) {
          return true;
        }
      }
      return false;
    }
  }  // namespace literal

}  // namespace sgsize
