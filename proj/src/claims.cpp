#include "sgsize/claims.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

#include "sgsize/beta_model.hpp"
#include "sgsize/error.hpp"
#include "sgsize/notions.hpp"

namespace sgsize {

  namespace {
    using Mask = SubsetMask::bits_type;

    struct ClaimName {
      ClaimId          id;
      std::string_view name;
      std::string_view group;
      Domain           domain;
    };

    constexpr std::array kClaims = {
        ClaimName{ClaimId::T1_4a, "T1_4a", "T1_4", Domain::table},
        ClaimName{ClaimId::T1_4b, "T1_4b", "T1_4", Domain::table},
        ClaimName{ClaimId::T1_4c, "T1_4c", "T1_4", Domain::table},
        ClaimName{ClaimId::P2_4a, "P2_4a", "P2_4", Domain::family},
        ClaimName{ClaimId::P2_4b, "P2_4b", "P2_4", Domain::family},
        ClaimName{ClaimId::P2_4c, "P2_4c", "P2_4", Domain::family_pair},
        ClaimName{ClaimId::P2_4d, "P2_4d", "P2_4", Domain::family},
        ClaimName{ClaimId::P2_4e, "P2_4e", "P2_4", Domain::family},
        ClaimName{ClaimId::P2_4f, "P2_4f", "P2_4", Domain::family},
        ClaimName{ClaimId::P2_4g, "P2_4g", "P2_4", Domain::family_pair},
        ClaimName{ClaimId::P2_4h, "P2_4h", "P2_4", Domain::family},
        ClaimName{ClaimId::C2_6, "C2_6", "C2_6", Domain::table},
        ClaimName{ClaimId::P3_2, "P3_2", "P3_2", Domain::table_stack_pair},
        ClaimName{ClaimId::P3_5, "P3_5", "P3_5", Domain::table_stack_chain},
        ClaimName{ClaimId::P3_7a, "P3_7a", "P3_7", Domain::table},
        ClaimName{ClaimId::P3_7b, "P3_7b", "P3_7", Domain::table},
        ClaimName{ClaimId::P3_7c, "P3_7c", "P3_7", Domain::table},
        ClaimName{ClaimId::P3_7d, "P3_7d", "P3_7", Domain::table},
        ClaimName{ClaimId::L3_8a, "L3_8a", "L3_8", Domain::table_filter_pair},
        ClaimName{ClaimId::L3_8b, "L3_8b", "L3_8", Domain::table_filter_pair},
        ClaimName{ClaimId::L3_8c, "L3_8c", "L3_8", Domain::table_filter_pair},
        ClaimName{ClaimId::L3_8d, "L3_8d", "L3_8", Domain::table_filter_pair},
        ClaimName{ClaimId::L3_8a_prime,
                  "L3_8a_prime",
                  "L3_8",
                  Domain::table_filter_pair},
        ClaimName{ClaimId::L3_8b_prime,
                  "L3_8b_prime",
                  "L3_8",
                  Domain::table_filter_pair},
        ClaimName{ClaimId::L3_8c_prime,
                  "L3_8c_prime",
                  "L3_8",
                  Domain::table_filter_pair},
        ClaimName{ClaimId::L3_8d_prime,
                  "L3_8d_prime",
                  "L3_8",
                  Domain::table_filter_pair},
        ClaimName{ClaimId::T3_10a, "T3_10a", "T3_10", Domain::table_filter_pair},
        ClaimName{ClaimId::T3_10b, "T3_10b", "T3_10", Domain::table_filter_pair},
        ClaimName{ClaimId::T3_11, "T3_11", "T3_11", Domain::table_filter_triple},
        ClaimName{ClaimId::C3_12a, "C3_12a", "C3_12", Domain::table_filter},
        ClaimName{ClaimId::C3_12b, "C3_12b", "C3_12", Domain::table_filter},
        ClaimName{ClaimId::C3_12c, "C3_12c", "C3_12", Domain::table_filter},
        ClaimName{ClaimId::C3_12d, "C3_12d", "C3_12", Domain::table_filter},
        ClaimName{ClaimId::T4_2, "T4_2", "T4_2", Domain::table_stack_pair},
        ClaimName{ClaimId::P4_3a, "P4_3a", "P4_3", Domain::table_filter_pair},
        ClaimName{ClaimId::P4_3b, "P4_3b", "P4_3", Domain::table_filter_pair},
        ClaimName{ClaimId::P4_3c, "P4_3c", "P4_3", Domain::table_filter_pair},
        ClaimName{ClaimId::P4_3d, "P4_3d", "P4_3", Domain::table_filter_pair},
        ClaimName{ClaimId::T4_4, "T4_4", "T4_4", Domain::table_filter_pair},
        ClaimName{ClaimId::C4_5, "C4_5", "C4_5", Domain::table_filter}};

    constexpr auto kAllIds = [] {
      std::array<ClaimId, kClaims.size()> out{};
      for (std::size_t i = 0; i < kClaims.size(); ++i) {
        out[i] = kClaims[i].id;
      }
      return out;
    }();

    ClaimName const& info(ClaimId id) {
      return kClaims[static_cast<std::size_t>(id)];
    }

    ////////////////////////////////////////////////////////////////////////
    // Comparison helpers
    ////////////////////////////////////////////////////////////////////////

    Family family_where(int n, std::function<bool(SubsetMask)> const& pred) {
      Family::bits_type out = 0;
      for (Mask A = 0; A < (Mask{1} << n); ++A) {
        if (pred(SubsetMask(A, n))) {
          out |= Family::bits_type{1} << A;
        }
      }
      return Family(out, n);
    }

    // The stack {S}.
    Family top_stack(int n) {
      return Family::of({SubsetMask::full(n)}, n);
    }

    std::optional<SubsetMask> least_member(Family const& F) {
      auto const members = F.members();
      if (members.empty()) {
        return std::nullopt;
      }
      return members.front();
    }

    Verdict equal(Family const& lhs, Family const& rhs, std::string_view what) {
      if (lhs == rhs) {
        return {};
      }
      Verdict v;
      v.status          = Status::fail;
      auto const in_lhs = least_member(lhs - rhs);
      auto const in_rhs = least_member(rhs - lhs);
      if (in_lhs && (!in_rhs || in_lhs->bits() < in_rhs->bits())) {
        v.witness = in_lhs;
        v.note    = std::string(what) + ": witness on the left side only";
      } else {
        v.witness = in_rhs;
        v.note    = std::string(what) + ": witness on the right side only";
      }
      return v;
    }

    Verdict included(Family const& lhs,
                     Family const& rhs,
                     std::string_view what,
                     bool             record_strict = false) {
      if (auto const bad = least_member(lhs - rhs)) {
        Verdict v;
        v.status  = Status::fail;
        v.witness = bad;
        v.note    = std::string(what) + ": witness in the smaller side only";
        return v;
      }
      Verdict v;
      if (record_strict) {
        if (auto const extra = least_member(rhs - lhs)) {
          v.strict  = true;
          v.witness = extra;
          v.note    = std::string(what) + ": strict";
        }
      }
      return v;
    }

    Verdict holds(bool ok, std::string note) {
      Verdict v;
      if (!ok) {
        v.status = Status::fail;
        v.note   = std::move(note);
      }
      return v;
    }

    Verdict skipped(std::string note) {
      Verdict v;
      v.status = Status::skipped;
      v.note   = std::move(note);
      return v;
    }

    // Runs the checks in order and returns the first failure.
    Verdict all_of(std::initializer_list<std::function<Verdict()>> checks) {
      Verdict last;
      for (auto const& check : checks) {
        last = check();
        if (last.status != Status::pass) {
          return last;
        }
      }
      return last;
    }

    ////////////////////////////////////////////////////////////////////////
    // Instance access
    ////////////////////////////////////////////////////////////////////////

    CayleyTable const& table_of(Instance const& in, ClaimId id) {
      if (!in.table) {
        throw PreconditionError(std::string(to_string(id))
                                + " needs a Cayley table");
      }
      if (in.table->order() != in.n) {
        throw PreconditionError("instance order does not match the table");
      }
      return *in.table;
    }

    Family const& family_of(std::optional<Family> const& F,
                            char                         name,
                            Instance const&              in,
                            ClaimId                      id) {
      if (!F) {
        throw PreconditionError(std::string(to_string(id)) + " needs family "
                                + name);
      }
      if (F->ground_size() != in.n) {
        throw PreconditionError(std::string("family ") + name
                                + " has the wrong ground set size");
      }
      return *F;
    }

    ////////////////////////////////////////////////////////////////////////
    // Minimal ideal characterizations
    ////////////////////////////////////////////////////////////////////////

    Verdict check_minimal_ideals(ClaimId id, CayleyTable const& t) {
      int const    n      = t.order();
      auto const   sizes  = size_families(t);
      auto const   ideals = beta::minimal_left_ideals(t);
      auto const   every_meets = family_where(n, [&](SubsetMask A) {
        return std::all_of(ideals.begin(), ideals.end(), [&](SubsetMask L) {
          return L.meets(beta::closure(A));
        });
      });
      auto const   some_inside = family_where(n, [&](SubsetMask A) {
        return std::any_of(ideals.begin(), ideals.end(), [&](SubsetMask L) {
          return L.subset_of(beta::closure(A));
        });
      });
      auto const   some_meets = family_where(n, [&](SubsetMask A) {
        return std::any_of(ideals.begin(), ideals.end(), [&](SubsetMask L) {
          return L.meets(beta::closure(A));
        });
      });
      switch (id) {
        case ClaimId::T1_4a:
          return equal(sizes.syn, every_meets, "Syn vs minimal left ideals");
        case ClaimId::T1_4b:
          return equal(sizes.thick, some_inside, "Thick vs minimal left ideals");
        default:
          return equal(sizes.ps, some_meets, "PS vs minimal left ideals");
      }
    }

    Verdict check_brown(CayleyTable const& t) {
      auto const sizes = size_families(t);
      return all_of(
          {[&] { return holds(is_grill(sizes.ps), "PS is not a grill"); },
           [&] {
             return equal(sizes.ps,
                          intersection_family(sizes.syn, sizes.thick),
                          "PS vs syndetic-thick intersections");
           }});
    }

    Verdict check_ps_compositions(ClaimId id, CayleyTable const& t) {
      int const  n     = t.order();
      auto const sizes = size_families(t);
      auto const top   = top_stack(n);
      switch (id) {
        case ClaimId::P3_7a:
          return equal(
              sizes.ps, rel_syn_family(t, {top, sizes.thick}), "PS vs Syn({S},Thick)");
        case ClaimId::P3_7b:
          return equal(sizes.ps,
                       rel_thick_family(t, {sizes.syn, mesh(sizes.ps)}),
                       "PS vs Thick(Syn,PS*)");
        case ClaimId::P3_7c:
          return equal(mesh(sizes.ps),
                       rel_thick_family(t, {top, sizes.thick}),
                       "PS* vs Thick({S},Thick)");
        default: {
          auto const inner = rel_thick_family(t, {top, sizes.thick});
          return equal(sizes.ps,
                       rel_thick_family(t, {sizes.syn, inner}),
                       "PS vs Thick(Syn,Thick({S},Thick))");
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Mesh operator
    ////////////////////////////////////////////////////////////////////////

    Verdict check_mesh(ClaimId id, Instance const& in) {
      Family const& F = family_of(in.F, 'F', in, id);
      if (id == ClaimId::P2_4f) {
        if (!is_filter(F)) {
          return skipped("F is not a filter");
        }
        return holds(is_ultrafilter(F) == (mesh(F) == F),
                     "ultrafilter iff F = F* fails");
      }
      if (id == ClaimId::P2_4g) {
        Family const& p = family_of(in.G, 'G', in, id);
        if (!is_filter(F) || !is_ultrafilter(p)) {
          return skipped("needs a filter F and an ultrafilter G");
        }
        return holds(F.subset_of(p) == p.subset_of(mesh(F)),
                     "F in p iff p in F* fails");
      }
      if (!is_stack(F)) {
        return skipped("F is not a stack");
      }
      switch (id) {
        case ClaimId::P2_4a:
          return holds(is_stack(mesh(F)), "F* is not a stack");
        case ClaimId::P2_4b:
          return equal(F, mesh(mesh(F)), "F vs F**");
        case ClaimId::P2_4c: {
          Family const& G = family_of(in.G, 'G', in, id);
          if (!is_stack(G)) {
            return skipped("G is not a stack");
          }
          return holds(F.subset_of(G) == mesh(G).subset_of(mesh(F)),
                       "F in G iff G* in F* fails");
        }
        case ClaimId::P2_4d:
          return equal(F, schmidt_mesh(mesh(F)), "F vs sets meeting F*");
        case ClaimId::P2_4e:
          return holds(is_filter(F) == is_grill(mesh(F)),
                       "F filter iff F* grill fails");
        default: {
          auto const star = mesh(F);
          auto const I    = intersection_family(F, star);
          return all_of(
              {[&] { return holds(is_grill(I), "B n C family is not a grill"); },
               [&] { return included(F, I, "F in B n C family"); },
               [&] { return included(star, I, "F* in B n C family"); }});
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Relative notions over stacks
    ////////////////////////////////////////////////////////////////////////

    Verdict check_duality(CayleyTable const& t, Family const& F, Family const& G) {
      RelParams const p(F, G);
      auto const      syn   = rel_syn_family(t, p);
      auto const      thick = rel_thick_family(t, p);
      return all_of({[&] { return equal(syn, mesh(thick), "Syn vs Thick*"); },
                     [&] {
                       return equal(syn,
                                    schmidt_mesh(thick),
                                    "Syn vs sets meeting Thick");
                     }});
    }

    Verdict check_ordering(CayleyTable const& t,
                           Family const&      F1,
                           Family const&      F2,
                           Family const&      H) {
      if (!F1.subset_of(F2)) {
        return skipped("F is not contained in G");
      }
      return all_of(
          {[&] {
             return included(rel_syn_family(t, {F2, H}),
                             rel_syn_family(t, {F1, H}),
                             "Syn(F2,G) in Syn(F1,G)");
           },
           [&] {
             return included(rel_syn_family(t, {H, F1}),
                             rel_syn_family(t, {H, F2}),
                             "Syn(F,G1) in Syn(F,G2)");
           },
           [&] {
             return included(rel_thick_family(t, {F1, H}),
                             rel_thick_family(t, {F2, H}),
                             "Thick(F1,G) in Thick(F2,G)");
           },
           [&] {
             return included(rel_thick_family(t, {H, F2}),
                             rel_thick_family(t, {H, F1}),
                             "Thick(F,G2) in Thick(F,G1)");
           }});
    }

    Verdict check_relative_grill(CayleyTable const& t,
                                 Family const&      F,
                                 Family const&      G) {
      RelParams const p(F, G);
      auto const      ps = rel_ps_family(t, p);
      return all_of(
          {[&] { return holds(is_grill(ps), "PS(F,G) is not a grill"); },
           [&] { return included(rel_syn_family(t, p), ps, "Syn in PS"); },
           [&] { return included(rel_thick_family(t, p), ps, "Thick in PS"); }});
    }

    ////////////////////////////////////////////////////////////////////////
    // Filters: closures and products
    ////////////////////////////////////////////////////////////////////////

    Verdict check_closure_forms(ClaimId            id,
                                CayleyTable const& t,
                                Family const&      F,
                                Family const&      G) {
      int const        n = t.order();
      SubsetMask const B = beta::closure(F);
      SubsetMask const C = beta::closure(G);
      Family const     Fs = mesh(F);
      Family const     Gs = mesh(G);
      switch (id) {
        case ClaimId::L3_8a:
          return equal(rel_thick_family(t, {F, G}),
                       family_where(n,
                                    [&](SubsetMask A) {
                                      for (int y : C.elements()) {
                                        if (beta::times_point(t, B, y).subset_of(
                                                beta::closure(A))) {
                                          return true;
                                        }
                                      }
                                      return false;
                                    }),
                       "Thick(F,G) vs some F-bar q inside A");
        case ClaimId::L3_8b:
        case ClaimId::L3_8b_prime: {
          Family const prod = stack_product(t, F, G);
          if (!is_filter(prod)) {
            return holds(false, "F*G is not a filter");
          }
          SubsetMask const K = beta::closure(prod);
          if (id == ClaimId::L3_8b) {
            return equal(rel_thick_family(t, {F, Gs}),
                         family_where(n,
                                      [&](SubsetMask A) {
                                        return K.subset_of(beta::closure(A));
                                      }),
                         "Thick(F,G*) vs cl(F*G) inside A");
          }
          return equal(rel_syn_family(t, {F, Gs}),
                       family_where(n,
                                    [&](SubsetMask A) {
                                      return K.meets(beta::closure(A));
                                    }),
                       "Syn(F,G*) vs cl(F*G) meets A");
        }
        case ClaimId::L3_8c:
          return equal(rel_thick_family(t, {Fs, G}),
                       family_where(n,
                                    [&](SubsetMask A) {
                                      return beta::product(t, B, C).meets(
                                          beta::closure(A));
                                    }),
                       "Thick(F*,G) vs F-bar G-bar meets A");
        case ClaimId::L3_8d:
          return equal(rel_thick_family(t, {Fs, Gs}),
                       family_where(n,
                                    [&](SubsetMask A) {
                                      for (int x : B.elements()) {
                                        if (beta::point_times(t, x, C).subset_of(
                                                beta::closure(A))) {
                                          return true;
                                        }
                                      }
                                      return false;
                                    }),
                       "Thick(F*,G*) vs some p G-bar inside A");
        case ClaimId::L3_8a_prime:
          return equal(rel_syn_family(t, {F, G}),
                       family_where(n,
                                    [&](SubsetMask A) {
                                      for (int y : C.elements()) {
                                        if (!beta::times_point(t, B, y).meets(
                                                beta::closure(A))) {
                                          return false;
                                        }
                                      }
                                      return true;
                                    }),
                       "Syn(F,G) vs every F-bar q meets A");
        case ClaimId::L3_8c_prime:
          return equal(rel_syn_family(t, {Fs, G}),
                       family_where(n,
                                    [&](SubsetMask A) {
                                      return beta::product(t, B, C).subset_of(
                                          beta::closure(A));
                                    }),
                       "Syn(F*,G) vs F-bar G-bar inside A");
        default:
          return equal(rel_syn_family(t, {Fs, Gs}),
                       family_where(n,
                                    [&](SubsetMask A) {
                                      for (int x : B.elements()) {
                                        if (!beta::point_times(t, x, C).meets(
                                                beta::closure(A))) {
                                          return false;
                                        }
                                      }
                                      return true;
                                    }),
                       "Syn(F*,G*) vs every p G-bar meets A");
      }
    }

    Verdict check_product_filters(ClaimId            id,
                                  CayleyTable const& t,
                                  Family const&      F,
                                  Family const&      G) {
      SubsetMask const B = beta::closure(F);
      SubsetMask const C = beta::closure(G);
      if (id == ClaimId::T3_10a) {
        auto const syn = rel_syn_family(t, {mesh(F), G});
        return all_of(
            {[&] { return holds(is_filter(syn), "Syn(F*,G) is not a filter"); },
             [&] {
               return equal(syn,
                            beta::filter_of(beta::product(t, B, C)),
                            "Syn(F*,G) vs filter of F-bar G-bar");
             }});
      }
      auto const thick = rel_thick_family(t, {F, mesh(G)});
      return all_of(
          {[&] { return holds(is_filter(thick), "Thick(F,G*) is not a filter"); },
           [&] {
             return equal(thick, stack_product(t, F, G), "Thick(F,G*) vs F*G");
           },
           [&] {
             return included(thick,
                             rel_syn_family(t, {mesh(F), G}),
                             "Thick(F,G*) in Syn(F*,G)");
           }});
    }

    Verdict check_product_containment(CayleyTable const& t,
                                      Family const&      F,
                                      Family const&      G,
                                      Family const&      H) {
      bool const closed
          = beta::product(t, beta::closure(F), beta::closure(G))
                .subset_of(beta::closure(H));
      bool const combinatorial = H.subset_of(rel_syn_family(t, {mesh(F), G}));
      return holds(closed == combinatorial,
                   closed ? "F-bar G-bar in H-bar but H not in Syn(F*,G)"
                          : "H in Syn(F*,G) but F-bar G-bar not in H-bar");
    }

    Verdict check_closed_subsemigroup(ClaimId            id,
                                      CayleyTable const& t,
                                      Family const&      F) {
      int const        n   = t.order();
      SubsetMask const B   = beta::closure(F);
      Family const     top = top_stack(n);
      auto const left_side = [&] {
        return rel_syn_family(t, {mesh(top), F});
      };
      auto const right_side = [&] {
        return rel_syn_family(t, {mesh(F), top});
      };
      bool closed = false, combinatorial = false;
      switch (id) {
        case ClaimId::C3_12a:
          closed        = is_subsemigroup(t, B);
          combinatorial = F.subset_of(rel_syn_family(t, {mesh(F), F}));
          break;
        case ClaimId::C3_12b:
          closed        = is_left_ideal(t, B);
          combinatorial = F.subset_of(left_side());
          break;
        case ClaimId::C3_12c:
          closed        = is_right_ideal(t, B);
          combinatorial = F.subset_of(right_side());
          break;
        default:
          closed = is_two_sided_ideal(t, B);
          combinatorial
              = F.subset_of(left_side() & right_side());
          break;
      }
      return holds(closed == combinatorial,
                   closed ? "closure has the property but the inclusion fails"
                          : "inclusion holds but the closure lacks the property");
    }

    ////////////////////////////////////////////////////////////////////////
    // Relative piecewise syndeticity
    ////////////////////////////////////////////////////////////////////////

    Verdict check_relative_piecewise(ClaimId            id,
                                     CayleyTable const& t,
                                     Family const&      F,
                                     Family const&      G) {
      int const        n  = t.order();
      SubsetMask const B  = beta::closure(F);
      SubsetMask const C  = beta::closure(G);
      Family const     Fs = mesh(F);
      Family const     Gs = mesh(G);
      switch (id) {
        case ClaimId::P4_3a:
          return included(rel_ps_family(t, {F, G}),
                          rel_thick_family(t, {Fs, G}),
                          "PS(F,G) in Thick(F*,G)",
                          true);
        case ClaimId::P4_3b:
          return equal(rel_ps_family(t, {F, Gs}),
                       rel_syn_family(t, {F, Gs}),
                       "PS(F,G*) vs Syn(F,G*)");
        case ClaimId::P4_3c:
          return equal(rel_ps_family(t, {Fs, G}),
                       rel_thick_family(t, {Fs, G}),
                       "PS(F*,G) vs Thick(F*,G)");
        case ClaimId::P4_3d:
          return included(rel_ps_family(t, {Fs, Gs}),
                          family_where(n,
                                       [&](SubsetMask A) {
                                         for (int x : B.elements()) {
                                           if (beta::point_times(t, x, C).meets(
                                                   beta::closure(A))) {
                                             return true;
                                           }
                                         }
                                         return false;
                                       }),
                          "PS(F*,G*) in some p G-bar meets A",
                          true);
        default: {
          if (!is_subsemigroup(t, B)) {
            return skipped("the closure of F is not a subsemigroup");
          }
          if (!beta::product(t, B, C).subset_of(C)) {
            return skipped("F-bar G-bar is not inside G-bar");
          }
          return included(rel_ps_family(t, {F, G}),
                          point_ps_family(t, F, C),
                          "PS(F,G) in sets with a point q of G-bar");
        }
      }
    }

    Verdict check_point_piecewise(CayleyTable const& t, Family const& F) {
      SubsetMask const B = beta::closure(F);
      if (!is_subsemigroup(t, B)) {
        return skipped("the closure of F is not a subsemigroup");
      }
      return included(rel_ps_family(t, {F, F}),
                      point_ps_family(t, F, B),
                      "PS(F,F) in sets with a point q of F-bar");
    }

    void require_filters(std::initializer_list<Family const*> families,
                         ClaimId                              id) {
      for (auto const* F : families) {
        if (!is_filter(*F)) {
          throw PreconditionError(std::string(to_string(id)) + ": "
                                  + to_string(*F) + " is not a proper filter");
        }
      }
    }
  }  // namespace

  std::span<ClaimId const> all_claims() {
    return kAllIds;
  }

  std::string_view to_string(ClaimId id) {
    return info(id).name;
  }

  std::optional<ClaimId> claim_from_string(std::string_view name) {
    std::string key(name);
    for (std::string_view const prime : {"′", "'"}) {
      if (key.size() > prime.size() && key.ends_with(prime)) {
        key = key.substr(0, key.size() - prime.size()) + "_prime";
        break;
      }
    }
    for (auto const& c : kClaims) {
      if (c.name == key) {
        return c.id;
      }
    }
    return std::nullopt;
  }

  std::vector<ClaimId> parse_claim_list(std::string_view list) {
    std::vector<ClaimId> out;
    std::size_t          start = 0;
    while (start <= list.size()) {
      auto end = list.find(',', start);
      if (end == std::string_view::npos) {
        end = list.size();
      }
      auto token = list.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
      }
      while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
      }
      if (token.empty()) {
        throw ParseError("claims: empty entry in list");
      }
      if (token == "all") {
        out.assign(kAllIds.begin(), kAllIds.end());
      } else if (auto id = claim_from_string(token)) {
        out.push_back(*id);
      } else {
        bool found = false;
        for (auto const& c : kClaims) {
          if (c.group == token) {
            out.push_back(c.id);
            found = true;
          }
        }
        if (!found) {
          throw ParseError("claims: unknown claim '" + std::string(token) + "'");
        }
      }
      start = end + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Domain domain(ClaimId id) {
    return info(id).domain;
  }

  bool needs_table(ClaimId id) {
    auto const d = domain(id);
    return d != Domain::family && d != Domain::family_pair;
  }

  std::string_view to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      default:
        return "skipped";
    }
  }

  Verdict evaluate(ClaimId id, Instance const& in) {
    if (!needs_table(id)) {
      return check_mesh(id, in);
    }
    CayleyTable const& t = table_of(in, id);
    switch (domain(id)) {
      case Domain::table:
        switch (id) {
          case ClaimId::T1_4a:
          case ClaimId::T1_4b:
          case ClaimId::T1_4c:
            return check_minimal_ideals(id, t);
          case ClaimId::C2_6:
            return check_brown(t);
          default:
            return check_ps_compositions(id, t);
        }
      case Domain::table_stack_pair: {
        Family const& F = family_of(in.F, 'F', in, id);
        Family const& G = family_of(in.G, 'G', in, id);
        return id == ClaimId::P3_2 ? check_duality(t, F, G)
                                   : check_relative_grill(t, F, G);
      }
      case Domain::table_stack_chain:
        return check_ordering(t,
                              family_of(in.F, 'F', in, id),
                              family_of(in.G, 'G', in, id),
                              family_of(in.H, 'H', in, id));
      case Domain::table_filter: {
        Family const& F = family_of(in.F, 'F', in, id);
        require_filters({&F}, id);
        return id == ClaimId::C4_5 ? check_point_piecewise(t, F)
                                   : check_closed_subsemigroup(id, t, F);
      }
      case Domain::table_filter_triple: {
        Family const& F = family_of(in.F, 'F', in, id);
        Family const& G = family_of(in.G, 'G', in, id);
        Family const& H = family_of(in.H, 'H', in, id);
        require_filters({&F, &G, &H}, id);
        return check_product_containment(t, F, G, H);
      }
      default: {
        Family const& F = family_of(in.F, 'F', in, id);
        Family const& G = family_of(in.G, 'G', in, id);
        require_filters({&F, &G}, id);
        switch (id) {
          case ClaimId::T3_10a:
          case ClaimId::T3_10b:
            return check_product_filters(id, t, F, G);
          case ClaimId::P4_3a:
          case ClaimId::P4_3b:
          case ClaimId::P4_3c:
          case ClaimId::P4_3d:
          case ClaimId::T4_4:
            return check_relative_piecewise(id, t, F, G);
          default:
            return check_closure_forms(id, t, F, G);
        }
      }
    }
  }

}  // namespace sgsize
