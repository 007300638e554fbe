#ifndef SGSIZE_NOTIONS_HPP_
#define SGSIZE_NOTIONS_HPP_

// Notions of size in a finite semigroup: syndetic, thick and piecewise
// syndetic sets, their relative versions with respect to a pair of stacks,
// the product of stacks and the piecewise notion defined through a point of
// the filter's closure.
//
// Throughout, x^{-1}A = { y : x*y in A } and the quantifiers over finite
// nonempty subsets H of a set B are evaluated in two ways:
//
// * the functions in this namespace use the monotone shortcuts (unions and
//   intersections over H are extremal at H = B, and only the inclusion-minimal
//   members of the left stack matter);
// * the functions in `literal` sweep every H and every member, exactly as the
//   definitions read.  They are kept as the reference implementation and are
//   compared against the shortcuts in the test suite.

#include <optional>

#include "sgsize/semigroup.hpp"
#include "sgsize/setfam.hpp"

namespace sgsize {

  ////////////////////////////////////////////////////////////////////////
  // Classical notions
  ////////////////////////////////////////////////////////////////////////

  // Some finite H has the union of h^{-1}A over H equal to S.
  bool is_syndetic(CayleyTable const& t, SubsetMask A);
  // Every finite H has a nonempty intersection of h^{-1}A over H.
  bool is_thick(CayleyTable const& t, SubsetMask A);
  // Some finite H has a thick union of h^{-1}A over H.
  bool is_piecewise_syndetic(CayleyTable const& t, SubsetMask A);

  struct SizeFamilies {
    Family syn;
    Family thick;
    Family ps;
  };

  // Classifies all 2^n subsets; n <= 6.
  SizeFamilies size_families(CayleyTable const& t);

  ////////////////////////////////////////////////////////////////////////
  // Filters in the finite model
  ////////////////////////////////////////////////////////////////////////

  // All supersets of B; B must be nonempty.
  Family principal_filter(SubsetMask B);
  Family principal_ultrafilter(int x, int n);
  // Intersection of all members; throws PreconditionError unless F is a
  // (proper) filter.
  SubsetMask filter_base(Family const& F);

  ////////////////////////////////////////////////////////////////////////
  // Relative notions
  ////////////////////////////////////////////////////////////////////////

  // The pair (F, G) of stacks the relative notions are taken with respect
  // to.  Construction throws PreconditionError if either is not a stack or
  // the ground sets differ.
  class RelParams {
   public:
    RelParams(Family F, Family G);

    [[nodiscard]] Family const& left() const noexcept {
      return _F;
    }
    [[nodiscard]] Family const& right() const noexcept {
      return _G;
    }
    [[nodiscard]] int ground_size() const noexcept {
      return _F.ground_size();
    }

   private:
    Family _F;
    Family _G;
  };

  // For every B in F some finite H in B has the union of h^{-1}A in G.
  bool is_rel_syndetic(CayleyTable const& t, SubsetMask A, RelParams const& p);
  // Some B in F has, for every finite H in B, the intersection of h^{-1}A in
  // the mesh of G.
  bool is_rel_thick(CayleyTable const& t, SubsetMask A, RelParams const& p);

  Family rel_syn_family(CayleyTable const& t, RelParams const& p);
  Family rel_thick_family(CayleyTable const& t, RelParams const& p);
  // { B n C : B relatively syndetic, C relatively thick }.
  Family rel_ps_family(CayleyTable const& t, RelParams const& p);

  // F*G = { A : { x : x^{-1}A in G } in F }; F and G must be stacks.
  Family stack_product(CayleyTable const& t, Family const& F, Family const& G);

  ////////////////////////////////////////////////////////////////////////
  // Piecewise syndeticity through a point of the closure
  ////////////////////////////////////////////////////////////////////////

  // Sets A with A in Syn(F, Thick(F, q)) for some ultrafilter q at a point of
  // `points`.  F must be a filter.
  Family point_ps_family(CayleyTable const& t,
                         Family const&      F,
                         SubsetMask         points);

  // The least y in `points` with A in Syn(F, Thick(F, q_y)), if any.
  std::optional<int> point_ps_witness(CayleyTable const& t,
                                      SubsetMask         A,
                                      Family const&      F,
                                      SubsetMask         points);

  // Piecewise F-syndetic in the sense where q ranges over the closure of F.
  // F must be a filter whose base is a subsemigroup; otherwise throws
  // PreconditionError.
  bool is_szz_piecewise_syndetic(CayleyTable const& t,
                                 SubsetMask         A,
                                 Family const&      F);

  namespace literal {
    bool is_syndetic(CayleyTable const& t, SubsetMask A);
    bool is_thick(CayleyTable const& t, SubsetMask A);
    // Quadratic in 2^n; n <= 10.
    bool is_piecewise_syndetic(CayleyTable const& t, SubsetMask A);

    // No stack requirement: F and G are taken as given.
    bool is_rel_syndetic(CayleyTable const& t,
                         SubsetMask         A,
                         Family const&      F,
                         Family const&      G);
    bool is_rel_thick(CayleyTable const& t,
                      SubsetMask         A,
                      Family const&      F,
                      Family const&      G);
  }  // namespace literal

}  // namespace sgsize

#endif  // SGSIZE_NOTIONS_HPP_
