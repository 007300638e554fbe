#ifndef SGSIZE_BETA_MODEL_HPP_
#define SGSIZE_BETA_MODEL_HPP_

// The finite model of the Stone-Cech compactification.
//
// For a finite semigroup S every ultrafilter is principal, so beta S is S
// itself: an ultrafilter is an element, the closure of a set A is A, the
// closure of a filter is its base, and the product of two closures is the
// set product of the bases.  Every statement about closures used by the
// checkers is translated through the functions below and nowhere else.

#include <vector>

#include "sgsize/semigroup.hpp"
#include "sgsize/setfam.hpp"

namespace sgsize::beta {

  // cl(A)
  SubsetMask closure(SubsetMask A);

  // The closure of a filter: the points whose ultrafilters contain it.
  SubsetMask closure(Family const& filter);

  // The filter whose closure is `points`; `points` must be nonempty.
  Family filter_of(SubsetMask points);

  // The ultrafilter at x.
  Family ultrafilter(int x, int n);

  // F-bar * G-bar for closures given as point sets; also cl(F * G) for
  // filters F and G.
  SubsetMask product(CayleyTable const& t, SubsetMask X, SubsetMask Y);

  // p * G-bar and F-bar * q with p, q points.
  SubsetMask point_times(CayleyTable const& t, int x, SubsetMask Y);
  SubsetMask times_point(CayleyTable const& t, SubsetMask X, int y);

  // The minimal left ideals of beta S.
  std::vector<SubsetMask> minimal_left_ideals(CayleyTable const& t);

  // K(beta S).
  SubsetMask smallest_ideal(CayleyTable const& t);

}  // namespace sgsize::beta

#endif  // SGSIZE_BETA_MODEL_HPP_
