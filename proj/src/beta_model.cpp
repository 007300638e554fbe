#include "sgsize/beta_model.hpp"

#include "sgsize/notions.hpp"

namespace sgsize::beta {

  SubsetMask closure(SubsetMask A) {
    return A;
  }

  SubsetMask closure(Family const& filter) {
    return filter_base(filter);
  }

  Family filter_of(SubsetMask points) {
    return principal_filter(points);
  }

  Family ultrafilter(int x, int n) {
    return principal_ultrafilter(x, n);
  }

  SubsetMask product(CayleyTable const& t, SubsetMask X, SubsetMask Y) {
    return set_product(t, X, Y);
  }

  SubsetMask point_times(CayleyTable const& t, int x, SubsetMask Y) {
    return set_product(t, SubsetMask::singleton(x, t.order()), Y);
  }

  SubsetMask times_point(CayleyTable const& t, SubsetMask X, int y) {
    return set_product(t, X, SubsetMask::singleton(y, t.order()));
  }

  std::vector<SubsetMask> minimal_left_ideals(CayleyTable const& t) {
    return sgsize::minimal_left_ideals(t);
  }

  SubsetMask smallest_ideal(CayleyTable const& t) {
    return sgsize::smallest_ideal(t);
  }

}  // namespace sgsize::beta
