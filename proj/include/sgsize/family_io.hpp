#ifndef SGSIZE_FAMILY_IO_HPP_
#define SGSIZE_FAMILY_IO_HPP_

// Text form of a family: a JSON array of arrays of 0-based element indices,
// members sorted ascending by mask and elements ascending within a member,
// e.g. [[0],[0,1]].  A family file wraps this with the ground-set size:
//
//   {"n":2,"members":[[0],[0,1]]}
//
// A bare array is also accepted on input when the ground-set size is known
// from context.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sgsize/setfam.hpp"

namespace sgsize {

  std::string family_to_json(Family const& F);
  Family      family_from_json(std::string_view text, int n);

  std::string family_file_text(Family const& F);
  // `n_hint` is required for a bare array and, when given, must match an
  // explicit "n" in the object form.
  Family parse_family_file(std::string_view   text,
                           std::optional<int> n_hint = std::nullopt);
  Family read_family_file(std::filesystem::path const& path,
                          std::optional<int>           n_hint = std::nullopt);

}  // namespace sgsize

#endif  // SGSIZE_FAMILY_IO_HPP_
