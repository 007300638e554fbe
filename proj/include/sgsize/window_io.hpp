#ifndef SGSIZE_WINDOW_IO_HPP_
#define SGSIZE_WINDOW_IO_HPP_

// WindowSet file formats.
//
// Run-length text: "N; a1-b1,a2-b2,..." with the maximal runs of members in
// ascending order, e.g. "10; 2-2,4-6".  The empty set is "N;".  On input a
// run may also be a single number "a", runs may come in any order and
// surrounding whitespace is ignored.
//
// Binary: N as 8 little-endian bytes, then ceil(N/8) bytes holding the
// members least significant bit first (bit k is the element k+1).

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "sgsize/natwin.hpp"

namespace sgsize {

  std::string window_to_rle(WindowSet const& W);
  WindowSet   parse_window_rle(std::string_view text);

  std::string window_to_binary(WindowSet const& W);
  WindowSet   parse_window_binary(std::string_view bytes);

  // Binary for a ".bin" extension, run-length text otherwise.
  WindowSet read_window_file(std::filesystem::path const& path);

}  // namespace sgsize

#endif  // SGSIZE_WINDOW_IO_HPP_
