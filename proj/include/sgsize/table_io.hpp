#ifndef SGSIZE_TABLE_IO_HPP_
#define SGSIZE_TABLE_IO_HPP_

// Cayley table text format:
//
//   3
//   0 1 2
//   1 2 0
//   2 0 1
//
// Line 1 is the order n, followed by n rows of n space-separated 0-based
// entries; row i lists i*0 ... i*(n-1).  The JSON line variant used for
// enumeration output is {"n":3,"table":[[0,1,2],[1,2,0],[2,0,1]]}.

#include <filesystem>
#include <string>
#include <string_view>

#include "sgsize/semigroup.hpp"

namespace sgsize {

  std::string table_to_text(CayleyTable const& t);
  CayleyTable parse_table_text(std::string_view text);
  CayleyTable read_table_file(std::filesystem::path const& path);

  std::string table_to_jsonl(CayleyTable const& t);
  CayleyTable table_from_json(std::string_view text);

}  // namespace sgsize

#endif  // SGSIZE_TABLE_IO_HPP_
