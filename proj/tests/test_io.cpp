#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "sgsize/error.hpp"
#include "sgsize/family_io.hpp"
#include "sgsize/notions.hpp"
#include "sgsize/table_io.hpp"
#include "sgsize/window_io.hpp"

using namespace sgsize;
namespace fs = std::filesystem;

namespace {
  fs::path write_temp(std::string const& name, std::string const& bytes) {
    auto const path = fs::temp_directory_path() / ("sgsize_io_" + name);
    std::ofstream(path, std::ios::binary) << bytes;
    return path;
  }
}  // namespace

TEST_CASE("table text round trip") {
  for (auto const& t : enumerate_semigroups(3, Dedupe::none)) {
    REQUIRE(parse_table_text(table_to_text(t)) == t);
    REQUIRE(table_from_json(table_to_jsonl(t)) == t);
  }
  CHECK(table_to_text(tables::cyclic_group(2)) == "2\n0 1\n1 0\n");
  CHECK(table_to_jsonl(tables::left_zero(2)) == R"({"n":2,"table":[[0,0],[1,1]]})");
  CHECK(parse_table_text("2\r\n0 1\r\n1 0\r\n\n") == tables::cyclic_group(2));
  CHECK(parse_table_text("2\n 0\t1 \n1 0") == tables::cyclic_group(2));
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(parse_table_text(""), ParseError);
  CHECK_THROWS_AS(parse_table_text("2 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_table_text("2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_table_text("2\n0 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_table_text("2\n0 x\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_table_text("2\n0 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_table_text("17\n"), ParseError);
  CHECK_THROWS_AS(table_from_json("{\"n\":2}"), ParseError);
  CHECK_THROWS_AS(table_from_json("{\"n\":3,\"table\":[[0,0],[1,1]]}"), ParseError);
  CHECK_THROWS_AS(table_from_json("not json"), ParseError);
  CHECK_THROWS_AS(read_table_file("/nonexistent/table.txt"), ParseError);
  // Parsing does not check associativity.
  CHECK_NOTHROW(parse_table_text("2\n1 0\n0 0\n"));
}

TEST_CASE("family round trip") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& F : enumerate_stacks(n)) {
      REQUIRE(family_from_json(family_to_json(F), n) == F);
      REQUIRE(parse_family_file(family_file_text(F)) == F);
    }
  }
  auto const F = principal_filter(SubsetMask::of({0}, 2));
  CHECK(family_to_json(F) == "[[0],[0,1]]");
  CHECK(parse_family_file("[[0,1],[0]]", 2) == F);
  CHECK(parse_family_file(R"({"n":2,"members":[[0],[0,1]]})", 2) == F);
  CHECK(family_to_json(Family::none(3)) == "[]");
}

TEST_CASE("malformed families") {
  CHECK_THROWS_AS(parse_family_file("[[0]]"), ParseError);
  CHECK_THROWS_AS(parse_family_file(R"({"n":2,"members":[[0]]})", 3), ParseError);
  CHECK_THROWS_AS(parse_family_file(R"({"n":2,"members":[[2]]})"), ParseError);
  CHECK_THROWS_AS(parse_family_file(R"({"n":7,"members":[]})"), ParseError);
  CHECK_THROWS_AS(parse_family_file("[[0],"), ParseError);
  CHECK_THROWS_AS(family_from_json("[[0,0]]", 2), ParseError);
  CHECK_THROWS_AS(read_family_file("/nonexistent/f.json"), ParseError);
}

TEST_CASE("window run-length text") {
  auto const W = WindowSet::of(10, {2, 4, 5, 6});
  CHECK(window_to_rle(W) == "10; 2-2,4-6");
  CHECK(window_to_rle(WindowSet(7)) == "7;");
  CHECK(parse_window_rle("10; 2-2,4-6") == W);
  CHECK(parse_window_rle("  10 ;4-6, 2 \n") == W);
  CHECK(parse_window_rle("7;") == WindowSet(7));
  CHECK_THROWS_AS(parse_window_rle("10 2-3"), ParseError);
  CHECK_THROWS_AS(parse_window_rle("10; 3-2"), ParseError);
  CHECK_THROWS_AS(parse_window_rle("10; 0-2"), ParseError);
  CHECK_THROWS_AS(parse_window_rle("10; 9-11"), ParseError);
  CHECK_THROWS_AS(parse_window_rle("0;"), ParseError);
  CHECK_THROWS_AS(parse_window_rle("10; a"), ParseError);
}

TEST_CASE("window binary and files") {
  std::mt19937_64 rng(5);
  for (std::uint64_t N : {1, 7, 8, 9, 64, 65, 1000}) {
    std::bernoulli_distribution coin(0.3);
    auto const W = WindowSet::where(N, [&](std::uint64_t) { return coin(rng); });
    REQUIRE(parse_window_binary(window_to_binary(W)) == W);
    REQUIRE(parse_window_rle(window_to_rle(W)) == W);
    REQUIRE(window_to_binary(W).size() == 8 + (N + 7) / 8);
  }
  auto const W   = WindowSet::of(9, {1, 9});
  auto const bin = window_to_binary(W);
  CHECK(bin == std::string("\x09\0\0\0\0\0\0\0\x01\x01", 10));
  CHECK_THROWS_AS(parse_window_binary(bin.substr(0, 9)), ParseError);
  CHECK_THROWS_AS(parse_window_binary(bin + "x"), ParseError);
  // A set bit past N is rejected.
  CHECK_THROWS_AS(parse_window_binary(std::string("\x09\0\0\0\0\0\0\0\x01\x02", 10)),
                  ParseError);

  CHECK(read_window_file(write_temp("w.bin", bin)) == W);
  CHECK(read_window_file(write_temp("w.txt", window_to_rle(W))) == W);
  CHECK_THROWS_AS(read_window_file("/nonexistent/w.txt"), ParseError);
}
