#include "sgsize/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "sgsize/error.hpp"

namespace sgsize {

  namespace {
    std::vector<std::string_view> split_lines(std::string_view text) {
      std::vector<std::string_view> lines;
      std::size_t                   start = 0;
      while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
          line.remove_suffix(1);
        }
        lines.push_back(line);
        start = end + 1;
      }
      // Trailing blank lines are not content.
      while (!lines.empty()
             && lines.back().find_first_not_of(" \t") == std::string::npos) {
        lines.pop_back();
      }
      return lines;
    }

    std::vector<int> parse_ints(std::string_view line, std::size_t lineno) {
      std::vector<int> out;
      std::size_t      pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
          ++pos;
        }
        if (pos == line.size()) {
          break;
        }
        int         value = 0;
        auto const* first = line.data() + pos;
        auto const* last  = line.data() + line.size();
        auto [ptr, ec]    = std::from_chars(first, last, value);
        if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
          throw ParseError("table: line " + std::to_string(lineno)
                           + ": expected an integer at column "
                           + std::to_string(pos + 1));
        }
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
      }
      return out;
    }
  }  // namespace

  std::string table_to_text(CayleyTable const& t) {
    std::string out = std::to_string(t.order()) + "\n";
    for (int i = 0; i < t.order(); ++i) {
      for (int j = 0; j < t.order(); ++j) {
        if (j > 0) {
          out += ' ';
        }
        out += std::to_string(t(i, j));
      }
      out += '\n';
    }
    return out;
  }

  CayleyTable parse_table_text(std::string_view text) {
    auto const lines = split_lines(text);
    if (lines.empty()) {
      throw ParseError("table: empty input");
    }
    auto const header = parse_ints(lines[0], 1);
    if (header.size() != 1) {
      throw ParseError("table: line 1 must hold the order only");
    }
    int const n = header[0];
    if (n < 1 || n > kMaxTableOrder) {
      throw ParseError("table: order " + std::to_string(n)
                       + " outside [1, 16]");
    }
    if (lines.size() != static_cast<std::size_t>(n) + 1) {
      throw ParseError("table: expected " + std::to_string(n)
                       + " rows, found " + std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
      auto row = parse_ints(lines[i + 1], static_cast<std::size_t>(i) + 2);
      if (row.size() != static_cast<std::size_t>(n)) {
        throw ParseError("table: line " + std::to_string(i + 2) + " has "
                         + std::to_string(row.size()) + " entries, expected "
                         + std::to_string(n));
      }
      rows.push_back(std::move(row));
    }
    try {
      return CayleyTable::from_rows(rows);
    } catch (PreconditionError const& e) {
      throw ParseError(e.what());
    }
  }

  CayleyTable read_table_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open table file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_table_text(buffer.str());
  }

  std::string table_to_jsonl(CayleyTable const& t) {
    nlohmann::ordered_json doc;
    doc["n"]     = t.order();
    doc["table"] = t.rows();
    return doc.dump();
  }

  CayleyTable table_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("table: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("table")) {
      throw ParseError("table: expected {\"n\":..,\"table\":[[..]]}");
    }
    try {
      auto const n    = doc["n"].get<int>();
      auto const rows = doc["table"].get<std::vector<std::vector<int>>>();
      if (static_cast<int>(rows.size()) != n) {
        throw ParseError("table: \"n\" does not match the number of rows");
      }
      return CayleyTable::from_rows(rows);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("table: ") + e.what());
    } catch (PreconditionError const& e) {
      throw ParseError(e.what());
    } catch (SizeLimitError const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace sgsize
