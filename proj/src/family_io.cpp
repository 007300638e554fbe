#include "sgsize/family_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sgsize/error.hpp"

namespace sgsize {

  namespace {
    using json = nlohmann::json;

    nlohmann::ordered_json members_json(Family const& F) {
      auto arr = nlohmann::ordered_json::array();
      for (auto const& A : F.members()) {
        arr.push_back(A.elements());
      }
      return arr;
    }

    Family members_from_json(json const& arr, int n) {
      if (!arr.is_array()) {
        throw ParseError("family: expected an array of members");
      }
      if (n < 1 || n > kMaxFamilyGroundSet) {
        throw ParseError("family: ground set size " + std::to_string(n)
                         + " outside [1, 6]");
      }
      Family F = Family::none(n);
      for (auto const& member : arr) {
        if (!member.is_array()) {
          throw ParseError("family: each member must be an array");
        }
        SubsetMask::bits_type bits = 0;
        for (auto const& x : member) {
          if (!x.is_number_integer()) {
            throw ParseError("family: element indices must be integers");
          }
          auto const v = x.get<long long>();
          if (v < 0 || v >= n) {
            throw ParseError("family: element " + std::to_string(v)
                             + " outside ground set of size "
                             + std::to_string(n));
          }
          if (((bits >> v) & 1U) != 0) {
            throw ParseError("family: repeated element "
                             + std::to_string(v));
          }
          bits |= SubsetMask::bits_type{1} << v;
        }
        F = F.with(SubsetMask(bits, n));
      }
      return F;
    }

    json parse_json(std::string_view text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("family: invalid JSON: ") + e.what());
      }
    }
  }  // namespace

  std::string family_to_json(Family const& F) {
    return members_json(F).dump();
  }

  Family family_from_json(std::string_view text, int n) {
    return members_from_json(parse_json(text), n);
  }

  std::string family_file_text(Family const& F) {
    nlohmann::ordered_json doc;
    doc["n"]       = F.ground_size();
    doc["members"] = members_json(F);
    return doc.dump();
  }

  Family parse_family_file(std::string_view text, std::optional<int> n_hint) {
    json const doc = parse_json(text);
    if (doc.is_array()) {
      if (!n_hint) {
        throw ParseError("family: bare member array needs a ground set size");
      }
      return members_from_json(doc, *n_hint);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("members")) {
      throw ParseError("family: expected {\"n\":..,\"members\":[..]}");
    }
    if (!doc["n"].is_number_integer()) {
      throw ParseError("family: \"n\" must be an integer");
    }
    int const n = doc["n"].get<int>();
    if (n_hint && *n_hint != n) {
      throw ParseError("family: ground set size " + std::to_string(n)
                       + " does not match expected "
                       + std::to_string(*n_hint));
    }
    return members_from_json(doc["members"], n);
  }

  Family read_family_file(std::filesystem::path const& path,
                          std::optional<int>           n_hint) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open family file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_family_file(buffer.str(), n_hint);
  }

}  // namespace sgsize
