#include "sgsize/report_json.hpp"

#include "json.hpp"
#include "sgsize/family_io.hpp"

namespace sgsize {

  namespace {
    using json = nlohmann::ordered_json;

    double milliseconds(std::chrono::nanoseconds d) {
      return std::chrono::duration<double, std::milli>(d).count();
    }

    json set_json(SubsetMask const& A) {
      return A.elements();
    }

    json family_value(Family const& F) {
      return json::parse(family_to_json(F));
    }

    json to_json(Counterexample const& cx) {
      json out;
      out["n"]     = cx.instance.n;
      out["table"] = cx.instance.table ? json(cx.instance.table->rows())
                                       : json(nullptr);
      for (auto const& [key, F] : {std::pair{"F", &cx.instance.F},
                                   std::pair{"G", &cx.instance.G},
                                   std::pair{"H", &cx.instance.H}}) {
        if (*F) {
          out[key] = family_value(**F);
        }
      }
      out["witness"] = cx.witness ? set_json(*cx.witness) : json(nullptr);
      out["note"]    = cx.note;
      return out;
    }

    json optional_json(std::optional<Counterexample> const& cx) {
      return cx ? to_json(*cx) : json(nullptr);
    }

    json to_json(Universe const& u) {
      json out;
      out["order"]       = u.order;
      out["table_index"] = u.table_index ? json(*u.table_index) : json(nullptr);
      out["table"]       = u.table ? json(u.table->rows()) : json(nullptr);
      out["scope"]       = u.scope;
      return out;
    }
  }  // namespace

  std::string counterexample_json(Counterexample const& cx) {
    return to_json(cx).dump();
  }

  std::string report_line(CheckReport const& r, bool timing) {
    json out;
    out["claim"]          = to_string(r.claim);
    out["universe"]       = to_json(r.universe);
    out["status"]         = to_string(r.status);
    out["counterexample"] = optional_json(r.counterexample);
    out["instances"]      = r.instances;
    out["passed"]         = r.passed;
    out["skipped"]        = r.skipped;
    out["strict"]         = r.strict;
    out["strict_example"] = optional_json(r.strict_example);
    out["detail"]         = r.detail;
    if (timing) {
      out["meta"] = {{"elapsed_ms", milliseconds(r.elapsed)}};
    }
    return out.dump();
  }

  std::string suite_summary_json(SuiteResult const& result, bool timing) {
    json out;
    out["max_order"] = result.config.max_order;
    out["dedupe"] = result.config.dedupe == Dedupe::iso ? "iso" : "none";
    out["tables_per_order"] = result.tables_per_order;
    out["status"]           = result.any_fail() ? "fail" : "pass";
    json claims             = json::array();
    for (auto const& s : result.summary) {
      json c;
      c["claim"]                = to_string(s.claim);
      c["universes"]            = {{"pass", s.universes_passed},
                                   {"fail", s.universes_failed},
                                   {"skipped", s.universes_skipped}};
      c["instances"]            = s.instances;
      c["strict"]               = s.strict;
      c["first_counterexample"] = optional_json(s.first_counterexample);
      c["first_strict_example"] = optional_json(s.first_strict_example);
      claims.push_back(std::move(c));
    }
    out["claims"] = std::move(claims);
    if (timing) {
      out["meta"] = {{"elapsed_ms", milliseconds(result.elapsed)},
                     {"jobs", result.config.jobs}};
    }
    return out.dump(2) + "\n";
  }

  std::string search_report_json(SearchReport const& r, bool timing) {
    json out;
    out["question"]  = "Q4_6";
    out["max_order"] = r.max_order;
    out["budget"]    = r.budget ? json(*r.budget) : json(nullptr);
    out["outcome"]   = r.candidate ? "candidate" : "none_found";
    out["partial"]   = r.partial;
    out["scope"]     = "semigroups of order <= " + std::to_string(r.max_order)
                   + " up to isomorphism";
    out["tables_examined"]    = r.tables_examined;
    out["universes_examined"] = r.universes_examined;
    out["sets_examined"]      = r.sets_examined;
    if (r.candidate) {
      auto const& c = *r.candidate;
      out["candidate"] = {{"n", c.table.order()},
                          {"table", c.table.rows()},
                          {"F", family_value(c.F)},
                          {"A", set_json(c.A)},
                          {"y", c.y},
                          {"reverified", r.candidate_reverified}};
    } else {
      out["candidate"] = nullptr;
    }
    if (timing) {
      out["meta"] = {{"elapsed_ms", milliseconds(r.elapsed)}};
    }
    return out.dump(2) + "\n";
  }

}  // namespace sgsize
