#ifndef SGSIZE_REPORT_JSON_HPP_
#define SGSIZE_REPORT_JSON_HPP_

// JSON renderings of check reports, suite summaries and search reports.
// Elapsed times appear only under a "meta" key, which is left out entirely
// when `timing` is false so that identical runs compare byte for byte.

#include <string>

#include "sgsize/theorems.hpp"

namespace sgsize {

  // One line, no trailing newline.
  std::string report_line(CheckReport const& report, bool timing);

  // Indented, with a trailing newline.
  std::string suite_summary_json(SuiteResult const& result, bool timing);
  std::string search_report_json(SearchReport const& report, bool timing);

  std::string counterexample_json(Counterexample const& cx);

}  // namespace sgsize

#endif  // SGSIZE_REPORT_JSON_HPP_
