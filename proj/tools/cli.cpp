#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgsize/error.hpp"
#include "sgsize/family_io.hpp"
#include "sgsize/natwin.hpp"
#include "sgsize/notions.hpp"
#include "sgsize/report_json.hpp"
#include "sgsize/table_io.hpp"
#include "sgsize/theorems.hpp"
#include "sgsize/window_io.hpp"

namespace sgsize::cli {

  namespace {
    using json = nlohmann::ordered_json;

    // A failure the user can fix by changing the input or flags.
    struct UsageError : Error {
      using Error::Error;
    };

    CayleyTable load_semigroup(std::string const& path) {
      auto t = read_table_file(path);
      if (auto v = find_associativity_violation(t)) {
        throw UsageError(path + ": not associative at (" + std::to_string(v->i)
                         + "," + std::to_string(v->j) + ","
                         + std::to_string(v->k) + ")");
      }
      return t;
    }

    Family load_family(std::string const& path, int n) {
      auto F = read_family_file(path, n);
      if (F.ground_size() != n) {
        throw UsageError(path + ": family over " + std::to_string(F.ground_size())
                         + " points, table has order " + std::to_string(n));
      }
      return F;
    }

    SubsetMask parse_set(std::string const& text, int n) {
      SubsetMask::bits_type bits  = 0;
      std::string_view      rest  = text;
      while (!rest.empty()) {
        auto const comma = rest.find(',');
        auto const token = rest.substr(0, comma);
        int        x     = -1;
        auto [ptr, ec]   = std::from_chars(token.data(), token.data() + token.size(), x);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()
            || x < 0 || x >= n) {
          throw UsageError("--set: bad element '" + std::string(token)
                           + "' for a table of order " + std::to_string(n));
        }
        bits |= SubsetMask::bits_type{1} << x;
        rest = comma == std::string_view::npos ? std::string_view{}
                                               : rest.substr(comma + 1);
      }
      return SubsetMask(bits, n);
    }

    json members(Family const& F) {
      return json::parse(family_to_json(F));
    }

    int default_jobs() {
      char const* env = std::getenv("SGSIZE_JOBS");
      if (env == nullptr || *env == '\0') {
        return 1;
      }
      int               jobs = 0;
      std::string_view  s(env);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), jobs);
      if (ec != std::errc() || ptr != s.data() + s.size() || jobs < 1) {
        throw UsageError("SGSIZE_JOBS must be a positive integer");
      }
      return jobs;
    }

    // "-" is standard output.
    class Sink {
     public:
      Sink(std::string const& path, std::ostream& out) : _out(&out) {
        if (path != "-") {
          _file.open(path, std::ios::binary);
          if (!_file) {
            throw UsageError("cannot write " + path);
          }
          _out = &_file;
        }
      }
      std::ostream& stream() {
        return *_out;
      }

     private:
      std::ofstream _file;
      std::ostream* _out;
    };

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int cmd_validate(std::string const& path, std::ostream& out) {
      auto const t = read_table_file(path);
      json       doc;
      doc["n"] = t.order();
      if (auto v = find_associativity_violation(t)) {
        doc["status"]    = "violation";
        doc["violation"] = {v->i, v->j, v->k};
        doc["left"]      = t(t(v->i, v->j), v->k);
        doc["right"]     = t(v->i, t(v->j, v->k));
        out << doc.dump() << '\n';
        return 1;
      }
      doc["status"] = "ok";
      out << doc.dump() << '\n';
      return 0;
    }

    struct ClassifyArgs {
      std::string table;
      std::string set;
      std::string notion;
      std::string f_path;
      std::string g_path;
    };

    int cmd_classify(ClassifyArgs const& a, std::ostream& out) {
      auto const t = load_semigroup(a.table);
      int const  n = t.order();
      auto const A = parse_set(a.set, n);
      auto const need = [&](std::string const& path, char const* flag) {
        if (path.empty()) {
          throw UsageError("--notion " + a.notion + " needs " + flag);
        }
        return load_family(path, n);
      };
      json doc;
      doc["notion"] = a.notion;
      doc["set"]    = A.elements();
      if (a.notion == "syndetic") {
        doc["verdict"] = is_syndetic(t, A);
      } else if (a.notion == "thick") {
        doc["verdict"] = is_thick(t, A);
      } else if (a.notion == "ps") {
        doc["verdict"] = is_piecewise_syndetic(t, A);
      } else if (a.notion == "szz-ps") {
        auto const F    = need(a.f_path, "--filter-f");
        auto const base = filter_base(F);
        if (!is_subsemigroup(t, base)) {
          throw UsageError("--filter-f: the base " + to_string(base)
                           + " is not a subsemigroup");
        }
        auto const y   = point_ps_witness(t, A, F, base);
        doc["F"]       = members(F);
        doc["verdict"] = y.has_value();
        doc["point"]   = y ? json(*y) : json(nullptr);
      } else {
        RelParams const p(need(a.f_path, "--filter-f"),
                          need(a.g_path, "--filter-g"));
        doc["F"] = members(p.left());
        doc["G"] = members(p.right());
        if (a.notion == "rel-syn") {
          doc["verdict"] = is_rel_syndetic(t, A, p);
        } else if (a.notion == "rel-thick") {
          doc["verdict"] = is_rel_thick(t, A, p);
        } else {
          doc["verdict"] = rel_ps_family(t, p).contains(A);
        }
      }
      out << doc.dump() << '\n';
      return 0;
    }

    int cmd_families(std::string const& path,
                     std::string const& f_path,
                     std::string const& g_path,
                     std::ostream&      out) {
      auto const t = load_semigroup(path);
      int const  n = t.order();
      json       doc;
      doc["n"] = n;
      if (f_path.empty() && g_path.empty()) {
        auto const sizes = size_families(t);
        doc["relative"]  = false;
        doc["syn"]       = members(sizes.syn);
        doc["thick"]     = members(sizes.thick);
        doc["ps"]        = members(sizes.ps);
      } else {
        auto const top = Family::of({SubsetMask::full(n)}, n);
        RelParams const p(f_path.empty() ? top : load_family(f_path, n),
                          g_path.empty() ? top : load_family(g_path, n));
        doc["relative"] = true;
        doc["F"]        = members(p.left());
        doc["G"]        = members(p.right());
        doc["syn"]      = members(rel_syn_family(t, p));
        doc["thick"]    = members(rel_thick_family(t, p));
        doc["ps"]       = members(rel_ps_family(t, p));
      }
      out << doc.dump() << '\n';
      return 0;
    }

    struct CheckArgs {
      int         max_order = 0;
      std::string claims    = "all";
      std::string dedupe    = "none";
      int         jobs      = 0;
      std::string out_path;
      std::string summary_path = "-";
      bool        no_timing    = false;
    };

    int cmd_check(CheckArgs const& a, std::ostream& out) {
      SuiteConfig config;
      config.max_order = a.max_order;
      config.claims    = parse_claim_list(a.claims);
      config.dedupe    = a.dedupe == "iso" ? Dedupe::iso : Dedupe::none;
      config.jobs      = a.jobs > 0 ? a.jobs : default_jobs();
      SuiteResult result;
      try {
        result = run_suite(config);
      } catch (SizeLimitError const& e) {
        throw UsageError(e.what());
      }
      if (!a.out_path.empty()) {
        Sink sink(a.out_path, out);
        for (auto const& report : result.reports) {
          sink.stream() << report_line(report, !a.no_timing) << '\n';
        }
      }
      Sink summary(a.summary_path, out);
      summary.stream() << suite_summary_json(result, !a.no_timing);
      return result.any_fail() ? 1 : 0;
    }

    int cmd_enumerate(int order, std::string const& dedupe, std::string const& path,
                      std::ostream& out) {
      auto const mode = dedupe == "iso" ? Dedupe::iso : Dedupe::none;
      std::size_t count = 0;
      {
        Sink sink(path, out);
        try {
          for_each_semigroup(order, mode, [&](CayleyTable const& t) {
            sink.stream() << table_to_jsonl(t) << '\n';
            ++count;
            return true;
          });
        } catch (SizeLimitError const& e) {
          throw UsageError(e.what());
        }
      }
      if (path != "-") {
        json doc;
        doc["order"]  = order;
        doc["dedupe"] = dedupe;
        doc["count"]  = count;
        out << doc.dump() << '\n';
      }
      return 0;
    }

    int cmd_search(int max_order, std::optional<std::uint64_t> budget,
                   std::string const& path, bool no_timing, std::ostream& out) {
      SearchReport report;
      try {
        report = search_question_4_6(max_order, budget);
      } catch (SizeLimitError const& e) {
        throw UsageError(e.what());
      }
      Sink sink(path, out);
      sink.stream() << search_report_json(report, !no_timing);
      return report.candidate && !report.candidate_reverified ? 1 : 0;
    }

    struct NatwinArgs {
      std::string                  in;
      std::string                  op;
      std::optional<std::uint64_t> k, b, L, m, horizon;
      std::string                  other;
    };

    std::uint64_t need(std::optional<std::uint64_t> const& v, char const* flag,
                       std::string const& op) {
      if (!v) {
        throw UsageError("--op " + op + " needs " + flag);
      }
      return *v;
    }

    int cmd_natwin(NatwinArgs const& a, std::ostream& out) {
      json doc;
      doc["op"] = a.op;
      if (a.op == "example-3-4") {
        std::uint64_t N = 0;
        if (a.horizon) {
          N = *a.horizon;
        } else if (!a.in.empty()) {
          N = read_window_file(a.in).horizon();
        } else {
          throw UsageError("--op example-3-4 needs --horizon or --in");
        }
        auto const r = example_3_4_probe(N, need(a.m, "--m", a.op));
        doc["window"]              = {1, N};
        doc["m"]                   = r.m;
        doc["shift"]               = r.shift ? json(*r.shift) : json(nullptr);
        doc["shifts_found"]        = r.shifts_found();
        doc["evens_max_run"]       = r.max_run;
        doc["not_thick"]           = r.not_thick();
        doc["passed"]              = r.passed();
        out << doc.dump() << '\n';
        return 0;
      }
      if (a.in.empty()) {
        throw UsageError("--op " + a.op + " needs --in");
      }
      auto const W = read_window_file(a.in);
      doc["window"] = {1, W.horizon()};
      if (a.op == "gap-bound") {
        auto const g = gap_bound(W);
        doc["b"]                 = g.b ? json(*g.b) : json(nullptr);
        doc["candidate"]         = g.candidate;
        doc["largest_x_checked"] = g.largest_x_checked;
      } else if (a.op == "runs") {
        doc["max_run"] = max_block_run(W);
        doc["runs"]    = W.runs().size();
      } else if (a.op == "ps-witness") {
        auto const b = need(a.b, "--b", a.op);
        auto const L = need(a.L, "--L", a.op);
        auto const w = ps_witness(W, b, L);
        doc["b"]        = b;
        doc["L"]        = L;
        doc["found"]    = w.has_value();
        doc["interval"] = w ? json({w->first, w->last}) : json(nullptr);
      } else if (a.op == "ap") {
        auto const k  = need(a.k, "--k", a.op);
        auto const ap = find_ap(W, k);
        doc["k"]     = k;
        doc["found"] = ap.has_value();
        doc["a"]     = ap ? json(ap->a) : json(nullptr);
        doc["d"]     = ap ? json(ap->d) : json(nullptr);
      } else {
        if (a.other.empty()) {
          throw UsageError("--op embed needs --other");
        }
        auto const B = read_window_file(a.other);
        auto const m = need(a.m, "--m", a.op);
        auto const x = embedding_shift(W, B, m);
        doc["other_window"] = {1, B.horizon()};
        doc["m"]            = m;
        doc["embeddable"]   = x.has_value();
        doc["shift"]        = x ? json(*x) : json(nullptr);
      }
      out << doc.dump() << '\n';
      return 0;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Finite-model checks for notions of size in semigroups",
                 "sgsize"};
    app.require_subcommand(1);

    std::string table_path;
    auto*       validate
        = app.add_subcommand("validate", "Check a Cayley table for associativity");
    validate->add_option("table", table_path, "Table file")->required();

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "Decide one notion for one set");
    classify->add_option("table", classify_args.table, "Table file")->required();
    classify->add_option("--set", classify_args.set, "Elements, e.g. 0,2")
        ->required();
    classify
        ->add_option("--notion", classify_args.notion, "Notion to decide")
        ->required()
        ->check(CLI::IsMember({"syndetic",
                               "thick",
                               "ps",
                               "rel-syn",
                               "rel-thick",
                               "rel-ps",
                               "szz-ps"}));
    classify->add_option("--filter-f", classify_args.f_path, "Family file for F");
    classify->add_option("--filter-g", classify_args.g_path, "Family file for G");

    std::string families_table, families_f, families_g;
    auto*       families
        = app.add_subcommand("families", "Compute Syn, Thick and PS");
    families->add_option("table", families_table, "Table file")->required();
    families->add_option("--f", families_f, "Family file for F");
    families->add_option("--g", families_g, "Family file for G");

    CheckArgs check_args;
    auto*     check = app.add_subcommand("check", "Run the statement suite");
    check->add_option("--max-order", check_args.max_order, "Largest table order")
        ->required()
        ->check(CLI::Range(1, kMaxEnumOrderIso));
    check->add_option("--claims", check_args.claims, "Claim list or all");
    check->add_option("--dedupe", check_args.dedupe, "none or iso")
        ->check(CLI::IsMember({"none", "iso"}));
    check->add_option("--jobs", check_args.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    check->add_option("--out", check_args.out_path, "JSONL report file, - for stdout");
    check->add_option("--summary", check_args.summary_path, "Summary file, - for stdout");
    check->add_flag("--no-timing", check_args.no_timing, "Omit elapsed times");

    int         enum_order = 0;
    std::string enum_dedupe = "none", enum_out = "-";
    auto*       enumerate
        = app.add_subcommand("enumerate", "List semigroups of one order");
    enumerate->add_option("--order", enum_order, "Order")
        ->required()
        ->check(CLI::Range(1, kMaxEnumOrderIso));
    enumerate->add_option("--dedupe", enum_dedupe, "none or iso")
        ->check(CLI::IsMember({"none", "iso"}));
    enumerate->add_option("--out", enum_out, "JSONL output file, - for stdout");

    int                          search_order = 0;
    std::optional<std::uint64_t> search_budget;
    std::string                  search_out = "-";
    bool                         search_no_timing = false;
    auto* search = app.add_subcommand(
        "search-q46", "Search small semigroups for a set in Syn(F,Thick(F,q)) outside PS(F,F)");
    search->add_option("--max-order", search_order, "Largest table order")
        ->required()
        ->check(CLI::Range(1, kMaxEnumOrderIso));
    search->add_option("--budget", search_budget, "Most (table, filter) pairs");
    search->add_option("--out", search_out, "Output file, - for stdout");
    search->add_flag("--no-timing", search_no_timing, "Omit elapsed times");

    NatwinArgs natwin_args;
    auto*      natwin = app.add_subcommand("natwin", "Scans of a subset of [1, N]");
    natwin->add_option("--in", natwin_args.in, "Window file (.rle text or .bin)");
    natwin
        ->add_option("--op", natwin_args.op, "Scan to run")
        ->required()
        ->check(CLI::IsMember(
            {"gap-bound", "runs", "ps-witness", "ap", "embed", "example-3-4"}));
    natwin->add_option("--k", natwin_args.k, "Progression length");
    natwin->add_option("--b", natwin_args.b, "Gap bound");
    natwin->add_option("--L", natwin_args.L, "Window length");
    natwin->add_option("--m", natwin_args.m, "Prefix length");
    natwin->add_option("--other", natwin_args.other, "Second window file");
    natwin->add_option("--horizon", natwin_args.horizon, "Horizon N");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "sgsize: error: " << e.what() << '\n';
      return 2;
    }

    try {
      if (*validate) {
        return cmd_validate(table_path, out);
      }
      if (*classify) {
        return cmd_classify(classify_args, out);
      }
      if (*families) {
        return cmd_families(families_table, families_f, families_g, out);
      }
      if (*check) {
        return cmd_check(check_args, out);
      }
      if (*enumerate) {
        return cmd_enumerate(enum_order, enum_dedupe, enum_out, out);
      }
      if (*search) {
        return cmd_search(
            search_order, search_budget, search_out, search_no_timing, out);
      }
      return cmd_natwin(natwin_args, out);
    } catch (Error const& e) {
      err << "sgsize: error: " << e.what() << '\n';
      return 2;
    }
  }

}  // namespace sgsize::cli
