#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "sgsize/error.hpp"
#include "sgsize/theorems.hpp"

namespace sgsize {

  namespace {
    constexpr int kMaxBruteForceSuiteGround = 2;

    struct WorkItem {
      int                        order;
      std::optional<CayleyTable> table;  // none: the mesh statements
      std::size_t                table_index = 0;
    };

    std::vector<CheckReport> run_item(WorkItem const&             item,
                                      std::vector<ClaimId> const& claims) {
      std::vector<CheckReport> out;
      if (!item.table) {
        auto const scan = item.order <= kMaxBruteForceSuiteGround
                              ? FamilyScan::brute_force
                              : FamilyScan::constructive;
        for (auto& report : check_prop_2_4(item.order, scan)) {
          if (std::binary_search(claims.begin(), claims.end(), report.claim)) {
            out.push_back(std::move(report));
          }
        }
        return out;
      }
      for (ClaimId id : claims) {
        if (needs_table(id)) {
          auto report                    = check_claim(id, *item.table);
          report.universe.table_index    = item.table_index;
          out.push_back(std::move(report));
        }
      }
      return out;
    }

    // Fills results[i] = run_item(items[i]) on `jobs` threads.
    std::vector<std::vector<CheckReport>>
    run_items(std::vector<WorkItem> const& items,
              std::vector<ClaimId> const&  claims,
              int                          jobs) {
      std::vector<std::vector<CheckReport>> results(items.size());
      std::atomic<std::size_t>              next{0};
      std::exception_ptr                    error;
      std::mutex                            error_mutex;
      auto worker = [&] {
        for (;;) {
          std::size_t const i = next.fetch_add(1);
          if (i >= items.size()) {
            return;
          }
          try {
            results[i] = run_item(items[i], claims);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            next = items.size();
            return;
          }
        }
      };
      auto const workers = static_cast<std::size_t>(
          std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)),
                                  1,
                                  std::max<std::size_t>(items.size(), 1)));
      if (workers == 1) {
        worker();
      } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
          threads.emplace_back(worker);
        }
        for (auto& th : threads) {
          th.join();
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      return results;
    }
  }  // namespace

  bool SuiteResult::any_fail() const noexcept {
    return std::any_of(summary.begin(), summary.end(), [](auto const& s) {
      return s.universes_failed > 0;
    });
  }

  SuiteResult run_suite(SuiteConfig const& config) {
    auto const start = std::chrono::steady_clock::now();
    if (config.max_order < 1) {
      throw PreconditionError("max order must be at least 1");
    }
    int const limit = config.dedupe == Dedupe::iso ? kMaxEnumOrderIso
                                                   : kMaxEnumOrderRaw;
    if (config.max_order > limit) {
      throw SizeLimitError(
          "max order " + std::to_string(config.max_order) + " exceeds "
          + std::to_string(limit)
          + (config.dedupe == Dedupe::iso ? "" : " (use iso dedupe for more)"));
    }

    SuiteResult result;
    result.config = config;
    if (result.config.claims.empty()) {
      auto const all = all_claims();
      result.config.claims.assign(all.begin(), all.end());
    }
    auto& claims = result.config.claims;
    std::sort(claims.begin(), claims.end());
    claims.erase(std::unique(claims.begin(), claims.end()), claims.end());

    bool const want_mesh = std::any_of(
        claims.begin(), claims.end(), [](ClaimId id) { return !needs_table(id); });
    bool const want_tables = std::any_of(claims.begin(), claims.end(), needs_table);

    std::vector<WorkItem> items;
    for (int n = 1; n <= config.max_order; ++n) {
      if (want_mesh && n <= kMaxStackEnumGround) {
        items.push_back({n, std::nullopt, 0});
      }
      std::size_t count = 0;
      if (want_tables) {
        for_each_semigroup(n, config.dedupe, [&](CayleyTable const& t) {
          items.push_back({n, t, count++});
          return true;
        });
      }
      result.tables_per_order.push_back(count);
    }

    for (auto& reports : run_items(items, claims, config.jobs)) {
      for (auto& report : reports) {
        result.reports.push_back(std::move(report));
      }
    }

    for (ClaimId id : claims) {
      ClaimSummary s;
      s.claim = id;
      for (auto const& report : result.reports) {
        if (report.claim != id) {
          continue;
        }
        switch (report.status) {
          case Status::pass:
            ++s.universes_passed;
            break;
          case Status::fail:
            ++s.universes_failed;
            if (!s.first_counterexample) {
              s.first_counterexample = report.counterexample;
            }
            break;
          case Status::skipped:
            ++s.universes_skipped;
            break;
        }
        s.instances += report.instances;
        s.strict += report.strict;
        if (!s.first_strict_example && report.strict_example) {
          s.first_strict_example = report.strict_example;
        }
      }
      result.summary.push_back(std::move(s));
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }

}  // namespace sgsize
