#include "sgsize/natwin.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sgsize/error.hpp"

namespace sgsize {

  namespace {
    constexpr std::size_t kMaxLiteralEmbedElements = 16;

    // The least x >= min_x with points + x inside B.
    std::optional<std::uint64_t>
    least_shift(std::vector<std::uint64_t> const& points,
                WindowSet const&                  B,
                std::uint64_t                     min_x) {
      if (points.empty()) {
        return min_x;
      }
      std::uint64_t const lo = points.front();
      std::uint64_t const hi = points.back();
      if (hi + min_x > B.horizon()) {
        return std::nullopt;
      }
      // Anchor the least point on each member of B in turn.
      for (auto c = B.next(lo + min_x); c && *c - lo + hi <= B.horizon();
           c = B.next(*c + 1)) {
        std::uint64_t const x = *c - lo;
        if (std::all_of(points.begin(), points.end(), [&](std::uint64_t p) {
              return B.contains(p + x);
            })) {
          return x;
        }
      }
      return std::nullopt;
    }

    std::vector<std::uint64_t> prefix(WindowSet const& A, std::uint64_t m) {
      if (m > A.horizon()) {
        throw PreconditionError("m = " + std::to_string(m)
                                + " exceeds the horizon "
                                + std::to_string(A.horizon()));
      }
      std::vector<std::uint64_t> out;
      for (auto a = A.next(1); a && *a <= m; a = A.next(*a + 1)) {
        out.push_back(*a);
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // WindowSet
  ////////////////////////////////////////////////////////////////////////

  WindowSet::WindowSet(std::uint64_t horizon) : _n(horizon) {
    if (horizon < 1 || horizon > kMaxHorizon) {
      throw SizeLimitError("horizon " + std::to_string(horizon)
                           + " outside [1, 10^8]");
    }
    _words.assign((horizon + 63) / 64, 0);
  }

  WindowSet WindowSet::of(std::uint64_t                     horizon,
                          std::vector<std::uint64_t> const& elements) {
    WindowSet W(horizon);
    for (auto k : elements) {
      W.insert(k);
    }
    return W;
  }

  void WindowSet::insert(std::uint64_t k) {
    if (k < 1 || k > _n) {
      throw PreconditionError("element " + std::to_string(k)
                              + " outside [1, " + std::to_string(_n) + "]");
    }
    _words[(k - 1) / 64] |= std::uint64_t{1} << ((k - 1) % 64);
  }

  std::uint64_t WindowSet::count() const noexcept {
    std::uint64_t out = 0;
    for (auto w : _words) {
      out += static_cast<std::uint64_t>(std::popcount(w));
    }
    return out;
  }

  bool WindowSet::is_empty() const noexcept {
    return std::all_of(
        _words.begin(), _words.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::optional<std::uint64_t> WindowSet::next(std::uint64_t k) const {
    if (k < 1) {
      k = 1;
    }
    if (k > _n) {
      return std::nullopt;
    }
    std::size_t   i = (k - 1) / 64;
    std::uint64_t w = _words[i] & (~std::uint64_t{0} << ((k - 1) % 64));
    while (true) {
      if (w != 0) {
        return i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)) + 1;
      }
      if (++i == _words.size()) {
        return std::nullopt;
      }
      w = _words[i];
    }
  }

  std::optional<std::uint64_t> WindowSet::last() const {
    for (std::size_t i = _words.size(); i-- > 0;) {
      if (_words[i] != 0) {
        return i * 64 + 64
               - static_cast<std::uint64_t>(std::countl_zero(_words[i]));
      }
    }
    return std::nullopt;
  }

  std::vector<std::uint64_t> WindowSet::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(count());
    for (auto k = first(); k; k = next(*k + 1)) {
      out.push_back(*k);
    }
    return out;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> WindowSet::runs() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (auto k = first(); k; k = next(out.back().second + 1)) {
      std::uint64_t end = *k;
      while (end < _n && contains(end + 1)) {
        ++end;
      }
      out.emplace_back(*k, end);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Scans
  ////////////////////////////////////////////////////////////////////////

  GapBound gap_bound(WindowSet const& W) {
    GapBound out;
    auto const first = W.first();
    if (!first) {
      return out;
    }
    std::uint64_t b    = *first;
    std::uint64_t prev = *first;
    for (auto k = W.next(prev + 1); k; k = W.next(*k + 1)) {
      b    = std::max(b, *k - prev);
      prev = *k;
    }
    out.candidate         = b;
    out.largest_x_checked = W.horizon() >= b ? W.horizon() - b : 0;
    // A window lying wholly after the last element would miss A.
    if (W.horizon() - prev < b) {
      out.b = b;
    }
    return out;
  }

  std::uint64_t max_block_run(WindowSet const& W) {
    std::uint64_t best = 0;
    for (auto const& [a, b] : W.runs()) {
      best = std::max(best, b - a + 1);
    }
    return best;
  }

  std::optional<Interval> ps_witness(WindowSet const& W,
                                     std::uint64_t    b,
                                     std::uint64_t    L) {
    if (b < 1 || L < 1) {
      throw PreconditionError("ps_witness: b and L must be positive");
    }
    if (L > W.horizon()) {
      return std::nullopt;
    }
    std::uint64_t zeros     = 0;  // non-members ending at i
    std::uint64_t min_start = 1;  // windows must start here or later
    for (std::uint64_t i = 1; i <= W.horizon(); ++i) {
      zeros = W.contains(i) ? 0 : zeros + 1;
      if (zeros >= b) {
        min_start = i - b + 2;
      }
      if (i >= L && i - L + 1 >= min_start) {
        return Interval{i - L + 1, i};
      }
    }
    return std::nullopt;
  }

  std::optional<Progression> find_ap(WindowSet const& W, std::uint64_t k) {
    if (k < 1) {
      throw PreconditionError("find_ap: k must be positive");
    }
    for (auto a = W.first(); a; a = W.next(*a + 1)) {
      if (k == 1) {
        return Progression{*a, 1};
      }
      for (auto c = W.next(*a + 1); c; c = W.next(*c + 1)) {
        std::uint64_t const d = *c - *a;
        if (*a + (k - 1) * d > W.horizon()) {
          break;
        }
        bool ok = true;
        for (std::uint64_t j = 2; j < k && ok; ++j) {
          ok = W.contains(*a + j * d);
        }
        if (ok) {
          return Progression{*a, d};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::uint64_t> embedding_shift(WindowSet const& A,
                                               WindowSet const& B,
                                               std::uint64_t    m) {
    return least_shift(prefix(A, m), B, 0);
  }

  bool finite_embeddable(WindowSet const& A,
                         WindowSet const& B,
                         std::uint64_t    m) {
    return embedding_shift(A, B, m).has_value();
  }

  namespace literal {
    bool finite_embeddable(WindowSet const& A,
                           WindowSet const& B,
                           std::uint64_t    m) {
      auto const points = prefix(A, m);
      if (points.size() > kMaxLiteralEmbedElements) {
        throw SizeLimitError("literal embeddability sweep needs at most 16 "
                             "elements");
      }
      std::uint32_t const count = std::uint32_t{1} << points.size();
      for (std::uint32_t mask = 1; mask < count; ++mask) {
        std::uint64_t hi = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
          if ((mask >> i) & 1U) {
            hi = points[i];
          }
        }
        bool found = false;
        for (std::uint64_t x = 0; hi + x <= B.horizon() && !found; ++x) {
          found = true;
          for (std::size_t i = 0; i < points.size() && found; ++i) {
            if ((mask >> i) & 1U) {
              found = B.contains(points[i] + x);
            }
          }
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }
  }  // namespace literal

  Example34Report example_3_4_probe(std::uint64_t horizon, std::uint64_t m) {
    if (m < 1 || 2 * m > horizon) {
      throw PreconditionError("evens probe needs 1 <= m and 2m <= N "
                              "(m = "
                              + std::to_string(m)
                              + ", N = " + std::to_string(horizon) + ")");
    }
    auto const evens
        = WindowSet::where(horizon, [](std::uint64_t k) { return k % 2 == 0; });
    std::vector<std::uint64_t> doubled;
    for (std::uint64_t f = 1; f <= m; ++f) {
      doubled.push_back(2 * f);
    }
    return {horizon, m, least_shift(doubled, evens, 1), max_block_run(evens)};
  }

}  // namespace sgsize
