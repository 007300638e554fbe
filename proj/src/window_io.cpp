#include "sgsize/window_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sgsize/error.hpp"

namespace sgsize {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::uint64_t parse_number(std::string_view s, std::string_view what) {
      s = trim(s);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("window: bad " + std::string(what) + " '"
                         + std::string(s) + "'");
      }
      return value;
    }

    constexpr std::size_t kHeaderBytes = 8;
  }  // namespace

  std::string window_to_rle(WindowSet const& W) {
    std::string out = std::to_string(W.horizon()) + ";";
    bool        first = true;
    for (auto const& [a, b] : W.runs()) {
      out += first ? " " : ",";
      out += std::to_string(a) + "-" + std::to_string(b);
      first = false;
    }
    return out;
  }

  WindowSet parse_window_rle(std::string_view text) {
    text            = trim(text);
    auto const semi = text.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError("window: expected 'N; a-b,...'");
    }
    auto const N = parse_number(text.substr(0, semi), "horizon");
    if (N < 1 || N > kMaxHorizon) {
      throw ParseError("window: horizon " + std::to_string(N)
                       + " outside [1, 10^8]");
    }
    WindowSet  W(N);
    auto const body = trim(text.substr(semi + 1));
    if (body.empty()) {
      return W;
    }
    std::size_t start = 0;
    while (start <= body.size()) {
      auto end = body.find(',', start);
      if (end == std::string_view::npos) {
        end = body.size();
      }
      auto const    run  = body.substr(start, end - start);
      auto const    dash = run.find('-');
      std::uint64_t a    = 0;
      std::uint64_t b    = 0;
      if (dash == std::string_view::npos) {
        a = b = parse_number(run, "element");
      } else {
        a = parse_number(run.substr(0, dash), "run start");
        b = parse_number(run.substr(dash + 1), "run end");
      }
      if (a < 1 || a > b || b > N) {
        throw ParseError("window: run " + std::to_string(a) + "-"
                         + std::to_string(b) + " outside [1, "
                         + std::to_string(N) + "]");
      }
      for (std::uint64_t k = a; k <= b; ++k) {
        W.insert(k);
      }
      start = end + 1;
    }
    return W;
  }

  std::string window_to_binary(WindowSet const& W) {
    std::string out;
    for (std::size_t i = 0; i < kHeaderBytes; ++i) {
      out += static_cast<char>((W.horizon() >> (8 * i)) & 0xFF);
    }
    auto const nbytes = (W.horizon() + 7) / 8;
    for (std::uint64_t j = 0; j < nbytes; ++j) {
      auto const word = W.words()[j / 8];
      out += static_cast<char>((word >> (8 * (j % 8))) & 0xFF);
    }
    return out;
  }

  WindowSet parse_window_binary(std::string_view bytes) {
    if (bytes.size() < kHeaderBytes) {
      throw ParseError("window: binary input shorter than its header");
    }
    std::uint64_t N = 0;
    for (std::size_t i = 0; i < kHeaderBytes; ++i) {
      N |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i]))
           << (8 * i);
    }
    if (N < 1 || N > kMaxHorizon) {
      throw ParseError("window: horizon " + std::to_string(N)
                       + " outside [1, 10^8]");
    }
    auto const nbytes = (N + 7) / 8;
    if (bytes.size() != kHeaderBytes + nbytes) {
      throw ParseError("window: expected " + std::to_string(nbytes)
                       + " data bytes, found "
                       + std::to_string(bytes.size() - kHeaderBytes));
    }
    WindowSet W(N);
    for (std::uint64_t j = 0; j < nbytes; ++j) {
      auto const byte = static_cast<unsigned char>(bytes[kHeaderBytes + j]);
      for (int bit = 0; bit < 8; ++bit) {
        if ((byte >> bit) & 1U) {
          std::uint64_t const k = 8 * j + static_cast<std::uint64_t>(bit) + 1;
          if (k > N) {
            throw ParseError("window: bit set beyond the horizon");
          }
          W.insert(k);
        }
      }
    }
    return W;
  }

  WindowSet read_window_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open window file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto const text = buffer.str();
    if (path.extension() == ".bin") {
      return parse_window_binary(text);
    }
    return parse_window_rle(text);
  }

}  // namespace sgsize
