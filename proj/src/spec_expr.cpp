#include <charconv>

#include "trinom/cli.hpp"

namespace trinom::cli {

namespace {

template <typename Int>
Int parse_int(std::string_view token, std::string_view what) {
  Int value{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::int64_t parse_assignment(std::string_view token, std::string_view key) {
  const auto eq = token.find('=');
  if (eq == std::string_view::npos || token.substr(0, eq) != key) {
    throw ParseError("expected '" + std::string(key) + "=<int>' but got '" + std::string(token) +
                     "'");
  }
  return parse_int<std::int64_t>(token.substr(eq + 1), key);
}

}  // namespace

QuadraticSpec parse_spec_expression(std::string_view raw) {
  if (raw == "trinomial") return QuadraticSpec::trinomial();
  if (raw == "delannoy") return QuadraticSpec::delannoy();

  constexpr std::string_view kPrefix = "quad:";
  if (!raw.starts_with(kPrefix)) {
    throw ParseError("unknown spec '" + std::string(raw) +
                     "' (expected trinomial, delannoy or quad:a=<int>,b=<int>)");
  }
  const auto body = raw.substr(kPrefix.size());
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("missing ',' in '" + std::string(body) + "'");
  }
  const auto a = parse_assignment(body.substr(0, comma), "a");
  const auto b_token = body.substr(comma + 1);
  const auto b = parse_assignment(b_token, "b");
  if (b == 0) throw ParseError("'" + std::string(b_token) + "': b must be nonzero");
  return QuadraticSpec::make(a, b);
}

PrimeRange parse_prime_range(std::string_view raw) {
  const auto dots = raw.find("..");
  if (dots == std::string_view::npos) {
    throw ParseError("malformed range '" + std::string(raw) + "' (expected lo..hi)");
  }
  PrimeRange range{parse_int<std::uint64_t>(raw.substr(0, dots), "range bound"),
                   parse_int<std::uint64_t>(raw.substr(dots + 2), "range bound")};
  if (range.lo > range.hi) {
    throw ParseError("malformed range '" + std::string(raw) + "': lo exceeds hi");
  }
  return range;
}

}  // namespace trinom::cli
