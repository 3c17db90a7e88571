#pragma once

// Command-line front end and its report formats.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trinom/analysis.hpp"
#include "trinom/sequences.hpp"

namespace trinom::cli {

enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsageError = 2 };

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "trinomial" | "delannoy" | "quad:a=<int>,b=<int>".
QuadraticSpec parse_spec_expression(std::string_view raw);

struct PrimeRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// "lo..hi", inclusive.
PrimeRange parse_prime_range(std::string_view raw);

enum class Format { csv, json };

using Json = nlohmann::ordered_json;

Json spec_json(const QuadraticSpec& spec);
Json table_json(const ResidueTable& table, bool tables_agree);
Json verify_report_json(const QuadraticSpec& spec,
                        std::span<const VerificationRecord> records);

void write_table_csv(std::ostream& os, const ResidueTable& table);
void write_verify_csv(std::ostream& os, std::span<const VerificationRecord> records);

/// Runs the CLI on args (program name excluded). Returns the process exit
/// code; reports go to out unless --output redirects them, diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace trinom::cli
