#include "trinom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "trinom/lucas.hpp"

namespace trinom::cli {

namespace {

struct Options {
  std::string spec = "trinomial";
  std::uint64_t prime = 0;
  std::string primes;
  std::string n;
  std::size_t count = 0;
  int jobs = 1;
  std::string format = "csv";
  std::string output = "stdout";
};

Format to_format(const std::string& s) { return s == "json" ? Format::json : Format::csv; }

// Odd prime validated for the table-based commands.
PrimeModulus odd_prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
  if (p == 2) throw ParseError("2 is not supported here; an odd prime is required");
  return PrimeModulus(p);
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto spec = parse_spec_expression(opt.spec);
  const auto p = odd_prime(opt.prime);
  auto& cache = default_table_cache();
  const auto by_recurrence = cache.get(spec, p, Provenance::recurrence);
  const auto by_power = cache.get(spec, p, Provenance::poly_pow);
  const bool agree = by_recurrence->residues == by_power->residues;

  if (to_format(opt.format) == Format::json) {
    out << table_json(*by_recurrence, agree).dump(2) << '\n';
  } else {
    write_table_csv(out, *by_recurrence);
  }
  if (!agree) {
    const auto mismatch = std::mismatch(by_recurrence->residues.begin(),
                                        by_recurrence->residues.end(),
                                        by_power->residues.begin());
    err << "error: recurrence and polynomial-power tables differ at index "
        << (mismatch.first - by_recurrence->residues.begin()) << '\n';
    return kViolation;
  }
  return kSuccess;
}

int cmd_pattern(const Options& opt, std::ostream& out, std::ostream&) {
  const auto spec = parse_spec_expression(opt.spec);
  const auto rec = verify_prime(spec, odd_prime(opt.prime));
  out << rec.pattern.bits << " palindromic=" << (rec.palindromic ? "true" : "false") << '\n';
  return rec.violation() ? kViolation : kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto spec = parse_spec_expression(opt.spec);
  const auto range = parse_prime_range(opt.primes);
  if (opt.jobs < 1) throw ParseError("--jobs must be at least 1");
  const auto primes = primes_in_range(range.lo, range.hi);
  const auto records = verify_theorem(spec, primes, opt.jobs);

  if (to_format(opt.format) == Format::json) {
    out << verify_report_json(spec, records).dump(2) << '\n';
  } else {
    write_verify_csv(out, records);
  }
  const auto bad = std::count_if(records.begin(), records.end(),
                                 [](const auto& r) { return r.violation(); });
  if (bad > 0) {
    err << "error: " << bad << " prime(s) violate a claimed property\n";
    return kViolation;
  }
  return kSuccess;
}

int cmd_eval(const Options& opt, std::ostream& out, std::ostream&) {
  const auto spec = parse_spec_expression(opt.spec);
  const auto p = odd_prime(opt.prime);
  const auto table = default_table_cache().get(spec, p, Provenance::recurrence);
  out << lucas_eval(*table, opt.n).value() << '\n';
  return kSuccess;
}

int cmd_exact(const Options& opt, std::ostream& out, std::ostream&) {
  const auto spec = parse_spec_expression(opt.spec);
  if (opt.count < 1) throw ParseError("--count must be at least 1");
  const auto seq = exact_terms(spec, opt.count);
  for (const auto& t : seq.terms) out << t << '\n';
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Central trinomial-type sequences modulo primes"};
  app.name("trinom");
  app.require_subcommand(1);

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec, "trinomial | delannoy | quad:a=<int>,b=<int>")
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "Output path or 'stdout'")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  auto* table = app.add_subcommand("table", "Residue table R_0..R_{p-1} mod p");
  add_spec(table);
  table->add_option("--prime", opt.prime, "Odd prime modulus")->required();
  add_format(table);
  add_output(table);

  auto* pattern = app.add_subcommand("pattern", "Zero pattern and palindrome test");
  add_spec(pattern);
  pattern->add_option("--prime", opt.prime, "Odd prime modulus")->required();
  add_output(pattern);

  auto* verify = app.add_subcommand("verify", "Verify every prime in a range");
  add_spec(verify);
  verify->add_option("--primes", opt.primes, "Inclusive range lo..hi")->required();
  verify->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
  add_format(verify);
  add_output(verify);

  auto* eval = app.add_subcommand("eval", "R_n mod p from base-p digits of n");
  add_spec(eval);
  eval->add_option("--prime", opt.prime, "Odd prime modulus")->required();
  eval->add_option("--n", opt.n, "Non-negative decimal index of any length")->required();
  add_output(eval);

  auto* exact = app.add_subcommand("exact", "Exact terms R_0..R_{count-1}");
  add_spec(exact);
  exact->add_option("--count", opt.count, "Number of terms")->required();
  add_output(exact);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (opt.output != "stdout") {
    file.open(opt.output);
    if (!file) {
      err << "error: cannot open '" << opt.output << "' for writing\n";
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (table->parsed()) return cmd_table(opt, *sink, err);
    if (pattern->parsed()) return cmd_pattern(opt, *sink, err);
    if (verify->parsed()) return cmd_verify(opt, *sink, err);
    if (eval->parsed()) return cmd_eval(opt, *sink, err);
    if (exact->parsed()) return cmd_exact(opt, *sink, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace trinom::cli
