#include <ostream>

#include "trinom/cli.hpp"

namespace trinom::cli {

namespace {

std::string csv_quote(std::string_view field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* flag(bool v) { return v ? "true" : "false"; }

}  // namespace

Json spec_json(const QuadraticSpec& spec) {
  Json j;
  j["a"] = std::to_string(spec.a);
  j["b"] = std::to_string(spec.b);
  j["name"] = spec.name ? Json(*spec.name) : Json(nullptr);
  return j;
}

Json table_json(const ResidueTable& table, bool tables_agree) {
  Json residues = Json::array();
  for (auto r : table.residues) residues.push_back(std::to_string(r));
  Json j;
  j["spec"] = spec_json(table.spec);
  j["p"] = std::to_string(table.modulus.value());
  j["tables_agree"] = tables_agree;
  j["degenerate_b"] = table.degenerate_b;
  j["residues"] = std::move(residues);
  return j;
}

Json verify_report_json(const QuadraticSpec& spec,
                        std::span<const VerificationRecord> records) {
  Json violations = Json::array();
  Json rows = Json::array();
  for (const auto& rec : records) {
    if (rec.violation()) violations.push_back(std::to_string(rec.p));
    Json row;
    row["spec"] = rec.spec.label();
    row["p"] = std::to_string(rec.p);
    row["tables_agree"] = rec.tables_agree;
    row["pattern"] = rec.pattern.bits;
    row["palindromic"] = rec.palindromic;
    row["mirror_holds"] = rec.mirror_holds;
    row["condition_value"] = std::to_string(rec.condition_value);
    row["condition_ok"] = rec.condition_ok;
    row["degenerate_b"] = rec.degenerate_b;
    rows.push_back(std::move(row));
  }
  Json j;
  j["spec"] = spec_json(spec);
  j["primes_checked"] = std::to_string(records.size());
  j["violations"] = std::move(violations);
  j["records"] = std::move(rows);
  return j;
}

void write_table_csv(std::ostream& os, const ResidueTable& table) {
  os << "j,residue\n";
  for (std::size_t j = 0; j < table.size(); ++j) os << j << ',' << table.residues[j] << '\n';
}

void write_verify_csv(std::ostream& os, std::span<const VerificationRecord> records) {
  os << "spec,p,tables_agree,pattern,palindromic,mirror_holds,condition_value,condition_ok,"
        "degenerate_b\n";
  for (const auto& rec : records) {
    os << csv_quote(rec.spec.label()) << ',' << rec.p << ',' << flag(rec.tables_agree) << ','
       << csv_quote(rec.pattern.bits) << ',' << flag(rec.palindromic) << ','
       << flag(rec.mirror_holds) << ',' << rec.condition_value << ',' << flag(rec.condition_ok)
       << ',' << flag(rec.degenerate_b) << '\n';
  }
}

}  // namespace trinom::cli
