#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "trinom/cli.hpp"

using namespace trinom;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("spec expressions") {
  CHECK(cli::parse_spec_expression("trinomial") == QuadraticSpec::trinomial());
  CHECK(cli::parse_spec_expression("delannoy") == QuadraticSpec::delannoy());
  const auto q = cli::parse_spec_expression("quad:a=-2,b=-3");
  CHECK(q.a == -2);
  CHECK(q.b == -3);
  CHECK_FALSE(q.name.has_value());

  auto message = [](const char* raw) {
    try {
      cli::parse_spec_expression(raw);
    } catch (const cli::ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("quad:a=x,b=1").find("'x'") != std::string::npos);
  CHECK(message("quad:a=1,c=1").find("'c=1'") != std::string::npos);
  CHECK(message("quad:a=1,b=0").find("'b=0'") != std::string::npos);
  CHECK(message("quad:a=1").find("'a=1'") != std::string::npos);
  CHECK(message("pentanomial").find("'pentanomial'") != std::string::npos);
  CHECK(message("quad:a=1,b=99999999999999999999").find("99999999999999999999") !=
        std::string::npos);
}

TEST_CASE("prime ranges") {
  const auto r = cli::parse_prime_range("5..997");
  CHECK(r.lo == 5);
  CHECK(r.hi == 997);
  CHECK(cli::parse_prime_range("10..10").lo == 10);
  CHECK_THROWS_AS(cli::parse_prime_range("10-20"), cli::ParseError);
  CHECK_THROWS_AS(cli::parse_prime_range("20..10"), cli::ParseError);
  CHECK_THROWS_AS(cli::parse_prime_range("..10"), cli::ParseError);
  CHECK_THROWS_AS(cli::parse_prime_range("a..10"), cli::ParseError);
}

TEST_CASE("table command") {
  auto r = run({"table", "--spec", "trinomial", "--prime", "7", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "j,residue\n0,1\n1,1\n2,3\n3,0\n4,5\n5,2\n6,1\n");

  r = run({"table", "--spec", "delannoy", "--prime", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "j,residue\n0,1\n1,3\n2,3\n3,3\n4,1\n");

  r = run({"table", "--spec", "trinomial", "--prime", "9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("9 is not prime") != std::string::npos);

  CHECK(run({"table", "--spec", "trinomial", "--prime", "2"}).code == 2);
  CHECK(run({"table", "--spec", "quad:a=1", "--prime", "7"}).code == 2);

  r = run({"table", "--spec", "trinomial", "--prime", "5", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = cli::Json::parse(r.out);
  CHECK(j["p"] == "5");
  CHECK(j["tables_agree"] == true);
  CHECK(j["residues"] == cli::Json::array({"1", "1", "3", "2", "4"}));
}

TEST_CASE("pattern command") {
  CHECK(run({"pattern", "--spec", "trinomial", "--prime", "7"}).out ==
        "1110111 palindromic=true\n");
  const auto r3 = run({"pattern", "--spec", "trinomial", "--prime", "3"});
  CHECK(r3.out == "110 palindromic=false\n");
  CHECK(r3.code == 0);
  CHECK(run({"pattern", "--spec", "trinomial", "--prime", "5"}).out == "11111 palindromic=true\n");
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--spec", "trinomial", "--primes", "5..997", "--jobs", "4", "--format",
                "json"});
  CHECK(r.code == 0);
  auto j = cli::Json::parse(r.out);
  CHECK(j["primes_checked"] == "166");
  CHECK(j["records"].size() == 166);
  CHECK(j["violations"].empty());
  for (const auto& rec : j["records"]) REQUIRE(rec["palindromic"] == true);

  r = run({"verify", "--spec", "delannoy", "--primes", "2..97", "--jobs", "1", "--format", "json"});
  CHECK(r.code == 0);
  j = cli::Json::parse(r.out);
  CHECK(j["records"][0]["p"] == "2");
  for (const auto& rec : j["records"]) REQUIRE(rec["palindromic"] == true);

  r = run({"verify", "--spec", "trinomial", "--primes", "10..10", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(cli::Json::parse(r.out)["records"].empty());

  CHECK(run({"verify", "--spec", "trinomial", "--primes", "10-20"}).code == 2);
  CHECK(run({"verify", "--spec", "trinomial", "--primes", "5..7", "--jobs", "0"}).code == 2);
}

TEST_CASE("verify report schema and key order") {
  const auto r = run({"verify", "--spec", "quad:a=-2,b=-3", "--primes", "3..5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = cli::Json::parse(r.out);
  std::vector<std::string> top;
  for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
  CHECK(top == std::vector<std::string>{"spec", "primes_checked", "violations", "records"});
  CHECK(j["spec"]["a"] == "-2");
  CHECK(j["spec"]["name"].is_null());

  std::vector<std::string> keys;
  const auto& rec = j["records"][0];
  for (auto it = rec.begin(); it != rec.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"spec", "p", "tables_agree", "pattern", "palindromic",
                                         "mirror_holds", "condition_value", "condition_ok",
                                         "degenerate_b"});
  CHECK(rec["spec"] == "quad:a=-2,b=-3");
  CHECK(rec["pattern"] == "110");
  CHECK(rec["condition_value"] == "0");
  CHECK(rec["condition_ok"] == false);
}

TEST_CASE("json reports round-trip byte for byte") {
  for (const char* spec : {"trinomial", "delannoy", "quad:a=4,b=-7"}) {
    const auto r = run({"verify", "--spec", spec, "--primes", "2..200", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(cli::Json::parse(r.out).dump(2) + "\n" == r.out);
  }
  const auto t = run({"table", "--spec", "delannoy", "--prime", "101", "--format", "json"});
  CHECK(cli::Json::parse(t.out).dump(2) + "\n" == t.out);
}

TEST_CASE("verify csv") {
  const auto r = run({"verify", "--spec", "quad:a=-2,b=-3", "--primes", "3..7", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "spec,p,tables_agree,pattern,palindromic,mirror_holds,condition_value,condition_ok,"
        "degenerate_b");
  CHECK(rows[1] == "\"quad:a=-2,b=-3\",3,true,\"110\",false,false,0,false,true");
  CHECK(rows[3] == "\"quad:a=-2,b=-3\",7,true,\"1110111\",true,true,4,true,false");
}

TEST_CASE("verify output is identical across job counts") {
  for (const char* format : {"json", "csv"}) {
    const auto one = run({"verify", "--spec", "delannoy", "--primes", "2..997", "--jobs", "1",
                          "--format", format});
    const auto eight = run({"verify", "--spec", "delannoy", "--primes", "2..997", "--jobs", "8",
                            "--format", format});
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
  }
}

TEST_CASE("eval command") {
  CHECK(run({"eval", "--spec", "trinomial", "--prime", "7", "--n", "10"}).out == "0\n");
  CHECK(run({"eval", "--spec", "trinomial", "--prime", "7", "--n", "0"}).out == "1\n");

  // Independent digit product over base-7 digits of 10^20.
  const auto table = table_via_recurrence(QuadraticSpec::trinomial(), PrimeModulus(7));
  const auto expected =
      oracle::digit_product(table.residues, oracle::Int("100000000000000000000"), 7);
  CHECK(run({"eval", "--spec", "trinomial", "--prime", "7", "--n", "100000000000000000000"}).out ==
        std::to_string(expected) + "\n");
  CHECK(run({"eval", "--spec", "trinomial", "--prime", "13", "--n",
             "31415926535897932384626433832795028841971"})
            .out == "7\n");

  const auto bad = run({"eval", "--spec", "trinomial", "--prime", "7", "--n", "12x"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("12x") != std::string::npos);
}

TEST_CASE("exact command") {
  CHECK(run({"exact", "--spec", "trinomial", "--count", "7"}).out == "1\n1\n3\n7\n19\n51\n141\n");
  CHECK(run({"exact", "--spec", "delannoy", "--count", "6"}).out == "1\n3\n13\n63\n321\n1683\n");
  const auto r = run({"exact", "--spec", "quad:a=-1,b=-3", "--count", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("R_1") != std::string::npos);
  CHECK(run({"exact", "--spec", "trinomial", "--count", "0"}).code == 2);
}

TEST_CASE("usage errors and output redirection") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"table", "--spec", "trinomial"}).code == 2);
  CHECK(run({"table", "--spec", "trinomial", "--prime", "7", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const std::string path = "trinom_cli_test_output.csv";
  const auto r = run({"table", "--spec", "trinomial", "--prime", "5", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "j,residue\n0,1\n1,1\n2,3\n3,2\n4,4\n");
  std::remove(path.c_str());

  CHECK(run({"table", "--spec", "trinomial", "--prime", "5", "--output",
             "/nonexistent-dir/x.csv"})
            .code == 2);
}
