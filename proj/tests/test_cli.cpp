#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "doctest.h"
#include "polybound/polynomial.hpp"

using nlohmann::json;
using namespace polybound;

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

const std::string kData = POLYBOUND_TEST_DATA;

}  // namespace

TEST_CASE("compute charpoly") {
  const auto r = run({"compute", "charpoly", kData + "/example5.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "X^5 - 5*X^4 + 40*X^2 - 80*X + 48\n");
  CHECK(r.err.empty());
}

TEST_CASE("compute minpoly") {
  const auto r = run({"compute", "minpoly", kData + "/identity5.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "X - 1\n");
  CHECK(run({"compute", "minpoly", kData + "/companion.txt"}).out == "X^3 - 2*X - 5\n");
}

TEST_CASE("compute --json") {
  const auto r = run({"compute", "charpoly", kData + "/example5.txt", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["coeffs"] == json::array({48, -80, 40, 0, -5, 1}));
  CHECK(j["degree"] == 5);
  CHECK(j["verified"].is_null());
  // The coefficient array and the rendered string describe the same polynomial.
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.emplace_back(c.get<long>());
  CHECK(parse_polynomial(j["polynomial"].get<std::string>()) == IntPolynomial(coeffs));
}

TEST_CASE("compute --json keeps big coefficients exact") {
  const std::string path = (std::filesystem::temp_directory_path() / "polybound_big_matrix.txt").string();
  {
    std::ofstream f(path);
    f << "2 2\n10000000000000 1\n1 -10000000000000\n";
  }
  const auto r = run({"compute", "charpoly", path, "--json", "--verify"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["coeffs"][0] == "-100000000000000000000000001");
  CHECK(j["coeffs"][1] == 0);
  CHECK(j["verified"] == true);
  CHECK(parse_polynomial(j["polynomial"].get<std::string>()).coeff(0) ==
        Integer("-100000000000000000000000001"));
  std::filesystem::remove(path);
}

TEST_CASE("compute --verify") {
  const auto r = run({"compute", "minpoly", kData + "/example5.txt", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == "X^2 + X - 6\n");
  CHECK(r.err == "verify: match\n");
}

TEST_CASE("compute with small primes") {
  const auto r = run({"compute", "charpoly", kData + "/example5.txt", "--prime-bits", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "X^5 - 5*X^4 + 40*X^2 - 80*X + 48\n");
  const auto exhausted = run({"compute", "charpoly", kData + "/example5.txt", "--prime-bits", "2"});
  CHECK(exhausted.code == cli::kInvalidFlags);
}

TEST_CASE("bound charpoly") {
  const auto r = run({"bound", "charpoly", kData + "/example5.txt", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const auto& b = j["bounds"];
  REQUIRE(b.size() == 3);
  CHECK(b[0]["method"] == "hadamard");
  CHECK(b[0]["value_decimal_approx"] == "55.9017");
  CHECK(b[1]["method"] == "lemma1");
  CHECK(b[2]["method"] == "lemma2-search");
  CHECK(b[2]["bits"].get<double>() == doctest::Approx(std::log2(80.0)));
  CHECK(b[2]["meta"]["argmax_j"] == 1);
  CHECK(b[2]["value_decimal_approx"] == "80");
  CHECK(j["plan"]["count"] == 1);
  for (const auto& x : b) {
    CHECK(x.contains("method"));
    CHECK(x.contains("bits"));
    CHECK(x.contains("value_decimal_approx"));
    CHECK(x.contains("meta"));
  }

  const auto text = run({"bound", "charpoly", kData + "/identity4.txt"});
  CHECK(text.code == 0);
  CHECK(text.out.find("hadamard           bits 4.000000     value 16") != std::string::npos);
}

TEST_CASE("bound minpoly") {
  const auto r = run({"bound", "minpoly", kData + "/example5.txt", "--degree", "5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["spectral"][2]["beta"] == 5.0);
  CHECK(j["bounds"][0]["method"] == "eigenvalue-lemma3");
  CHECK(j["bounds"][0]["value_decimal_approx"] == "3125");
  CHECK(j["bounds"][1]["method"] == "mignotte");
  CHECK(j["best"] == "mignotte");
  CHECK(j["degree_source"] == "given");

  const auto probe = run({"bound", "minpoly", kData + "/example5.txt", "--probe", "--json"});
  REQUIRE(probe.code == 0);
  CHECK(json::parse(probe.out)["degree"] == 2);

  const auto defaulted = run({"bound", "minpoly", kData + "/identity4.txt"});
  CHECK(defaulted.code == 0);
  CHECK(defaulted.out.find("degree 4 (n)") != std::string::npos);
}

TEST_CASE("sms input") {
  const auto r = run({"compute", "charpoly", kData + "/single_entry.sms"});
  CHECK(r.code == 0);
  CHECK(r.out == "X^3 - 5*X^2\n");
  CHECK(run({"compute", "charpoly", kData + "/single_entry.sms", "--format", "dense"}).code ==
        cli::kParseError);
}

TEST_CASE("exit codes") {
  CHECK(run({"compute", "charpoly", "/nonexistent.txt"}).code == cli::kParseError);
  const auto bad = run({"compute", "charpoly", kData + "/../CMakeLists.txt"});
  CHECK(bad.code == cli::kParseError);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"compute", "eigen", kData + "/example5.txt"}).code == cli::kInvalidFlags);
  CHECK(run({"compute", "charpoly", kData + "/example5.txt", "--prime-bits", "63"}).code ==
        cli::kInvalidFlags);
  CHECK(run({"bound", "minpoly", kData + "/example5.txt", "--degree", "2", "--probe"}).code ==
        cli::kInvalidFlags);
  CHECK(run({"bound", "minpoly", kData + "/example5.txt", "--degree", "6"}).code ==
        cli::kInvalidFlags);
  CHECK(run({"compute", "charpoly", kData + "/example5.txt", "--format", "csv"}).code ==
        cli::kInvalidFlags);
  CHECK(run({}).code == cli::kInvalidFlags);
  CHECK(run({"--help"}).code == cli::kOk);
}
