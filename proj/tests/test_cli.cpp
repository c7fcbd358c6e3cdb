#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mildcert::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: cohomology") {
  const auto r = call({"cohomology", "--p", "3", "--S", "13", "--T", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("h=(1,0,1,0), chi=2") != std::string::npos);
  const auto s = call({"cohomology", "--p", "3", "--S", "13", "--format", "structured"});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"version\"") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(call({"certify", "--p", "2", "--S", "13"}).code == 1);
  CHECK(call({"certify", "--p", "2", "--S", "13"}).err.find("p=2 unsupported") != std::string::npos);
  CHECK(call({"cohomology"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"cohomology", "--p", "3", "--format", "xml"}).code == 2);
  CHECK(call({"cohomology", "--p", "3", "--S", "7", "--T", "7"}).code == 1);
  CHECK(call({"kummer", "--p", "3", "--T", "11,13"}).out.find("dim V=2") != std::string::npos);
}

TEST_CASE("cli: certify, verify, enlarge") {
  const std::string path = "cli_test_certificate.json";
  const auto c = call({"certify", "--p", "3", "--S", "", "--T", "", "--out", path});
  REQUIRE(c.code == 0);
  const auto again = call({"certify", "--p", "3", "--S", "", "--T", "", "--format", "structured"});
  std::ifstream in(path);
  std::stringstream written;
  written << in.rdbuf();
  CHECK(written.str() == again.out);

  const auto v = call({"verify", path});
  CHECK(v.code == 0);
  CHECK(v.out.find("verify: ok") != std::string::npos);

  const auto e = call({"enlarge", path, "--extra", "547"});
  CHECK(e.code == 0);
  CHECK(e.out.find("inconclusive") != std::string::npos);

  std::string tampered = written.str();
  const auto pos = tampered.find("\"mild\": true");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 12, "\"mild\": false");
  {
    std::ofstream outf(path);
    outf << tampered;
  }
  const auto bad = call({"verify", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verdicts.mild") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli: linking probe") {
  const auto r = call({"linking", "--p", "3", "--S", "7,19,61,163", "--mild-split"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mild split found") != std::string::npos);
}

TEST_CASE("cli: search exhaustion is a domain error with a trace") {
  const auto r = call({"find-s0", "--p", "3", "--max-prime", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("search bound exceeded") != std::string::npos);
  CHECK(r.err.find("trace:") != std::string::npos);
}
