#include <doctest.h>

#include "helpers.hpp"
#include "idealext/error.hpp"
#include "idealext/spec_io.hpp"

using namespace idealext;
using namespace testing;

namespace {

std::string error_of(const std::string& text) {
  try {
    spec_from_string(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSpec);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("loading the example files") {
  auto e1 = load_spec(data("e1.json"));
  REQUIRE(e1.ideal());
  CHECK(e1.ideal()->minimals() == std::vector<Vec>{{0, 3}, {1, 2}, {2, 0}});
  auto e3 = load_spec(data("e3.json"));
  REQUIRE(e3.atoms());
  CHECK(e3.atoms()->basis().size() == 8);
  auto bs = load_spec(data("backslash.json"));
  REQUIRE(bs.backslash());
  CHECK(bs.backslash()->axes() == std::vector<std::size_t>{0, 1});
  CHECK(bs.backslash()->semigroup().ordinary_multiplicity() == 3u);
  auto non = load_spec(data("backslash_nonordinary.json"));
  CHECK(non.backslash()->semigroup().gaps() == std::vector<std::uint64_t>{1, 2, 4});
}

TEST_CASE("strict schema") {
  CHECK(error_of(R"({"kind":"ideal_extension","dim":2,"minimal":[[1,0]]})").find("minimal") != std::string::npos);
  CHECK(error_of(R"({"kind":"ideal_extension","dim":2,"minimals":[[1,0]],"extra":1})").find("extra: unknown field") != std::string::npos);
  CHECK(error_of(R"({"kind":"ideal_extension","dim":2,"minimals":[[1,0,0]]})").find("minimals[0]") != std::string::npos);
  CHECK(error_of(R"({"kind":"ideal_extension","dim":2,"minimals":[[1,-1]]})").find("minimals[0][1]: negative") != std::string::npos);
  CHECK(error_of(R"({"kind":"ideal_extension","dim":2,"minimals":[]})").find("nonempty") != std::string::npos);
  CHECK(error_of(R"({"kind":"ideal_extension","dim":2,"minimals":[[0,0]]})").find("zero vector") != std::string::npos);
  CHECK(error_of(R"({"kind":"monoid","dim":2})").find("kind") != std::string::npos);
  CHECK(error_of(R"({"kind":"backslash","dim":2,"J":[3],"T":{"ordinary":2}})").find("J[0]") != std::string::npos);
  CHECK(error_of(R"({"kind":"backslash","dim":2,"J":[1],"T":{"ordinary":2,"gaps":[1]}})").find("T") != std::string::npos);
  CHECK(error_of(R"({"kind":"backslash","dim":2,"J":[1],"T":{"odinary":2}})").find("T.odinary") != std::string::npos);
  CHECK(error_of("{\"kind\":\n\"atoms\",}").find("line 2") != std::string::npos);
  try {
    spec_from_string(R"({"kind":"backslash","dim":2,"J":[1],"T":{"ordinary":2},"lambda":[1,0]})");
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
  }
}

TEST_CASE("round trip") {
  for (const char* f : {"e1.json", "e2.json", "e3.json", "e4.json", "backslash.json", "backslash_nonordinary.json"}) {
    auto a = load_spec(data(f));
    Json j = spec_to_json(*a.monoid);
    auto b = spec_from_json(j);
    CHECK(spec_to_json(*b.monoid) == j);
    CHECK(spec_from_string(j.dump()).monoid->kind() == a.monoid->kind());
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto s = random_ie(131, i, 3, 4, i % 2 == 0);
    CHECK(spec_from_json(spec_to_json(s)).ideal()->minimals() == s.minimals());
  }
}

TEST_CASE("values and vectors") {
  CHECK(parse_vec("3,4") == Vec{3, 4});
  CHECK(parse_vec("0") == Vec{0});
  CHECK_THROWS_AS(parse_vec("3,,4"), Error);
  CHECK_THROWS_AS(parse_vec("3,-4"), Error);
  CHECK_THROWS_AS(parse_vec(""), Error);
  CHECK(extnat_json(ExtNat::infinity()) == "infinity");
  CHECK(extnat_json(ExtNat(3)) == 3);
  CHECK(rational_json(Rational(10, 6)) == "5/3");
  CHECK(rational_json(Rational(4, 4)) == "1");
}
