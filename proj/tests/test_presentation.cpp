#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "b0/presentation.hpp"

using namespace b0;

namespace {

const char* kGroup16 = R"(# order-128 group, 7 generators
pcgroup 7
name family-016
orders 2 2 2 2 2 2 2
g1^2 = g5
g2^2 = 1
[g2,g1] = g4
g3^2 = 1
[g3,g1] = g7
[g3,g2] = g6*g7
g4^2 = g6
[g4,g1] = g6
[g4,g2] = g6
g5^2 = g7
g6^2 = 1
g7^2 = 1
)";

// canonical serialization: no comments, fixed declaration order
const char* kGroup16Canonical = R"(pcgroup 7
name family-016
orders 2 2 2 2 2 2 2
g1^2 = g5
g2^2 = 1
[g2,g1] = g4
g3^2 = 1
[g3,g1] = g7
[g3,g2] = g6*g7
g4^2 = g6
[g4,g1] = g6
[g4,g2] = g6
g5^2 = g7
g6^2 = 1
g7^2 = 1
)";

int error_line(const char* text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("parse a 7-generator presentation") {
  PcPresentation p = parse_presentation(kGroup16);
  CHECK(p.n == 7);
  CHECK(p.name == "family-016");
  CHECK(p.orders == std::vector<int>(7, 2));
  CHECK(p.order() == 128);
  CHECK(p.power_rhs[0] == Word{{5, 1}});
  CHECK(p.power_rhs[1] == Word{});
  CHECK(p.power_rhs[3] == Word{{6, 1}});
  REQUIRE(p.comm(2, 1) != nullptr);
  CHECK(*p.comm(2, 1) == Word{{4, 1}});
  REQUIRE(p.comm(3, 2) != nullptr);
  CHECK(*p.comm(3, 2) == Word{{6, 1}, {7, 1}});
  CHECK(p.comm(7, 1) == nullptr);
  CHECK(p.stored_comm_count() == 5);
  check_well_formed(p);
}

TEST_CASE("serialization round trip") {
  PcPresentation p = parse_presentation(kGroup16);
  CHECK(serialize(p, Format::Text) == kGroup16Canonical);
  CHECK(parse_presentation(serialize(p, Format::Text)) == p);
}

TEST_CASE("json serialization") {
  PcPresentation p = parse_presentation(kGroup16);
  nlohmann::json j = nlohmann::json::parse(serialize(p, Format::Json));
  CHECK(j["name"] == "family-016");
  CHECK(j["n"] == 7);
  CHECK(j["orders"].size() == 7);
  CHECK(j["powers"][0] == nlohmann::json::parse("[[5,1]]"));
  CHECK(j["powers"][1] == nlohmann::json::array());
  CHECK(j["comms"]["3,2"] == nlohmann::json::parse("[[6,1],[7,1]]"));
  CHECK(j["comms"].size() == 5);
}

TEST_CASE("minimal presentations") {
  PcPresentation c2 = parse_presentation("pcgroup 1\norders 2\n");
  CHECK(c2.n == 1);
  CHECK(c2.order() == 2);
  CHECK(c2.power_rhs[0].empty());
  check_well_formed(c2);

  PcPresentation c9 = parse_presentation("pcgroup 1\norders 9\ng1^9 = 1\n");
  CHECK(c9.order() == 9);
}

TEST_CASE("words with general exponents") {
  PcPresentation p =
      parse_presentation("pcgroup 2\norders 4 8\ng1^4 = g2^6\n");
  CHECK(p.power_rhs[0] == Word{{2, 6}});
  CHECK(word_to_string(p.power_rhs[0]) == "g2^6");
  CHECK(word_to_string({}) == "1");
  CHECK(word_to_string({{1, 1}, {3, 2}}) == "g1*g3^2");
}

TEST_CASE("parse errors carry positions") {
  // no header
  CHECK(error_line("orders 2 2\n") == 1);
  // generator index out of range
  CHECK(error_line("pcgroup 2\norders 2 2\ng9^2 = 1\n") == 3);
  // rhs must use generators above the relation index
  CHECK(error_line("pcgroup 3\norders 2 2 2\ng3^2 = g2\n") == 3);
  CHECK(error_line("pcgroup 3\norders 2 2 2\n[g3,g1] = g2\n") == 3);
  // word indices must increase
  CHECK(error_line("pcgroup 4\norders 2 2 2 2\ng2^2 = g4*g3\n") == 3);
  // commutator needs j < i
  CHECK(error_line("pcgroup 3\norders 2 2 2\n[g2,g3] = 1\n") == 3);
  CHECK(error_line("pcgroup 3\norders 2 2 2\n[g2,g2] = 1\n") == 3);
  // duplicates
  CHECK(error_line("pcgroup 2\norders 2 2\ng1^2 = 1\ng1^2 = g2\n") == 4);
  CHECK(error_line(
            "pcgroup 3\norders 2 2 2\n[g2,g1] = g3\n[g2,g1] = g3\n") == 4);
  // order below 2
  CHECK(error_line("pcgroup 2\norders 2 1\n") == 2);
  // power exponent disagrees with the declared order
  CHECK(error_line("pcgroup 2\norders 2 2\ng1^4 = 1\n") == 3);
  // exponent outside [1, order-1]
  CHECK(error_line("pcgroup 2\norders 2 2\ng1^2 = g2^2\n") == 3);
  // trailing garbage
  CHECK(error_line("pcgroup 2\norders 2 2\ng1^2 = g2 junk\n") == 3);
  CHECK(error_line("pcgroup 2\norders 2 2 2\n") == 2);
  // column is reported too
  try {
    parse_presentation("pcgroup 2\norders 2 2\ng1^2 = g9\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 1);
  }
}

TEST_CASE("check_well_formed rejects broken structures") {
  PcPresentation p = parse_presentation(kGroup16);
  PcPresentation bad = p;
  bad.orders[2] = 1;
  CHECK_THROWS_AS(check_well_formed(bad), std::invalid_argument);
  bad = p;
  bad.power_rhs[0] = {{5, 3}};  // exponent beyond order
  CHECK_THROWS_AS(check_well_formed(bad), std::invalid_argument);
  bad = p;
  bad.comm_rhs[{3, 2}] = {};  // stored comm must be nontrivial
  CHECK_THROWS_AS(check_well_formed(bad), std::invalid_argument);
  bad = p;
  bad.comm_rhs[{1, 1}] = {{2, 1}};
  CHECK_THROWS_AS(check_well_formed(bad), std::invalid_argument);
}
