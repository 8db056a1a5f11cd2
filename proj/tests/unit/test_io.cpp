#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "coopx/error.hpp"
#include "coopx/examples.hpp"
#include "coopx/io.hpp"

using namespace coopx;

namespace {

std::string read_text(const std::string& name) {
  std::ifstream in(std::string(COOPX_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The message of the MalformedInput error raised by f, or "" if none.
template <typename F>
std::string malformed(F f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedInput);
    return e.what();
  }
  ADD_FAILURE() << "no error raised";
  return "";
}

}  // namespace

TEST(Io, RationalEncoding) {
  EXPECT_EQ(to_json(Rational(5)), Json(5));
  EXPECT_EQ(to_json(make_rational(-3, 4)), Json("-3/4"));
  EXPECT_EQ(rational_from_json(Json("6/8")), make_rational(3, 4));
  EXPECT_EQ(rational_from_json(Json(-7)), Rational(-7));
  // Integers beyond 64 bits are written as strings.
  const Rational big = Rational(mpz_class("123456789012345678901234567890"));
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_EQ(rational_from_json(to_json(big)), big);
  EXPECT_NE(malformed([] { rational_from_json(Json(1.5)); }).find("$"), std::string::npos);
}

TEST(Io, DataFilesRoundTripByteForByte) {
  for (const char* name : {"example1.json", "example1-modified.json"}) {
    const std::string text = read_text(name);
    EXPECT_EQ(dump(to_json(tu_game_from_json(parse_json(text)))), text) << name;
  }
  for (const char* name : {"example2.json", "symmetric.json", "hopf.json"}) {
    const std::string text = read_text(name);
    EXPECT_EQ(dump(to_json(game_from_json(parse_json(text)))), text) << name;
  }
  const std::string bubbles = read_text("bubbles.json");
  EXPECT_EQ(dump(to_json(complex_from_json(parse_json(bubbles)))), bubbles);
}

TEST(Io, ObjectsRoundTrip) {
  const TUGame tu = example1();
  EXPECT_EQ(tu_game_from_json(to_json(tu)), tu);
  const GeneralizedGame g = example2();
  EXPECT_EQ(game_from_json(to_json(g)), g);
  EXPECT_EQ(firms_from_json(to_json(g.firm_system)), g.firm_system);

  CoalitionalNTUGame ntu;
  ntu.players = 2;
  ntu.sets.emplace(0b01, ComprehensiveSet({Primitive::orthant({Rational(1)})}));
  ntu.sets.emplace(0b10, ComprehensiveSet({Primitive::orthant({Rational(2)})}));
  ntu.sets.emplace(0b11, ComprehensiveSet({Primitive::orthant({make_rational(1, 2), Rational(3)}),
                                           Primitive::orthant({Rational(2), Rational(0)})}));
  const CoalitionalNTUGame back = ntu_game_from_json(to_json(ntu));
  EXPECT_EQ(back.players, ntu.players);
  EXPECT_EQ(back.sets, ntu.sets);

  const BubbleFixture b = bubble_pair(1, -1, 6);
  ComplexDocument doc;
  doc.complex = b.region.complex;
  doc.has_orientation = true;
  doc.labels = b.labels;
  doc.positions = b.region.positions;
  doc.firms = b.firms;
  const ComplexDocument round = complex_from_json(to_json(doc));
  EXPECT_EQ(round.complex, doc.complex);
  EXPECT_EQ(round.labels, doc.labels);
  EXPECT_EQ(round.positions, doc.positions);
  EXPECT_EQ(round.firms, doc.firms);
}

TEST(Io, MalformedInputNamesThePath) {
  EXPECT_NE(malformed([] { tu_game_from_json(parse_json(R"({"n":3,"values":{"1":-10}})")); }).find("$.values"),
            std::string::npos);
  EXPECT_NE(malformed([] {
              tu_game_from_json(parse_json(R"({"n":2,"values":{"1":1,"2":"1/0","1,2":3}})"));
            }).find(R"($.values["2"])"),
            std::string::npos);
  EXPECT_NE(malformed([] {
              game_from_json(parse_json(
                  R"({"dimension":2,"firms":[[1,0]],"resource":[1,1],"utilities":[{"primitives":[{"halfspaces":[{"a":[1,"x"],"b":0}]}]}]})"));
            }).find("$.utilities[0].primitives[0].halfspaces[0].a[1]"),
            std::string::npos);
  EXPECT_NE(malformed([] { complex_from_json(parse_json(R"({"vertices":3,"facets":[[0,1],[1,2],[2,5]]})")); })
                .find("$.facets[2]"),
            std::string::npos);
  EXPECT_NE(malformed([] { parse_json("[1,2"); }).find("syntax"), std::string::npos);
}

TEST(Io, InvalidHalfSpaceReportsThePath) {
  try {
    game_from_json(parse_json(
        R"({"dimension":2,"firms":[[1,0]],"resource":[1,1],"utilities":[{"primitives":[{"halfspaces":[{"a":[1,-1],"b":0}]}]}]})"));
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("$.utilities[0]"), std::string::npos) << e.what();
  }
}
