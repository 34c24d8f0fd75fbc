#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "epsmult/errors.hpp"
#include "epsmult/parse.hpp"

using namespace epsmult;

namespace {

const MonomialIdeal kX2XY(2, {{2, 0}, {1, 1}});

ParseError parse_failure(std::string_view text, const ParseOptions& opts = {}) {
  try {
    parse_ideal(text, opts);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for " << text;
  return ParseError("none");
}

}  // namespace

TEST(ParseIdeal, HumanSyntax) {
  EXPECT_EQ(parse_ideal("x^2, x*y"), kX2XY);
  EXPECT_EQ(parse_ideal("  ( x^2 ,\n  x * y ) "), kX2XY);
  EXPECT_EQ(parse_ideal("x^2*y, y^3"), MonomialIdeal(2, {{2, 1}, {0, 3}}));
  EXPECT_EQ(parse_ideal("x*x*y^2*y"), MonomialIdeal(2, {{2, 3}}));
}

TEST(ParseIdeal, Json) {
  EXPECT_EQ(parse_ideal(R"({"dim":2,"generators":[[2,0],[1,1],[3,0]]})"), kX2XY);
}

TEST(ParseIdeal, DimensionIsInferred) {
  EXPECT_EQ(parse_ideal("x").dim(), 1u);
  EXPECT_EQ(parse_ideal("z").dim(), 3u);
  EXPECT_EQ(parse_ideal("w^2").dim(), 4u);
  EXPECT_EQ(parse_ideal("x6").dim(), 6u);
  EXPECT_EQ(parse_ideal("x, y", {.min_dim = 3}), MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST(ParseIdeal, IndexedVariables) {
  EXPECT_EQ(parse_ideal("x1^2, x1*x2"), kX2XY);
  EXPECT_EQ(parse_ideal("x5").generators().front(), (ExponentVector{0, 0, 0, 0, 1}));
}

TEST(ParseIdeal, ZeroAndUnit) {
  EXPECT_TRUE(parse_ideal("0").is_zero());
  EXPECT_TRUE(parse_ideal("").is_zero());
  EXPECT_TRUE(parse_ideal("()").is_zero());
  EXPECT_TRUE(parse_ideal("1").is_unit());
  EXPECT_TRUE(parse_ideal("1, x^3", {.min_dim = 2}).is_unit());
  EXPECT_EQ(parse_ideal("1", {.min_dim = 3}).dim(), 3u);
  EXPECT_EQ(parse_ideal("1*x^2"), MonomialIdeal(1, {{2}}));
}

TEST(ParseIdeal, JsonIsPaddedToMinDim) {
  EXPECT_EQ(parse_ideal(R"({"dim":1,"generators":[[2]]})", {.min_dim = 2}),
            MonomialIdeal(2, {{2, 0}}));
}

TEST(ParseIdeal, SumIsASyntaxError) {
  const auto e = parse_failure("x^2 + y");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 5);
}

TEST(ParseIdeal, ErrorsCarryLineAndColumn) {
  const auto e = parse_failure("x^2,\n  y^");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 5);
  const auto j = parse_failure("{\"dim\": 2,\n \"generators\": [[1,0],}");
  EXPECT_EQ(j.line(), 2);
  EXPECT_GT(j.column(), 1);
}

TEST(ParseIdeal, MixedSchemes) {
  const auto e = parse_failure("x^2, x2*y");
  EXPECT_NE(std::string(e.what()).find("mixed"), std::string::npos);
  EXPECT_EQ(e.column(), 6);
}

TEST(ParseIdeal, DimensionCap) {
  EXPECT_NO_THROW(parse_ideal("x16"));
  EXPECT_THROW(parse_ideal("x17"), ParseError);
  EXPECT_THROW(parse_ideal("z", {.max_dim = 2}), ParseError);
  EXPECT_THROW(parse_ideal(R"({"dim":3,"generators":[]})", {.max_dim = 2}), ParseError);
}

TEST(ParseIdeal, Malformed) {
  for (const char* bad : {"x^", "x^-1", "2*x", "x,", ",x", "x y", "(x", "x)", "a", "x0",
                          "0, x", "x^99999999999", "x*", "10"})
    EXPECT_THROW(parse_ideal(bad), ParseError) << bad;
}

TEST(LoadIdeal, FileOrText) {
  const auto path = std::filesystem::temp_directory_path() / "epsmult_parse_test.json";
  {
    std::ofstream f(path);
    f << R"({"dim":2,"generators":[[1,1],[2,0]]})";
  }
  EXPECT_EQ(load_ideal(path.string()), kX2XY);
  EXPECT_EQ(load_ideal("x^2, x*y"), kX2XY);
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path.string()), ParseError);
}
