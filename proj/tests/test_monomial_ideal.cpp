#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "epsmult/errors.hpp"
#include "epsmult/monomial_ideal.hpp"

using namespace epsmult;

namespace {

MonomialIdeal ideal2(std::vector<ExponentVector> gens) { return MonomialIdeal(2, std::move(gens)); }

const MonomialIdeal kX2XY = ideal2({{2, 0}, {1, 1}});

}  // namespace

TEST(ExponentVector, DegreeAndDivisibility) {
  ExponentVector e{2, 3};
  EXPECT_EQ(e.degree(), 5);
  EXPECT_TRUE(ExponentVector({1, 3}).divides(e));
  EXPECT_FALSE(ExponentVector({3, 0}).divides(e));
  EXPECT_EQ(lcm(ExponentVector{2, 0}, ExponentVector{1, 4}), (ExponentVector{2, 4}));
  EXPECT_EQ(monomial_quotient(ExponentVector{2, 0}, ExponentVector{1, 4}),
            (ExponentVector{1, 0}));
  EXPECT_THROW(e += ExponentVector({1}), DimensionMismatch);
}

TEST(Minimalize, DropsMultiples) {
  const auto i = minimalize({{2, 0}, {1, 1}, {3, 0}}, 2);
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{{1, 1}, {2, 0}}));
}

TEST(Minimalize, EmptyIsZeroIdeal) {
  const auto i = minimalize({}, 2);
  EXPECT_TRUE(i.is_zero());
  EXPECT_EQ(i.size(), 0u);
}

TEST(Minimalize, ZeroVectorGivesUnit) {
  const auto i = minimalize({{0, 0}, {1, 1}}, 2);
  EXPECT_TRUE(i.is_unit());
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{{0, 0}}));
}

TEST(Minimalize, Errors) {
  EXPECT_THROW(minimalize({{1, 0}, {1, 0, 0}}, 2), DimensionMismatch);
  EXPECT_THROW(minimalize({{-1, 0}}, 2), PreconditionError);
  EXPECT_THROW(minimalize({}, 0), PreconditionError);
}

TEST(Minimalize, DuplicatesCollapse) {
  EXPECT_EQ(minimalize({{1, 2}, {1, 2}}, 2).size(), 1u);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(kX2XY, {1, 3}));
  EXPECT_FALSE(contains(kX2XY, {1, 0}));
  EXPECT_FALSE(contains(MonomialIdeal(2), {5, 5}));
  EXPECT_THROW(contains(kX2XY, {1, 1, 1}), DimensionMismatch);
}

TEST(Arithmetic, ProductOfVariableAndMaximal) {
  EXPECT_EQ(product(ideal2({{1, 0}}), MonomialIdeal::maximal(2)), kX2XY);
}

TEST(Arithmetic, SquareOfX2XY) {
  EXPECT_EQ(power(kX2XY, 2), ideal2({{4, 0}, {3, 1}, {2, 2}}));
}

TEST(Arithmetic, ZerothPowerIsUnit) {
  EXPECT_TRUE(power(kX2XY, 0).is_unit());
  EXPECT_TRUE(power(MonomialIdeal(2), 0).is_unit());
}

TEST(Arithmetic, SumIsUnionOfGenerators) {
  EXPECT_EQ(sum(ideal2({{2, 0}}), ideal2({{1, 1}, {3, 0}})), kX2XY);
  EXPECT_EQ(sum(MonomialIdeal(2), kX2XY), kX2XY);
}

TEST(Arithmetic, DimensionMismatch) {
  EXPECT_THROW(sum(kX2XY, MonomialIdeal::maximal(3)), DimensionMismatch);
  EXPECT_THROW(product(kX2XY, MonomialIdeal::maximal(3)), DimensionMismatch);
  EXPECT_THROW(intersect(kX2XY, MonomialIdeal::maximal(3)), DimensionMismatch);
  EXPECT_THROW(colon(kX2XY, MonomialIdeal::maximal(3)), DimensionMismatch);
  EXPECT_THROW(is_subideal(kX2XY, MonomialIdeal::maximal(3)), DimensionMismatch);
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(ideal2({{1, 0}}), ideal2({{0, 1}})), ideal2({{1, 1}}));
  EXPECT_EQ(intersect(kX2XY, power(MonomialIdeal::maximal(2), 3)),
            ideal2({{3, 0}, {2, 1}, {1, 2}}));
  EXPECT_EQ(intersect(kX2XY, MonomialIdeal::unit(2)), kX2XY);
  EXPECT_TRUE(intersect(kX2XY, MonomialIdeal(2)).is_zero());
}

TEST(Colon, Examples) {
  EXPECT_EQ(colon(kX2XY, ideal2({{1, 0}})), MonomialIdeal::maximal(2));
  EXPECT_EQ(colon(kX2XY, MonomialIdeal::unit(2)), kX2XY);
  EXPECT_EQ(colon(ideal2({{1, 1}}), ideal2({{2, 0}})), ideal2({{0, 1}}));
}

TEST(Colon, ByZeroIdealThrows) {
  EXPECT_THROW(colon(kX2XY, MonomialIdeal(2)), PreconditionError);
}

TEST(Colon, ZeroIdealOverAnything) {
  EXPECT_TRUE(colon(MonomialIdeal(2), kX2XY).is_zero());
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate(kX2XY), ideal2({{1, 0}}));
  EXPECT_TRUE(saturate(MonomialIdeal::maximal(2)).is_unit());
  const MonomialIdeal xy3(3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(saturate(xy3), xy3);
}

TEST(Saturate, ZeroAndUnit) {
  EXPECT_TRUE(saturate(MonomialIdeal(2)).is_zero());
  EXPECT_TRUE(saturate(MonomialIdeal::unit(2)).is_unit());
}

TEST(Saturate, PrincipalIdealInTwoVariablesIsSaturated) {
  const auto x2 = ideal2({{2, 0}});
  EXPECT_EQ(saturate(x2), x2);
}

TEST(Saturate, ColonIterationAgrees) {
  EXPECT_EQ(saturate_by_colon(kX2XY), ideal2({{1, 0}}));
  EXPECT_TRUE(saturate_by_colon(MonomialIdeal::maximal(3)).is_unit());
}

TEST(Saturate, IterationCapIsEnforced) {
  const auto i = ideal2({{9, 0}, {0, 9}});
  EXPECT_THROW(saturate_by_colon(i, 3), IterationLimitError);
  EXPECT_TRUE(saturate_by_colon(i, 100).is_unit());
}

TEST(Subideal, Examples) {
  EXPECT_TRUE(is_subideal(kX2XY, ideal2({{1, 0}})));
  EXPECT_FALSE(is_subideal(ideal2({{1, 0}}), kX2XY));
  EXPECT_TRUE(is_subideal(MonomialIdeal(2), kX2XY));
}

TEST(Printing, HumanSyntax) {
  EXPECT_EQ(to_string(kX2XY), "(x*y, x^2)");
  EXPECT_EQ(to_string(MonomialIdeal(2)), "(0)");
  EXPECT_EQ(to_string(MonomialIdeal::unit(3)), "(1)");
  EXPECT_EQ(to_string(MonomialIdeal(5, {{0, 0, 0, 0, 2}})), "(x5^2)");
}

TEST(Json, RoundTripIsMinimalAndSorted) {
  const auto j = nlohmann::json::parse(R"({"dim":2,"generators":[[2,0],[1,1],[3,0]]})");
  const auto ideal = j.get<MonomialIdeal>();
  EXPECT_EQ(ideal, kX2XY);
  EXPECT_EQ(nlohmann::json(ideal).dump(), R"({"dim":2,"generators":[[1,1],[2,0]]})");
}

TEST(Json, MalformedInputs) {
  EXPECT_THROW(nlohmann::json::parse(R"({"dim":2})").get<MonomialIdeal>(), ParseError);
  EXPECT_THROW(nlohmann::json::parse(R"({"dim":0,"generators":[]})").get<MonomialIdeal>(),
               ParseError);
  EXPECT_THROW(nlohmann::json::parse(R"({"dim":2,"generators":[[1,"a"]]})").get<MonomialIdeal>(),
               ParseError);
  EXPECT_THROW(nlohmann::json::parse(R"({"dim":2,"generators":[[1,0,0]]})").get<MonomialIdeal>(),
               DimensionMismatch);
}
