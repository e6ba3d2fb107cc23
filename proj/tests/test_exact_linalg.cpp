#include "doctest.h"

#include "gstruct/exact_linalg.hpp"

using namespace gstruct;

namespace {

RatMatrix m(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return RatMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions in lowest terms") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational(" 3/9 ") == Rational(1, 3));
    CHECK(to_string(parse_rational("-11/2")) == "-11/2");
    CHECK(to_string(parse_rational("10/5")) == "2");
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("rref finds pivots and rank") {
    auto r = rref(m({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == m({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
}

TEST_CASE("kernel basis sets each free column to one") {
    auto k = kernel_basis(m({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVector{-1, -1, 1});

    auto k2 = kernel_basis(m({{0, 1, 0, 2}}));
    REQUIRE(k2.size() == 3);
    CHECK(k2[0] == RatVector{1, 0, 0, 0});
    CHECK(k2[1] == RatVector{0, 0, 1, 0});
    CHECK(k2[2] == RatVector{0, -2, 0, 1});
}

TEST_CASE("solve returns a solution or nothing") {
    auto a = m({{1, 1}, {1, -1}});
    auto x = solve(a, RatVector{3, 1});
    REQUIRE(x);
    CHECK(*x == RatVector{2, 1});
    CHECK_FALSE(solve(m({{1, 1}, {2, 2}}), RatVector{1, 3}));
}

TEST_CASE("inverse of invertible and singular matrices") {
    auto a = m({{2, 1}, {1, 1}});
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == RatMatrix::identity(2));
    CHECK_FALSE(inverse(m({{1, 2}, {2, 4}})));
    CHECK(inverse(RatMatrix(0, 0)));
}

TEST_CASE("commutator of matrix units") {
    auto e12 = RatMatrix::unit(2, 0, 1);
    auto e21 = RatMatrix::unit(2, 1, 0);
    CHECK(commutator(e12, e21) == m({{1, 0}, {0, -1}}));
    CHECK(commutator(e12, e12).is_zero());
}

TEST_CASE("coordinate map recovers coordinates and rejects vectors outside the span") {
    CoordinateMap cm({RatVector{1, 0, 1}, RatVector{0, 1, 1}}, 3);
    auto c = cm.coordinates(RatVector{2, 3, 5});
    REQUIRE(c);
    CHECK(*c == RatVector{2, 3});
    CHECK_FALSE(cm.coordinates(RatVector{1, 0, 0}));
    CHECK_THROWS_AS(CoordinateMap({RatVector{1, 2}, RatVector{2, 4}}, 2), std::invalid_argument);
}

TEST_CASE("transpose, rows and columns") {
    auto a = m({{1, 2, 3}, {4, 5, 6}});
    CHECK(a.transpose() == m({{1, 4}, {2, 5}, {3, 6}}));
    CHECK(a.row(1) == RatVector{4, 5, 6});
    CHECK(a.column(2) == RatVector{3, 6});
    CHECK(from_columns({RatVector{1, 4}, RatVector{2, 5}, RatVector{3, 6}}, 2) == a);
}
