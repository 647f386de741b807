#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tiledim/errors.hpp"
#include "tiledim/tiling.hpp"

using namespace tiledim;
using namespace tiledim::testing;

TEST_CASE("rational literals parse to canonical form") {
    CHECK(format_rational(parse_rational("2/4")) == "1/2");
    CHECK(format_rational(parse_rational("-6/3")) == "-2");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    CHECK(format_rational(parse_rational("7")) == "7");
    for (const char* bad : {"", "1/0", "1/-2", "+1", "1.5", "a/b", "1/", "/2", "--1", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), InputError);
    }
}

TEST_CASE("coordinates order the infinities around every rational") {
    CHECK(Coord::neg_inf() < Coord(r("-1000000000/3")));
    CHECK(Coord(r("1000000000")) < Coord::pos_inf());
    CHECK(Coord::neg_inf() == Coord::neg_inf());
    CHECK(Coord(r("1/3")) != Coord(r("333333333/1000000000")));
    CHECK(Coord(r("2/6")) == Coord(r("1/3")));
}

TEST_CASE("intersect_boxes") {
    SUBCASE("shared face") {
        auto m = intersect_boxes(box({{"0", "2"}, {"0", "1"}}), box({{"2", "3"}, {"0", "1"}}));
        REQUIRE(m);
        CHECK(*m == box({{"2", "2"}, {"0", "1"}}));
    }
    SUBCASE("shared corner") {
        auto m = intersect_boxes(box({{"-1", "0"}, {"-1", "0"}}), box({{"0", "1"}, {"0", "1"}}));
        REQUIRE(m);
        CHECK(*m == box({{"0", "0"}, {"0", "0"}}));
    }
    SUBCASE("disjoint") {
        CHECK_FALSE(intersect_boxes(box({{"-1", "0"}, {"-1", "1"}}), box({{"1/2", "1"}, {"-1", "1"}})));
    }
    SUBCASE("mismatched ambient dimension") {
        CHECK_THROWS_AS(intersect_boxes(box({{"0", "1"}}), box({{"0", "1"}, {"0", "1"}})), UsageError);
    }
}

TEST_CASE("box_dimension") {
    CHECK(box_dimension(box({{"-1", "1"}, {"0", "0"}})) == 1);
    CHECK(box_dimension(box({{"0", "0"}, {"0", "0"}, {"0", "0"}})) == 0);
    CHECK(box_dimension(box({{"-1", "1"}, {"-1", "1"}, {"-1", "1"}})) == 3);
}

TEST_CASE("touch_dimensions") {
    using V = std::vector<Axis>;
    CHECK(touch_dimensions(box({{"-1", "0"}, {"-1", "1"}}), box({{"0", "1"}, {"-1", "1"}})) == V{0});
    CHECK(touch_dimensions(box({{"-1", "0"}, {"-1", "0"}}), box({{"0", "1"}, {"0", "1"}})) == V{0, 1});
    // B1 and B5 of the pinwheel.
    CHECK(touch_dimensions(box({{"-1", "1/2"}, {"-1", "-1/2"}}), box({{"-1/2", "1/2"}, {"-1/2", "1/2"}})) == V{1});
    CHECK_THROWS_AS(touch_dimensions(box({{"-1", "0"}}), box({{"1/2", "1"}})), PreconditionError);
}

TEST_CASE("sides_of") {
    auto sq = sides_of(box({{"-1", "1"}, {"-1", "1"}}));
    REQUIRE(sq.size() == 4);
    CHECK(sq[0].region == box({{"-1", "-1"}, {"-1", "1"}}));
    CHECK(sq[0].axis == 0);
    CHECK(sq[0].sign == Sign::Minus);

    auto seg = sides_of(box({{"-1", "1"}, {"0", "0"}}));
    REQUIRE(seg.size() == 2);
    CHECK(seg[0].region == box({{"-1", "-1"}, {"0", "0"}}));
    CHECK(seg[1].region == box({{"1", "1"}, {"0", "0"}}));

    const Box t1minus = make_exterior(2)[0];
    auto ext = sides_of(t1minus);
    REQUIRE(ext.size() == 4);
    const Box expected({Interval(Coord(-1), Coord(-1)), Interval(Coord::neg_inf(), Coord::pos_inf())});
    CHECK(std::any_of(ext.begin(), ext.end(), [&](const Side& s) { return s.region == expected; }));

    CHECK_THROWS_AS(sides_of(box({{"0", "0"}, {"1", "1"}})), PreconditionError);
}

TEST_CASE("corners_of") {
    auto c = corners_of(box({{"0", "1"}, {"0", "1"}}));
    std::vector<Point> expected{pt({"0", "0"}), pt({"0", "1"}), pt({"1", "0"}), pt({"1", "1"})};
    std::sort(c.begin(), c.end());
    CHECK(c == expected);
    CHECK(corners_of(box({{"0", "0"}, {"2", "3"}})) == std::vector<Point>{pt({"0", "2"}), pt({"0", "3"})});
    CHECK(corners_of(frame(3)).size() == 8);
    CHECK_THROWS_AS(corners_of(make_exterior(1)[0]), PreconditionError);
}

namespace {

Box random_box(std::mt19937_64& rng, std::size_t d) {
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < d; ++i) {
        long a = static_cast<long>(rng() % 9) - 4, b = static_cast<long>(rng() % 9) - 4;
        if (rng() % 5 == 0) b = a;
        ivs.emplace_back(Coord(Rational(std::min(a, b), 4)), Coord(Rational(std::max(a, b), 4)));
    }
    return Box(std::move(ivs));
}

}  // namespace

TEST_CASE("intersection properties on random boxes") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t d = 1 + rng() % 4;
        Box a = random_box(rng, d), b = random_box(rng, d);
        CHECK(intersect_boxes(a, a) == std::optional<Box>(a));
        auto ab = intersect_boxes(a, b), ba = intersect_boxes(b, a);
        CHECK(ab == ba);
        if (!ab) continue;
        // Touch axes are exactly the degenerate axes of the intersection.
        CHECK(ab->dimension() == d - touch_dimensions(a, b).size());
        if (a.dimension() >= 1) {
            for (const auto& s : sides_of(a)) CHECK(s.region.dimension() == a.dimension() - 1);
        }
    }
}
