#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "tiledim/errors.hpp"
#include "tiledim/order.hpp"
#include "tiledim/properness.hpp"
#include "tiledim/separations.hpp"

using namespace tiledim;
using namespace tiledim::testing;

namespace {

std::vector<Box> interior_forms(const ExtendedTiling& t, const std::vector<Separation>& seps) {
    std::vector<Box> out;
    for (const auto& s : seps) {
        if (!s.on_frame(t)) out.push_back(*s.box_form);
    }
    return out;
}

// Union volume by inclusion-exclusion over the pieces with the separation
// axis dropped and infinities clipped to +-2.
Rational union_volume(const std::vector<Box>& pieces, Axis skip) {
    auto clip = [&](const Box& b) {
        std::vector<Interval> ivs;
        for (Axis i = 0; i < b.ambient(); ++i) {
            if (i == skip) continue;
            Coord lo = b[i].lo().is_finite() ? b[i].lo() : Coord(-2);
            Coord hi = b[i].hi().is_finite() ? b[i].hi() : Coord(2);
            ivs.emplace_back(lo, hi);
        }
        if (ivs.empty()) ivs.emplace_back(Coord(0), Coord(1));
        return Box(std::move(ivs));
    };
    Rational total = 0;
    const std::size_t n = pieces.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::optional<Box> meet;
        int bits = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!(mask >> k & 1)) continue;
            ++bits;
            Box c = clip(pieces[k]);
            meet = meet ? intersect_boxes(*meet, c) : std::optional<Box>(c);
            if (!meet) break;
        }
        if (!meet) continue;
        total += bits % 2 ? meet->volume() : Rational(-meet->volume());
    }
    return total;
}

bool touch_equivalent(const Tiling& a, const Tiling& b) {
    ExtendedTiling ea(a), eb(b);
    for (BoxId x = 0; x < ea.size(); ++x) {
        for (BoxId y = x + 1; y < ea.size(); ++y) {
            auto ma = intersect_boxes(ea[x], ea[y]);
            auto mb = intersect_boxes(eb[x], eb[y]);
            if (ma.has_value() != mb.has_value()) return false;
            if (ma && touch_dimensions(ea[x], ea[y]) != touch_dimensions(eb[x], eb[y])) return false;
        }
    }
    return true;
}

std::size_t coplanar_involved(const Tiling& t) {
    auto seps = compute_separations(ExtendedTiling(t));
    std::set<std::size_t> involved;
    for (auto [a, b] : coplanar_pairs(seps)) involved.insert({a, b});
    return involved.size();
}

}  // namespace

TEST_CASE("separations of the pinwheel") {
    ExtendedTiling pin(fixture("pinwheel"));
    auto seps = compute_separations(pin);
    CHECK(seps.size() == 8);
    auto inner = interior_forms(pin, seps);
    std::vector<Box> expected{box({{"-1/2", "-1/2"}, {"-1/2", "1"}}), box({{"1/2", "1/2"}, {"-1", "1/2"}}),
                              box({{"-1", "1/2"}, {"-1/2", "-1/2"}}), box({{"-1/2", "1"}, {"1/2", "1/2"}})};
    CHECK(inner == expected);
    for (const auto& s : seps) {
        CHECK(s.box_form.has_value());
        for (const auto& side : s.sides) CHECK(side.level() == s.level);
    }
    std::size_t frame_count = 0;
    for (const auto& s : seps) frame_count += s.on_frame(pin);
    CHECK(frame_count == 4);
}

TEST_CASE("separations of a single box are the frame") {
    ExtendedTiling single(fixture("single", 2));
    auto seps = compute_separations(single);
    REQUIRE(seps.size() == 4);
    for (const auto& s : seps) CHECK(s.on_frame(single));
    CHECK(*seps[0].box_form == Box({Interval(Coord(-1), Coord(-1)), Interval(Coord::neg_inf(), Coord::pos_inf())}));
    CHECK(*seps[2].box_form == box({{"-1", "1"}, {"-1", "-1"}}));
}

TEST_CASE("split has a single interior separation") {
    ExtendedTiling split(fixture("split", 2));
    auto inner = interior_forms(split, compute_separations(split));
    CHECK(inner == std::vector<Box>{box({{"0", "0"}, {"-1", "1"}})});
}

TEST_CASE("separation_is_box detects holes and L shapes") {
    auto make = [](std::vector<Box> regions, Axis axis) {
        Separation s{axis, regions.front()[axis].lo(), {}, std::nullopt};
        BoxId owner = 0;
        for (auto& r : regions) s.sides.push_back(Side{owner++, axis, Sign::Plus, std::move(r)});
        return s;
    };
    auto gap = separation_is_box(make({box({{"0", "0"}, {"-1", "0"}}), box({{"0", "0"}, {"1/2", "1"}})}, 0));
    CHECK_FALSE(gap.is_box);
    REQUIRE(gap.hole);
    CHECK(*gap.hole == pt({"0", "1/4"}));

    auto ell = separation_is_box(
        make({box({{"0", "0"}, {"-1", "0"}, {"-1", "1"}}), box({{"0", "0"}, {"0", "1"}, {"-1", "0"}})}, 0));
    CHECK_FALSE(ell.is_box);
    REQUIRE(ell.hole);
    CHECK(*ell.hole == pt({"0", "1/2", "1/2"}));

    auto whole = separation_is_box(
        make({box({{"0", "0"}, {"-1", "0"}, {"-1", "1"}}), box({{"0", "0"}, {"0", "1"}, {"-1", "1"}})}, 0));
    CHECK(whole.is_box);
    CHECK(*whole.box == box({{"0", "0"}, {"-1", "1"}, {"-1", "1"}}));
}

TEST_CASE("coplanar_pairs") {
    CHECK(coplanar_pairs(compute_separations(ExtendedTiling(fixture("pinwheel")))).empty());
    CHECK(coplanar_pairs(compute_separations(ExtendedTiling(fixture("single", 3)))).empty());

    ExtendedTiling rows(fixture("three_row_coplanar"));
    auto seps = compute_separations(rows);
    auto pairs = coplanar_pairs(seps);
    REQUIRE(pairs.size() == 1);
    auto [a, b] = pairs.front();
    CHECK(*seps[a].box_form == box({{"0", "0"}, {"-1", "-1/3"}}));
    CHECK(*seps[b].box_form == box({{"0", "0"}, {"1/3", "1"}}));
}

TEST_CASE("perturbing the three-row fixture") {
    const Tiling rows = fixture("three_row_coplanar");
    auto result = perturb_general_position(rows);
    REQUIRE(result.moves.size() == 1);
    CHECK(result.moves[0].epsilon == r("1/4"));
    CHECK(result.moves[0].min_owner == 0);
    CHECK(result.tiling[0] == box({{"-1", "1/4"}, {"-1", "-1/3"}}));
    CHECK(result.tiling[1] == box({{"1/4", "1"}, {"-1", "-1/3"}}));
    for (BoxId k = 2; k < 5; ++k) CHECK(result.tiling[k] == rows[k]);
    CHECK(result.correspondence == std::vector<BoxId>{0, 1, 2, 3, 4});
    CHECK(in_general_position(result.tiling));
    CHECK(is_proper(result.tiling));
    CHECK(touch_equivalent(rows, result.tiling));
    CHECK(build_complex(rows) == build_complex(result.tiling));
}

TEST_CASE("perturbing a tiling already in general position changes nothing") {
    auto result = perturb_general_position(fixture("pinwheel"));
    CHECK(result.moves.empty());
    CHECK(result.tiling == fixture("pinwheel"));
    CHECK_THROWS_AS(perturb_general_position(fixture("grid2x2")), PreconditionError);
}

TEST_CASE("separation and perturbation properties on random proper tilings") {
    std::size_t perturbed = 0;
    for (std::size_t d = 1; d <= 4; ++d) {
        std::vector<Tiling> suite = random_suite(d, 16, d == 4 ? 10 : 16, 500 + d);
        // Coarse guillotine subdivisions are where coplanar separations live.
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            GenSpec spec;
            spec.d = d;
            spec.target_boxes = (d == 4 ? 8 : 14) + seed;
            spec.seed = 700 + seed;
            spec.coarse = true;
            suite.push_back(random_proper(spec));
        }
        for (const auto& t : suite) {
            ExtendedTiling ext(t);
            auto seps = compute_separations(ext);
            for (const auto& s : seps) {
                auto shape = separation_is_box(s);
                CHECK(shape.is_box);
                if (s.sides.size() <= 8) {
                    const Box hull = *shape.box;
                    CHECK(union_volume(s.pieces(), s.axis) == union_volume({hull}, s.axis));
                }
            }
            for (auto [a, b] : coplanar_pairs(seps)) {
                for (const auto& pa : seps[a].pieces()) {
                    for (const auto& pb : seps[b].pieces()) CHECK_FALSE(intersect_boxes(pa, pb));
                }
            }

            std::size_t involved = coplanar_involved(t);
            Tiling current = t;
            while (auto step = perturb_once(current)) {
                current = step->first;
                std::size_t now = coplanar_involved(current);
                CHECK(now < involved);
                involved = now;
            }
            auto result = perturb_general_position(t);
            perturbed += !result.moves.empty();
            CHECK(result.tiling == current);
            CHECK(result.tiling.size() == t.size());
            CHECK(validate(result.tiling).valid());
            CHECK(is_proper(result.tiling));
            CHECK(in_general_position(result.tiling));
            CHECK(touch_equivalent(t, result.tiling));
            CHECK(build_complex(t) == build_complex(result.tiling));
        }
    }
    CHECK(perturbed >= 5);
}
