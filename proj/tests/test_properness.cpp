#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "tiledim/errors.hpp"
#include "tiledim/properness.hpp"

using namespace tiledim;
using namespace tiledim::testing;

TEST_CASE("max_depth on fixtures") {
    auto grid = max_depth(ExtendedTiling(fixture("grid2x2")));
    CHECK(grid.depth == 4);
    CHECK(grid.point == pt({"0", "0"}));
    CHECK(grid.boxes == std::vector<BoxId>{0, 1, 2, 3});

    ExtendedTiling pin(fixture("pinwheel"));
    CHECK(max_depth(pin).depth == 3);
    CHECK(depth_at(pin, pt({"1/2", "-1/2"})) == 3);

    ExtendedTiling single(fixture("single", 2));
    auto s = max_depth(single);
    CHECK(s.depth == 3);
    CHECK(s.point == pt({"-1", "-1"}));
    CHECK(s.boxes == std::vector<BoxId>{0, single.exterior_id(0, Sign::Minus), single.exterior_id(1, Sign::Minus)});

    // Interior depth 4, five boxes once the exterior is counted.
    ExtendedTiling fig(fixture("fig1_left_like"));
    auto f = max_depth(fig);
    CHECK(f.depth == 5);
    CHECK(depth_at(fig, pt({"0", "0", "-1"})) == 5);
    CHECK(depth_at(fig, pt({"0", "0", "1"})) == 5);
    std::size_t interior_max = 0;
    for (const char* z : {"-1", "-1/2", "0", "1/2", "1"}) {
        std::size_t n = 0;
        for (BoxId k = 0; k < fig.interior_count(); ++k) n += fig[k].contains(pt({"0", "0", z}));
        interior_max = std::max(interior_max, n);
    }
    CHECK(interior_max == 4);
}

TEST_CASE("check_pairwise") {
    ExtendedTiling grid(fixture("grid2x2"));
    auto g = check_pairwise(grid);
    REQUIRE_FALSE(g.proper);
    const auto& w = std::get<PairWitness>(*g.witness);
    CHECK(grid[w.a] == box({{"-1", "0"}, {"-1", "0"}}));
    CHECK(grid[w.b] == box({{"0", "1"}, {"0", "1"}}));
    CHECK(w.intersection.dimension() == 0);

    CHECK(check_pairwise(ExtendedTiling(fixture("pinwheel"))).proper);
    CHECK(check_pairwise(ExtendedTiling(fixture("three_row_coplanar"))).proper);
}

TEST_CASE("check_families") {
    ExtendedTiling pin(fixture("pinwheel"));
    auto meet = intersect_boxes(*intersect_boxes(pin[0], pin[1]), pin[4]);
    REQUIRE(meet);
    CHECK(*meet == box({{"1/2", "1/2"}, {"-1/2", "-1/2"}}));
    CHECK(meet->dimension() == 2 + 1 - 3);
    CHECK(check_families(pin).proper);

    ExtendedTiling grid(fixture("grid2x2"));
    auto g = check_families(grid);
    REQUIRE_FALSE(g.proper);
    const auto& w = std::get<FamilyWitness>(*g.witness);
    CHECK(w.boxes == std::vector<BoxId>{0, 1, 2, 3});
    CHECK(w.intersection == box({{"0", "0"}, {"0", "0"}}));
}

TEST_CASE("touch_witness") {
    ExtendedTiling pin(fixture("pinwheel"));
    CHECK(touch_witness(pin, 0, pt({"1/2", "-3/4"}), 0) == 1);
    CHECK(touch_witness(pin, 4, pt({"0", "-1/2"}), 1) == 0);

    ExtendedTiling single(fixture("single", 2));
    CHECK(touch_witness(single, 0, pt({"-1", "0"}), 0) == single.exterior_id(0, Sign::Minus));

    CHECK_THROWS_AS(touch_witness(pin, 0, pt({"0", "-3/4"}), 0), PreconditionError);
    CHECK_THROWS_AS(touch_witness(pin, 0, pt({"1", "1"}), 0), PreconditionError);

    // A hole where the witness should be.
    ExtendedTiling broken(Tiling(2, {box({{"-1", "0"}, {"-1", "1"}})}));
    CHECK_THROWS_AS(touch_witness(broken, 0, pt({"0", "0"}), 0), IntegrityError);
}

TEST_CASE("touch_witness holds at every side point of random tilings") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (const auto& t : random_suite(d, 6, 8, 70 + d)) {
            ExtendedTiling ext(t);
            for (BoxId a = 0; a < t.size(); ++a) {
                for (const auto& corner : corners_of(t[a])) {
                    for (Axis i = 0; i < d; ++i) {
                        BoxId b = touch_witness(ext, a, corner, i);
                        CHECK(b != a);
                        CHECK(ext[b].contains(corner));
                        CHECK(touch_dimensions(t[a], ext[b]) == std::vector<Axis>{i});
                    }
                }
            }
        }
    }
}

namespace {

std::vector<Tiling> mixed_suite() {
    std::vector<Tiling> all;
    for (const auto& name : fixture_names()) all.push_back(fixture(name));
    for (std::size_t d = 1; d <= 4; ++d) {
        for (auto& t : random_suite(d, 12, d == 4 ? 8 : 14, 300 + d)) all.push_back(std::move(t));
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            GenSpec spec;
            spec.d = d;
            spec.target_boxes = 3 + seed % 8;
            spec.seed = 900 + seed;
            spec.coarse = true;
            spec.pinwheel_rate = 0.2;
            all.push_back(random_subdivision(spec));
        }
    }
    return all;
}

}  // namespace

TEST_CASE("the three characterizations agree, with witnesses that re-check") {
    std::size_t improper = 0;
    for (const auto& t : mixed_suite()) {
        REQUIRE(validate(t).valid());
        ExtendedTiling ext(t);
        auto depth = check_depth(ext);
        auto pair = check_pairwise(ext);
        auto fam = check_families(ext);
        CHECK(depth.proper == pair.proper);
        CHECK(pair.proper == fam.proper);
        CHECK(max_depth(ext).depth == brute_max_depth(ext));
        for (const auto* rep : {&depth, &pair, &fam}) {
            CHECK(rep->proper == !rep->witness.has_value());
            if (rep->witness) CHECK(witness_holds(ext, *rep->witness));
        }
        if (!pair.proper) {
            ++improper;
            // A pair touching in two or more axes forces a point of depth d+2.
            const auto& w = std::get<PairWitness>(*pair.witness);
            CHECK(touch_dimensions(ext[w.a], ext[w.b]).size() >= 2);
            CHECK(max_depth(ext).depth >= t.d() + 2);
        } else {
            CHECK(max_depth(ext).depth <= t.d() + 1);
        }
    }
    CHECK(improper >= 5);
}

TEST_CASE("witness_holds rejects bogus witnesses") {
    ExtendedTiling pin(fixture("pinwheel"));
    CHECK_FALSE(witness_holds(pin, DepthWitness{pt({"0", "0"}), {4}}));
    CHECK_FALSE(witness_holds(pin, PairWitness{0, 4, *intersect_boxes(pin[0], pin[4])}));
    CHECK_FALSE(witness_holds(pin, FamilyWitness{{0, 1, 4}, *intersect_boxes(*intersect_boxes(pin[0], pin[1]), pin[4])}));
    CHECK_FALSE(witness_holds(pin, FamilyWitness{{0, 2}, pin[0]}));
}
