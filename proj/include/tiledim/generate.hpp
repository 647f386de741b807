#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiledim/tiling.hpp"

namespace tiledim {

// Named deterministic tilings:
//   single     [-1,1]^d
//   split      [-1,0]x[-1,1]^(d-1) and [0,1]x[-1,1]^(d-1)
//   grid2x2    the four quadrants of [-1,1]^2 (improper)
//   pinwheel   five boxes around [-1/2,1/2]^2, proper and not guillotine
//   three_row_coplanar
//              five boxes in three rows with two coplanar separations at x=0
//   fig1_left_like
//              the 2x2 grid extruded along a third axis: at most 4 boxes of T
//              share a point, but (0,0,+-1) lie in 5 boxes of T u T_ext
// `d` is only used by single and split.
Tiling fixture(const std::string& name, std::size_t d = 2);

// Fixture names accepted by fixture(), with d baked in for single/split
// (e.g. "single3").
std::vector<std::string> fixture_names();

struct GenSpec {
    std::size_t d = 2;
    std::size_t target_boxes = 10;
    std::uint64_t seed = 0;
    std::size_t max_retries = 20;
    // Probability of replacing a box by a five-box pinwheel instead of a
    // guillotine cut (d >= 2 only).
    double pinwheel_rate = 0.0;
    // Draw cut coordinates from a coarse grid (multiples of 1/8) and allow
    // reuse. Produces coplanar separations and, before repair, improper
    // tilings.
    bool coarse = false;
};

// Raw random subdivision without any properness repair. With coarse
// coordinates the result may be improper; it always validates.
Tiling random_subdivision(const GenSpec& spec);

// A proper tiling with at most target_boxes boxes (at least half of that
// unless coarse, where the grid may run out of cut positions).
// Improper subdivisions are repaired by translating separations off the
// offending hyperplanes; throws GenerationError after max_retries
// unsuccessful attempts.
Tiling random_proper(const GenSpec& spec);

}  // namespace tiledim
