#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tiledim/tiling.hpp"

namespace tiledim {

// An equivalence class of sides of T u T_ext under the transitive closure
// of "the two sides meet in a (d-1)-dimensional box". All members lie in
// the hyperplane {p_axis = level}.
struct Separation {
    Axis axis;
    Coord level;
    std::vector<Side> sides;
    // Set when the union of the side regions is itself a single box.
    std::optional<Box> box_form;

    std::vector<Box> pieces() const;
    BoxId min_owner() const;
    // True when an exterior box contributes a side, i.e. the separation lies
    // on the frame of [-1,+1]^d.
    bool on_frame(const ExtendedTiling& t) const;
};

// One separation per class, sorted by (axis, level, smallest owner id).
// Sides at infinite levels are not part of R^d and are ignored. Without
// with_shapes, box_form is left empty.
std::vector<Separation> compute_separations(const ExtendedTiling& t, bool with_shapes = true);

struct SeparationShape {
    bool is_box = false;
    std::optional<Box> box;    // the union, when it is a box
    std::optional<Point> hole; // a point of the bounding box outside the union
};

// Decides whether the union of the side regions is one box by cutting the
// bounding box into the cells of the piece coordinates and checking that
// every cell is covered. Exact, and works with infinite extents.
SeparationShape separation_is_box(const Separation& s);

// Index pairs (a, b), a < b, of separations lying in the same hyperplane.
std::vector<std::pair<std::size_t, std::size_t>> coplanar_pairs(const std::vector<Separation>& seps);

// Moves every interior side of `sep` to the hyperplane {p_axis = level}:
// boxes whose upper side is in sep get that endpoint, likewise lower sides.
// Exterior sides are left alone.
Tiling translate_separation(const Tiling& t, const Separation& sep, const Rational& level);

// A quarter of the smallest gap between distinct endpoint values of t on
// `axis`. Moving a hyperplane by this much never reaches another endpoint.
Rational axis_epsilon(const Tiling& t, Axis axis);

struct SeparationMove {
    Axis axis;
    Rational from;
    Rational epsilon;
    BoxId min_owner;
};

struct PerturbationResult {
    Tiling tiling;
    // correspondence[k] is the id of the source box for result box k.
    std::vector<BoxId> correspondence;
    std::vector<SeparationMove> moves;
};

// One step of the general-position procedure: translates the first
// interior separation (in separation order) that is coplanar with another
// by a quarter of the smallest gap between endpoint values on its axis.
// Empty when t is already in general position.
std::optional<std::pair<Tiling, SeparationMove>> perturb_once(const Tiling& t);

// Repeats perturb_once until no two separations are coplanar. Requires a
// proper tiling; the result is proper and touches exactly like t does.
PerturbationResult perturb_general_position(const Tiling& t);

bool in_general_position(const Tiling& t);

}  // namespace tiledim
