#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tiledim/coord.hpp"

namespace tiledim {

// Boxes are referred to by dense indices. Within an extended tiling the
// tiling's own boxes come first, followed by the 2d exterior boxes.
using BoxId = std::size_t;

// Axes are 0-based in code and 1-based in every message and file.
using Axis = std::size_t;

using Point = std::vector<Rational>;

enum class Sign { Minus, Plus };

inline char sign_char(Sign s) { return s == Sign::Minus ? '-' : '+'; }

// Closed interval [lo, hi] with lo <= hi.
class Interval {
public:
    Interval(Coord lo, Coord hi);

    const Coord& lo() const { return lo_; }
    const Coord& hi() const { return hi_; }
    const Coord& end(Sign s) const { return s == Sign::Minus ? lo_ : hi_; }

    bool degenerate() const { return lo_ == hi_; }
    bool contains(const Coord& x) const { return lo_ <= x && x <= hi_; }
    bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }

    // Empty result when the intervals are disjoint.
    std::optional<Interval> intersect(const Interval& other) const;

    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Coord lo_;
    Coord hi_;
};

// Cartesian product of d closed intervals.
class Box {
public:
    explicit Box(std::vector<Interval> intervals);

    std::size_t ambient() const { return intervals_.size(); }
    const Interval& operator[](Axis i) const { return intervals_[i]; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    // Number of non-degenerate intervals.
    std::size_t dimension() const;

    bool is_finite() const;
    bool contains(const Point& p) const;
    bool contains(const Box& other) const;

    // Exact volume of a finite box. Degenerate boxes have volume 0.
    Rational volume() const;

    // Copy with one interval replaced.
    Box with(Axis i, Interval iv) const;
    // Copy with axis i removed (ambient dimension d-1).
    Box without(Axis i) const;

    std::string to_string() const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> intervals_;
};

// The facet S(B, axis, sign) of a box.
struct Side {
    BoxId owner;
    Axis axis;
    Sign sign;
    Box region;

    const Coord& level() const { return region[axis].lo(); }
};

// Componentwise intersection; empty when some component is empty.
// Throws UsageError on mismatched ambient dimensions.
std::optional<Box> intersect_boxes(const Box& a, const Box& b);

inline std::size_t box_dimension(const Box& b) { return b.dimension(); }

// Axes on which two intersecting boxes meet in a single value. Throws
// PreconditionError when the boxes do not intersect.
std::vector<Axis> touch_dimensions(const Box& a, const Box& b);

// The 2*dim(b) sides in axis-major order (axis 0 minus, axis 0 plus, ...).
// Throws PreconditionError for 0-dimensional boxes.
std::vector<Side> sides_of(const Box& b, BoxId owner = 0);

// The 2^dim(b) corners. Throws PreconditionError on infinite endpoints.
std::vector<Point> corners_of(const Box& b);

// Smallest box containing every input box. Inputs must be non-empty and
// share an ambient dimension.
Box bounding_box(const std::vector<Box>& boxes);

std::string point_to_string(const Point& p);

}  // namespace tiledim
