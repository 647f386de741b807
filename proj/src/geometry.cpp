#include "tiledim/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "tiledim/errors.hpp"

namespace tiledim {

Interval::Interval(Coord lo, Coord hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) {
        throw UsageError("interval [" + lo_.to_string() + "," + hi_.to_string() + "] has lo > hi");
    }
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
    const Coord& lo = std::max(lo_, other.lo_);
    const Coord& hi = std::min(hi_, other.hi_);
    if (hi < lo) return std::nullopt;
    return Interval(lo, hi);
}

std::string Interval::to_string() const { return "[" + lo_.to_string() + "," + hi_.to_string() + "]"; }

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    if (intervals_.empty()) throw UsageError("a box needs at least one interval");
}

std::size_t Box::dimension() const {
    return static_cast<std::size_t>(
        std::count_if(intervals_.begin(), intervals_.end(), [](const Interval& iv) { return !iv.degenerate(); }));
}

bool Box::is_finite() const {
    return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval& iv) { return iv.is_finite(); });
}

bool Box::contains(const Point& p) const {
    if (p.size() != ambient()) throw UsageError("point and box have different ambient dimensions");
    for (Axis i = 0; i < ambient(); ++i) {
        if (!intervals_[i].contains(Coord(p[i]))) return false;
    }
    return true;
}

bool Box::contains(const Box& other) const {
    if (other.ambient() != ambient()) throw UsageError("boxes have different ambient dimensions");
    for (Axis i = 0; i < ambient(); ++i) {
        if (other[i].lo() < intervals_[i].lo() || intervals_[i].hi() < other[i].hi()) return false;
    }
    return true;
}

Rational Box::volume() const {
    Rational v = 1;
    for (const auto& iv : intervals_) v *= iv.hi().value() - iv.lo().value();
    return v;
}

Box Box::with(Axis i, Interval iv) const {
    auto copy = intervals_;
    copy.at(i) = std::move(iv);
    return Box(std::move(copy));
}

Box Box::without(Axis i) const {
    auto copy = intervals_;
    copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(i));
    return Box(std::move(copy));
}

std::string Box::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) out += "x";
        out += intervals_[i].to_string();
    }
    return out;
}

std::optional<Box> intersect_boxes(const Box& a, const Box& b) {
    if (a.ambient() != b.ambient()) {
        throw UsageError("cannot intersect a " + std::to_string(a.ambient()) + "-box with a " +
                         std::to_string(b.ambient()) + "-box");
    }
    std::vector<Interval> out;
    out.reserve(a.ambient());
    for (Axis i = 0; i < a.ambient(); ++i) {
        auto iv = a[i].intersect(b[i]);
        if (!iv) return std::nullopt;
        out.push_back(std::move(*iv));
    }
    return Box(std::move(out));
}

std::vector<Axis> touch_dimensions(const Box& a, const Box& b) {
    auto meet = intersect_boxes(a, b);
    if (!meet) throw PreconditionError("touch_dimensions: boxes do not intersect");
    std::vector<Axis> axes;
    for (Axis i = 0; i < meet->ambient(); ++i) {
        if ((*meet)[i].degenerate()) axes.push_back(i);
    }
    return axes;
}

std::vector<Side> sides_of(const Box& b, BoxId owner) {
    if (b.dimension() == 0) throw PreconditionError("a 0-dimensional box has no sides");
    std::vector<Side> sides;
    sides.reserve(2 * b.dimension());
    for (Axis i = 0; i < b.ambient(); ++i) {
        if (b[i].degenerate()) continue;
        for (Sign s : {Sign::Minus, Sign::Plus}) {
            const Coord& x = b[i].end(s);
            sides.push_back(Side{owner, i, s, b.with(i, Interval(x, x))});
        }
    }
    return sides;
}

std::vector<Point> corners_of(const Box& b) {
    if (!b.is_finite()) throw PreconditionError("corners_of: box has an infinite endpoint");
    std::vector<Point> corners{Point{}};
    for (Axis i = 0; i < b.ambient(); ++i) {
        std::vector<Point> next;
        for (const auto& partial : corners) {
            auto p = partial;
            p.push_back(b[i].lo().value());
            next.push_back(p);
            if (!b[i].degenerate()) {
                p.back() = b[i].hi().value();
                next.push_back(std::move(p));
            }
        }
        corners = std::move(next);
    }
    return corners;
}

Box bounding_box(const std::vector<Box>& boxes) {
    if (boxes.empty()) throw UsageError("bounding_box of nothing");
    std::vector<Interval> out = boxes.front().intervals();
    for (const auto& b : boxes) {
        if (b.ambient() != out.size()) throw UsageError("bounding_box: mixed ambient dimensions");
        for (Axis i = 0; i < out.size(); ++i) {
            out[i] = Interval(std::min(out[i].lo(), b[i].lo()), std::max(out[i].hi(), b[i].hi()));
        }
    }
    return Box(std::move(out));
}

std::string point_to_string(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << format_rational(p[i]);
    os << ")";
    return os.str();
}

}  // namespace tiledim
