#include "tiledim/tiling.hpp"

#include <algorithm>

#include "tiledim/errors.hpp"

namespace tiledim {

Tiling::Tiling(std::size_t d, std::vector<Box> boxes) : d_(d), boxes_(std::move(boxes)) {
    if (d_ < 1) throw UsageError("tiling dimension must be at least 1");
    for (std::size_t k = 0; k < boxes_.size(); ++k) {
        if (boxes_[k].ambient() != d_) {
            throw UsageError("box " + std::to_string(k + 1) + " has " + std::to_string(boxes_[k].ambient()) +
                             " intervals, expected " + std::to_string(d_));
        }
    }
}

Box frame(std::size_t d) { return Box(std::vector<Interval>(d, Interval(Coord(-1), Coord(1)))); }

std::vector<Box> make_exterior(std::size_t d) {
    if (d < 1) throw UsageError("exterior boxes need d >= 1");
    std::vector<Box> out;
    out.reserve(2 * d);
    for (Axis i = 0; i < d; ++i) {
        for (Sign s : {Sign::Minus, Sign::Plus}) {
            std::vector<Interval> ivs;
            for (Axis j = 0; j < d; ++j) {
                if (j < i) {
                    ivs.emplace_back(Coord(-1), Coord(1));
                } else if (j == i) {
                    ivs.push_back(s == Sign::Minus ? Interval(Coord::neg_inf(), Coord(-1))
                                                   : Interval(Coord(1), Coord::pos_inf()));
                } else {
                    ivs.emplace_back(Coord::neg_inf(), Coord::pos_inf());
                }
            }
            out.emplace_back(std::move(ivs));
        }
    }
    return out;
}

ExtendedTiling::ExtendedTiling(Tiling base) : base_(std::move(base)), exterior_(make_exterior(base_.d())) {}

const Box& ExtendedTiling::operator[](BoxId id) const {
    return id < base_.size() ? base_[id] : exterior_.at(id - base_.size());
}

std::string ExtendedTiling::label(BoxId id) const {
    if (id < base_.size()) return "B" + std::to_string(id + 1);
    std::size_t k = id - base_.size();
    return "T(" + std::to_string(k / 2 + 1) + "," + (k % 2 ? "+" : "-") + ")";
}

ValidationReport validate(const Tiling& t) {
    ValidationReport report;
    const Box unit = frame(t.d());
    auto label = [](BoxId k) { return "box " + std::to_string(k + 1); };

    for (BoxId k = 0; k < t.size(); ++k) {
        const Box& b = t[k];
        if (!b.is_finite() || !unit.contains(b)) {
            report.violations.push_back(
                {Violation::Kind::OutsideFrame, {k}, std::nullopt, label(k) + " " + b.to_string() + " leaves [-1,+1]^d"});
        }
        if (b.dimension() != t.d()) {
            report.violations.push_back({Violation::Kind::Degenerate, {k}, std::nullopt,
                                         label(k) + " has dimension " + std::to_string(b.dimension())});
        }
    }

    for (BoxId a = 0; a < t.size(); ++a) {
        for (BoxId b = a + 1; b < t.size(); ++b) {
            auto meet = intersect_boxes(t[a], t[b]);
            if (meet && meet->dimension() == t.d()) {
                report.violations.push_back({Violation::Kind::Overlap, {a, b}, meet,
                                             label(a) + " and " + label(b) + " overlap in " + meet->to_string()});
            }
        }
    }

    bool all_finite = std::all_of(t.boxes().begin(), t.boxes().end(), [](const Box& b) { return b.is_finite(); });
    if (all_finite) {
        Rational total = 0;
        for (const auto& b : t.boxes()) total += b.volume();
        Rational expected = Rational(1) << static_cast<mp_bitcnt_t>(t.d());
        if (total != expected) {
            report.violations.push_back({Violation::Kind::VolumeMismatch, {}, std::nullopt,
                                         "total volume " + format_rational(total) + " differs from " +
                                             format_rational(expected)});
        }
    }
    return report;
}

void require_valid(const Tiling& t) {
    auto report = validate(t);
    if (!report.valid()) throw PreconditionError("invalid tiling: " + report.violations.front().message);
}

namespace {

void require_axis(const Tiling& t, Axis axis) {
    if (axis >= t.d()) {
        throw UsageError("axis " + std::to_string(axis + 1) + " out of range 1.." + std::to_string(t.d()));
    }
}

void require_generic(const Tiling& t, Axis axis, const Rational& x) {
    if (!is_generic(t, axis, x)) {
        throw PreconditionError("hyperplane x" + std::to_string(axis + 1) + " = " + format_rational(x) +
                                " is not generic");
    }
}

}  // namespace

bool is_generic(const Tiling& t, Axis axis, const Rational& x) {
    require_axis(t, axis);
    const Coord c(x);
    return std::none_of(t.boxes().begin(), t.boxes().end(),
                        [&](const Box& b) { return b[axis].lo() == c || b[axis].hi() == c; });
}

DerivedTiling slice(const Tiling& t, Axis axis, const Rational& x) {
    if (t.d() < 2) throw UsageError("cannot slice a 1-tiling");
    require_generic(t, axis, x);
    const Coord c(x);
    std::vector<Box> boxes;
    std::vector<BoxId> origin;
    for (BoxId k = 0; k < t.size(); ++k) {
        if (t[k][axis].contains(c)) {
            boxes.push_back(t[k].without(axis));
            origin.push_back(k);
        }
    }
    return {Tiling(t.d() - 1, std::move(boxes)), std::move(origin)};
}

DerivedTiling cut(const Tiling& t, Axis axis, const Rational& x, Sign sign) {
    require_generic(t, axis, x);
    const Coord c(x);
    std::vector<Box> boxes;
    std::vector<BoxId> origin;
    for (BoxId k = 0; k < t.size(); ++k) {
        const Interval& iv = t[k][axis];
        std::optional<Interval> image;
        if (sign == Sign::Minus) {
            if (c <= iv.lo()) {
                image = std::nullopt;
            } else if (iv.hi() < c) {
                image = iv;
            } else {
                image = Interval(iv.lo(), Coord(1));
            }
        } else {
            if (iv.hi() <= c) {
                image = std::nullopt;
            } else if (c < iv.lo()) {
                image = iv;
            } else {
                image = Interval(Coord(-1), iv.hi());
            }
        }
        if (image) {
            boxes.push_back(t[k].with(axis, *image));
            origin.push_back(k);
        }
    }
    return {Tiling(t.d(), std::move(boxes)), std::move(origin)};
}

std::vector<std::vector<Coord>> coordinate_set(const ExtendedTiling& t) {
    std::vector<std::vector<Coord>> out(t.d());
    for (BoxId id = 0; id < t.size(); ++id) {
        for (Axis i = 0; i < t.d(); ++i) {
            out[i].push_back(t[id][i].lo());
            out[i].push_back(t[id][i].hi());
        }
    }
    for (auto& axis : out) {
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }
    return out;
}

}  // namespace tiledim
