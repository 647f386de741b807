#include "tiledim/separations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tiledim/errors.hpp"
#include "tiledim/properness.hpp"

namespace tiledim {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// A value strictly inside a non-degenerate interval.
Rational inner_value(const Interval& iv) {
    if (iv.lo().is_finite() && iv.hi().is_finite()) return (iv.lo().value() + iv.hi().value()) / 2;
    if (iv.hi().is_finite()) return iv.hi().value() - 1;
    if (iv.lo().is_finite()) return iv.lo().value() + 1;
    return 0;
}

}  // namespace

std::vector<Box> Separation::pieces() const {
    std::vector<Box> out;
    out.reserve(sides.size());
    for (const auto& s : sides) out.push_back(s.region);
    return out;
}

BoxId Separation::min_owner() const {
    BoxId m = sides.front().owner;
    for (const auto& s : sides) m = std::min(m, s.owner);
    return m;
}

bool Separation::on_frame(const ExtendedTiling& t) const {
    return std::any_of(sides.begin(), sides.end(), [&](const Side& s) { return t.is_exterior(s.owner); });
}

std::vector<Separation> compute_separations(const ExtendedTiling& t, bool with_shapes) {
    const std::size_t d = t.d();
    std::vector<Side> sides;
    for (BoxId id = 0; id < t.size(); ++id) {
        for (auto& s : sides_of(t[id], id)) {
            if (s.level().is_finite()) sides.push_back(std::move(s));
        }
    }

    // Only sides in the same hyperplane can share a (d-1)-dimensional piece.
    std::map<std::pair<Axis, Coord>, std::vector<std::size_t>> planes;
    for (std::size_t k = 0; k < sides.size(); ++k) planes[{sides[k].axis, sides[k].level()}].push_back(k);

    DisjointSets classes(sides.size());
    for (const auto& [plane, members] : planes) {
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                auto meet = intersect_boxes(sides[members[x]].region, sides[members[y]].region);
                if (meet && meet->dimension() + 1 == d) classes.unite(members[x], members[y]);
            }
        }
    }

    std::map<std::size_t, Separation> by_root;
    for (std::size_t k = 0; k < sides.size(); ++k) {
        auto root = classes.find(k);
        auto it = by_root.find(root);
        if (it == by_root.end()) {
            it = by_root.emplace(root, Separation{sides[k].axis, sides[k].level(), {}, std::nullopt}).first;
        }
        it->second.sides.push_back(sides[k]);
    }

    std::vector<Separation> out;
    out.reserve(by_root.size());
    for (auto& [root, sep] : by_root) {
        if (with_shapes) sep.box_form = separation_is_box(sep).box;
        out.push_back(std::move(sep));
    }
    std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
        if (a.axis != b.axis) return a.axis < b.axis;
        if (a.level != b.level) return a.level < b.level;
        return a.min_owner() < b.min_owner();
    });
    return out;
}

SeparationShape separation_is_box(const Separation& s) {
    if (s.sides.empty()) return {};
    const auto pieces = s.pieces();
    const Box hull = bounding_box(pieces);
    const std::size_t d = hull.ambient();

    // Elementary cells of the grid spanned by the piece endpoints. Each
    // cell lies either inside a piece or interior-disjoint from it.
    std::vector<std::vector<Coord>> cuts(d);
    for (Axis i = 0; i < d; ++i) {
        for (const auto& p : pieces) {
            cuts[i].push_back(p[i].lo());
            cuts[i].push_back(p[i].hi());
        }
        std::sort(cuts[i].begin(), cuts[i].end());
        cuts[i].erase(std::unique(cuts[i].begin(), cuts[i].end()), cuts[i].end());
    }

    std::vector<std::size_t> index(d, 0);
    auto cell_count = [&](Axis i) { return cuts[i].size() == 1 ? std::size_t{1} : cuts[i].size() - 1; };
    auto cell = [&](Axis i) {
        std::size_t k = index[i];
        return cuts[i].size() == 1 ? Interval(cuts[i][0], cuts[i][0]) : Interval(cuts[i][k], cuts[i][k + 1]);
    };

    while (true) {
        std::vector<Interval> ivs;
        for (Axis i = 0; i < d; ++i) ivs.push_back(cell(i));
        Box c(std::move(ivs));
        bool covered = std::any_of(pieces.begin(), pieces.end(), [&](const Box& p) { return p.contains(c); });
        if (!covered) {
            Point hole;
            for (Axis i = 0; i < d; ++i) hole.push_back(c[i].degenerate() ? c[i].lo().value() : inner_value(c[i]));
            return {false, std::nullopt, std::move(hole)};
        }
        Axis i = 0;
        while (i < d && ++index[i] == cell_count(i)) index[i++] = 0;
        if (i == d) break;
    }
    return {true, hull, std::nullopt};
}

std::vector<std::pair<std::size_t, std::size_t>> coplanar_pairs(const std::vector<Separation>& seps) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < seps.size(); ++a) {
        for (std::size_t b = a + 1; b < seps.size(); ++b) {
            if (seps[a].axis == seps[b].axis && seps[a].level == seps[b].level) out.emplace_back(a, b);
        }
    }
    return out;
}

Tiling translate_separation(const Tiling& t, const Separation& sep, const Rational& level) {
    std::vector<Box> boxes = t.boxes();
    const Coord target(level);
    for (const auto& side : sep.sides) {
        if (side.owner >= t.size()) continue;
        Box& b = boxes[side.owner];
        const Interval& iv = b[sep.axis];
        Interval moved = side.sign == Sign::Plus ? Interval(iv.lo(), target) : Interval(target, iv.hi());
        if (moved.degenerate()) throw IntegrityError("separation move collapses box " + std::to_string(side.owner + 1));
        b = b.with(sep.axis, std::move(moved));
    }
    return Tiling(t.d(), std::move(boxes));
}

Rational axis_epsilon(const Tiling& t, Axis axis) {
    std::vector<Coord> values;
    for (const auto& b : t.boxes()) {
        values.push_back(b[axis].lo());
        values.push_back(b[axis].hi());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Rational gap = 2;
    for (std::size_t v = 1; v < values.size(); ++v) {
        Rational g = values[v].value() - values[v - 1].value();
        if (g < gap) gap = g;
    }
    return gap / 4;
}

std::optional<std::pair<Tiling, SeparationMove>> perturb_once(const Tiling& t) {
    ExtendedTiling ext(t);
    auto seps = compute_separations(ext, false);
    auto pairs = coplanar_pairs(seps);
    std::vector<char> involved(seps.size(), 0);
    for (auto [a, b] : pairs) involved[a] = involved[b] = 1;

    for (std::size_t k = 0; k < seps.size(); ++k) {
        const Separation& s = seps[k];
        if (!involved[k] || s.on_frame(ext)) continue;

        const Rational epsilon = axis_epsilon(t, s.axis);
        const Rational from = s.level.value();
        Tiling moved = translate_separation(t, s, from + epsilon);
        return std::make_pair(std::move(moved), SeparationMove{s.axis, from, epsilon, s.min_owner()});
    }
    if (!pairs.empty()) throw IntegrityError("only frame separations are coplanar; cannot perturb");
    return std::nullopt;
}

PerturbationResult perturb_general_position(const Tiling& t) {
    ExtendedTiling ext(t);
    if (!check_pairwise(ext).proper) throw PreconditionError("perturb_general_position needs a proper tiling");
    const std::size_t nseps = compute_separations(ext, false).size();
    const std::size_t budget = std::max<std::size_t>(1, nseps * nseps);

    PerturbationResult result{t, {}, {}};
    result.correspondence.resize(t.size());
    std::iota(result.correspondence.begin(), result.correspondence.end(), 0);
    for (std::size_t iter = 0; iter <= budget; ++iter) {
        auto step = perturb_once(result.tiling);
        if (!step) return result;
        result.tiling = std::move(step->first);
        result.moves.push_back(step->second);
    }
    throw IntegrityError("general position not reached within " + std::to_string(budget) + " moves");
}

bool in_general_position(const Tiling& t) {
    return coplanar_pairs(compute_separations(ExtendedTiling(t), false)).empty();
}

}  // namespace tiledim
