#include "tiledim/properness.hpp"

#include <algorithm>

#include "tiledim/errors.hpp"

namespace tiledim {

namespace {

// Depth-first walk over the endpoint grid, one axis at a time, carrying the
// set of boxes that still contain the partial point.
class DepthSearch {
public:
    explicit DepthSearch(const ExtendedTiling& t) : t_(t) {
        auto grid = coordinate_set(t);
        values_.resize(t.d());
        members_.resize(t.d());
        for (Axis i = 0; i < t.d(); ++i) {
            for (const Coord& c : grid[i]) {
                if (!c.is_finite()) continue;
                std::vector<char> in(t.size());
                for (BoxId id = 0; id < t.size(); ++id) in[id] = t[id][i].contains(c);
                values_[i].push_back(c.value());
                members_[i].push_back(std::move(in));
            }
        }
    }

    DepthResult run() {
        std::vector<BoxId> all(t_.size());
        for (BoxId id = 0; id < t_.size(); ++id) all[id] = id;
        Point partial;
        descend(0, all, partial);
        return best_;
    }

private:
    void descend(Axis axis, const std::vector<BoxId>& alive, Point& partial) {
        if (axis == t_.d()) {
            if (alive.size() > best_.depth) best_ = DepthResult{alive.size(), partial, alive};
            return;
        }
        for (std::size_t v = 0; v < values_[axis].size(); ++v) {
            std::vector<BoxId> next;
            for (BoxId id : alive) {
                if (members_[axis][v][id]) next.push_back(id);
            }
            // Only a strictly deeper point can replace the current best.
            if (next.size() <= best_.depth) continue;
            partial.push_back(values_[axis][v]);
            descend(axis + 1, next, partial);
            partial.pop_back();
        }
    }

    const ExtendedTiling& t_;
    std::vector<std::vector<Rational>> values_;
    std::vector<std::vector<std::vector<char>>> members_;
    DepthResult best_;
};

class FamilySearch {
public:
    explicit FamilySearch(const ExtendedTiling& t) : t_(t) {}

    std::optional<FamilyWitness> run() {
        for (BoxId id = 0; id < t_.size(); ++id) {
            std::vector<BoxId> family{id};
            if (auto w = extend(family, t_[id])) return w;
        }
        return std::nullopt;
    }

private:
    // Boxes are Helly: a family is pairwise intersecting iff its common
    // intersection is non-empty, so extending by "meets the running
    // intersection" enumerates exactly the cliques.
    std::optional<FamilyWitness> extend(std::vector<BoxId>& family, const Box& meet) {
        const std::size_t d = t_.d();
        if (meet.dimension() + family.size() != d + 1) return FamilyWitness{family, meet};
        if (family.size() == d + 2) return FamilyWitness{family, meet};
        for (BoxId next = family.back() + 1; next < t_.size(); ++next) {
            auto m = intersect_boxes(meet, t_[next]);
            if (!m) continue;
            family.push_back(next);
            auto w = extend(family, *m);
            family.pop_back();
            if (w) return w;
        }
        return std::nullopt;
    }

    const ExtendedTiling& t_;
};

}  // namespace

DepthResult max_depth(const ExtendedTiling& t) { return DepthSearch(t).run(); }

PropernessReport check_depth(const ExtendedTiling& t) {
    auto r = max_depth(t);
    if (r.depth <= t.d() + 1) return {};
    return {false, DepthWitness{std::move(r.point), std::move(r.boxes)}};
}

PropernessReport check_pairwise(const ExtendedTiling& t) {
    for (BoxId a = 0; a < t.size(); ++a) {
        for (BoxId b = a + 1; b < t.size(); ++b) {
            auto meet = intersect_boxes(t[a], t[b]);
            if (meet && meet->dimension() + 1 != t.d()) return {false, PairWitness{a, b, std::move(*meet)}};
        }
    }
    return {};
}

PropernessReport check_families(const ExtendedTiling& t) {
    if (auto w = FamilySearch(t).run()) return {false, std::move(*w)};
    return {};
}

PropernessReport check_proper(const ExtendedTiling& t, ProperMethod method) {
    switch (method) {
        case ProperMethod::Depth: return check_depth(t);
        case ProperMethod::Pairwise: return check_pairwise(t);
        case ProperMethod::Families: return check_families(t);
    }
    throw UsageError("unknown properness method");
}

BoxId touch_witness(const ExtendedTiling& t, BoxId a, const Point& p, Axis axis) {
    if (a >= t.size()) throw UsageError("box id out of range");
    if (axis >= t.d()) throw UsageError("axis out of range");
    const Box& A = t[a];
    if (!A.contains(p)) throw PreconditionError("touch_witness: point " + point_to_string(p) + " not in " + t.label(a));
    const Coord pa(p[axis]);
    if (pa != A[axis].lo() && pa != A[axis].hi()) {
        throw PreconditionError("touch_witness: point is not on a side of " + t.label(a) + " in axis " +
                                std::to_string(axis + 1));
    }
    for (BoxId b = 0; b < t.size(); ++b) {
        if (b == a || !t[b].contains(p)) continue;
        auto dims = touch_dimensions(A, t[b]);
        if (dims.size() == 1 && dims.front() == axis) return b;
    }
    throw IntegrityError("no box touches " + t.label(a) + " only in axis " + std::to_string(axis + 1) + " at " +
                         point_to_string(p) + "; input is not a tiling");
}

bool witness_holds(const ExtendedTiling& t, const ProperWitness& w) {
    const std::size_t d = t.d();
    auto valid_ids = [&](const std::vector<BoxId>& ids) {
        auto sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
               std::all_of(ids.begin(), ids.end(), [&](BoxId id) { return id < t.size(); });
    };
    if (auto* dw = std::get_if<DepthWitness>(&w)) {
        if (!valid_ids(dw->boxes) || dw->boxes.size() < d + 2) return false;
        return std::all_of(dw->boxes.begin(), dw->boxes.end(), [&](BoxId id) { return t[id].contains(dw->point); });
    }
    if (auto* pw = std::get_if<PairWitness>(&w)) {
        if (pw->a == pw->b || pw->a >= t.size() || pw->b >= t.size()) return false;
        auto meet = intersect_boxes(t[pw->a], t[pw->b]);
        return meet && *meet == pw->intersection && meet->dimension() + 1 != d;
    }
    const auto& fw = std::get<FamilyWitness>(w);
    if (fw.boxes.empty() || !valid_ids(fw.boxes)) return false;
    for (std::size_t x = 0; x < fw.boxes.size(); ++x) {
        for (std::size_t y = x + 1; y < fw.boxes.size(); ++y) {
            if (!intersect_boxes(t[fw.boxes[x]], t[fw.boxes[y]])) return false;
        }
    }
    std::optional<Box> meet = t[fw.boxes.front()];
    for (BoxId id : fw.boxes) meet = intersect_boxes(*meet, t[id]);
    return meet && *meet == fw.intersection && meet->dimension() + fw.boxes.size() != d + 1;
}

}  // namespace tiledim
