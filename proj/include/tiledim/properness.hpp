#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tiledim/tiling.hpp"

namespace tiledim {

// A point together with every box of T u T_ext containing it.
struct DepthWitness {
    Point point;
    std::vector<BoxId> boxes;
};

// Two intersecting boxes whose intersection is not (d-1)-dimensional.
struct PairWitness {
    BoxId a;
    BoxId b;
    Box intersection;
};

// A pairwise intersecting family whose common intersection has the wrong
// dimension (or that is too large to exist in a proper tiling at all).
struct FamilyWitness {
    std::vector<BoxId> boxes;
    Box intersection;
};

using ProperWitness = std::variant<DepthWitness, PairWitness, FamilyWitness>;

struct PropernessReport {
    bool proper = true;
    std::optional<ProperWitness> witness;
};

struct DepthResult {
    std::size_t depth = 0;
    Point point;
    std::vector<BoxId> boxes;
};

// Maximum number of boxes of T u T_ext sharing a point. The search runs
// over the grid of finite endpoint coordinates, which always contains a
// maximiser. Ties go to the lexicographically smallest grid point.
DepthResult max_depth(const ExtendedTiling& t);

// Improper iff some point lies in more than d+1 boxes.
PropernessReport check_depth(const ExtendedTiling& t);

// Improper iff two intersecting boxes meet in dimension < d-1. Reports the
// first such pair in lexicographic id order.
PropernessReport check_pairwise(const ExtendedTiling& t);

// Improper iff some pairwise intersecting family B has
// dim(cap B) != d+1-|B|; families of size d+2 are violations outright.
PropernessReport check_families(const ExtendedTiling& t);

// Some box B of T u T_ext, B != a, containing p and touching a only in
// `axis`. Requires p in box a with p_axis an endpoint of a's interval.
BoxId touch_witness(const ExtendedTiling& t, BoxId a, const Point& p, Axis axis);

// Re-checks a witness against the raw definitions. True iff it genuinely
// demonstrates improperness.
bool witness_holds(const ExtendedTiling& t, const ProperWitness& w);

enum class ProperMethod { Depth, Pairwise, Families };

PropernessReport check_proper(const ExtendedTiling& t, ProperMethod method);

inline bool is_proper(const Tiling& t) { return check_pairwise(ExtendedTiling(t)).proper; }

}  // namespace tiledim
