#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiledim/geometry.hpp"

namespace tiledim {

// A finite list of d-boxes claimed to tile [-1,+1]^d. Box i has id i.
// Construction only checks shape (matching ambient dimension); use
// validate() for the tiling properties.
class Tiling {
public:
    Tiling(std::size_t d, std::vector<Box> boxes);

    std::size_t d() const { return d_; }
    std::size_t size() const { return boxes_.size(); }
    const Box& operator[](BoxId id) const { return boxes_[id]; }
    const std::vector<Box>& boxes() const { return boxes_; }

    friend bool operator==(const Tiling&, const Tiling&) = default;

private:
    std::size_t d_;
    std::vector<Box> boxes_;
};

// A tiling produced from another one. origin[k] is the id in the source
// tiling of box k of the result.
struct DerivedTiling {
    Tiling tiling;
    std::vector<BoxId> origin;
};

// The 2d exterior boxes in the order T(1,-), T(1,+), ..., T(d,-), T(d,+).
std::vector<Box> make_exterior(std::size_t d);

// T together with its exterior boxes. Ids 0..n-1 are the tiling's boxes,
// n + 2*axis + (sign == Plus) is the exterior box T(axis+1, sign).
class ExtendedTiling {
public:
    explicit ExtendedTiling(Tiling base);

    const Tiling& base() const { return base_; }
    std::size_t d() const { return base_.d(); }
    std::size_t interior_count() const { return base_.size(); }
    std::size_t size() const { return base_.size() + exterior_.size(); }

    const Box& operator[](BoxId id) const;
    bool is_exterior(BoxId id) const { return id >= base_.size(); }
    BoxId exterior_id(Axis axis, Sign sign) const {
        return base_.size() + 2 * axis + (sign == Sign::Plus ? 1 : 0);
    }

    // "B3" for tiling boxes (1-based), "T(2,-)" for exterior boxes.
    std::string label(BoxId id) const;

private:
    Tiling base_;
    std::vector<Box> exterior_;
};

struct Violation {
    enum class Kind { Degenerate, OutsideFrame, Overlap, VolumeMismatch };
    Kind kind;
    std::vector<BoxId> boxes;
    std::optional<Box> witness;  // the overlap box for Overlap
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// Checks containment in [-1,+1]^d, full dimensionality, pairwise interior
// disjointness and that the volumes sum to 2^d. The last two together
// certify coverage.
ValidationReport validate(const Tiling& t);

// Throws PreconditionError listing the first violation when t is invalid.
void require_valid(const Tiling& t);

// True iff no box has x as an endpoint of its interval on `axis`.
bool is_generic(const Tiling& t, Axis axis, const Rational& x);

// The (d-1)-tiling cut out by the hyperplane {p : p_axis = x}.
DerivedTiling slice(const Tiling& t, Axis axis, const Rational& x);

// One half of t cut at {p_axis = x}, with the boxes crossing the cut
// prolonged to the frame: sign Minus keeps the part below x and stretches
// crossing boxes to +1, sign Plus keeps the part above x and stretches them
// to -1.
DerivedTiling cut(const Tiling& t, Axis axis, const Rational& x, Sign sign);

// Per axis, the sorted distinct endpoints of all boxes of T and T_ext.
std::vector<std::vector<Coord>> coordinate_set(const ExtendedTiling& t);

// The unit frame [-1,+1]^d.
Box frame(std::size_t d);

}  // namespace tiledim
