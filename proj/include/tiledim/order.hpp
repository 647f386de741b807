#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tiledim/tiling.hpp"

namespace tiledim {

// Arc a -> b iff b_i^- < a_i^+ on every axis, i.e. some point of b lies
// strictly below some point of a. Vertices are the boxes of T only.
class Digraph {
public:
    explicit Digraph(std::size_t n) : out_(n) {}

    std::size_t size() const { return out_.size(); }
    void add_arc(BoxId from, BoxId to);
    bool has_arc(BoxId from, BoxId to) const;
    const std::vector<BoxId>& successors(BoxId v) const { return out_[v]; }
    std::size_t arc_count() const;
    std::vector<std::pair<BoxId, BoxId>> arcs() const;

private:
    std::vector<std::vector<BoxId>> out_;
};

Digraph build_digraph(const Tiling& t);

struct AcyclicityResult {
    bool acyclic = true;
    // Topological order when acyclic (smallest available id first).
    std::vector<BoxId> order;
    // Otherwise a directed cycle, first vertex repeated at the end.
    std::vector<BoxId> cycle;
};

AcyclicityResult is_acyclic(const Digraph& g);

struct CornerCollapse {
    BoxId removed;   // X, the box containing (-1,...,-1)
    BoxId partner;   // Y
    Axis axis;       // X_axis^+ = Y_axis^-, X_j^+ = Y_j^+ elsewhere
    DerivedTiling result;
};

// Removes the corner box X by stretching every box that touches X in the
// partner axis down to -1. Requires a proper tiling in general position
// with at least two boxes; the result is a proper tiling with one box less.
CornerCollapse collapse_corner(const Tiling& t);

// A linear order: position = rank, later = greater.
using LinearOrder = std::vector<BoxId>;

struct Realizer {
    std::vector<LinearOrder> orders;
};

// d+1 orders: the last is a linear extension of the digraph (lowest id
// first among the available vertices), order i sorts by the lower endpoint
// on axis i and breaks ties with the last order.
Realizer construct_realizer(const Tiling& t);

class SimplicialComplex {
public:
    SimplicialComplex(std::vector<BoxId> vertices, std::vector<std::vector<BoxId>> maximal_faces);

    const std::vector<BoxId>& vertices() const { return vertices_; }
    const std::vector<std::vector<BoxId>>& maximal_faces() const { return maximal_faces_; }
    std::size_t max_face_size() const;
    // Every face, i.e. every non-empty subset of a maximal face, sorted.
    std::vector<std::vector<BoxId>> all_faces() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<BoxId> vertices_;
    std::vector<std::vector<BoxId>> maximal_faces_;
};

// Faces are the sets of boxes with a common point. With include_exterior
// the exterior boxes become vertices n..n+2d-1 as well.
SimplicialComplex build_complex(const Tiling& t, bool include_exterior = false);

struct RealizerViolation {
    std::vector<BoxId> face;
    BoxId vertex;
};

// Every face F and every vertex u must have an order in which all of F is
// at or below u. Returns the first failing (F, u), maximal faces in listed
// order and u ascending. Throws UsageError unless every order is a
// permutation of the complex's vertices.
std::optional<RealizerViolation> verify_realizer(const SimplicialComplex& c, const Realizer& r);

struct DimensionResult {
    // Smallest realizer size, absent when it exceeds kmax.
    std::optional<std::size_t> dimension;
    // The lexicographically least realizer of that size.
    std::optional<Realizer> witness;
};

// Exhaustive search for the Dushnik-Miller dimension. Refuses complexes
// with more than max_vertices vertices unless forced.
DimensionResult dm_dimension(const SimplicialComplex& c, std::size_t kmax, std::size_t max_vertices = 7,
                             bool force = false);

}  // namespace tiledim
