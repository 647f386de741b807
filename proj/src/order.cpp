#include "tiledim/order.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>

#include "tiledim/errors.hpp"
#include "tiledim/properness.hpp"
#include "tiledim/separations.hpp"

namespace tiledim {

void Digraph::add_arc(BoxId from, BoxId to) {
    auto& succ = out_.at(from);
    auto it = std::lower_bound(succ.begin(), succ.end(), to);
    if (it == succ.end() || *it != to) succ.insert(it, to);
}

bool Digraph::has_arc(BoxId from, BoxId to) const {
    const auto& succ = out_.at(from);
    return std::binary_search(succ.begin(), succ.end(), to);
}

std::size_t Digraph::arc_count() const {
    std::size_t n = 0;
    for (const auto& s : out_) n += s.size();
    return n;
}

std::vector<std::pair<BoxId, BoxId>> Digraph::arcs() const {
    std::vector<std::pair<BoxId, BoxId>> out;
    for (BoxId v = 0; v < out_.size(); ++v) {
        for (BoxId w : out_[v]) out.emplace_back(v, w);
    }
    return out;
}

Digraph build_digraph(const Tiling& t) {
    Digraph g(t.size());
    for (BoxId a = 0; a < t.size(); ++a) {
        for (BoxId b = 0; b < t.size(); ++b) {
            if (a == b) continue;
            bool below = true;
            for (Axis i = 0; i < t.d() && below; ++i) below = t[b][i].lo() < t[a][i].hi();
            if (below) g.add_arc(a, b);
        }
    }
    return g;
}

AcyclicityResult is_acyclic(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> indegree(n, 0);
    for (BoxId v = 0; v < n; ++v) {
        for (BoxId w : g.successors(v)) ++indegree[w];
    }
    std::priority_queue<BoxId, std::vector<BoxId>, std::greater<>> ready;
    for (BoxId v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    AcyclicityResult result;
    while (!ready.empty()) {
        BoxId v = ready.top();
        ready.pop();
        result.order.push_back(v);
        for (BoxId w : g.successors(v)) {
            if (--indegree[w] == 0) ready.push(w);
        }
    }
    if (result.order.size() == n) return result;

    // Every vertex left over has a predecessor that is also left over, so
    // walking predecessors must revisit a vertex.
    std::vector<std::vector<BoxId>> pred(n);
    for (BoxId v = 0; v < n; ++v) {
        for (BoxId w : g.successors(v)) {
            if (indegree[v] > 0 && indegree[w] > 0) pred[w].push_back(v);
        }
    }
    BoxId start = 0;
    while (indegree[start] == 0) ++start;
    std::vector<std::size_t> seen_at(n, n + 1);
    std::vector<BoxId> walk;
    BoxId v = start;
    while (seen_at[v] == n + 1) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        v = *std::min_element(pred[v].begin(), pred[v].end());
    }
    std::vector<BoxId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    // Rotate so the cycle starts at its smallest vertex.
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    cycle.push_back(cycle.front());
    result.acyclic = false;
    result.cycle = std::move(cycle);
    return result;
}

CornerCollapse collapse_corner(const Tiling& t) {
    if (t.size() < 2) throw PreconditionError("collapse_corner needs at least two boxes");
    if (!is_proper(t)) throw PreconditionError("collapse_corner needs a proper tiling");
    if (!in_general_position(t)) throw PreconditionError("collapse_corner needs a tiling in general position");

    const Point corner(t.d(), Rational(-1));
    std::optional<BoxId> x;
    for (BoxId k = 0; k < t.size(); ++k) {
        if (!t[k].contains(corner)) continue;
        if (x) throw PreconditionError("several boxes contain the corner (-1,...,-1)");
        x = k;
    }
    if (!x) throw PreconditionError("no box contains the corner (-1,...,-1)");
    const Box& X = t[*x];

    std::optional<std::pair<BoxId, Axis>> partner;
    for (Axis i = 0; i < t.d() && !partner; ++i) {
        for (BoxId y = 0; y < t.size() && !partner; ++y) {
            if (y == *x || t[y][i].lo() != X[i].hi()) continue;
            bool flush = true;
            for (Axis j = 0; j < t.d() && flush; ++j) flush = j == i || t[y][j].hi() == X[j].hi();
            if (flush) partner = {y, i};
        }
    }
    if (!partner) throw PreconditionError("no partner box flush with the corner box");
    const Axis axis = partner->second;

    std::vector<Box> boxes;
    std::vector<BoxId> origin;
    for (BoxId k = 0; k < t.size(); ++k) {
        if (k == *x) continue;
        const Box& b = t[k];
        bool stretch = false;
        if (intersect_boxes(X, b)) {
            auto dims = touch_dimensions(X, b);
            stretch = std::find(dims.begin(), dims.end(), axis) != dims.end();
        }
        boxes.push_back(stretch ? b.with(axis, Interval(Coord(-1), b[axis].hi())) : b);
        origin.push_back(k);
    }
    Tiling collapsed(t.d(), std::move(boxes));
    auto report = validate(collapsed);
    if (!report.valid()) throw IntegrityError("collapsed tiling is invalid: " + report.violations.front().message);
    if (!is_proper(collapsed)) throw IntegrityError("collapsed tiling is not proper");
    return {*x, partner->first, axis, {std::move(collapsed), std::move(origin)}};
}

Realizer construct_realizer(const Tiling& t) {
    if (!is_proper(t)) throw PreconditionError("construct_realizer needs a proper tiling");
    auto acyc = is_acyclic(build_digraph(t));
    if (!acyc.acyclic) throw IntegrityError("digraph of a proper tiling has a cycle");

    std::vector<std::size_t> rank(t.size());
    for (std::size_t r = 0; r < acyc.order.size(); ++r) rank[acyc.order[r]] = r;

    Realizer out;
    for (Axis i = 0; i < t.d(); ++i) {
        LinearOrder o = acyc.order;
        std::stable_sort(o.begin(), o.end(), [&](BoxId a, BoxId b) { return t[a][i].lo() < t[b][i].lo(); });
        out.orders.push_back(std::move(o));
    }
    out.orders.push_back(std::move(acyc.order));
    return out;
}

SimplicialComplex::SimplicialComplex(std::vector<BoxId> vertices, std::vector<std::vector<BoxId>> faces)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw UsageError("complex has a repeated vertex");
    }
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw UsageError("complex has an empty face");
        for (BoxId v : f) {
            if (!std::binary_search(vertices_.begin(), vertices_.end(), v)) {
                throw UsageError("face mentions unknown vertex " + std::to_string(v));
            }
        }
    }
    for (BoxId v : vertices_) faces.push_back({v});
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::size_t a = 0; a < faces.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < faces.size() && maximal; ++b) {
            maximal = a == b || faces[b].size() <= faces[a].size() ||
                      !std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(), faces[a].end());
        }
        if (maximal) maximal_faces_.push_back(faces[a]);
    }
}

std::size_t SimplicialComplex::max_face_size() const {
    std::size_t m = 0;
    for (const auto& f : maximal_faces_) m = std::max(m, f.size());
    return m;
}

std::vector<std::vector<BoxId>> SimplicialComplex::all_faces() const {
    std::vector<std::vector<BoxId>> out;
    for (const auto& f : maximal_faces_) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << f.size()); ++mask) {
            std::vector<BoxId> sub;
            for (std::size_t k = 0; k < f.size(); ++k) {
                if (mask >> k & 1) sub.push_back(f[k]);
            }
            out.push_back(std::move(sub));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Bron-Kerbosch with pivoting over an adjacency matrix.
void maximal_cliques(const std::vector<std::vector<char>>& adj, std::vector<BoxId>& r, std::vector<BoxId> p,
                     std::vector<BoxId> x, std::vector<std::vector<BoxId>>& out) {
    if (p.empty() && x.empty()) {
        auto f = r;
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
        return;
    }
    BoxId pivot = !p.empty() ? p.front() : x.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (BoxId u : *set) {
            std::size_t deg = 0;
            for (BoxId v : p) deg += adj[u][v];
            if (deg > best) best = deg, pivot = u;
        }
    }
    auto candidates = p;
    for (BoxId v : candidates) {
        if (adj[pivot][v]) continue;
        std::vector<BoxId> p2, x2;
        for (BoxId w : p) {
            if (adj[v][w]) p2.push_back(w);
        }
        for (BoxId w : x) {
            if (adj[v][w]) x2.push_back(w);
        }
        r.push_back(v);
        maximal_cliques(adj, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

SimplicialComplex build_complex(const Tiling& t, bool include_exterior) {
    std::vector<Box> boxes = t.boxes();
    if (include_exterior) {
        for (auto& b : make_exterior(t.d())) boxes.push_back(std::move(b));
    }
    const std::size_t n = boxes.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (BoxId a = 0; a < n; ++a) {
        for (BoxId b = a + 1; b < n; ++b) adj[a][b] = adj[b][a] = intersect_boxes(boxes[a], boxes[b]).has_value();
    }
    std::vector<BoxId> vertices(n);
    for (BoxId v = 0; v < n; ++v) vertices[v] = v;
    std::vector<std::vector<BoxId>> faces;
    std::vector<BoxId> r;
    maximal_cliques(adj, r, vertices, {}, faces);
    return SimplicialComplex(std::move(vertices), std::move(faces));
}

namespace {

// Position of every vertex in every order, indexed like c.vertices().
std::vector<std::vector<std::size_t>> positions(const SimplicialComplex& c, const Realizer& r) {
    const auto& vs = c.vertices();
    std::vector<std::vector<std::size_t>> pos;
    for (const auto& o : r.orders) {
        if (o.size() != vs.size()) throw UsageError("order length differs from the vertex count");
        std::vector<std::size_t> p(vs.size(), vs.size());
        for (std::size_t rank = 0; rank < o.size(); ++rank) {
            auto it = std::lower_bound(vs.begin(), vs.end(), o[rank]);
            if (it == vs.end() || *it != o[rank]) {
                throw UsageError("order mentions unknown vertex " + std::to_string(o[rank]));
            }
            auto idx = static_cast<std::size_t>(it - vs.begin());
            if (p[idx] != vs.size()) throw UsageError("order repeats vertex " + std::to_string(o[rank]));
            p[idx] = rank;
        }
        pos.push_back(std::move(p));
    }
    return pos;
}

}  // namespace

std::optional<RealizerViolation> verify_realizer(const SimplicialComplex& c, const Realizer& r) {
    const auto& vs = c.vertices();
    auto pos = positions(c, r);
    auto index = [&](BoxId v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    for (const auto& face : c.maximal_faces()) {
        for (std::size_t u = 0; u < vs.size(); ++u) {
            bool dominated = false;
            for (const auto& p : pos) {
                dominated = std::all_of(face.begin(), face.end(), [&](BoxId v) { return p[index(v)] <= p[u]; });
                if (dominated) break;
            }
            if (!dominated) return RealizerViolation{face, vs[u]};
        }
    }
    return std::nullopt;
}

namespace {

class RealizerSearch {
public:
    explicit RealizerSearch(const SimplicialComplex& c) : c_(c), n_(c.vertices().size()) {
        const auto& vs = c.vertices();
        for (const auto& f : c.maximal_faces()) {
            std::vector<std::size_t> idx;
            for (BoxId v : f) idx.push_back(static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()));
            faces_.push_back(std::move(idx));
        }
        words_ = (faces_.size() * n_ + 63) / 64;
        full_.assign(words_, 0);
        for (std::size_t k = 0; k < faces_.size() * n_; ++k) full_[k / 64] |= std::uint64_t{1} << (k % 64);

        std::vector<std::size_t> perm(n_);
        for (std::size_t k = 0; k < n_; ++k) perm[k] = k;
        do {
            std::vector<std::size_t> pos(n_);
            for (std::size_t r = 0; r < n_; ++r) pos[perm[r]] = r;
            Bits sat(words_, 0);
            for (std::size_t f = 0; f < faces_.size(); ++f) {
                std::size_t top = 0;
                for (std::size_t v : faces_[f]) top = std::max(top, pos[v]);
                for (std::size_t u = 0; u < n_; ++u) {
                    if (pos[u] >= top) set(sat, f * n_ + u);
                }
            }
            perms_.push_back(perm);
            satisfies_.push_back(std::move(sat));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::optional<std::vector<std::size_t>> find(std::size_t k) {
        std::vector<std::size_t> chosen;
        Bits covered(words_, 0);
        if (search(k, 0, covered, chosen)) return chosen;
        return std::nullopt;
    }

    Realizer to_realizer(const std::vector<std::size_t>& chosen) const {
        Realizer r;
        for (std::size_t p : chosen) {
            LinearOrder o;
            for (std::size_t v : perms_[p]) o.push_back(c_.vertices()[v]);
            r.orders.push_back(std::move(o));
        }
        return r;
    }

private:
    using Bits = std::vector<std::uint64_t>;

    static void set(Bits& b, std::size_t k) { b[k / 64] |= std::uint64_t{1} << (k % 64); }
    static bool test(const Bits& b, std::size_t k) { return b[k / 64] >> (k % 64) & 1; }

    bool complete(const Bits& b) const { return b == full_; }

    // Each order puts exactly one member of a face on top, so a face with
    // more uncovered members than remaining orders is hopeless.
    bool feasible(const Bits& covered, std::size_t remaining) const {
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            std::size_t missing = 0;
            for (std::size_t v : faces_[f]) missing += !test(covered, f * n_ + v);
            if (missing > remaining) return false;
        }
        return true;
    }

    // Orders are chosen with non-decreasing indices: a realizer is a set of
    // orders, and the sorted tuple is the lexicographically least one.
    bool search(std::size_t k, std::size_t from, const Bits& covered, std::vector<std::size_t>& chosen) {
        if (complete(covered)) {
            while (chosen.size() < k) chosen.push_back(chosen.empty() ? 0 : chosen.back());
            return true;
        }
        if (chosen.size() == k || !feasible(covered, k - chosen.size())) return false;
        for (std::size_t p = from; p < perms_.size(); ++p) {
            Bits next = covered;
            for (std::size_t w = 0; w < words_; ++w) next[w] |= satisfies_[p][w];
            if (next == covered) continue;
            chosen.push_back(p);
            if (search(k, p, next, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    const SimplicialComplex& c_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> faces_;
    std::size_t words_;
    Bits full_;
    std::vector<std::vector<std::size_t>> perms_;
    std::vector<Bits> satisfies_;
};

}  // namespace

DimensionResult dm_dimension(const SimplicialComplex& c, std::size_t kmax, std::size_t max_vertices, bool force) {
    if (c.vertices().size() > max_vertices && !force) {
        throw UsageError("complex has " + std::to_string(c.vertices().size()) + " vertices, above the limit of " +
                         std::to_string(max_vertices) + "; pass force to search anyway");
    }
    if (c.vertices().empty()) return {std::size_t{1}, Realizer{{LinearOrder{}}}};
    RealizerSearch search(c);
    for (std::size_t k = std::max<std::size_t>(1, c.max_face_size()); k <= kmax; ++k) {
        if (auto chosen = search.find(k)) return {k, search.to_realizer(*chosen)};
    }
    return {};
}

}  // namespace tiledim
