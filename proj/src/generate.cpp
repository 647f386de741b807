#include "tiledim/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tiledim/errors.hpp"
#include "tiledim/properness.hpp"
#include "tiledim/separations.hpp"

namespace tiledim {

namespace {

Interval iv(const Rational& lo, const Rational& hi) { return Interval(Coord(lo), Coord(hi)); }

Box box2(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
    return Box({iv(x0, x1), iv(y0, y1)});
}

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Tiling split(std::size_t d) {
    std::vector<Interval> rest(d - 1, iv(-1, 1));
    auto make = [&](const Rational& lo, const Rational& hi) {
        std::vector<Interval> ivs{iv(lo, hi)};
        ivs.insert(ivs.end(), rest.begin(), rest.end());
        return Box(std::move(ivs));
    };
    return Tiling(d, {make(-1, 0), make(0, 1)});
}

Tiling quadrants(std::size_t d) {
    std::vector<Box> boxes;
    for (const auto& [x0, x1] : {std::pair{-1, 0}, std::pair{0, 1}}) {
        for (const auto& [y0, y1] : {std::pair{-1, 0}, std::pair{0, 1}}) {
            std::vector<Interval> ivs{iv(x0, x1), iv(y0, y1)};
            if (d == 3) ivs.push_back(iv(-1, 1));
            boxes.emplace_back(std::move(ivs));
        }
    }
    return Tiling(d, std::move(boxes));
}

class Generator {
public:
    explicit Generator(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
        if (spec.d < 1) throw UsageError("generation needs d >= 1");
        if (spec.target_boxes < 1) throw UsageError("generation needs at least one box");
        scale_ = spec.coarse ? 8 : 65536;
    }

    Tiling subdivide() {
        const std::size_t d = spec_.d;
        std::vector<Box> boxes{frame(d)};
        std::vector<std::set<Rational>> used(d, std::set<Rational>{Rational(-1), Rational(1)});

        std::size_t failures = 0;
        while (boxes.size() < spec_.target_boxes && failures < 64 * spec_.target_boxes) {
            const std::size_t k = below(boxes.size());
            const bool pinwheel = d >= 2 && boxes.size() + 4 <= spec_.target_boxes && spec_.pinwheel_rate > 0 &&
                                  unit() < spec_.pinwheel_rate;
            bool ok = pinwheel ? place_pinwheel(boxes, k, used) : place_cut(boxes, k, used);
            if (!ok) ++failures;
        }
        return Tiling(d, std::move(boxes));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    // A grid value strictly inside the interval. Fresh values must not
    // already be an endpoint on this axis.
    std::optional<Rational> draw(const Interval& range, Axis axis, const std::vector<std::set<Rational>>& used) {
        const Rational lo_scaled = range.lo().value() * scale_;
        const Rational hi_scaled = range.hi().value() * scale_;
        mpz_class lo, hi;
        mpz_cdiv_q(lo.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
        mpz_class span = hi - lo - 1;
        if (span <= 0) return std::nullopt;
        for (int attempt = 0; attempt < 8; ++attempt) {
            mpz_class offset = 1 + mpz_class(static_cast<unsigned long>(below(span.get_ui())));
            Rational x(lo + offset, scale_);
            x.canonicalize();
            if (spec_.coarse || !used[axis].count(x)) return x;
        }
        return std::nullopt;
    }

    bool place_cut(std::vector<Box>& boxes, std::size_t k, std::vector<std::set<Rational>>& used) {
        const Axis axis = below(spec_.d);
        auto x = draw(boxes[k][axis], axis, used);
        if (!x) return false;
        const Box b = boxes[k];
        boxes[k] = b.with(axis, Interval(b[axis].lo(), Coord(*x)));
        boxes.push_back(b.with(axis, Interval(Coord(*x), b[axis].hi())));
        used[axis].insert(*x);
        return true;
    }

    bool place_pinwheel(std::vector<Box>& boxes, std::size_t k, std::vector<std::set<Rational>>& used) {
        const Axis a = below(spec_.d);
        Axis b = below(spec_.d - 1);
        if (b >= a) ++b;
        const Box p = boxes[k];
        auto x1 = draw(p[a], a, used), x2 = draw(p[a], a, used);
        auto y1 = draw(p[b], b, used), y2 = draw(p[b], b, used);
        if (!x1 || !x2 || !y1 || !y2 || *x1 == *x2 || *y1 == *y2) return false;
        if (*x2 < *x1) std::swap(x1, x2);
        if (*y2 < *y1) std::swap(y1, y2);
        const Coord xlo = p[a].lo(), xhi = p[a].hi(), ylo = p[b].lo(), yhi = p[b].hi();
        const Coord X1(*x1), X2(*x2), Y1(*y1), Y2(*y2);
        auto piece = [&](Coord x0, Coord x1_, Coord y0, Coord y1_) {
            return p.with(a, Interval(x0, x1_)).with(b, Interval(y0, y1_));
        };
        boxes[k] = piece(xlo, X2, ylo, Y1);
        boxes.push_back(piece(X2, xhi, ylo, Y2));
        boxes.push_back(piece(X1, xhi, Y2, yhi));
        boxes.push_back(piece(xlo, X1, Y1, yhi));
        boxes.push_back(piece(X1, X2, Y1, Y2));
        for (const auto& v : {*x1, *x2}) used[a].insert(v);
        for (const auto& v : {*y1, *y2}) used[b].insert(v);
        return true;
    }

    GenSpec spec_;
    std::mt19937_64 rng_;
    long scale_;
};

// Splits the crossing of a and b, which touch in two or more axes. On a
// touch axis i, the half of the separation through b's side that lies on
// b's side of a second touch axis j is moved off the hyperplane. Allowed
// only when no side of that separation straddles the level on axis j, so
// the moved sides still pair up. Returns false when no such half exists.
bool repair_step(Tiling& t, const PairWitness& w) {
    ExtendedTiling ext(t);
    const Box& a = ext[w.a];
    const Box& b = ext[w.b];
    const auto axes = touch_dimensions(a, b);
    const auto seps = compute_separations(ext, false);
    for (Axis i : axes) {
        const Coord& level = w.intersection[i].lo();
        if (!level.is_finite() || level == Coord(-1) || level == Coord(1)) continue;
        const Sign b_sign = b[i].lo() == level ? Sign::Minus : Sign::Plus;
        const Separation* sep = nullptr;
        for (const auto& s : seps) {
            if (s.axis != i || s.level != level) continue;
            if (std::any_of(s.sides.begin(), s.sides.end(),
                            [&](const Side& x) { return x.owner == w.b && x.sign == b_sign; })) {
                sep = &s;
            }
        }
        if (!sep) continue;
        for (Axis j : axes) {
            if (j == i) continue;
            const Coord& split = w.intersection[j].lo();
            const bool above = b[j].lo() == split;
            Separation half{i, level, {}, std::nullopt};
            bool straddles = false;
            for (const auto& x : sep->sides) {
                const Interval& r = x.region[j];
                if (r.lo() < split && split < r.hi()) straddles = true;
                if (above ? split <= r.lo() : r.hi() <= split) half.sides.push_back(x);
            }
            if (straddles || half.sides.empty()) continue;
            t = translate_separation(t, half, level.value() + axis_epsilon(t, i));
            return true;
        }
    }
    return false;
}

}  // namespace

Tiling fixture(const std::string& name, std::size_t d) {
    if (name == "single") return Tiling(d, {frame(d)});
    if (name == "split") return split(d);
    if (name.rfind("single", 0) == 0 || name.rfind("split", 0) == 0) {
        const bool is_single = name[1] == 'i';
        const std::string digits = name.substr(is_single ? 6 : 5);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 3) {
            std::size_t dd = std::stoul(digits);
            if (dd >= 1) return fixture(is_single ? "single" : "split", dd);
        }
    }
    if (name == "grid2x2") return quadrants(2);
    if (name == "fig1_left_like") return quadrants(3);
    if (name == "pinwheel") {
        return Tiling(2, {box2(-1, q(1, 2), -1, q(-1, 2)), box2(q(1, 2), 1, -1, q(1, 2)),
                          box2(q(-1, 2), 1, q(1, 2), 1), box2(-1, q(-1, 2), q(-1, 2), 1),
                          box2(q(-1, 2), q(1, 2), q(-1, 2), q(1, 2))});
    }
    if (name == "three_row_coplanar") {
        return Tiling(2, {box2(-1, 0, -1, q(-1, 3)), box2(0, 1, -1, q(-1, 3)), box2(-1, 1, q(-1, 3), q(1, 3)),
                          box2(-1, 0, q(1, 3), 1), box2(0, 1, q(1, 3), 1)});
    }
    throw UsageError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"single1", "single2", "single3", "single4", "split1",   "split2",   "split3",
            "split4",  "grid2x2", "pinwheel", "three_row_coplanar", "fig1_left_like"};
}

Tiling random_subdivision(const GenSpec& spec) { return Generator(spec).subdivide(); }

Tiling random_proper(const GenSpec& spec) {
    Generator gen(spec);
    for (std::size_t attempt = 0; attempt <= spec.max_retries; ++attempt) {
        Tiling t = gen.subdivide();
        const std::size_t budget = 4 * t.size() * t.size() + 8;
        for (std::size_t step = 0; step < budget; ++step) {
            auto report = check_pairwise(ExtendedTiling(t));
            if (report.proper) {
                if (!validate(t).valid()) throw IntegrityError("repaired tiling no longer validates");
                return t;
            }
            if (!repair_step(t, std::get<PairWitness>(*report.witness))) break;
        }
    }
    throw GenerationError("no proper tiling after " + std::to_string(spec.max_retries + 1) + " attempts (d=" +
                          std::to_string(spec.d) + ", seed=" + std::to_string(spec.seed) + ")");
}

}  // namespace tiledim
