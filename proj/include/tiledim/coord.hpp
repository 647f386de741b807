#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tiledim {

using Rational = mpq_class;

// Parses "p" or "p/q" (decimal, optional leading '-', q > 0) into a
// canonical rational. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// Canonical "p/q" or "p".
std::string format_rational(const Rational& q);

// A coordinate on the extended real line: an exact rational or one of the
// two symbolic infinities. Infinities only take part in comparisons and
// interval intersection, never in arithmetic.
class Coord {
public:
    enum class Kind { NegInf, Finite, PosInf };

    Coord() : kind_(Kind::Finite) {}
    Coord(const Rational& value) : kind_(Kind::Finite), value_(value) { value_.canonicalize(); }
    Coord(long value) : kind_(Kind::Finite), value_(value) {}
    Coord(int value) : kind_(Kind::Finite), value_(value) {}

    static Coord neg_inf() { return Coord(Kind::NegInf); }
    static Coord pos_inf() { return Coord(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    // Throws PreconditionError for infinite coordinates.
    const Rational& value() const;

    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Coord& a, const Coord& b);
    friend bool operator==(const Coord& a, const Coord& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    explicit Coord(Kind kind) : kind_(kind) {}

    Kind kind_;
    Rational value_;
};

}  // namespace tiledim
