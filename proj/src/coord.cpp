#include "tiledim/coord.hpp"

#include <cctype>

#include "tiledim/errors.hpp"

namespace tiledim {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) {
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) {
        throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

const Rational& Coord::value() const {
    if (kind_ != Kind::Finite) throw PreconditionError("infinite coordinate has no rational value");
    return value_;
}

std::string Coord::to_string() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        case Kind::Finite: break;
    }
    return format_rational(value_);
}

std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
    if (a.kind_ != b.kind_ || a.kind_ != Coord::Kind::Finite) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    return cmp(a.value_, b.value_) <=> 0;
}

}  // namespace tiledim
