#include "tiledim/svg.hpp"

#include <cstdio>
#include <sstream>

#include "tiledim/errors.hpp"
#include "tiledim/separations.hpp"

namespace tiledim {

namespace {

// Exact rationals are rounded to three decimals only at this point.
std::string fmt(const Rational& v) {
    mpq_class half_up = v * 1000 + mpq_class(1, 2);
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), half_up.get_num_mpz_t(), half_up.get_den_mpz_t());
    mpz_class magnitude = abs(rounded);
    std::string out = (rounded < 0 ? "-" : "") + mpz_class(magnitude / 1000).get_str();
    mpz_class frac = magnitude % 1000;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%03lu", frac.get_ui());
        std::string digits = buf;
        while (digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

Rational sx(const Coord& x) { return (x.value() + 1) * 500; }
Rational sy(const Coord& y) { return (1 - y.value()) * 500; }

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                          "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

}  // namespace

std::string render_svg(const Tiling& t, const SvgOptions& options) {
    if (t.d() != 2) throw UsageError("render-svg needs a 2-tiling, got d=" + std::to_string(t.d()));
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
          "viewBox=\"0 0 1000 1000\">\n";
    os << "<g stroke=\"#000000\" stroke-width=\"2\">\n";
    for (BoxId k = 0; k < t.size(); ++k) {
        const Box& b = t[k];
        os << "<rect id=\"B" << k + 1 << "\" x=\"" << fmt(sx(b[0].lo())) << "\" y=\"" << fmt(sy(b[1].hi()))
           << "\" width=\"" << fmt(sx(b[0].hi()) - sx(b[0].lo())) << "\" height=\""
           << fmt(sy(b[1].lo()) - sy(b[1].hi())) << "\" fill=\"" << kPalette[k % std::size(kPalette)] << "\"/>\n";
    }
    os << "</g>\n";

    if (options.separations) {
        ExtendedTiling ext(t);
        os << "<g stroke=\"#c00000\" stroke-width=\"8\" stroke-linecap=\"round\">\n";
        for (const auto& s : compute_separations(ext)) {
            if (s.on_frame(ext) || !s.box_form) continue;
            const Box& r = *s.box_form;
            os << "<line x1=\"" << fmt(sx(r[0].lo())) << "\" y1=\"" << fmt(sy(r[1].lo())) << "\" x2=\""
               << fmt(sx(r[0].hi())) << "\" y2=\"" << fmt(sy(r[1].hi())) << "\"/>\n";
        }
        os << "</g>\n";
    }

    if (options.labels) {
        os << "<g font-family=\"sans-serif\" font-size=\"28\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
        for (BoxId k = 0; k < t.size(); ++k) {
            const Box& b = t[k];
            Rational cx = (sx(b[0].lo()) + sx(b[0].hi())) / 2;
            Rational cy = (sy(b[1].lo()) + sy(b[1].hi())) / 2;
            os << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy) << "\">B" << k + 1 << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tiledim
