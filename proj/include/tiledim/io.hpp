#pragma once

#include <string>

#include <json.hpp>

#include "tiledim/order.hpp"
#include "tiledim/properness.hpp"
#include "tiledim/separations.hpp"
#include "tiledim/tiling.hpp"

namespace tiledim::io {

using Json = nlohmann::ordered_json;

// {"d": 2, "boxes": [[["-1","0"],["-1","1/2"]], ...]} with rationals as
// strings. Only finite coordinates can be written.
Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

std::string write_tiling(const Tiling& t);
Tiling read_tiling(const std::string& text);

// {"orders": [[ids...], ...]}
Json realizer_to_json(const Realizer& r);
Realizer realizer_from_json(const Json& j);

// {"vertices": [ids], "maximal_faces": [[ids...], ...]}
Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

// Extended-real coordinates, "-inf" and "+inf" for the infinities. Used
// in reports only, never in tiling files.
Json coord_to_json(const Coord& c);
Json box_to_json(const Box& b);
Json point_to_json(const Point& p);

Json report_to_json(const ExtendedTiling& t, const PropernessReport& r);
Json separation_to_json(const ExtendedTiling& t, const Separation& s);

// Parses text as JSON, raising InputError on syntax errors.
Json parse(const std::string& text);

}  // namespace tiledim::io
