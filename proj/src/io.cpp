#include "tiledim/io.hpp"

#include "tiledim/errors.hpp"

namespace tiledim::io {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::vector<BoxId> ids_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of ids");
    std::vector<BoxId> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw InputError(std::string(what) + " must contain non-negative integers");
        out.push_back(v.get<BoxId>());
    }
    return out;
}

}  // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json tiling_to_json(const Tiling& t) {
    Json boxes = Json::array();
    for (const auto& b : t.boxes()) {
        Json jb = Json::array();
        for (const auto& iv : b.intervals()) {
            jb.push_back(Json::array({format_rational(iv.lo().value()), format_rational(iv.hi().value())}));
        }
        boxes.push_back(std::move(jb));
    }
    Json j;
    j["d"] = t.d();
    j["boxes"] = std::move(boxes);
    return j;
}

Tiling tiling_from_json(const Json& j) {
    const Json& jd = member(j, "d");
    if (!jd.is_number_unsigned() || jd.get<std::size_t>() < 1) throw InputError("\"d\" must be a positive integer");
    const std::size_t d = jd.get<std::size_t>();
    const Json& jboxes = member(j, "boxes");
    if (!jboxes.is_array()) throw InputError("\"boxes\" must be an array");
    std::vector<Box> boxes;
    for (std::size_t k = 0; k < jboxes.size(); ++k) {
        const Json& jb = jboxes[k];
        const std::string where = "box " + std::to_string(k + 1);
        if (!jb.is_array() || jb.size() != d) {
            throw InputError(where + " must be a list of " + std::to_string(d) + " intervals");
        }
        std::vector<Interval> ivs;
        for (const auto& jiv : jb) {
            if (!jiv.is_array() || jiv.size() != 2 || !jiv[0].is_string() || !jiv[1].is_string()) {
                throw InputError(where + ": each interval is a pair of rational strings");
            }
            Rational lo = parse_rational(jiv[0].get<std::string>());
            Rational hi = parse_rational(jiv[1].get<std::string>());
            if (hi < lo) throw InputError(where + ": interval with lo > hi");
            ivs.emplace_back(Coord(lo), Coord(hi));
        }
        boxes.emplace_back(std::move(ivs));
    }
    return Tiling(d, std::move(boxes));
}

std::string write_tiling(const Tiling& t) { return tiling_to_json(t).dump() + "\n"; }

Tiling read_tiling(const std::string& text) { return tiling_from_json(parse(text)); }

Json realizer_to_json(const Realizer& r) {
    Json orders = Json::array();
    for (const auto& o : r.orders) orders.push_back(o);
    Json j;
    j["orders"] = std::move(orders);
    return j;
}

Realizer realizer_from_json(const Json& j) {
    const Json& jo = member(j, "orders");
    if (!jo.is_array()) throw InputError("\"orders\" must be an array");
    Realizer r;
    for (const auto& o : jo) r.orders.push_back(ids_from_json(o, "an order"));
    return r;
}

Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["vertices"] = c.vertices();
    Json faces = Json::array();
    for (const auto& f : c.maximal_faces()) faces.push_back(f);
    j["maximal_faces"] = std::move(faces);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    auto vertices = ids_from_json(member(j, "vertices"), "\"vertices\"");
    const Json& jf = member(j, "maximal_faces");
    if (!jf.is_array()) throw InputError("\"maximal_faces\" must be an array");
    std::vector<std::vector<BoxId>> faces;
    for (const auto& f : jf) faces.push_back(ids_from_json(f, "a face"));
    try {
        return SimplicialComplex(std::move(vertices), std::move(faces));
    } catch (const UsageError& e) {
        throw InputError(e.what());
    }
}

Json coord_to_json(const Coord& c) { return c.to_string(); }

Json box_to_json(const Box& b) {
    Json out = Json::array();
    for (const auto& iv : b.intervals()) out.push_back(Json::array({coord_to_json(iv.lo()), coord_to_json(iv.hi())}));
    return out;
}

Json point_to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& x : p) out.push_back(format_rational(x));
    return out;
}

Json report_to_json(const ExtendedTiling& t, const PropernessReport& r) {
    Json j;
    j["proper"] = r.proper;
    if (!r.witness) return j;
    auto labels = [&](const std::vector<BoxId>& ids) {
        Json out = Json::array();
        for (BoxId id : ids) out.push_back(t.label(id));
        return out;
    };
    Json w;
    if (auto* dw = std::get_if<DepthWitness>(&*r.witness)) {
        w["kind"] = "depth";
        w["point"] = point_to_json(dw->point);
        w["boxes"] = labels(dw->boxes);
    } else if (auto* pw = std::get_if<PairWitness>(&*r.witness)) {
        w["kind"] = "pair";
        w["boxes"] = labels({pw->a, pw->b});
        w["intersection"] = box_to_json(pw->intersection);
        w["dimension"] = pw->intersection.dimension();
    } else {
        const auto& fw = std::get<FamilyWitness>(*r.witness);
        w["kind"] = "family";
        w["boxes"] = labels(fw.boxes);
        w["intersection"] = box_to_json(fw.intersection);
        w["dimension"] = fw.intersection.dimension();
    }
    j["witness"] = std::move(w);
    return j;
}

Json separation_to_json(const ExtendedTiling& t, const Separation& s) {
    Json j;
    j["axis"] = s.axis + 1;
    j["level"] = coord_to_json(s.level);
    if (s.box_form) {
        j["box"] = box_to_json(*s.box_form);
    } else {
        Json pieces = Json::array();
        for (const auto& p : s.pieces()) pieces.push_back(box_to_json(p));
        j["pieces"] = std::move(pieces);
    }
    Json sides = Json::array();
    for (const auto& side : s.sides) {
        sides.push_back(t.label(side.owner) + std::string(1, sign_char(side.sign)));
    }
    j["sides"] = std::move(sides);
    return j;
}

}  // namespace tiledim::io
