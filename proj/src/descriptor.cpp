#include "stdcx/descriptor.hpp"

#include "stdcx/latpath.hpp"

namespace stdcx {

namespace {

FiniteSet finite_set_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string("descriptor: ") + what +
                                    " must be an array");
    return FiniteSet(j.get<std::vector<int>>());
}

}  // namespace

Matroid matroid_from_descriptor(const nlohmann::json& descriptor,
                                Matroid::Validation validation) {
    if (!descriptor.is_object() || !descriptor.contains("type"))
        throw std::invalid_argument("descriptor: expected an object with a \"type\"");
    const std::string type = descriptor.at("type").get<std::string>();
    if (type == "bases") {
        FiniteSet ground = finite_set_from_json(descriptor.at("groundset"), "groundset");
        FaceSet bases;
        for (const auto& b : descriptor.at("bases"))
            bases.insert(finite_set_from_json(b, "basis"));
        return Matroid::from_bases(std::move(ground), std::move(bases), validation);
    }
    if (type == "uniform") {
        return uniform_matroid(descriptor.at("n").get<int>(),
                               descriptor.at("r").get<int>());
    }
    if (type == "transversal") {
        FiniteSet ground = finite_set_from_json(descriptor.at("groundset"), "groundset");
        std::vector<FiniteSet> sets;
        for (const auto& s : descriptor.at("sets"))
            sets.push_back(finite_set_from_json(s, "system set"));
        return transversal_matroid(ground, sets);
    }
    if (type == "lattice_path") {
        auto upper = latpath::LatticePath::parse(descriptor.at("U").get<std::string>());
        auto lower = latpath::LatticePath::parse(descriptor.at("L").get<std::string>());
        return latpath::lpm(upper, lower);
    }
    throw std::invalid_argument("descriptor: unknown type \"" + type + "\"");
}

PointConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coords") || !j.contains("points"))
        throw std::invalid_argument("config: expected {\"coords\":[...],\"points\":[...]}");
    FiniteSet coords = finite_set_from_json(j.at("coords"), "coords");
    std::set<Point> points;
    for (const auto& p : j.at("points")) {
        if (!p.is_array()) throw std::invalid_argument("config: point must be an array");
        Point pt;
        for (const auto& bit : p) {
            int v = bit.get<int>();
            if (v != 0 && v != 1)
                throw std::invalid_argument("config: point entries must be 0 or 1");
            pt.push_back(static_cast<std::uint8_t>(v));
        }
        if (!points.insert(std::move(pt)).second)
            throw std::invalid_argument("config: duplicate point");
    }
    return PointConfig(std::move(coords), std::move(points));
}

nlohmann::json face_to_json(const FiniteSet& face) {
    return nlohmann::json(face.elements());
}

nlohmann::json complex_to_json(const SimplicialComplex& K) {
    nlohmann::json faces = nlohmann::json::array();
    for (const FiniteSet& f : K.canonical_faces()) faces.push_back(face_to_json(f));
    return faces;
}

}  // namespace stdcx
