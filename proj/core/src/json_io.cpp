#include "kneserlab/json_io.hpp"

namespace kneserlab {

namespace {

json mask_to_json(Mask m) { return json(mask_elements(m)); }

std::vector<Mask> masks_from_json(const json& arr, int n) {
    std::vector<Mask> out;
    for (const auto& s : arr)
        out.push_back(mask_from_elements(s.get<std::vector<int>>(), n));
    return out;
}

} // namespace

json to_json(const SetSystem& F) {
    json sets = json::array();
    for (Mask m : F.sets) sets.push_back(mask_to_json(m));
    return json{{"n", F.n}, {"sets", sets}};
}

SetSystem setsystem_from_json(const json& j) {
    int n = j.at("n").get<int>();
    return SetSystem(n, masks_from_json(j.at("sets"), n));
}

json to_json(const Hypergraph& H) {
    json labels = json::array();
    for (Mask m : H.labels) labels.push_back(mask_to_json(m));
    return json{{"num_vertices", H.num_vertices},
                {"r", H.r},
                {"hyperedges", H.hyperedges},
                {"labels", labels}};
}

Hypergraph hypergraph_from_json(const json& j) {
    Hypergraph H;
    H.num_vertices = j.at("num_vertices").get<int>();
    H.r = j.at("r").get<int>();
    H.hyperedges = j.at("hyperedges").get<std::vector<std::vector<int>>>();
    if (j.contains("labels") && !j["labels"].empty()) {
        int ground = 0;
        for (const auto& s : j["labels"])
            for (int e : s.get<std::vector<int>>()) ground = std::max(ground, e);
        H.label_ground = ground;
        H.labels = masks_from_json(j["labels"], ground);
    }
    H.validate();
    return H;
}

json to_json(const Coloring& col) {
    return json{{"colors", col.colors}};
}

Coloring coloring_from_json(const json& j) {
    Coloring col;
    col.colors = j.at("colors").get<std::vector<int>>();
    for (int c : col.colors) col.c = std::max(col.c, c);
    return col;
}

json to_json(const PointConfig& cfg) {
    json pts = json::array();
    for (const auto& p : cfg.points) {
        json coords = json::array();
        for (const Rational& q : p) coords.push_back(format_rational(q));
        pts.push_back(coords);
    }
    return json{{"d", cfg.d}, {"points", pts}};
}

PointConfig pointconfig_from_json(const json& j) {
    PointConfig cfg;
    cfg.d = j.at("d").get<int>();
    for (const auto& p : j.at("points")) {
        std::vector<Rational> coords;
        for (const auto& q : p) coords.push_back(parse_rational(q.get<std::string>()));
        cfg.points.push_back(std::move(coords));
    }
    cfg.validate();
    return cfg;
}

json to_json(const SimplicialComplex& K) {
    json facets = json::array();
    for (Mask f : K.facets) facets.push_back(mask_to_json(f));
    return json{{"n", K.n}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    int n = j.at("n").get<int>();
    return SimplicialComplex::make(n, masks_from_json(j.at("facets"), n));
}

json to_json(const BettiVector& bv) {
    std::string field = bv.field.rationals ? "Q" : "GF(" + std::to_string(bv.field.p) + ")";
    return json{{"field", field}, {"betti", bv.betti}};
}

json to_json(const DefectWitness& w) {
    json parts = json::array();
    for (Mask p : w.parts) parts.push_back(mask_to_json(p));
    return json{{"cd", w.value}, {"witness", parts}};
}

} // namespace kneserlab
