#include "polesurf/surface_io.hpp"

#include <fstream>
#include <map>

#include "json.hpp"

namespace polesurf {

using nlohmann::ordered_json;

std::string surface_to_json(const Surface& s) {
    const SurfaceData& d = s.data();
    ordered_json j;
    j["disc"] = d.disc;
    j["vertices"] = d.vertices;
    ordered_json edges = ordered_json::array();
    for (auto& e : d.edges) {
        ordered_json je;
        je["id"] = e.name;
        je["from"] = d.vertices[e.from];
        je["to"] = d.vertices[e.to];
        je["holonomy"] = {e.holonomy.x.to_string(), e.holonomy.y.to_string()};
        edges.push_back(je);
    }
    j["edges"] = edges;
    ordered_json tris = ordered_json::array();
    for (auto& t : d.triangles) {
        ordered_json jt = ordered_json::array();
        for (auto& sl : t) jt.push_back(d.edges[sl.edge].name + (sl.sign > 0 ? "+" : "-"));
        tris.push_back(jt);
    }
    j["triangles"] = tris;
    ordered_json poles = ordered_json::array();
    for (auto& p : d.poles) {
        ordered_json jp = ordered_json::array();
        for (auto& en : p.entries) {
            ordered_json je;
            je["edge"] = d.edges[en.slot.edge].name;
            je["sign"] = en.slot.sign > 0 ? "+" : "-";
            je["turns"] = en.turns;
            jp.push_back(je);
        }
        poles.push_back(jp);
    }
    j["pole_domains"] = poles;
    return j.dump(2) + "\n";
}

SurfaceData surface_data_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("surface file: ") + e.what());
    }
    try {
        SurfaceData d;
        d.disc = j.at("disc").get<long>();
        std::map<std::string, int> vertex_index;
        for (auto& v : j.at("vertices")) {
            std::string name = v.get<std::string>();
            if (vertex_index.count(name)) throw ParseError("duplicate vertex " + name);
            vertex_index[name] = static_cast<int>(d.vertices.size());
            d.vertices.push_back(name);
        }
        std::map<std::string, int> edge_index;
        for (auto& je : j.at("edges")) {
            Edge e;
            e.name = je.at("id").get<std::string>();
            if (edge_index.count(e.name)) throw ParseError("duplicate edge " + e.name);
            auto vat = [&](const std::string& key) {
                std::string name = je.at(key).get<std::string>();
                auto it = vertex_index.find(name);
                if (it == vertex_index.end()) throw ParseError("unknown vertex " + name);
                return it->second;
            };
            e.from = vat("from");
            e.to = vat("to");
            auto h = je.at("holonomy");
            if (!h.is_array() || h.size() != 2) throw ParseError("holonomy must be a pair");
            e.holonomy = Vec2(FieldElement::parse(h[0].get<std::string>()),
                              FieldElement::parse(h[1].get<std::string>()));
            edge_index[e.name] = static_cast<int>(d.edges.size());
            d.edges.push_back(e);
        }
        auto parse_signed = [&](const std::string& tok) -> Slot {
            if (tok.size() < 2) throw ParseError("bad signed edge '" + tok + "'");
            char sign = tok.back();
            if (sign != '+' && sign != '-') throw ParseError("bad signed edge '" + tok + "'");
            std::string name = tok.substr(0, tok.size() - 1);
            auto it = edge_index.find(name);
            if (it == edge_index.end()) throw ParseError("unknown edge " + name);
            return Slot{it->second, sign == '+' ? 1 : -1};
        };
        for (auto& jt : j.at("triangles")) {
            if (!jt.is_array() || jt.size() != 3)
                throw ParseError("triangles must be triples of signed edge ids");
            Triangle t{parse_signed(jt[0].get<std::string>()),
                       parse_signed(jt[1].get<std::string>()),
                       parse_signed(jt[2].get<std::string>())};
            d.triangles.push_back(t);
        }
        for (auto& jp : j.at("pole_domains")) {
            PoleCycle p;
            for (auto& je : jp) {
                PoleEntry en;
                std::string name = je.at("edge").get<std::string>();
                auto it = edge_index.find(name);
                if (it == edge_index.end()) throw ParseError("unknown edge " + name);
                std::string sign = je.at("sign").get<std::string>();
                if (sign != "+" && sign != "-") throw ParseError("bad sign '" + sign + "'");
                en.slot = Slot{it->second, sign == "+" ? 1 : -1};
                en.turns = je.at("turns").get<long>();
                p.entries.push_back(en);
            }
            d.poles.push_back(p);
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("surface file: ") + e.what());
    } catch (const FieldError& e) {
        throw ParseError(std::string("surface file: ") + e.what());
    }
}

Surface surface_from_json(const std::string& text) {
    return Surface::validate(surface_data_from_json(text));
}

Surface load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return surface_from_json(text);
}

void save_surface_file(const Surface& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << surface_to_json(s);
}

}  // namespace polesurf
