#pragma once

#include <string>

#include "polesurf/surface.hpp"

namespace polesurf {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Surface interchange format (JSON, exact field strings, no floats):
///   {
///     "disc": 2,
///     "vertices": ["v0"],
///     "edges": [{"id": "e0", "from": "v0", "to": "v0", "holonomy": ["1", "0"]}],
///     "triangles": [["e0+", "e1+", "e2-"]],
///     "pole_domains": [[{"edge": "e0", "sign": "-", "turns": 0}]]
///   }
std::string surface_to_json(const Surface& s);
SurfaceData surface_data_from_json(const std::string& text);
Surface surface_from_json(const std::string& text);

Surface load_surface_file(const std::string& path);
void save_surface_file(const Surface& s, const std::string& path);

}  // namespace polesurf
