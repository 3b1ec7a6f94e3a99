#pragma once

#include <optional>

#include "polesurf/delaunay.hpp"
#include "polesurf/surface.hpp"

namespace polesurf {

/// Flat-isomorphism certificate on the canonical Delaunay cell complexes of
/// the two surfaces: bijections of vertices, canonical edges (with per-edge
/// sign), cells and pole cycles.
struct Correspondence {
    std::vector<int> vertex_map;                       // a-vertex -> b-vertex
    std::vector<std::pair<int, int>> edge_map;         // a-edge -> (b-edge, sign)
    std::vector<int> face_map;                         // a-face -> b-face
    std::vector<std::string> edge_names_a, edge_names_b;
};

/// Deterministic seed-and-propagate search for a flat isometry respecting
/// the half-translation structure.  Surfaces are first put in canonical
/// Delaunay cell form, so differently triangulated presentations of the
/// same flat surface compare equal.
std::optional<Correspondence> is_isomorphic(const Surface& a, const Surface& b);

enum class VeechVariant { Finite, CyclicParabolic, Continuous };

std::string veech_variant_name(VeechVariant v);

struct VeechGroupDescription {
    VeechVariant variant = VeechVariant::Finite;
    long order = 1;                          // projective order, Finite only
    std::optional<Mat2> generator;           // Finite k>1 or CyclicParabolic
    std::vector<Mat2> elements;              // verified elements mod +-Id
    std::optional<Mat2> conjugating_frame;   // Continuous, or Finite k<=6
    std::optional<FieldElement> shear;       // CyclicParabolic witness s
    std::vector<FieldElement> moduli;        // cylinder moduli witness
    bool caveat = false;                     // a dynamics call was unresolved
};

VeechGroupDescription veech_group(const Surface& s, long trace_bound = 10000);

/// Theorem 2.2 predicate, decided through the independent route: degenerate
/// core with all saddle connections in one direction.
bool gl2_orbit_closed(const Surface& s);

enum class TriState { False, True, Unresolved };

TriState sl2_orbit_closed(const Surface& s, long trace_bound = 10000);

}  // namespace polesurf
