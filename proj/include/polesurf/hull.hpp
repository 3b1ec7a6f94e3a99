#pragma once

#include <optional>

#include "polesurf/surface.hpp"

namespace polesurf {

/// True iff every pole-cycle corner has total angle >= pi, i.e. the complex
/// equals the convex core of the surface it defines.
bool is_core_convex(const Surface& s);

/// Repeatedly clips pole-cycle corners of angle < pi with shortcut edges
/// until the complex is convex.  Idempotent; preserves the stratum.
Surface hull_completion(const Surface& s);

/// Inverse of one completion step: merges triangle `tri` into the pole
/// domain across the side at position `side` (whose partner slot must lie on
/// a pole cycle), preserving all vertex angles and pole orders.
Surface excise_triangle(const Surface& s, int tri, int side);

/// Discriminant membership: some boundary corner of angle exactly pi whose
/// two incident saddle connections are homologically independent.
/// Precondition: is_core_convex.
bool in_discriminant(const Surface& s);
/// Variant that only requires the two edges at an angle-pi corner to be
/// distinct (the purely geometric reading).
bool in_discriminant_distinct_edges(const Surface& s);

enum class CoreShape {
    CoreIsCylinder,
    CoreIsTriangle,
    DegenerateTwoEdges,
    DegenerateSingleEdge,
    Other,
};

std::string core_shape_name(CoreShape s);

/// Canonical chamber invariant: the boundary graph of the core as an
/// embedded map (minimal encoding over relabelings), plus a coarse shape
/// tag with its case payload.  Invariant under apply_matrix; equality is a
/// necessary condition for two surfaces to share a chamber.
struct ChamberDescriptor {
    std::string canonical_code;
    CoreShape shape = CoreShape::Other;
    // CoreIsTriangle with a single pole: the three elementary-loop indices.
    std::vector<Rational> loop_indices;
    // DegenerateTwoEdges: sorted corner angle classes as (exact, k) with
    // angle == k*pi, or (interval, k) with angle strictly in (k*pi,(k+1)*pi).
    std::vector<std::pair<bool, long>> angle_classes;

    bool operator==(const ChamberDescriptor& o) const {
        return canonical_code == o.canonical_code && shape == o.shape &&
               loop_indices == o.loop_indices && angle_classes == o.angle_classes;
    }
};

/// Precondition: is_core_convex and not in_discriminant.
ChamberDescriptor chamber_descriptor(const Surface& s);

}  // namespace polesurf
