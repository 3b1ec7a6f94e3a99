#pragma once

#include "polesurf/surface.hpp"

namespace polesurf {

/// Sign of the incircle test: > 0 when d lies strictly inside the
/// circumcircle of the ccw triangle (a, b, c).
int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Retriangulates the core by Delaunay flips of interior edges.  Boundary
/// edges and pole data are untouched; co-circular configurations are left
/// as they fall (flips happen only on strictly non-Delaunay edges).
Surface delaunay_retriangulate(const Surface& s);

/// The canonical Delaunay cell decomposition: triangles merged across
/// degenerate (co-circular) interior edges into polygon cells.  This is the
/// canonical object on which flat isomorphism is decided.
struct CellFace {
    bool is_pole = false;
    // Boundary slots in cyclic order.  Signs are chart signs within the
    // cell's own development (for pole faces, the stored pole data).
    std::vector<Slot> slots;
    std::vector<long> turns;     // per corner; zero on cells
    std::vector<int> vertices;   // head vertex per slot
};

struct CellComplex {
    long disc = 0;
    int num_vertices = 0;
    std::vector<Vec2> holonomy;                    // kept edges, reindexed
    std::vector<std::string> edge_names;           // of the kept edges
    std::vector<CellFace> faces;                   // cells first, then poles
    std::vector<std::array<std::pair<int, int>, 2>> edge_slots;  // (face, pos)
};

CellComplex delaunay_cells(const Surface& s);

}  // namespace polesurf
