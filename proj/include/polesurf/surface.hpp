#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "polesurf/field.hpp"
#include "polesurf/turning.hpp"

namespace polesurf {

enum class ValidationCode {
    MixedField,
    ZeroHolonomy,
    BadReference,
    UnmatchedEdgeSlot,
    OpenTriangle,
    NegativelyOrientedTriangle,
    EndpointMismatch,
    NonIntegralAngle,
    MarkedPoint,
    BadConeAngle,
    PoleOrderTooSmall,
    ClosedBoundaryDevelopment,
    BadGenus,
    StandingAssumptions,
    NegativeTurns,
    Disconnected,
};

struct ValidationError : std::runtime_error {
    ValidationCode code;
    ValidationError(ValidationCode c, const std::string& what)
        : std::runtime_error(what), code(c) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
    std::string name;
    int from = 0, to = 0;  // vertex indices
    Vec2 holonomy;         // with respect to the edge orientation from -> to
};

struct Slot {
    int edge = 0;
    int sign = 1;  // displacement along the face walk is sign * holonomy
};

using Triangle = std::array<Slot, 3>;

struct PoleEntry {
    Slot slot;
    long turns = 0;  // turns of the corner following this entry
};

struct PoleCycle {
    std::vector<PoleEntry> entries;
};

struct SurfaceData {
    long disc = 0;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    std::vector<PoleCycle> poles;
};

enum class FaceKind { Triangle, Pole };

struct FaceRef {
    FaceKind kind = FaceKind::Triangle;
    int index = 0;
    bool operator==(const FaceRef& o) const { return kind == o.kind && index == o.index; }
    bool operator<(const FaceRef& o) const {
        if (kind != o.kind) return kind < o.kind;
        return index < o.index;
    }
};

// Corner k of a face sits between slot k and slot k+1 (cyclically), at the
// head of slot k's traversal; its arrival vector is slot k's displacement
// and its departure vector is slot k+1's.
struct CornerRef {
    FaceRef face;
    int pos = 0;
    bool operator==(const CornerRef& o) const { return face == o.face && pos == o.pos; }
    bool operator<(const CornerRef& o) const {
        if (!(face == o.face)) return face < o.face;
        return pos < o.pos;
    }
};

struct SlotRef {
    FaceRef face;
    int pos = 0;
    bool operator==(const SlotRef& o) const { return face == o.face && pos == o.pos; }
};

struct StratumSignature {
    std::vector<long> zero_orders;  // multiset, sorted descending
    std::vector<long> pole_orders;  // multiset, sorted descending
    long genus = 0;
    long dimension() const {
        return 2 * genus + static_cast<long>(zero_orders.size()) +
               static_cast<long>(pole_orders.size()) - 2;
    }
    bool operator==(const StratumSignature& o) const {
        return zero_orders == o.zero_orders && pole_orders == o.pole_orders && genus == o.genus;
    }
    std::string to_string() const;
};

/// Validated immutable surface complex.  Construction via Surface::validate
/// checks every structural invariant and derives cone angles, pole orders,
/// genus and the stratum signature.
class Surface {
  public:
    static Surface validate(SurfaceData data);

    const SurfaceData& data() const { return data_; }
    long disc() const { return data_.disc; }
    int num_vertices() const { return static_cast<int>(data_.vertices.size()); }
    int num_edges() const { return static_cast<int>(data_.edges.size()); }
    int num_triangles() const { return static_cast<int>(data_.triangles.size()); }
    int num_poles() const { return static_cast<int>(data_.poles.size()); }
    const Edge& edge(int i) const { return data_.edges.at(i); }

    int face_size(FaceRef f) const;
    Slot slot(FaceRef f, int pos) const;
    long slot_turns(FaceRef f, int pos) const;  // 0 on triangles
    Vec2 displacement(const Slot& s) const {
        Vec2 h = data_.edges[s.edge].holonomy;
        return s.sign > 0 ? h : -h;
    }
    int slot_tail(const Slot& s) const {
        const Edge& e = data_.edges[s.edge];
        return s.sign > 0 ? e.from : e.to;
    }
    int slot_head(const Slot& s) const {
        const Edge& e = data_.edges[s.edge];
        return s.sign > 0 ? e.to : e.from;
    }

    const std::array<SlotRef, 2>& slots_of_edge(int e) const { return edge_slots_[e]; }
    SlotRef partner(const SlotRef& s) const;

    /// Corner at the given reference; throws PreconditionError when invalid.
    AngleValue corner_angle(const CornerRef& c) const;
    int corner_vertex(const CornerRef& c) const;
    std::vector<CornerRef> corners_of_face(FaceRef f) const;
    std::vector<CornerRef> all_corners() const;
    /// Corners around each vertex in link order (the order the walk visits).
    const std::vector<std::vector<CornerRef>>& vertex_links() const { return links_; }

    long cone_angle_half_turns(int v) const { return vertex_count_[v]; }  // total angle = K*pi
    long zero_order(int v) const { return vertex_count_[v] - 2; }         // a(v)
    long pole_order(int p) const { return pole_order_[p]; }               // b(D) >= 2

    long genus() const { return genus_; }
    StratumSignature stratum_signature() const;
    long total_pole_entries() const;  // beta

    /// True when the edge has at least one slot on a pole cycle.
    bool edge_on_boundary(int e) const;
    std::vector<int> boundary_edges() const;

    FieldElement core_area() const;

    Surface apply_matrix(const Mat2& m) const;

    /// Flat isometry-invariant equality of raw data (same labels and all).
    bool same_data(const Surface& o) const;

  private:
    Surface() = default;

    SurfaceData data_;
    std::vector<std::array<SlotRef, 2>> edge_slots_;
    std::vector<long> vertex_count_;  // K with total angle K*pi
    std::vector<long> pole_order_;
    std::vector<std::vector<CornerRef>> links_;
    long genus_ = 0;
};

}  // namespace polesurf
