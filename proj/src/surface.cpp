#include "polesurf/surface.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polesurf {

namespace {

std::string face_name(FaceRef f) {
    return (f.kind == FaceKind::Triangle ? "triangle " : "pole ") + std::to_string(f.index);
}

}  // namespace

std::string StratumSignature::to_string() const {
    std::ostringstream os;
    os << "Q(";
    for (size_t i = 0; i < zero_orders.size(); ++i) {
        if (i) os << ",";
        os << zero_orders[i];
    }
    for (size_t i = 0; i < pole_orders.size(); ++i) {
        os << ",-" << pole_orders[i];
    }
    os << ")";
    return os.str();
}

int Surface::face_size(FaceRef f) const {
    if (f.kind == FaceKind::Triangle) return 3;
    return static_cast<int>(data_.poles.at(f.index).entries.size());
}

Slot Surface::slot(FaceRef f, int pos) const {
    if (f.kind == FaceKind::Triangle) return data_.triangles.at(f.index).at(pos);
    return data_.poles.at(f.index).entries.at(pos).slot;
}

long Surface::slot_turns(FaceRef f, int pos) const {
    if (f.kind == FaceKind::Triangle) return 0;
    return data_.poles.at(f.index).entries.at(pos).turns;
}

SlotRef Surface::partner(const SlotRef& s) const {
    Slot sl = slot(s.face, s.pos);
    const auto& both = edge_slots_[sl.edge];
    if (both[0] == s) return both[1];
    return both[0];
}

int Surface::corner_vertex(const CornerRef& c) const {
    return slot_head(slot(c.face, c.pos));
}

AngleValue Surface::corner_angle(const CornerRef& c) const {
    int n = face_size(c.face);
    if (c.pos < 0 || c.pos >= n) throw PreconditionError("invalid corner reference");
    Slot arr = slot(c.face, c.pos);
    Slot dep = slot(c.face, (c.pos + 1) % n);
    return make_angle(displacement(arr), displacement(dep), slot_turns(c.face, c.pos));
}

std::vector<CornerRef> Surface::corners_of_face(FaceRef f) const {
    std::vector<CornerRef> out;
    for (int i = 0; i < face_size(f); ++i) out.push_back({f, i});
    return out;
}

std::vector<CornerRef> Surface::all_corners() const {
    std::vector<CornerRef> out;
    for (int t = 0; t < num_triangles(); ++t)
        for (auto& c : corners_of_face({FaceKind::Triangle, t})) out.push_back(c);
    for (int p = 0; p < num_poles(); ++p)
        for (auto& c : corners_of_face({FaceKind::Pole, p})) out.push_back(c);
    return out;
}

long Surface::total_pole_entries() const {
    long beta = 0;
    for (auto& p : data_.poles) beta += static_cast<long>(p.entries.size());
    return beta;
}

bool Surface::edge_on_boundary(int e) const {
    for (auto& s : edge_slots_[e])
        if (s.face.kind == FaceKind::Pole) return true;
    return false;
}

std::vector<int> Surface::boundary_edges() const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e)
        if (edge_on_boundary(e)) out.push_back(e);
    return out;
}

StratumSignature Surface::stratum_signature() const {
    StratumSignature sig;
    for (int v = 0; v < num_vertices(); ++v) sig.zero_orders.push_back(zero_order(v));
    for (int p = 0; p < num_poles(); ++p) sig.pole_orders.push_back(pole_order(p));
    std::sort(sig.zero_orders.rbegin(), sig.zero_orders.rend());
    std::sort(sig.pole_orders.rbegin(), sig.pole_orders.rend());
    sig.genus = genus_;
    return sig;
}

FieldElement Surface::core_area() const {
    FieldElement area(0);
    for (auto& t : data_.triangles) {
        Vec2 d1 = displacement(t[0]);
        Vec2 d2 = displacement(t[1]);
        area += cross(d1, d2);
    }
    return area / FieldElement(2);
}

Surface Surface::apply_matrix(const Mat2& m) const {
    if (m.det().sign() <= 0) throw PreconditionError("apply_matrix requires det > 0");
    SurfaceData d = data_;
    for (auto& e : d.edges) e.holonomy = m.apply(e.holonomy);
    return Surface::validate(std::move(d));
}

bool Surface::same_data(const Surface& o) const {
    if (data_.disc != o.data_.disc || data_.vertices != o.data_.vertices) return false;
    if (data_.edges.size() != o.data_.edges.size()) return false;
    for (size_t i = 0; i < data_.edges.size(); ++i) {
        const Edge& a = data_.edges[i];
        const Edge& b = o.data_.edges[i];
        if (a.name != b.name || a.from != b.from || a.to != b.to || a.holonomy != b.holonomy)
            return false;
    }
    auto slot_eq = [](const Slot& a, const Slot& b) { return a.edge == b.edge && a.sign == b.sign; };
    if (data_.triangles.size() != o.data_.triangles.size()) return false;
    for (size_t i = 0; i < data_.triangles.size(); ++i)
        for (int k = 0; k < 3; ++k)
            if (!slot_eq(data_.triangles[i][k], o.data_.triangles[i][k])) return false;
    if (data_.poles.size() != o.data_.poles.size()) return false;
    for (size_t i = 0; i < data_.poles.size(); ++i) {
        const auto& a = data_.poles[i].entries;
        const auto& b = o.data_.poles[i].entries;
        if (a.size() != b.size()) return false;
        for (size_t k = 0; k < a.size(); ++k)
            if (!slot_eq(a[k].slot, b[k].slot) || a[k].turns != b[k].turns) return false;
    }
    return true;
}

Surface Surface::validate(SurfaceData data) {
    Surface s;
    s.data_ = std::move(data);
    const SurfaceData& d = s.data_;
    const int V = static_cast<int>(d.vertices.size());
    const int E = static_cast<int>(d.edges.size());
    const int T = static_cast<int>(d.triangles.size());
    const int P = static_cast<int>(d.poles.size());

    if (d.disc < 0 || (d.disc > 1 && [&] {
            for (long f = 2; f * f <= d.disc; ++f)
                if (d.disc % (f * f) == 0) return true;
            return false;
        }()))
        throw ValidationError(ValidationCode::MixedField, "discriminant must be square-free");

    for (int e = 0; e < E; ++e) {
        const Edge& ed = d.edges[e];
        if (ed.from < 0 || ed.from >= V || ed.to < 0 || ed.to >= V)
            throw ValidationError(ValidationCode::BadReference,
                                  "edge " + ed.name + " has invalid endpoints");
        if (ed.holonomy.is_zero())
            throw ValidationError(ValidationCode::ZeroHolonomy,
                                  "edge " + ed.name + " has zero holonomy");
        for (const FieldElement* fe : {&ed.holonomy.x, &ed.holonomy.y}) {
            if (!fe->is_rational() && fe->disc() != d.disc)
                throw ValidationError(ValidationCode::MixedField,
                                      "edge " + ed.name + " holonomy outside field rt(" +
                                          std::to_string(d.disc) + ")");
        }
    }

    // Slot table: every edge in exactly two face-boundary slots.
    s.edge_slots_.assign(E, {});
    std::vector<int> slot_count(E, 0);
    auto add_slot = [&](FaceRef f, int pos, const Slot& sl) {
        if (sl.edge < 0 || sl.edge >= E)
            throw ValidationError(ValidationCode::BadReference,
                                  face_name(f) + " references unknown edge");
        if (sl.sign != 1 && sl.sign != -1)
            throw ValidationError(ValidationCode::BadReference, face_name(f) + " has bad sign");
        if (slot_count[sl.edge] >= 2)
            throw ValidationError(ValidationCode::UnmatchedEdgeSlot,
                                  "edge " + d.edges[sl.edge].name + " appears in more than two slots");
        s.edge_slots_[sl.edge][slot_count[sl.edge]++] = SlotRef{f, pos};
    };
    for (int t = 0; t < T; ++t)
        for (int k = 0; k < 3; ++k) add_slot({FaceKind::Triangle, t}, k, d.triangles[t][k]);
    for (int p = 0; p < P; ++p) {
        if (d.poles[p].entries.empty())
            throw ValidationError(ValidationCode::BadReference,
                                  "pole cycle " + std::to_string(p) + " is empty");
        for (size_t k = 0; k < d.poles[p].entries.size(); ++k) {
            const PoleEntry& en = d.poles[p].entries[k];
            if (en.turns < 0)
                throw ValidationError(ValidationCode::NegativeTurns,
                                      "negative turns in pole cycle " + std::to_string(p));
            add_slot({FaceKind::Pole, p}, static_cast<int>(k), en.slot);
        }
    }
    for (int e = 0; e < E; ++e)
        if (slot_count[e] != 2)
            throw ValidationError(ValidationCode::UnmatchedEdgeSlot,
                                  "edge " + d.edges[e].name + " appears in " +
                                      std::to_string(slot_count[e]) + " slots, expected 2");

    // Triangles close, are positively oriented, and have corners in (0, pi).
    for (int t = 0; t < T; ++t) {
        Vec2 sum = s.displacement(d.triangles[t][0]) + s.displacement(d.triangles[t][1]) +
                   s.displacement(d.triangles[t][2]);
        if (!sum.is_zero())
            throw ValidationError(ValidationCode::OpenTriangle,
                                  "triangle " + std::to_string(t) + " does not close");
        for (int k = 0; k < 3; ++k) {
            Vec2 u = s.displacement(d.triangles[t][k]);
            Vec2 w = s.displacement(d.triangles[t][(k + 1) % 3]);
            if (cross(u, w).sign() <= 0)
                throw ValidationError(ValidationCode::NegativelyOrientedTriangle,
                                      "triangle " + std::to_string(t) +
                                          " is not positively oriented");
        }
    }

    // Endpoint chaining around every face.
    auto check_chain = [&](FaceRef f) {
        int n = s.face_size(f);
        for (int k = 0; k < n; ++k) {
            Slot a = s.slot(f, k);
            Slot b = s.slot(f, (k + 1) % n);
            if (s.slot_head(a) != s.slot_tail(b))
                throw ValidationError(ValidationCode::EndpointMismatch,
                                      face_name(f) + " slots " + std::to_string(k) + "," +
                                          std::to_string((k + 1) % n) +
                                          " do not meet at a common vertex");
        }
    };
    for (int t = 0; t < T; ++t) check_chain({FaceKind::Triangle, t});
    for (int p = 0; p < P; ++p) check_chain({FaceKind::Pole, p});

    // Vertex links: walk corners around each vertex and add up half-turns.
    std::map<CornerRef, bool> visited;
    for (auto& c : s.all_corners()) visited[c] = false;
    s.vertex_count_.assign(V, 0);
    s.links_.assign(V, {});
    for (auto& [start, seen0] : visited) {
        if (seen0) continue;
        int v = s.corner_vertex(start);
        CornerRef cur = start;
        while (true) {
            if (visited.at(cur)) {
                if (!(cur == start))
                    throw ValidationError(ValidationCode::EndpointMismatch,
                                          "vertex link walk collapsed unexpectedly");
                break;
            }
            visited.at(cur) = true;
            if (s.corner_vertex(cur) != v)
                throw ValidationError(ValidationCode::EndpointMismatch,
                                      "vertex link of " + d.vertices[v] + " is inconsistent");
            AngleValue a = s.corner_angle(cur);
            s.vertex_count_[v] += corner_count(a.arrival, a.departure, a.turns);
            s.links_[v].push_back(cur);
            // Cross the departure slot to the corner after its partner.
            int n = s.face_size(cur.face);
            SlotRef dep{cur.face, (cur.pos + 1) % n};
            SlotRef par = s.partner(dep);
            if (s.slot_head(s.slot(par.face, par.pos)) != v)
                throw ValidationError(ValidationCode::EndpointMismatch,
                                      "edge " + d.edges[s.slot(dep.face, dep.pos).edge].name +
                                          " gluing is inconsistent at vertex " + d.vertices[v]);
            cur = CornerRef{par.face, par.pos};
        }
    }
    for (int v = 0; v < V; ++v) {
        long k = s.vertex_count_[v];
        if (s.links_[v].empty())
            throw ValidationError(ValidationCode::BadReference,
                                  "vertex " + d.vertices[v] + " is isolated");
        if (k == 2)
            throw ValidationError(ValidationCode::MarkedPoint,
                                  "vertex " + d.vertices[v] + " has angle 2*pi (marked point)");
        if (k < 1)
            throw ValidationError(ValidationCode::BadConeAngle,
                                  "vertex " + d.vertices[v] + " has non-positive cone angle");
    }

    // Pole orders by polygonal Gauss-Bonnet: b = 2 - c + (sum of angles)/pi.
    s.pole_order_.assign(P, 0);
    for (int p = 0; p < P; ++p) {
        long c = static_cast<long>(d.poles[p].entries.size());
        long sum = 0;
        for (auto& corner : s.corners_of_face({FaceKind::Pole, p})) {
            AngleValue a = s.corner_angle(corner);
            sum += corner_count(a.arrival, a.departure, a.turns);
        }
        long b = 2 - c + sum;
        if (b < 2)
            throw ValidationError(ValidationCode::PoleOrderTooSmall,
                                  "pole cycle " + std::to_string(p) + " has order " +
                                      std::to_string(b) + " < 2");
        if (b == 2) {
            Vec2 translation{FieldElement(0), FieldElement(0)};
            for (auto& en : d.poles[p].entries) translation = translation + s.displacement(en.slot);
            if (translation.is_zero())
                throw ValidationError(ValidationCode::ClosedBoundaryDevelopment,
                                      "order-2 pole cycle " + std::to_string(p) +
                                          " has closed boundary development");
        }
        s.pole_order_[p] = b;
    }

    // Connectivity of the complex (faces joined across shared edges).
    {
        int nfaces = T + P;
        std::vector<int> parent(nfaces);
        for (int i = 0; i < nfaces; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto linear = [&](FaceRef f) {
            return f.kind == FaceKind::Triangle ? f.index : T + f.index;
        };
        for (int e = 0; e < E; ++e)
            parent[find(linear(s.edge_slots_[e][0].face))] = find(linear(s.edge_slots_[e][1].face));
        int comps = 0;
        for (int i = 0; i < nfaces; ++i)
            if (find(i) == i) ++comps;
        if (nfaces > 0 && comps != 1)
            throw ValidationError(ValidationCode::Disconnected,
                                  "complex has " + std::to_string(comps) + " components");
    }

    // Genus from V - E + T = 2 - 2g - p.
    long chi = static_cast<long>(V) - E + T;
    long twog = 2 - P - chi;
    if (twog < 0 || twog % 2 != 0)
        throw ValidationError(ValidationCode::BadGenus,
                              "V - E + T = " + std::to_string(chi) +
                                  " gives non-integral or negative genus");
    s.genus_ = twog / 2;

    if (V == 0 || P == 0)
        throw ValidationError(ValidationCode::StandingAssumptions,
                              "need at least one conical singularity and one pole");
    if (s.genus_ == 0 && V + P < 3)
        throw ValidationError(ValidationCode::StandingAssumptions,
                              "genus zero requires n + p >= 3");
    StratumSignature sig = s.stratum_signature();
    if (sig.dimension() < 1)
        throw ValidationError(ValidationCode::StandingAssumptions, "stratum dimension < 1");

    // Gauss-Bonnet cross-check; the count identity makes this automatic.
    long lhs = 0;
    for (int v = 0; v < V; ++v) lhs += s.zero_order(v);
    for (int p = 0; p < P; ++p) lhs -= s.pole_order_[p];
    if (lhs != 4 * s.genus_ - 4)
        throw ValidationError(ValidationCode::NonIntegralAngle,
                              "Gauss-Bonnet mismatch: sum a - sum b = " + std::to_string(lhs) +
                                  ", expected " + std::to_string(4 * s.genus_ - 4));

    return s;
}

}  // namespace polesurf
