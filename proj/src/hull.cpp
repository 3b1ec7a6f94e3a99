#include "polesurf/hull.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polesurf/cover.hpp"

namespace polesurf {

namespace {

bool corner_violates(const AngleValue& a) { return a.lt_pi(); }

std::string fresh_edge_name(const SurfaceData& d, int& counter) {
    std::set<std::string> used;
    for (auto& e : d.edges) used.insert(e.name);
    while (true) {
        std::string name = "h" + std::to_string(counter++);
        if (!used.count(name)) return name;
    }
}

long derive_turns(long target_count, int base_count, const std::string& where) {
    long diff = target_count - base_count;
    if (diff < 0 || diff % 2 != 0)
        throw PreconditionError("inconsistent corner bookkeeping in " + where);
    return diff / 2;
}

}  // namespace

bool is_core_convex(const Surface& s) {
    for (int p = 0; p < s.num_poles(); ++p)
        for (auto& c : s.corners_of_face({FaceKind::Pole, p}))
            if (corner_violates(s.corner_angle(c))) return false;
    return true;
}

Surface hull_completion(const Surface& s) {
    Surface cur = s;
    int name_counter = 0;
    while (true) {
        // Lexicographically smallest violating (pole, corner).
        int pole = -1, pos = -1;
        for (int p = 0; p < cur.num_poles() && pole < 0; ++p) {
            for (auto& c : cur.corners_of_face({FaceKind::Pole, p})) {
                if (corner_violates(cur.corner_angle(c))) {
                    pole = p;
                    pos = c.pos;
                    break;
                }
            }
        }
        if (pole < 0) return cur;

        SurfaceData d = cur.data();
        PoleCycle& cyc = d.poles[pole];
        const int len = static_cast<int>(cyc.entries.size());
        const int jpos = pos;
        const int jnext = (pos + 1) % len;
        PoleEntry ej = cyc.entries[jpos];
        PoleEntry ejn = cyc.entries[jnext];
        Vec2 u = cur.displacement(ej.slot);
        Vec2 w = cur.displacement(ejn.slot);
        Vec2 chord = u + w;

        Edge ne;
        ne.name = fresh_edge_name(d, name_counter);
        ne.from = cur.slot_tail(ej.slot);
        ne.to = cur.slot_head(ejn.slot);
        ne.holonomy = chord;
        int chord_id = static_cast<int>(d.edges.size());
        d.edges.push_back(ne);

        // New triangle carved from the pole domain, in the pole's chart.
        d.triangles.push_back(Triangle{ej.slot, ejn.slot, Slot{chord_id, -1}});

        int tri_head = corner_count(w, -chord, 0);  // triangle corner at head of e_{j+1}
        int tri_tail = corner_count(-chord, u, 0);  // triangle corner at tail of e_j

        if (len == 2) {
            const PoleEntry& other = cyc.entries[jnext];
            long other_total = corner_count(w, u, other.turns);
            int base = corner_count(chord, chord, 0);
            long m = derive_turns(other_total - tri_head - tri_tail, base, "hull_completion");
            cyc.entries = {PoleEntry{Slot{chord_id, 1}, m}};
        } else {
            const int jprev = (jpos + len - 1) % len;
            PoleEntry& prev = cyc.entries[jprev];
            long next_total = corner_count(w, cur.displacement(cyc.entries[(jnext + 1) % len].slot),
                                           ejn.turns);
            int next_base =
                corner_count(chord, cur.displacement(cyc.entries[(jnext + 1) % len].slot), 0);
            long m_new = derive_turns(next_total - tri_head, next_base, "hull_completion");
            long prev_total = corner_count(cur.displacement(prev.slot), u, prev.turns);
            int prev_base = corner_count(cur.displacement(prev.slot), chord, 0);
            prev.turns = derive_turns(prev_total - tri_tail, prev_base, "hull_completion");
            std::vector<PoleEntry> entries;
            for (int i = 0; i < len; ++i) {
                if (i == jpos) {
                    entries.push_back(PoleEntry{Slot{chord_id, 1}, m_new});
                } else if (i == jnext) {
                    continue;
                } else {
                    entries.push_back(cyc.entries[i]);
                }
            }
            cyc.entries = std::move(entries);
        }
        cur = Surface::validate(std::move(d));
    }
}

Surface excise_triangle(const Surface& s, int tri, int side) {
    if (tri < 0 || tri >= s.num_triangles() || side < 0 || side >= 3)
        throw PreconditionError("excise_triangle: bad reference");
    SlotRef tslot{{FaceKind::Triangle, tri}, side};
    SlotRef pref = s.partner(tslot);
    if (pref.face.kind != FaceKind::Pole)
        throw PreconditionError("excise_triangle: side is not on a pole cycle");

    const Triangle& t = s.data().triangles[tri];
    Slot lslot = t[side];
    Slot a = t[(side + 1) % 3];
    Slot b = t[(side + 2) % 3];
    Slot pole_slot = s.slot(pref.face, pref.pos);
    // Chart sign between the triangle and the pole: opposite traversal signs
    // mean the charts agree (translation gluing), equal signs mean a flip.
    int eps = (pole_slot.sign == -lslot.sign) ? 1 : -1;

    Vec2 da = s.displacement(a);
    Vec2 db = s.displacement(b);
    Vec2 dl = s.displacement(lslot);
    int tri_at_entry = corner_count(dl, da, 0);   // corner between l and a
    int tri_mid = corner_count(da, db, 0);        // corner between a and b
    int tri_at_exit = corner_count(db, dl, 0);    // corner between b and l

    SurfaceData d = s.data();
    PoleCycle& cyc = d.poles[pref.face.index];
    const int len = static_cast<int>(cyc.entries.size());
    const int q = pref.pos;
    long old_q_turns = cyc.entries[q].turns;
    Vec2 pole_dl = s.displacement(pole_slot);

    Slot na{a.edge, eps * a.sign};
    Slot nb{b.edge, eps * b.sign};
    Vec2 nda = da * FieldElement(eps);
    Vec2 ndb = db * FieldElement(eps);

    long m_a, m_b;  // turns stored on the two replacement entries
    if (len == 1) {
        long old_total = corner_count(pole_dl, pole_dl, old_q_turns);
        int base = corner_count(ndb, nda, 0);
        m_b = derive_turns(old_total + tri_at_entry + tri_at_exit, base, "excise_triangle");
        m_a = derive_turns(tri_mid, corner_count(nda, ndb, 0), "excise_triangle");
        cyc.entries = {PoleEntry{na, m_a}, PoleEntry{nb, m_b}};
    } else {
        const int qprev = (q + len - 1) % len;
        const int qnext = (q + 1) % len;
        PoleEntry& prev = cyc.entries[qprev];
        Vec2 dprev = s.displacement(prev.slot);
        Vec2 dnext = s.displacement(cyc.entries[qnext].slot);
        long prev_total = corner_count(dprev, pole_dl, prev.turns);
        prev.turns = derive_turns(prev_total + tri_at_entry, corner_count(dprev, nda, 0),
                                  "excise_triangle");
        m_a = derive_turns(tri_mid, corner_count(nda, ndb, 0), "excise_triangle");
        long exit_total = corner_count(pole_dl, dnext, old_q_turns);
        m_b = derive_turns(exit_total + tri_at_exit, corner_count(ndb, dnext, 0),
                           "excise_triangle");
        std::vector<PoleEntry> entries;
        for (int i = 0; i < len; ++i) {
            if (i == q) {
                entries.push_back(PoleEntry{na, m_a});
                entries.push_back(PoleEntry{nb, m_b});
            } else {
                entries.push_back(cyc.entries[i]);
            }
        }
        cyc.entries = std::move(entries);
    }

    // Remove the triangle and the absorbed edge.
    d.triangles.erase(d.triangles.begin() + tri);
    int dead = lslot.edge;
    auto fix = [&](Slot& sl) {
        if (sl.edge > dead) --sl.edge;
    };
    d.edges.erase(d.edges.begin() + dead);
    for (auto& tt : d.triangles)
        for (auto& sl : tt) fix(sl);
    for (auto& pc : d.poles)
        for (auto& en : pc.entries) fix(en.slot);
    return Surface::validate(std::move(d));
}

namespace {

bool has_pi_corner(const Surface& s, bool(*edge_test)(const Surface&, int, int)) {
    for (int p = 0; p < s.num_poles(); ++p) {
        const auto& entries = s.data().poles[p].entries;
        int len = static_cast<int>(entries.size());
        for (int j = 0; j < len; ++j) {
            CornerRef c{{FaceKind::Pole, p}, j};
            if (!s.corner_angle(c).eq_pi()) continue;
            int e1 = entries[j].slot.edge;
            int e2 = entries[(j + 1) % len].slot.edge;
            if (edge_test(s, e1, e2)) return true;
        }
    }
    return false;
}

}  // namespace

bool in_discriminant(const Surface& s) {
    if (!is_core_convex(s))
        throw PreconditionError("in_discriminant requires a convex core; run hull_completion");
    return has_pi_corner(
        s, +[](const Surface& surf, int e1, int e2) { return !are_parallel(surf, e1, e2); });
}

bool in_discriminant_distinct_edges(const Surface& s) {
    if (!is_core_convex(s))
        throw PreconditionError("in_discriminant requires a convex core; run hull_completion");
    return has_pi_corner(s, +[](const Surface&, int e1, int e2) { return e1 != e2; });
}

std::string core_shape_name(CoreShape s) {
    switch (s) {
        case CoreShape::CoreIsCylinder: return "CoreIsCylinder";
        case CoreShape::CoreIsTriangle: return "CoreIsTriangle";
        case CoreShape::DegenerateTwoEdges: return "DegenerateTwoEdges";
        case CoreShape::DegenerateSingleEdge: return "DegenerateSingleEdge";
        case CoreShape::Other: return "Other";
    }
    return "Other";
}

namespace {

// (exact?, k): exact angle k*pi, or strictly inside (k*pi, (k+1)*pi).
std::pair<bool, long> angle_class_code(const AngleValue& a) {
    switch (a.cls) {
        case DeltaClass::Pi: return {true, 2 * a.turns + 1};
        case DeltaClass::TwoPi: return {true, 2 * a.turns + 2};
        case DeltaClass::Acute: return {false, 2 * a.turns};
        case DeltaClass::Reflex: return {false, 2 * a.turns + 1};
    }
    return {false, 0};
}

// Canonical string for the boundary map: pole cycles with per-entry
// (edge label, gluing parity on second sight, corner class, turns, vertex
// label), minimized over cycle order and rotations.
std::string canonical_boundary_code(const Surface& s) {
    const int P = s.num_poles();
    std::vector<int> perm(P);
    for (int i = 0; i < P; ++i) perm[i] = i;
    std::string best;
    do {
        std::vector<int> rot(P, 0);
        // Enumerate rotations cycle by cycle, depth-first.
        std::vector<int> sizes(P);
        long combos = 1;
        for (int i = 0; i < P; ++i) {
            sizes[i] = s.face_size({FaceKind::Pole, perm[i]});
            combos *= sizes[i];
        }
        for (long pick = 0; pick < combos; ++pick) {
            long rem = pick;
            for (int i = 0; i < P; ++i) {
                rot[i] = static_cast<int>(rem % sizes[i]);
                rem /= sizes[i];
            }
            std::map<int, int> edge_label, vertex_label;
            std::map<int, int> edge_first_sign;
            std::ostringstream os;
            for (int i = 0; i < P; ++i) {
                int p = perm[i];
                int n = sizes[i];
                os << "[";
                for (int k = 0; k < n; ++k) {
                    int pos = (rot[i] + k) % n;
                    Slot sl = s.slot({FaceKind::Pole, p}, pos);
                    AngleValue a = s.corner_angle({{FaceKind::Pole, p}, pos});
                    int v = s.corner_vertex({{FaceKind::Pole, p}, pos});
                    if (!edge_label.count(sl.edge)) {
                        int id = static_cast<int>(edge_label.size());
                        edge_label[sl.edge] = id;
                        edge_first_sign[sl.edge] = sl.sign;
                        os << "e" << id << ".";
                    } else {
                        os << "e" << edge_label[sl.edge]
                           << (sl.sign == edge_first_sign[sl.edge] ? "f" : "t") << ".";
                    }
                    if (!vertex_label.count(v)) vertex_label[v] = static_cast<int>(vertex_label.size());
                    auto cls = angle_class_code(a);
                    os << (cls.first ? "=" : "~") << cls.second << ".v" << vertex_label[v] << ";";
                }
                os << "]";
            }
            std::string code = os.str();
            if (best.empty() || code < best) best = code;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Cut-core Euler characteristic: vertex copies are maximal runs of triangle
// corners in each vertex link.
long cut_core_vertex_copies(const Surface& s) {
    long copies = 0;
    for (int v = 0; v < s.num_vertices(); ++v) {
        const auto& link = s.vertex_links()[v];
        int pole_corners = 0;
        for (auto& c : link)
            if (c.face.kind == FaceKind::Pole) ++pole_corners;
        if (pole_corners == 0) {
            copies += 1;
            continue;
        }
        // Runs of consecutive triangle corners between pole corners equal the
        // number of pole corners minus empty runs.
        int n = static_cast<int>(link.size());
        int runs = 0;
        for (int i = 0; i < n; ++i) {
            bool tri = link[i].face.kind == FaceKind::Triangle;
            bool prev_pole = link[(i + n - 1) % n].face.kind == FaceKind::Pole;
            if (tri && prev_pole) ++runs;
        }
        copies += runs;
    }
    return copies;
}

bool triangles_connected(const Surface& s) {
    int T = s.num_triangles();
    if (T == 0) return false;
    std::vector<int> parent(T);
    for (int i = 0; i < T; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < s.num_edges(); ++e) {
        const auto& slots = s.slots_of_edge(e);
        if (slots[0].face.kind == FaceKind::Triangle && slots[1].face.kind == FaceKind::Triangle)
            parent[find(slots[0].face.index)] = find(slots[1].face.index);
    }
    int comps = 0;
    for (int i = 0; i < T; ++i)
        if (find(i) == i) ++comps;
    return comps == 1;
}

// Elementary loop through the single pole domain: leaves the core triangle
// through side i, hugs the pole boundary, and returns through side j.
Rational elementary_loop_index(const Surface& s, int side_i, int side_j) {
    FaceRef tri{FaceKind::Triangle, 0};
    // Midpoints of sides in the triangle's own development.
    Vec2 pos[4];
    pos[0] = Vec2(FieldElement(0), FieldElement(0));
    for (int k = 0; k < 3; ++k) pos[k + 1] = pos[k] + s.displacement(s.slot(tri, k));
    FieldElement half(Rational(1, 2));
    Vec2 mid_i = pos[side_i] + s.displacement(s.slot(tri, side_i)) * half;
    Vec2 mid_j = pos[side_j] + s.displacement(s.slot(tri, side_j)) * half;
    Vec2 chord = mid_j - mid_i;
    if (chord.is_zero()) throw PreconditionError("degenerate elementary loop chord");

    SlotRef pi = s.partner(SlotRef{tri, side_i});
    SlotRef pj = s.partner(SlotRef{tri, side_j});
    if (!(pi.face == pj.face) || pi.face.kind != FaceKind::Pole)
        throw PreconditionError("elementary loop requires both sides on one pole cycle");
    int P = pi.face.index;
    int len = s.face_size(pi.face);

    std::vector<AngleValue> loop;
    // Junction at mid_j: arrive along the chord, depart along the pole walk
    // (the walk direction is the reverse of the triangle's traversal).
    loop.push_back(make_angle(chord, -s.displacement(s.slot(tri, side_j)), 0));
    for (int k = pj.pos; ; k = (k + 1) % len) {
        if (k == pi.pos) break;
        loop.push_back(s.corner_angle({{FaceKind::Pole, P}, k}));
    }
    // Junction at mid_i: arrive along the pole walk of side i, depart along
    // the chord; express the chord in the pole's chart.
    Slot tri_slot_i = s.slot(tri, side_i);
    Slot pole_slot_i = s.slot(pi.face, pi.pos);
    int eps = (pole_slot_i.sign == -tri_slot_i.sign) ? 1 : -1;
    loop.push_back(make_angle(s.displacement(pole_slot_i), chord * FieldElement(eps), 0));
    return path_index(loop);
}

}  // namespace

ChamberDescriptor chamber_descriptor(const Surface& s) {
    if (!is_core_convex(s))
        throw PreconditionError("chamber_descriptor requires a convex core");
    if (in_discriminant(s))
        throw PreconditionError("chamber descriptor undefined on the discriminant");

    ChamberDescriptor out;
    out.canonical_code = canonical_boundary_code(s);

    const int T = s.num_triangles();
    const int E = s.num_edges();
    bool hairless = true;
    for (int e = 0; e < E; ++e) {
        const auto& slots = s.slots_of_edge(e);
        if (slots[0].face.kind == FaceKind::Pole && slots[1].face.kind == FaceKind::Pole)
            hairless = false;
    }

    if (T == 0 && E == 1) {
        out.shape = CoreShape::DegenerateSingleEdge;
        return out;
    }
    if (T == 0 && E == 2) {
        out.shape = CoreShape::DegenerateTwoEdges;
        for (int p = 0; p < s.num_poles(); ++p)
            for (auto& c : s.corners_of_face({FaceKind::Pole, p}))
                out.angle_classes.push_back(angle_class_code(s.corner_angle(c)));
        std::sort(out.angle_classes.begin(), out.angle_classes.end());
        return out;
    }
    if (T == 1 && hairless) {
        out.shape = CoreShape::CoreIsTriangle;
        // Loop indices are defined when all three sides border one pole.
        bool single_pole = true;
        FaceRef pole0 = s.partner(SlotRef{{FaceKind::Triangle, 0}, 0}).face;
        for (int k = 1; k < 3; ++k)
            if (!(s.partner(SlotRef{{FaceKind::Triangle, 0}, k}).face == pole0)) single_pole = false;
        if (single_pole && pole0.kind == FaceKind::Pole) {
            out.loop_indices.push_back(elementary_loop_index(s, 0, 1));
            out.loop_indices.push_back(elementary_loop_index(s, 1, 2));
            out.loop_indices.push_back(elementary_loop_index(s, 2, 0));
            std::sort(out.loop_indices.begin(), out.loop_indices.end());
        }
        return out;
    }
    if (T > 0 && hairless && triangles_connected(s)) {
        long chi_cut = cut_core_vertex_copies(s) - E + T;
        if (chi_cut == 0) {
            out.shape = CoreShape::CoreIsCylinder;
            return out;
        }
    }
    out.shape = CoreShape::Other;
    return out;
}

}  // namespace polesurf
