#include "polesurf/delaunay.hpp"

#include <map>

namespace polesurf {

int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    auto row = [&](const Vec2& p, FieldElement out[3]) {
        out[0] = p.x - d.x;
        out[1] = p.y - d.y;
        out[2] = out[0] * out[0] + out[1] * out[1];
    };
    FieldElement r0[3], r1[3], r2[3];
    row(a, r0);
    row(b, r1);
    row(c, r2);
    FieldElement det = r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
                       r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
                       r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    return det.sign();
}

namespace {

bool edge_interior(const Surface& s, int e) {
    const auto& slots = s.slots_of_edge(e);
    return slots[0].face.kind == FaceKind::Triangle && slots[1].face.kind == FaceKind::Triangle;
}

struct Quad {
    // Developed quad around interior edge e: triangle F1 = (O, Pe, Pq) with
    // the edge from O to Pe, and F2 = (O, Pr, Pe) across it.
    Vec2 pe, pq, pr;
    int eps;  // chart sign of F2 relative to F1
    SlotRef s1, s2;
};

Quad develop_quad(const Surface& s, int e) {
    Quad q;
    const auto& slots = s.slots_of_edge(e);
    q.s1 = slots[0];
    q.s2 = slots[1];
    Slot sl1 = s.slot(q.s1.face, q.s1.pos);
    Slot sl2 = s.slot(q.s2.face, q.s2.pos);
    q.pe = s.displacement(sl1);
    Vec2 a1 = s.displacement(s.slot(q.s1.face, (q.s1.pos + 1) % 3));
    q.pq = q.pe + a1;
    // F2 traverses the edge from pe back to the origin.
    Vec2 d2 = s.displacement(sl2);
    q.eps = (sl2.sign == sl1.sign) ? -1 : 1;  // equal signs: flip gluing
    // eps * d2 must equal -pe.
    q.pr = Vec2(FieldElement(0), FieldElement(0)) + s.displacement(s.slot(q.s2.face, (q.s2.pos + 1) % 3)) * FieldElement(q.eps);
    (void)d2;
    return q;
}

}  // namespace

Surface delaunay_retriangulate(const Surface& s) {
    Surface cur = s;
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw PreconditionError("delaunay flip limit exceeded");
        int flip_edge = -1;
        Quad q;
        for (int e = 0; e < cur.num_edges() && flip_edge < 0; ++e) {
            if (!edge_interior(cur, e)) continue;
            q = develop_quad(cur, e);
            // F1 = (0, pe, pq) ccw; flip when pr is strictly inside its
            // circumcircle.
            Vec2 origin(FieldElement(0), FieldElement(0));
            if (incircle(origin, q.pe, q.pq, q.pr) > 0) flip_edge = e;
        }
        if (flip_edge < 0) return cur;

        SurfaceData d = cur.data();
        const int e = flip_edge;
        Slot sl1 = cur.slot(q.s1.face, q.s1.pos);
        // Slots of the two triangles beside e.
        Slot a1 = cur.slot(q.s1.face, (q.s1.pos + 1) % 3);
        Slot a2 = cur.slot(q.s1.face, (q.s1.pos + 2) % 3);
        Slot b1 = cur.slot(q.s2.face, (q.s2.pos + 1) % 3);
        Slot b2 = cur.slot(q.s2.face, (q.s2.pos + 2) % 3);

        // New diagonal from pq to pr (in F1's chart).
        Vec2 diag = q.pr - q.pq;
        if (diag.is_zero()) throw PreconditionError("degenerate flip diagonal");
        Edge& edge = d.edges[e];
        edge.holonomy = diag;
        edge.from = cur.slot_head(a1);
        edge.to = cur.slot_head(b1);

        int eps = q.eps;
        // Replacement triangles, both written in F1's chart:
        //   (pq, pr, pe):  e+ , eps*b2 , a1   walk pq->pr->pe->pq
        //   (pq, 0,  pr):  a2 , eps*b1 , e-   walk pq->0->pr->pq
        Triangle t1{Slot{e, 1}, Slot{b2.edge, eps * b2.sign}, Slot{a1.edge, a1.sign}};
        Triangle t2{Slot{a2.edge, a2.sign}, Slot{b1.edge, eps * b1.sign}, Slot{e, -1}};
        d.triangles[q.s1.face.index] = t1;
        d.triangles[q.s2.face.index] = t2;
        cur = Surface::validate(std::move(d));
    }
}

CellComplex delaunay_cells(const Surface& input) {
    Surface s = delaunay_retriangulate(input);
    const int E = s.num_edges();

    std::vector<bool> degenerate(E, false);
    for (int e = 0; e < E; ++e) {
        if (!edge_interior(s, e)) continue;
        Quad q = develop_quad(s, e);
        Vec2 origin(FieldElement(0), FieldElement(0));
        if (incircle(origin, q.pe, q.pq, q.pr) == 0) degenerate[e] = true;
    }

    CellComplex out;
    out.disc = s.disc();
    out.num_vertices = s.num_vertices();
    std::map<int, int> edge_index;
    auto keep_edge = [&](int e) {
        auto it = edge_index.find(e);
        if (it != edge_index.end()) return it->second;
        int id = static_cast<int>(out.holonomy.size());
        edge_index[e] = id;
        out.holonomy.push_back(s.edge(e).holonomy);
        out.edge_names.push_back(s.edge(e).name);
        out.edge_slots.push_back({});
        return id;
    };

    // Walk cells: start from any non-degenerate triangle slot not yet seen.
    std::map<std::pair<int, int>, bool> seen;  // (triangle, pos)
    std::vector<int> slot_fill;
    auto record_slot = [&](int edge_id, int face, int pos) {
        slot_fill.resize(out.holonomy.size(), 0);
        out.edge_slots[edge_id][slot_fill[edge_id]] = {face, pos};
        ++slot_fill[edge_id];
    };

    for (int t = 0; t < s.num_triangles(); ++t) {
        for (int k = 0; k < 3; ++k) {
            Slot sl = s.slot({FaceKind::Triangle, t}, k);
            if (degenerate[sl.edge] || seen.count({t, k})) continue;
            // New cell: walk the merged boundary starting at (t, k).
            CellFace cell;
            cell.is_pole = false;
            int ct = t, ck = k;
            int chart = 1;
            int guard = 0;
            while (true) {
                if (++guard > 100000) throw PreconditionError("cell walk diverged");
                Slot csl = s.slot({FaceKind::Triangle, ct}, ck);
                if (seen.count({ct, ck})) break;
                seen[{ct, ck}] = true;
                int eid = keep_edge(csl.edge);
                cell.slots.push_back(Slot{eid, chart * csl.sign});
                cell.turns.push_back(0);
                cell.vertices.push_back(s.corner_vertex({{FaceKind::Triangle, ct}, ck}));
                // Advance within the triangle; cross degenerate edges.
                int nt = ct, nk = (ck + 1) % 3;
                while (true) {
                    Slot nsl = s.slot({FaceKind::Triangle, nt}, nk);
                    if (!degenerate[nsl.edge]) break;
                    SlotRef partner = s.partner(SlotRef{{FaceKind::Triangle, nt}, nk});
                    Slot psl = s.slot(partner.face, partner.pos);
                    chart *= (psl.sign == nsl.sign) ? -1 : 1;
                    nt = partner.face.index;
                    nk = (partner.pos + 1) % 3;
                }
                ct = nt;
                ck = nk;
            }
            out.faces.push_back(std::move(cell));
        }
    }
    int ncells = static_cast<int>(out.faces.size());
    // Record cell slots on edges.
    for (int f = 0; f < ncells; ++f)
        for (size_t pos = 0; pos < out.faces[f].slots.size(); ++pos)
            record_slot(out.faces[f].slots[pos].edge, f, static_cast<int>(pos));

    for (int p = 0; p < s.num_poles(); ++p) {
        CellFace pole;
        pole.is_pole = true;
        const auto& entries = s.data().poles[p].entries;
        for (size_t j = 0; j < entries.size(); ++j) {
            int eid = keep_edge(entries[j].slot.edge);
            pole.slots.push_back(Slot{eid, entries[j].slot.sign});
            pole.turns.push_back(entries[j].turns);
            pole.vertices.push_back(s.corner_vertex({{FaceKind::Pole, p}, static_cast<int>(j)}));
        }
        out.faces.push_back(std::move(pole));
        int f = static_cast<int>(out.faces.size()) - 1;
        for (size_t pos = 0; pos < out.faces[f].slots.size(); ++pos)
            record_slot(out.faces[f].slots[pos].edge, f, static_cast<int>(pos));
    }
    return out;
}

}  // namespace polesurf
