#include "polesurf/cover.hpp"

#include <numeric>

namespace polesurf {

namespace {

int face_linear_index(const Surface& s, FaceRef f) {
    return f.kind == FaceKind::Triangle ? f.index : s.num_triangles() + f.index;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};

}  // namespace

CoverComplex::CoverComplex(const Surface& s) : base_(&s), boundaries_(2 * s.num_edges()) {
    parity_.resize(s.num_edges());
    for (int e = 0; e < s.num_edges(); ++e) {
        const auto& slots = s.slots_of_edge(e);
        Slot a = s.slot(slots[0].face, slots[0].pos);
        Slot b = s.slot(slots[1].face, slots[1].pos);
        parity_[e] = (a.sign == b.sign) ? 1 : 0;
    }
    // Boundary space of the doubled triangles.
    for (int t = 0; t < s.num_triangles(); ++t) {
        for (int sheet = 0; sheet < 2; ++sheet) {
            RatVec row(2 * s.num_edges(), Rational(0));
            for (int k = 0; k < 3; ++k) {
                Slot sl = s.slot({FaceKind::Triangle, t}, k);
                int twist = slot_twist(sl.edge, SlotRef{{FaceKind::Triangle, t}, k});
                int copy = 2 * sl.edge + (sheet ^ twist);
                row[copy] += sl.sign;
            }
            boundaries_.insert(std::move(row));
        }
    }
}

int CoverComplex::slot_twist(int edge, const SlotRef& slot) const {
    const auto& slots = base_->slots_of_edge(edge);
    return (slot == slots[0]) ? 0 : parity_[edge];
}

int CoverComplex::surface_components() const {
    const Surface& s = *base_;
    int nfaces = s.num_triangles() + s.num_poles();
    UnionFind uf(2 * nfaces);
    for (int e = 0; e < s.num_edges(); ++e) {
        const auto& slots = s.slots_of_edge(e);
        int f0 = face_linear_index(s, slots[0].face);
        int f1 = face_linear_index(s, slots[1].face);
        // Face copy (f, sheet) borders edge copy (e, sheet ^ twist).
        for (int sheet = 0; sheet < 2; ++sheet) {
            int copy0 = sheet ^ slot_twist(e, slots[0]);
            // The partner face copy bordering the same edge copy:
            int sheet1 = copy0 ^ slot_twist(e, slots[1]);
            uf.unite(2 * f0 + sheet, 2 * f1 + sheet1);
        }
    }
    return uf.components();
}

int CoverComplex::vertex_count() const {
    const Surface& s = *base_;
    int count = 0;
    for (int v = 0; v < s.num_vertices(); ++v) {
        // Walk the link once; the preimage is connected iff the product of
        // gluing parities of departure edges around the link is odd.
        int parity = 0;
        for (const CornerRef& c : s.vertex_links()[v]) {
            int n = s.face_size(c.face);
            SlotRef dep{c.face, (c.pos + 1) % n};
            parity ^= parity_[s.slot(dep.face, dep.pos).edge];
        }
        count += (parity == 1) ? 1 : 2;
    }
    return count;
}

RatVec CoverComplex::tau_star(const RatVec& chain) const {
    RatVec out(chain.size());
    for (size_t e = 0; 2 * e < chain.size(); ++e) {
        out[2 * e] = chain[2 * e + 1];
        out[2 * e + 1] = chain[2 * e];
    }
    return out;
}

int CoverComplex::h1_rank() const { return 2 * base_->num_edges() - boundaries_.rank(); }

// dim (A + im d2)/(im d2) for A spanned by e0 + eps*e1 over all edges.
int CoverComplex::eigenspace_rank(int eps) const {
    const int E = base_->num_edges();
    RowReducer acc(2 * E);
    for (int t = 0; t < base_->num_triangles(); ++t) {
        for (int sheet = 0; sheet < 2; ++sheet) {
            RatVec row(2 * E, Rational(0));
            for (int k = 0; k < 3; ++k) {
                Slot sl = base_->slot({FaceKind::Triangle, t}, k);
                int twist = slot_twist(sl.edge, SlotRef{{FaceKind::Triangle, t}, k});
                row[2 * sl.edge + (sheet ^ twist)] += sl.sign;
            }
            acc.insert(std::move(row));
        }
    }
    int rank_b = acc.rank();
    for (int e = 0; e < E; ++e) {
        RatVec v(2 * E, Rational(0));
        v[2 * e] = 1;
        v[2 * e + 1] = eps;
        acc.insert(std::move(v));
    }
    return acc.rank() - rank_b;
}

int CoverComplex::h_minus_rank() const { return eigenspace_rank(-1); }

int CoverComplex::h_plus_rank() const { return eigenspace_rank(+1); }

RatVec CoverComplex::reduce(const RatVec& chain) const { return boundaries_.reduce(chain); }

RatVec CoverComplex::sc_class(int edge) const {
    const int E = base_->num_edges();
    RatVec g1(2 * E, Rational(0)), g2(2 * E, Rational(0));
    g1[2 * edge] = 1;
    g2[2 * edge + 1] = 1;
    RatVec r1 = reduce(g1);
    RatVec r2 = reduce(g2);
    bool opposite = true;
    for (int j = 0; j < 2 * E; ++j) {
        if (r1[j] != -r2[j]) {
            opposite = false;
            break;
        }
    }
    if (opposite) return r1;
    RatVec diff(2 * E, Rational(0));
    diff[2 * edge] = 1;
    diff[2 * edge + 1] = -1;
    return reduce(diff);
}

CoverComplex double_cover(const Surface& s) { return CoverComplex(s); }

bool are_parallel(const CoverComplex& cover, int edge_a, int edge_b) {
    std::vector<RatVec> rows{cover.sc_class(edge_a), cover.sc_class(edge_b)};
    return rat_rank(std::move(rows)) < 2;
}

bool are_parallel(const Surface& s, int edge_a, int edge_b) {
    CoverComplex cover(s);
    return are_parallel(cover, edge_a, edge_b);
}

Rational path_index(const std::vector<AngleValue>& loop) {
    if (loop.empty()) throw PreconditionError("path_index: empty loop");
    long total = 0;
    for (size_t i = 0; i < loop.size(); ++i) {
        const AngleValue& cur = loop[i];
        const AngleValue& next = loop[(i + 1) % loop.size()];
        // The loop runs straight between corners: the next arrival direction
        // must be the current departure up to the half-translation sign.
        if (!parallel_mod_pi(cur.departure, next.arrival))
            throw PreconditionError("path_index: corners do not chain into a loop");
        if (cur.turns < 0) throw PreconditionError("path_index: negative turns");
        total += signed_turn_count(cur.arrival, cur.departure, cur.turns);
    }
    Rational idx(total, 2);
    idx.canonicalize();
    return idx;
}

Rational pole_boundary_index(const Surface& s, int pole) {
    std::vector<AngleValue> loop;
    for (auto& c : s.corners_of_face({FaceKind::Pole, pole})) loop.push_back(s.corner_angle(c));
    return path_index(loop);
}

}  // namespace polesurf
