#include "polesurf/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "polesurf/dynamics.hpp"
#include "polesurf/hull.hpp"

namespace polesurf {

namespace {

// Propagate a seed edge correspondence across the cell complexes.  Once the
// seed (image edge, holonomy sign, slot pairing) is fixed, every face image
// is forced by the gluing structure, so the search is a plain BFS with
// consistency checks and no backtracking.
std::optional<Correspondence> propagate(const CellComplex& A, const CellComplex& B, int seed_b,
                                        int rho, int pairing) {
    const int EA = static_cast<int>(A.holonomy.size());
    const int FA = static_cast<int>(A.faces.size());
    std::vector<std::pair<int, int>> edge_map(EA, {-1, 0});
    struct FaceImage {
        int fb = -1, offset = 0, eta = 0;
    };
    std::vector<FaceImage> face_map(FA);
    std::vector<int> vertex_map(A.num_vertices, -1);
    std::deque<int> todo;  // faces whose neighbors still need processing

    auto assign_face = [&](int fa, int fb, int offset, int eta) -> bool {
        if (face_map[fa].fb >= 0) {
            return face_map[fa].fb == fb && face_map[fa].offset == offset &&
                   face_map[fa].eta == eta;
        }
        const CellFace& ca = A.faces[fa];
        const CellFace& cb = B.faces[fb];
        if (ca.is_pole != cb.is_pole) return false;
        int n = static_cast<int>(ca.slots.size());
        if (static_cast<int>(cb.slots.size()) != n) return false;
        face_map[fa] = {fb, offset, eta};
        for (int i = 0; i < n; ++i) {
            const Slot& sa = ca.slots[i];
            const Slot& sb = cb.slots[(offset + i) % n];
            if (ca.turns[i] != cb.turns[(offset + i) % n]) return false;
            int want_rho = eta * sa.sign * sb.sign;
            if (edge_map[sa.edge].first < 0) {
                if (B.holonomy[sb.edge] != A.holonomy[sa.edge] * FieldElement(want_rho))
                    return false;
                edge_map[sa.edge] = {sb.edge, want_rho};
            } else if (edge_map[sa.edge] != std::make_pair(sb.edge, want_rho)) {
                return false;
            }
            int va = ca.vertices[i];
            int vb = cb.vertices[(offset + i) % n];
            if (vertex_map[va] < 0) {
                vertex_map[va] = vb;
            } else if (vertex_map[va] != vb) {
                return false;
            }
        }
        todo.push_back(fa);
        return true;
    };

    {
        auto [fa, pa] = A.edge_slots[0][0];
        auto [fb, pb] = B.edge_slots[seed_b][pairing];
        const Slot& sa = A.faces[fa].slots[pa];
        const Slot& sb = B.faces[fb].slots[pb];
        int eta = rho * sa.sign * sb.sign;
        int n = static_cast<int>(A.faces[fa].slots.size());
        if (static_cast<int>(B.faces[fb].slots.size()) != n) return std::nullopt;
        if (!assign_face(fa, fb, ((pb - pa) % n + n) % n, eta)) return std::nullopt;
    }

    while (!todo.empty()) {
        int fa = todo.front();
        todo.pop_front();
        const CellFace& ca = A.faces[fa];
        int fb = face_map[fa].fb;
        int offset = face_map[fa].offset;
        int n = static_cast<int>(ca.slots.size());
        for (int i = 0; i < n; ++i) {
            int ae = ca.slots[i].edge;
            auto [be, rho_e] = edge_map[ae];
            // Partner slots across this edge.
            std::pair<int, int> here{fa, i};
            auto other_a =
                (A.edge_slots[ae][0] == here) ? A.edge_slots[ae][1] : A.edge_slots[ae][0];
            std::pair<int, int> img{fb, (offset + i) % n};
            auto other_b =
                (B.edge_slots[be][0] == img) ? B.edge_slots[be][1] : B.edge_slots[be][0];
            auto [fa2, pa2] = other_a;
            auto [fb2, pb2] = other_b;
            const Slot& sa2 = A.faces[fa2].slots[pa2];
            const Slot& sb2 = B.faces[fb2].slots[pb2];
            int eta2 = rho_e * sa2.sign * sb2.sign;
            int n2 = static_cast<int>(A.faces[fa2].slots.size());
            if (static_cast<int>(B.faces[fb2].slots.size()) != n2) return std::nullopt;
            if (!assign_face(fa2, fb2, ((pb2 - pa2) % n2 + n2) % n2, eta2)) return std::nullopt;
        }
    }

    // Completeness and bijectivity.
    std::set<int> eimg, fimg;
    for (auto& [be, r] : edge_map) {
        if (be < 0) return std::nullopt;
        eimg.insert(be);
    }
    if (static_cast<int>(eimg.size()) != EA || static_cast<int>(B.holonomy.size()) != EA)
        return std::nullopt;
    for (auto& f : face_map) {
        if (f.fb < 0) return std::nullopt;
        fimg.insert(f.fb);
    }
    if (static_cast<int>(fimg.size()) != FA || B.faces.size() != A.faces.size())
        return std::nullopt;
    for (int v : vertex_map)
        if (v < 0) return std::nullopt;

    Correspondence out;
    out.vertex_map = vertex_map;
    out.edge_map = edge_map;
    for (auto& f : face_map) out.face_map.push_back(f.fb);
    out.edge_names_a = A.edge_names;
    out.edge_names_b = B.edge_names;
    return out;
}

}  // namespace

std::optional<Correspondence> is_isomorphic(const Surface& a, const Surface& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_poles() != b.num_poles() ||
        a.genus() != b.genus())
        return std::nullopt;
    if (!(a.stratum_signature() == b.stratum_signature())) return std::nullopt;
    CellComplex A = delaunay_cells(a);
    CellComplex B = delaunay_cells(b);
    if (A.holonomy.size() != B.holonomy.size() || A.faces.size() != B.faces.size())
        return std::nullopt;
    if (A.holonomy.empty()) return std::nullopt;
    for (int be = 0; be < static_cast<int>(B.holonomy.size()); ++be) {
        for (int rho : {1, -1}) {
            if (B.holonomy[be] != A.holonomy[0] * FieldElement(rho)) continue;
            for (int pairing = 0; pairing < 2; ++pairing) {
                auto r = propagate(A, B, be, rho, pairing);
                if (r) return r;
            }
        }
    }
    return std::nullopt;
}

std::string veech_variant_name(VeechVariant v) {
    switch (v) {
        case VeechVariant::Finite: return "finite";
        case VeechVariant::CyclicParabolic: return "cyclic-parabolic";
        case VeechVariant::Continuous: return "continuous";
    }
    return "finite";
}

namespace {

Vec2 canonical_sign(const Vec2& v) {
    int s = v.x.sign();
    if (s == 0) s = v.y.sign();
    return s >= 0 ? v : -v;
}

Mat2 canonical_matrix_sign(const Mat2& m) {
    for (const FieldElement* f : {&m.a, &m.b, &m.c, &m.d}) {
        int s = f->sign();
        if (s > 0) return m;
        if (s < 0) return -m;
    }
    return m;
}

bool is_projective_identity(const Mat2& m) {
    return (m == Mat2::identity()) || (m == -Mat2::identity());
}

long projective_order(const Mat2& g, long cap) {
    Mat2 acc = g;
    for (long k = 1; k <= cap; ++k) {
        if (is_projective_identity(acc)) return k;
        acc = acc * g;
    }
    return -1;
}

std::string matrix_key(const Mat2& m) { return m.to_string(); }

Mat2 frame_to_horizontal(const Vec2& dir) {
    // Sends dir to the positive horizontal ray; det = |dir|^2 > 0.
    return Mat2{dir.x, dir.y, -dir.y, dir.x};
}

}  // namespace

VeechGroupDescription veech_group(const Surface& input, long trace_bound) {
    Surface s = is_core_convex(input) ? input : hull_completion(input);
    VeechGroupDescription out;

    std::vector<int> boundary = s.boundary_edges();
    bool single_direction = true;
    for (size_t i = 1; i < boundary.size(); ++i) {
        if (!parallel_mod_pi(s.edge(boundary[0]).holonomy, s.edge(boundary[i]).holonomy)) {
            single_direction = false;
            break;
        }
    }

    if (!single_direction) {
        // Finite type: candidate matrices send a fixed non-parallel boundary
        // pair into boundary holonomies with det 1, then get verified.
        std::vector<Vec2> bound_vecs;
        for (int e : boundary) bound_vecs.push_back(canonical_sign(s.edge(e).holonomy));
        Vec2 w = bound_vecs[0];
        Vec2 z;
        for (auto& v : bound_vecs) {
            if (!parallel_mod_pi(w, v)) {
                z = v;
                break;
            }
        }
        Mat2 basis{w.x, z.x, w.y, z.y};
        Mat2 basis_inv = basis.inverse();
        std::map<std::string, Mat2> verified;
        auto multiset_key = [&](const Surface& surf) {
            std::vector<std::string> keys;
            for (int e : surf.boundary_edges())
                keys.push_back(canonical_sign(surf.edge(e).holonomy).to_string());
            std::sort(keys.begin(), keys.end());
            std::string out_key;
            for (auto& k : keys) out_key += k + "|";
            return out_key;
        };
        std::string base_key = multiset_key(s);
        for (auto& s1 : bound_vecs) {
            for (auto& s2 : bound_vecs) {
                for (int delta : {1, -1}) {
                    Vec2 img2 = s2 * FieldElement(delta);
                    Mat2 images{s1.x, img2.x, s1.y, img2.y};
                    Mat2 m = images * basis_inv;
                    if (m.det() != FieldElement(1)) continue;
                    Mat2 canon = canonical_matrix_sign(m);
                    if (verified.count(matrix_key(canon))) continue;
                    Surface moved = s.apply_matrix(canon);
                    if (multiset_key(moved) != base_key) continue;
                    if (is_isomorphic(moved, s)) verified[matrix_key(canon)] = canon;
                }
            }
        }
        out.variant = VeechVariant::Finite;
        out.order = static_cast<long>(verified.size());
        for (auto& [k, m] : verified) out.elements.push_back(m);
        // Generator: deterministic smallest element of full projective order.
        if (out.order > 1) {
            for (auto& [k, m] : verified) {
                if (projective_order(m, out.order) == out.order) {
                    out.generator = m;
                    break;
                }
            }
            if (out.generator && out.order <= 6) {
                Vec2 v(FieldElement(1), FieldElement(0));
                Vec2 gv = out.generator->apply(v);
                if (parallel_mod_pi(v, gv)) {
                    v = Vec2(FieldElement(0), FieldElement(1));
                    gv = out.generator->apply(v);
                }
                out.conjugating_frame = Mat2{v.x, gv.x, v.y, gv.y};
            }
        }
        return out;
    }

    Vec2 direction = s.edge(boundary[0]).holonomy;
    if (s.num_triangles() == 0) {
        out.variant = VeechVariant::Continuous;
        out.conjugating_frame = frame_to_horizontal(direction);
        return out;
    }

    Decomposition dec = decompose_direction(s, direction, trace_bound);
    if (dec.unresolved) {
        out.variant = VeechVariant::Finite;
        out.order = 1;
        out.caveat = true;
        out.elements.push_back(Mat2::identity());
        return out;
    }
    for (auto& c : dec.cylinders) out.moduli.push_back(c.modulus());
    std::optional<FieldElement> shear = moduli_commensurable(dec);
    if (!shear) {
        out.variant = VeechVariant::Finite;
        out.order = 1;
        out.elements.push_back(Mat2::identity());
        return out;
    }
    out.variant = VeechVariant::CyclicParabolic;
    out.shear = *shear;
    Mat2 h = frame_to_horizontal(direction);
    Mat2 shear_m{FieldElement(1), *shear, FieldElement(0), FieldElement(1)};
    Mat2 gen = h.inverse() * shear_m * h;
    out.generator = canonical_matrix_sign(gen);
    // Parabolic certificate: the conjugated shear is a verified element.
    if (!is_isomorphic(s.apply_matrix(*out.generator), s))
        throw PreconditionError("parabolic certificate failed verification");
    return out;
}

bool gl2_orbit_closed(const Surface& input) {
    Surface s = is_core_convex(input) ? input : hull_completion(input);
    if (s.num_triangles() != 0) return false;
    for (int e = 1; e < s.num_edges(); ++e)
        if (!parallel_mod_pi(s.edge(0).holonomy, s.edge(e).holonomy)) return false;
    return true;
}

TriState sl2_orbit_closed(const Surface& input, long trace_bound) {
    Surface s = is_core_convex(input) ? input : hull_completion(input);
    std::vector<int> boundary = s.boundary_edges();
    for (size_t i = 1; i < boundary.size(); ++i)
        if (!parallel_mod_pi(s.edge(boundary[0]).holonomy, s.edge(boundary[i]).holonomy))
            return TriState::True;
    if (s.num_triangles() == 0) return TriState::True;
    Decomposition dec = decompose_direction(s, s.edge(boundary[0]).holonomy, trace_bound);
    if (dec.unresolved) return TriState::Unresolved;
    return moduli_commensurable(dec) ? TriState::True : TriState::False;
}

}  // namespace polesurf
