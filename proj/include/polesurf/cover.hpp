#pragma once

#include "polesurf/ratmat.hpp"
#include "polesurf/surface.hpp"

namespace polesurf {

/// Canonical double cover as a doubled cell complex with the sheet-exchange
/// involution.  An edge whose two slots carry opposite traversal signs is
/// glued sheet-preserving, equal signs sheet-exchanging.  Chain groups are
/// over Q; cover cell (e, s) sits at index 2*e + s.
class CoverComplex {
  public:
    explicit CoverComplex(const Surface& s);

    const Surface& base() const { return *base_; }

    /// 1 when the edge gluing exchanges sheets, 0 otherwise.
    int gluing_parity(int edge) const { return parity_[edge]; }
    /// Sheet twist of a specific slot (face copy (F, s) uses edge copy
    /// (e, s xor twist)).
    int slot_twist(int edge, const SlotRef& slot) const;

    /// Number of connected components of the covering surface.
    int surface_components() const;
    /// Number of vertices of the doubled complex (preimages of base vertices).
    int vertex_count() const;

    /// tau_* on 1-chains: swaps the two copies of every edge.
    RatVec tau_star(const RatVec& chain) const;

    /// Relative H1 of the cover core (rel the singular fiber): Q^{2E} / im d2.
    int h1_rank() const;
    int h_minus_rank() const;
    int h_plus_rank() const;

    /// Canonical residue of a 1-chain modulo boundaries.
    RatVec reduce(const RatVec& chain) const;

    /// Anti-invariant homology class of a saddle connection (an edge of the
    /// complex): [gamma1] when [gamma1] = -[gamma2], else [gamma1]-[gamma2].
    RatVec sc_class(int edge) const;

  private:
    int eigenspace_rank(int eps) const;

    const Surface* base_;
    std::vector<int> parity_;
    RowReducer boundaries_;  // row space = im d2 in Q^{2E}
};

CoverComplex double_cover(const Surface& s);

bool are_parallel(const Surface& s, int edge_a, int edge_b);
bool are_parallel(const CoverComplex& cover, int edge_a, int edge_b);

/// Topological index of a closed piecewise-geodesic loop through regular
/// points, as the exact half-integer (sum of (pi - angle))/2pi.  Throws
/// PreconditionError when consecutive corners do not chain into a loop.
Rational path_index(const std::vector<AngleValue>& loop);

/// Index of the boundary loop of a pole cycle; equals 1 - b/2.
Rational pole_boundary_index(const Surface& s, int pole);

}  // namespace polesurf
