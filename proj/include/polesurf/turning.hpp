#pragma once

#include "polesurf/field.hpp"

namespace polesurf {

// Corner angles are delta + 2*pi*turns where delta in (0, 2pi] is determined
// by the arrival vector u and departure vector w: delta is the
// counterclockwise angle from w to -u, so delta = pi exactly when w is
// positively proportional to u (straight continuation) and delta = 2pi when
// w is positively proportional to -u (hairpin).
enum class DeltaClass {
    Acute,   // (0, pi)
    Pi,      // exactly pi
    Reflex,  // (pi, 2pi)
    TwoPi,   // exactly 2pi
};

DeltaClass delta_class(const Vec2& u, const Vec2& w);

/// True when c lies on the half-open counterclockwise arc (a, b].
/// Precondition: a, b, c nonzero and b not positively proportional to a.
bool in_ccw_arc(const Vec2& c, const Vec2& a, const Vec2& b);

/// Number of directions of {(1,0), (-1,0)} on the ccw arc (a, b].  When b is
/// positively proportional to a the arc is empty or the full circle;
/// full_when_equal selects which (0 or 2 hits).
int horizontal_hits_ccw(const Vec2& a, const Vec2& b, bool full_when_equal);

/// Half-turn count of the corner (u, w, m): the corner's angle equals
/// count * pi once summed along a closed corner chain (vertex link or face
/// boundary).  Individual counts are phase-dependent; only sums over closed
/// chains are geometric.
int corner_count(const Vec2& u, const Vec2& w, long turns);

/// Signed half-turn count of the tangent rotation tau = pi - angle at a
/// corner; sums to 2*ind(loop) along a closed piecewise-geodesic loop.
int signed_turn_count(const Vec2& u, const Vec2& w, long turns);

struct AngleValue {
    Vec2 arrival;    // incoming traversal vector u
    Vec2 departure;  // outgoing traversal vector w
    long turns = 0;  // m >= 0
    DeltaClass cls = DeltaClass::Pi;

    bool eq_pi() const { return turns == 0 && cls == DeltaClass::Pi; }
    bool lt_pi() const { return turns == 0 && cls == DeltaClass::Acute; }
    bool ge_pi() const { return !lt_pi(); }
    bool eq_two_pi() const { return turns == 0 && cls == DeltaClass::TwoPi; }
    // total angle == k*pi exactly
    bool eq_k_pi(long k) const {
        if (cls == DeltaClass::Pi) return k >= 1 && k % 2 == 1 && turns == (k - 1) / 2;
        if (cls == DeltaClass::TwoPi) return k >= 2 && k % 2 == 0 && turns == (k - 2) / 2;
        return false;
    }
};

inline AngleValue make_angle(const Vec2& u, const Vec2& w, long turns) {
    return AngleValue{u, w, turns, delta_class(u, w)};
}

}  // namespace polesurf
