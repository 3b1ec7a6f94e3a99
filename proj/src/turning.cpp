#include "polesurf/turning.hpp"

namespace polesurf {

namespace {

bool pos_par(const Vec2& u, const Vec2& v) {
    return direction_compare(u, v) == DirectionRelation::PositivelyProportional;
}

bool neg_par(const Vec2& u, const Vec2& v) {
    return direction_compare(u, v) == DirectionRelation::NegativelyProportional;
}

}  // namespace

DeltaClass delta_class(const Vec2& u, const Vec2& w) {
    switch (direction_compare(u, w)) {
        case DirectionRelation::PositivelyProportional: return DeltaClass::Pi;
        case DirectionRelation::NegativelyProportional: return DeltaClass::TwoPi;
        case DirectionRelation::CcwPositive: return DeltaClass::Acute;
        case DirectionRelation::CcwNegative: return DeltaClass::Reflex;
    }
    return DeltaClass::Pi;  // unreachable
}

bool in_ccw_arc(const Vec2& c, const Vec2& a, const Vec2& b) {
    if (pos_par(c, b)) return true;   // arc end inclusive
    if (pos_par(c, a)) return false;  // arc start exclusive
    if (neg_par(a, b)) {
        // Arc of exactly pi: strict interior is the open half-plane left of a.
        return cross(a, c).sign() > 0;
    }
    int sab = cross(a, b).sign();
    if (sab > 0) {
        return cross(a, c).sign() > 0 && cross(c, b).sign() > 0;
    }
    // Arc longer than pi: complement (b, a) is shorter than pi.
    return !(cross(b, c).sign() > 0 && cross(c, a).sign() > 0);
}

int horizontal_hits_ccw(const Vec2& a, const Vec2& b, bool full_when_equal) {
    if (pos_par(a, b)) return full_when_equal ? 2 : 0;
    const Vec2 px(FieldElement(1), FieldElement(0));
    const Vec2 mx(FieldElement(-1), FieldElement(0));
    return (in_ccw_arc(px, a, b) ? 1 : 0) + (in_ccw_arc(mx, a, b) ? 1 : 0);
}

int corner_count(const Vec2& u, const Vec2& w, long turns) {
    // Sector sweeps ccw from w to -u; full circle when w ~+ -u (delta = 2pi).
    return horizontal_hits_ccw(w, -u, /*full_when_equal=*/true) + 2 * static_cast<int>(turns);
}

int signed_turn_count(const Vec2& u, const Vec2& w, long turns) {
    int base = 0;
    switch (delta_class(u, w)) {
        case DeltaClass::Acute:
            base = horizontal_hits_ccw(u, w, false);  // ccw sweep of pi - delta
            break;
        case DeltaClass::Pi:
            base = 0;
            break;
        case DeltaClass::Reflex:
        case DeltaClass::TwoPi:
            base = -horizontal_hits_ccw(w, u, false);  // cw sweep of delta - pi
            break;
    }
    return base - 2 * static_cast<int>(turns);
}

}  // namespace polesurf
