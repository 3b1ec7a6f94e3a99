#include "polesurf/field.hpp"

#include <cmath>
#include <cstdlib>

namespace polesurf {

namespace {

bool square_free(long d) {
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

// Discriminant of the result of combining two elements; rational operands
// adopt the other side's field.
long combine_disc(const FieldElement& x, const FieldElement& y) {
    if (x.is_rational()) return y.disc();
    if (y.is_rational()) return x.disc();
    if (x.disc() != y.disc()) {
        throw FieldError("mixed field discriminants " + std::to_string(x.disc()) + " and " +
                         std::to_string(y.disc()));
    }
    return x.disc();
}

}  // namespace

FieldElement::FieldElement(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ < 0) throw FieldError("negative discriminant");
    if (d_ <= 1) {
        // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part.
        if (d_ == 1) a_ += b_;
        b_ = 0;
        d_ = 0;
    } else if (!square_free(d_)) {
        throw FieldError("discriminant " + std::to_string(d_) + " is not square-free");
    }
    if (sgn(b_) == 0) d_ = d_ > 1 ? d_ : 0;
}

int FieldElement::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decides, compare a^2 against b^2 d.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    int cmpsign = cmp(lhs, rhs);
    if (cmpsign == 0) throw FieldError("discriminant is a perfect square");  // unreachable for square-free d
    return cmpsign > 0 ? sa : sb;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    long d = combine_disc(*this, o);
    return FieldElement(a_ + o.a_, b_ + o.b_, d);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    long d = combine_disc(*this, o);
    return FieldElement(a_ - o.a_, b_ - o.b_, d);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    long d = combine_disc(*this, o);
    return FieldElement(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) throw FieldError("division by zero");
    long d = combine_disc(*this, o);
    // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
    Rational den = o.a_ * o.a_ - o.b_ * o.b_ * d;
    if (sgn(den) == 0) throw FieldError("division by zero norm");
    FieldElement conj(o.a_ / den, -o.b_ / den, d);
    return *this * conj;
}

std::string rational_to_string(const Rational& q) {
    std::string s = q.get_str();
    return s;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw FieldError("empty rational literal");
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw FieldError("bad rational literal '" + text + "'");
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw FieldError("bad rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

std::string FieldElement::to_string() const {
    if (is_rational()) return rational_to_string(a_);
    std::string surd = rational_to_string(b_) + "*rt(" + std::to_string(d_) + ")";
    if (sgn(a_) == 0) return surd;
    if (sgn(b_) > 0) return rational_to_string(a_) + "+" + surd;
    return rational_to_string(a_) + surd;  // b < 0 carries its own minus sign
}

FieldElement FieldElement::parse(const std::string& text) {
    if (text.empty()) throw FieldError("empty field literal");
    size_t rt = text.find("*rt(");
    if (rt == std::string::npos) {
        return FieldElement(parse_rational(text));
    }
    size_t close = text.find(')', rt);
    if (close == std::string::npos || close + 1 != text.size()) {
        throw FieldError("bad field literal '" + text + "'");
    }
    std::string dstr = text.substr(rt + 4, close - rt - 4);
    long d = std::strtol(dstr.c_str(), nullptr, 10);
    if (d < 2) throw FieldError("bad discriminant in '" + text + "'");
    // Split rational part from the surd coefficient: scan for a +/- that is
    // not the leading sign.
    std::string head = text.substr(0, rt);
    size_t split = std::string::npos;
    for (size_t i = 1; i < head.size(); ++i) {
        if (head[i] == '+' || head[i] == '-') split = i;
    }
    if (split == std::string::npos) {
        return FieldElement(0, parse_rational(head), d);
    }
    Rational a = parse_rational(head.substr(0, split));
    std::string bpart = head.substr(split);
    if (bpart[0] == '+') bpart = bpart.substr(1);
    return FieldElement(a, parse_rational(bpart), d);
}

double FieldElement::approx() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::optional<Rational> rational_ratio(const FieldElement& x, const FieldElement& y) {
    if (y.is_zero()) throw FieldError("rational_ratio: zero denominator");
    FieldElement q = x / y;
    if (!q.is_rational()) return std::nullopt;
    return q.rational_part();
}

DirectionRelation direction_compare(const Vec2& u, const Vec2& v) {
    if (u.is_zero() || v.is_zero()) throw FieldError("direction_compare: zero vector");
    int c = cross(u, v).sign();
    if (c > 0) return DirectionRelation::CcwPositive;
    if (c < 0) return DirectionRelation::CcwNegative;
    return dot(u, v).sign() > 0 ? DirectionRelation::PositivelyProportional
                                : DirectionRelation::NegativelyProportional;
}

Mat2 Mat2::inverse() const {
    FieldElement dt = det();
    if (dt.is_zero()) throw FieldError("singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

}  // namespace polesurf
