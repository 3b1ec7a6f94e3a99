#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace polesurf {

using Rational = mpq_class;

struct FieldError : std::runtime_error {
    explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact scalar a + b*sqrt(d) over the rationals.
///
/// d is a square-free non-negative integer; d <= 1 means the element is
/// rational and b is forced to zero.  All comparisons are exact: the sign
/// of a + b*sqrt(d) is decided with rational arithmetic only.
class FieldElement {
  public:
    FieldElement() : a_(0), b_(0), d_(0) {}
    FieldElement(long n) : a_(n), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    FieldElement(const Rational& a) : a_(a), b_(0), d_(0) { a_.canonicalize(); }  // NOLINT
    FieldElement(Rational a, Rational b, long d);

    static FieldElement sqrt_disc(long d) { return FieldElement(0, 1, d); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long disc() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Exact sign in {-1, 0, 1}.
    int sign() const;

    FieldElement operator-() const { return FieldElement(-a_, -b_, d_); }
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const { return (*this - o).is_zero(); }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const FieldElement& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const FieldElement& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const FieldElement& o) const { return (*this - o).sign() >= 0; }

    /// Textual form `p/q`, `r/s*rt(d)` or `p/q+r/s*rt(d)` (integer parts
    /// printed without the /1).  Round-trips through parse() bit-exactly.
    std::string to_string() const;
    static FieldElement parse(const std::string& text);

    double approx() const;

  private:
    Rational a_, b_;
    long d_;
};

/// Exact ratio x/y when it is rational, absent when it is irrational.
/// Precondition: y != 0.
std::optional<Rational> rational_ratio(const FieldElement& x, const FieldElement& y);

struct Vec2 {
    FieldElement x, y;

    Vec2() = default;
    Vec2(FieldElement px, FieldElement py) : x(std::move(px)), y(std::move(py)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const FieldElement& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }

    FieldElement norm_squared() const { return x * x + y * y; }
    std::string to_string() const { return x.to_string() + "," + y.to_string(); }
};

inline FieldElement cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline FieldElement dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

enum class DirectionRelation {
    PositivelyProportional,  // parallel mod pi, same ray
    NegativelyProportional,  // parallel mod pi, opposite rays
    CcwPositive,             // not parallel, cross(u, v) > 0
    CcwNegative,             // not parallel, cross(u, v) < 0
};

/// Exact comparison of two nonzero directions.  Parallel mod pi means the
/// cross product vanishes; the proportionality sign is then read off the
/// dot product.
DirectionRelation direction_compare(const Vec2& u, const Vec2& v);

inline bool parallel_mod_pi(const Vec2& u, const Vec2& v) {
    DirectionRelation r = direction_compare(u, v);
    return r == DirectionRelation::PositivelyProportional ||
           r == DirectionRelation::NegativelyProportional;
}

struct Mat2 {
    // Row-major entries [[a, b], [c, d]].
    FieldElement a, b, c, d;

    static Mat2 identity() { return {FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(1)}; }

    FieldElement det() const { return a * d - b * c; }
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Mat2 inverse() const;
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
    std::string to_string() const {
        return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," +
               d.to_string() + "]]";
    }
};

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace polesurf
