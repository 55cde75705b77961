#pragma once

// Exact numbers a + b*sqrt(d) for d in {1, 2, 3}.
//
// Rationals are canonical: any value with b == 0 is stored with d == 1, so
// lattice tables run in plain rational arithmetic. Mixing sqrt2 and sqrt3
// operands throws FieldMismatch.

#include "obill/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace obill {

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(std::int64_t v) : a_(v) {}  // NOLINT
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT
    QuadExt(Rational a, Rational b, int d);

    static QuadExt sqrt(int d) { return QuadExt(Rational(0), Rational(1), d); }

    // Accepts "p/q", "p/q+r/s*sqrt2", "r/s*sqrt3", "-sqrt2", "1-sqrt3" ...
    static QuadExt parse(std::string_view text);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] bool is_rational() const { return d_ == 1; }
    [[nodiscard]] bool is_zero() const { return d_ == 1 && a_.is_zero(); }

    // Exact sign of the real value.
    [[nodiscard]] int sign() const;
    // a^2 - b^2 d
    [[nodiscard]] Rational norm() const;
    [[nodiscard]] QuadExt conjugate() const;
    [[nodiscard]] QuadExt inverse() const;
    [[nodiscard]] double to_double() const;

    // Decimal expansion with `digits` digits after the point, rounded half
    // away from zero. Exact: computed with integer comparisons, no floats.
    [[nodiscard]] std::string approx(int digits) const;

    // Round-trippable text form accepted by parse().
    [[nodiscard]] std::string str() const;

    QuadExt operator-() const;
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend int compare(const QuadExt& x, const QuadExt& y) { return (x - y).sign(); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return compare(x, y) < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return compare(x, y) > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return compare(x, y) <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return compare(x, y) >= 0; }

    [[nodiscard]] std::size_t hash() const;

private:
    void canonicalize();

    Rational a_;
    Rational b_;
    int d_ = 1;
};

inline QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }
inline const QuadExt& min(const QuadExt& x, const QuadExt& y) { return y < x ? y : x; }
inline const QuadExt& max(const QuadExt& x, const QuadExt& y) { return x < y ? y : x; }

// Common radicand of two operands (1 if both rational). Throws FieldMismatch.
int join_field(int d1, int d2);

}  // namespace obill
