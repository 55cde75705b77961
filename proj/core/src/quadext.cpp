#include "obill/quadext.hpp"

#include <cctype>
#include <cmath>

namespace obill {

int join_field(int d1, int d2) {
    if (d1 == 1) return d2;
    if (d2 == 1 || d1 == d2) return d1;
    throw FieldMismatch("QuadExt: mixed radicands sqrt" + std::to_string(d1) + " and sqrt" + std::to_string(d2));
}

QuadExt::QuadExt(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d != 1 && d != 2 && d != 3) throw std::invalid_argument("QuadExt: radicand must be 1, 2 or 3");
    if (d == 1) {
        a_ += b_;
        b_ = Rational(0);
    }
    canonicalize();
}

void QuadExt::canonicalize() {
    if (b_.is_zero()) d_ = 1;
}

QuadExt QuadExt::operator-() const {
    QuadExt r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    QuadExt r;
    r.d_ = join_field(x.d_, y.d_);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.canonicalize();
    return r;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    QuadExt r;
    r.d_ = join_field(x.d_, y.d_);
    r.a_ = x.a_ - y.a_;
    r.b_ = x.b_ - y.b_;
    r.canonicalize();
    return r;
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    QuadExt r;
    r.d_ = join_field(x.d_, y.d_);
    if (x.d_ == 1) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.a_ * y.b_;
    } else if (y.d_ == 1) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.b_ * y.a_;
    } else {
        r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(r.d_);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    }
    r.canonicalize();
    return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::conjugate() const {
    QuadExt r = *this;
    r.b_ = -b_;
    return r;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::domain_error("QuadExt: division by zero");
    if (d_ == 1) return QuadExt(Rational(1) / a_);
    const Rational n = norm();  // nonzero: sqrt(d) is irrational
    QuadExt r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    return r;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    join_field(x.d_, y.d_);
    if (y.d_ == 1) {
        if (y.a_.is_zero()) throw std::domain_error("QuadExt: division by zero");
        QuadExt r;
        r.a_ = x.a_ / y.a_;
        r.b_ = x.b_ / y.a_;
        r.d_ = x.d_;
        r.canonicalize();
        return r;
    }
    return x * y.inverse();
}

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const int c = compare(a_ * a_, b_ * b_ * Rational(d_));
    return c > 0 ? sa : sb;  // c == 0 impossible for irrational sqrt(d)
}

double QuadExt::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_)); }

std::string QuadExt::approx(int digits) const {
    if (digits < 1) throw std::invalid_argument("approx: digits must be >= 1");
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool neg = sign() < 0;
    // w = |x| * 10^digits + 1/2; the answer is floor(w).
    QuadExt w = (neg ? -*this : *this) * QuadExt(Rational(mpq_class(scale))) + QuadExt(Rational(1, 2));
    auto below = [&](const mpz_class& n) { return (w - QuadExt(Rational(mpq_class(n)))).sign() < 0; };
    mpz_class hi = 1;
    while (!below(hi)) hi *= 2;
    mpz_class lo = 0;  // invariant: !below(lo), below(hi)
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        if (below(mid))
            hi = mid;
        else
            lo = mid;
    }
    std::string digits_str = lo.get_str();
    if (digits_str.size() <= static_cast<std::size_t>(digits))
        digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    std::string out = digits_str.substr(0, digits_str.size() - static_cast<std::size_t>(digits)) + "." +
                      digits_str.substr(digits_str.size() - static_cast<std::size_t>(digits));
    if (neg && lo != 0) out.insert(0, "-");
    return out;
}

std::string QuadExt::str() const {
    if (d_ == 1) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
    s += b_.str() + "*sqrt" + std::to_string(d_);
    return s;
}

QuadExt QuadExt::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("QuadExt: empty string");
    // Split into signed terms at top-level '+'/'-' (not at the start).
    QuadExt total;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= t.size(); ++i) {
        if (i == t.size() || ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '*')) {
            std::string term = t.substr(start, i - start);
            start = i;
            int sgn = 1;
            std::size_t p = 0;
            while (p < term.size() && (term[p] == '+' || term[p] == '-')) {
                if (term[p] == '-') sgn = -sgn;
                ++p;
            }
            term = term.substr(p);
            auto pos = term.find("sqrt");
            if (pos == std::string::npos) {
                total += QuadExt(Rational::parse(term) * Rational(sgn));
                continue;
            }
            std::string coef = term.substr(0, pos);
            std::string rad = term.substr(pos + 4);
            if (rad != "2" && rad != "3" && rad != "1") throw std::invalid_argument("QuadExt: unsupported radical in '" + term + "'");
            Rational c(1);
            if (!coef.empty()) {
                if (coef.back() != '*') throw std::invalid_argument("QuadExt: malformed term '" + term + "'");
                coef.pop_back();
                c = Rational::parse(coef);
            }
            total += QuadExt(Rational(0), c * Rational(sgn), std::stoi(rad));
        }
    }
    return total;
}

std::size_t QuadExt::hash() const {
    std::size_t h = a_.hash();
    h ^= b_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(d_);
}

}  // namespace obill
