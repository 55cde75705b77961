#include "obill/rational.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace obill {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs64(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

mpz_class mpz_from_i128(i128 v) {
    const bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    u128 g = gcd128(uabs(nn), static_cast<u128>(dd));
    if (g > 1) {
        nn /= static_cast<i128>(g);
        dd /= static_cast<i128>(g);
    }
    *this = from_i128(nn, dd);
}

Rational::Rational(const mpq_class& q) { set_from_mpq(q); }

void Rational::set_from_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::from_i128(i128 n, i128 d) {
    Rational r;
    if (fits(n) && fits(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.set_from_mpq(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = text.find('/');
    std::string_view ns = trim(text.substr(0, slash));
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    auto valid = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!valid(ns) || !valid(ds)) throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    auto strip_plus = [](std::string_view s) { return !s.empty() && s.front() == '+' ? s.substr(1) : s; };
    mpz_class n(std::string(strip_plus(ns)), 10);
    mpz_class d(std::string(strip_plus(ds)), 10);
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    Rational r;
    r.set_from_mpq(mpq_class(n, d));
    return r;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

mpz_class Rational::numerator() const {
    if (big_) return big_->get_num();
    return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    if (big_) return big_->get_den();
    return mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
    if (g == 1) {
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    const std::int64_t ad = a.den_ / static_cast<std::int64_t>(g);
    const std::int64_t bd = b.den_ / static_cast<std::int64_t>(g);
    i128 t = static_cast<i128>(a.num_) * bd + static_cast<i128>(b.num_) * ad;
    if (t == 0) return Rational();
    u128 g2 = gcd128(uabs(t), g);
    i128 n = t / static_cast<i128>(g2);
    i128 d = static_cast<i128>(ad) * (b.den_ / static_cast<std::int64_t>(g2));
    return Rational::from_i128(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    const auto g1 = static_cast<std::int64_t>(std::gcd(uabs64(a.num_), static_cast<std::uint64_t>(b.den_)));
    const auto g2 = static_cast<std::int64_t>(std::gcd(uabs64(b.num_), static_cast<std::uint64_t>(a.den_)));
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    return Rational::from_i128(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;  // representation is unique
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

int compare(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return cmp(a.to_mpq(), b.to_mpq());
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace obill
