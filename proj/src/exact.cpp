#include "ambitoric/exact.hpp"

#include <cctype>
#include <ostream>

namespace ambitoric {

Rational::Rational(long n, long d) {
    if (d == 0) throw malformed_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw malformed_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw malformed_error("inverse of zero rational");
    return Rational(mpq_class(1) / v_);
}

std::optional<Rational> Rational::parse(std::string_view s) {
    // grammar: '-'? digits ('/' digits)?   with den != 0
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && s[i] == '-') { neg = true; ++i; }
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return std::nullopt;
    std::string num(s.substr(num_begin, i - num_begin));
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) return std::nullopt;
        den = std::string(s.substr(den_begin));
    }
    mpz_class zn(num), zd(den);
    if (zd == 0) return std::nullopt;
    mpq_class q(zn, zd);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(std::move(q));
}

Rational Rational::parse_or_throw(std::string_view s) {
    auto r = parse(s);
    if (!r) throw parse_error("malformed rational literal '" + std::string(s) + "'");
    return *r;
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num().get_mpz_t(), 2)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den().get_mpz_t(), 2)) return std::nullopt;
    return Rational(mpq_class(rn, rd));
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::uint64_t Rng::next() {
    // splitmix64: tiny, stable across platforms.
    s_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

} // namespace ambitoric
