#include "ambitoric/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace ambitoric {

namespace {

const char* kVarNames[kNumVars] = {"x", "y", "z", "u", "v", "a", "b", "c"};

std::atomic<int> g_cap{0}; // 0 = uninitialized

int clamp_cap(long c) {
    if (c < 1) c = 1;
    if (c > 255) c = 255;
    return static_cast<int>(c);
}

} // namespace

const char* var_name(int v) { return kVarNames[v]; }

std::optional<int> var_by_name(std::string_view name) {
    for (int v = 0; v < kNumVars; ++v)
        if (name == kVarNames[v]) return v;
    return std::nullopt;
}

int degree_cap() {
    int c = g_cap.load(std::memory_order_relaxed);
    if (c == 0) {
        long v = 200;
        if (const char* e = std::getenv("AMBITORIC_DEGREE_CAP")) {
            char* end = nullptr;
            long parsed = std::strtol(e, &end, 10);
            if (end && *end == '\0' && parsed > 0) v = parsed;
        }
        c = clamp_cap(v);
        g_cap.store(c, std::memory_order_relaxed);
    }
    return c;
}

void set_degree_cap(int cap) { g_cap.store(clamp_cap(cap), std::memory_order_relaxed); }

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.t_.push_back({0, std::move(c)});
    return p;
}

Polynomial Polynomial::variable(int v) { return monomial(mono_make(v, 1), Rational(1)); }

Polynomial Polynomial::monomial(Mono m, Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.t_.push_back({m, std::move(c)});
    return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
    Polynomial p;
    p.t_ = std::move(terms);
    return p;
}

Rational Polynomial::constant_value() const {
    if (t_.empty()) return Rational(0);
    return t_[0].second;
}

int Polynomial::degree(int var) const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, mono_exp(m, var));
    return d;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (int v = 0; v < kNumVars; ++v) s += mono_exp(m, v);
        d = std::max(d, s);
    }
    return d;
}

std::uint32_t Polynomial::used_vars() const {
    std::uint32_t mask = 0;
    for (const auto& [m, c] : t_)
        for (int v = 0; v < kNumVars; ++v)
            if (mono_exp(m, v) > 0) mask |= (1u << v);
    return mask;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

namespace {

// Merge of two descending term vectors with coefficient combination.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, bool subtract) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first > b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first < b[j].first) {
            out.push_back(b[j]);
            if (subtract) out.back().second = -out.back().second;
            ++j;
        } else {
            Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) out.push_back({a[i].first, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (subtract) out.back().second = -out.back().second;
    }
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    t_ = merge_terms(t_, o.t_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    t_ = merge_terms(t_, o.t_, true);
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    return r += b;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    return r -= b;
}

void Polynomial::check_cap(const Polynomial& a, const Polynomial& b) {
    int cap = degree_cap();
    for (int v = 0; v < kNumVars; ++v) {
        int da = a.degree(v), db = b.degree(v);
        if (da >= 0 && db >= 0 && da + db > cap)
            throw resource_error(std::string("degree cap ") + std::to_string(cap) +
                                 " exceeded in variable " + kVarNames[v]);
    }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial::check_cap(a, b);
    std::vector<Polynomial::Term> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) prod.push_back({ma + mb, ca * cb});
    std::sort(prod.begin(), prod.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    std::vector<Polynomial::Term> out;
    out.reserve(prod.size());
    for (auto& t : prod) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial r(*this);
    for (auto& [m, k] : r.t_) k *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::integer(1);
    Polynomial base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= kNumVars) throw malformed_error("derivative: unknown variable");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) {
        int e = mono_exp(m, var);
        if (e == 0) continue;
        out.push_back({m - mono_make(var, 1), c * Rational(e)});
    }
    return from_sorted_terms(std::move(out)); // order preserved: same shift on all keys with e>0
}

Polynomial Polynomial::coefficient_of(int var, int k) const {
    std::vector<Term> out;
    for (const auto& [m, c] : t_)
        if (mono_exp(m, var) == k) out.push_back({m - mono_make(var, k), c});
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    return from_sorted_terms(std::move(out));
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    int d = degree(var);
    if (d <= 0 && !(d == 0)) return *this;
    // Horner over powers of `var`.
    Polynomial result;
    for (int k = std::max(d, 0); k >= 0; --k) {
        if (k != std::max(d, 0)) result = result * value;
        result += coefficient_of(var, k);
    }
    return result;
}

Rational Polynomial::evaluate(const std::array<std::optional<Rational>, kNumVars>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : t_) {
        Rational term = c;
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            if (!point[v])
                throw malformed_error(std::string("evaluate: unbound variable ") + kVarNames[v]);
            Rational p = *point[v];
            for (int i = 0; i < e; ++i) term *= p;
        }
        acc += term;
    }
    return acc;
}

const Polynomial::Term& Polynomial::leading() const {
    if (t_.empty()) throw internal_error("leading term of zero polynomial");
    return t_[0];
}

namespace {

bool mono_divides(Mono a, Mono b) {
    // does a | b, i.e. every exponent of a <= exponent of b
    for (int v = 0; v < kNumVars; ++v)
        if (mono_exp(a, v) > mono_exp(b, v)) return false;
    return true;
}

} // namespace

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    Polynomial rem(*this);
    std::vector<Term> q;
    const auto& dl = divisor.leading();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading();
        if (!mono_divides(dl.first, rl.first)) return std::nullopt;
        Term t{rl.first - dl.first, rl.second / dl.second};
        q.push_back(t);
        rem -= divisor * Polynomial::monomial(t.first, t.second);
    }
    std::sort(q.begin(), q.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    return from_sorted_terms(std::move(q));
}

Polynomial Polynomial::divexact(const Polynomial& divisor) const {
    auto q = try_divide(divisor);
    if (!q) throw internal_error("divexact: inexact polynomial division");
    return *q;
}

std::optional<Polynomial> Polynomial::sqrt() const {
    if (is_zero()) return Polynomial();
    if (is_constant()) {
        auto r = constant_value().sqrt();
        if (!r) return std::nullopt;
        return constant(*r);
    }
    int var = -1;
    for (int v = 0; v < kNumVars; ++v)
        if (degree(v) > 0) { var = v; break; }
    int d = degree(var);
    if (d % 2 != 0) return std::nullopt;
    auto top = coefficient_of(var, d).sqrt();
    if (!top) return std::nullopt;
    int h = d / 2;
    Polynomial root = *top * Polynomial::monomial(mono_make(var, h), Rational(1));
    Polynomial twotop = top->scaled(Rational(2));
    // schoolbook digit-by-digit square root in the main variable
    for (int k = h - 1; k >= 0; --k) {
        Polynomial rem = *this - root * root;
        Polynomial c = rem.coefficient_of(var, h + k);
        auto digit = c.try_divide(twotop);
        if (!digit) return std::nullopt;
        root += *digit * Polynomial::monomial(mono_make(var, k), Rational(1));
    }
    if (root * root != *this) return std::nullopt;
    if (root.leading().second.sign() < 0) root = -root;
    return root;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rational coeff = c;
        if (first) {
            if (coeff.sign() < 0) { os << "-"; coeff = -coeff; }
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0) coeff = -coeff;
        }
        first = false;
        bool has_vars = (m != 0);
        if (!has_vars || coeff != Rational(1)) {
            os << coeff.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << kVarNames[v];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

} // namespace ambitoric
