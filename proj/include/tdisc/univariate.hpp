#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tdisc/polynomial.hpp"

namespace tdisc {

// Dense univariate polynomial over Q, for resultants, series limits and
// rational root extraction. c[i] is the coefficient of X^i.
struct UniPoly {
    std::vector<Rational> c;

    static UniPoly zero() { return {}; }
    static UniPoly constant(const Rational& a) {
        UniPoly p;
        if (a != 0) p.c = {a};
        return p;
    }
    static UniPoly X(int power = 1, const Rational& a = Rational(1)) {
        UniPoly p;
        if (a != 0) {
            p.c.assign(power + 1, Rational(0));
            p.c[power] = a;
        }
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r;
        r.c.assign(std::max(c.size(), o.c.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.trim();
        return r;
    }
    UniPoly operator-(const UniPoly& o) const {
        UniPoly r;
        r.c.assign(std::max(c.size(), o.c.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.trim();
        return r;
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c) a = -a;
        return r;
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        UniPoly r;
        r.c.assign(c.size() + o.c.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }
    UniPoly operator*(const Rational& s) const {
        if (s == 0) return {};
        UniPoly r = *this;
        for (auto& a : r.c) a *= s;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    bool operator==(const UniPoly& o) const { return c == o.c; }
};

inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw error("univariate division by zero");
    UniPoly r = a, q;
    q.c.assign(a.c.size(), Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rational f = r.c.back() / b.c.back();
        q.c[d] += f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + d] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rational(1) / a.c.back());  // monic
    return a;
}

// Exact rational function in one variable; kept reduced with monic denominator.
struct RatFunc {
    UniPoly num, den = UniPoly::constant(Rational(1));

    static RatFunc of(UniPoly n, UniPoly d = UniPoly::constant(Rational(1))) {
        RatFunc f{std::move(n), std::move(d)};
        f.reduce();
        return f;
    }
    static RatFunc constant(const Rational& a) { return of(UniPoly::constant(a)); }

    void reduce() {
        if (den.is_zero()) throw error("rational function with zero denominator");
        if (num.is_zero()) {
            den = UniPoly::constant(Rational(1));
            return;
        }
        UniPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        Rational lead = den.c.back();
        if (lead != 1) {
            num = num * (Rational(1) / lead);
            den = den * (Rational(1) / lead);
        }
    }

    bool is_zero() const { return num.is_zero(); }

    RatFunc operator+(const RatFunc& o) const { return of(num * o.den + o.num * den, den * o.den); }
    RatFunc operator-(const RatFunc& o) const { return of(num * o.den - o.num * den, den * o.den); }
    RatFunc operator*(const RatFunc& o) const { return of(num * o.num, den * o.den); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw error("rational function division by zero");
        return of(num * o.den, den * o.num);
    }

    // value at a point; nullopt when the reduced denominator vanishes there
    std::optional<Rational> eval(const Rational& x) const {
        Rational d = den.eval(x);
        if (d == 0) return std::nullopt;
        return num.eval(x) / d;
    }
};

// ---- rational roots ---------------------------------------------------------

namespace detail {

inline std::vector<mpz_class> small_divisors(const mpz_class& n_in, std::size_t cap = 4096) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
            if (out.size() > cap) return {};  // give up, caller treats roots as unknown
        }
    }
    return out;
}

}  // namespace detail

// All rational roots with multiplicities, plus the root-free cofactor:
// p = lc * prod (X - r_i)^{e_i} * residual.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;
    UniPoly residual;  // no rational roots (or roots undetermined when `complete` is false)
    bool complete = true;
};

inline RationalRoots rational_roots(UniPoly p) {
    RationalRoots out;
    p.trim();
    if (p.is_zero() || p.degree() == 0) {
        out.residual = p;
        return out;
    }
    // integer coefficients
    mpz_class den(1);
    for (const auto& a : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& a : p.c) ic.push_back(a.get_num() * (den / a.get_den()));

    // root at zero
    int zmult = 0;
    while (p.degree() > 0 && p.c[0] == 0) {
        p.c.erase(p.c.begin());
        ++zmult;
    }
    if (zmult) out.roots.push_back({Rational(0), zmult});
    if (p.degree() == 0) {
        out.residual = p;
        return out;
    }

    mpz_class a0 = p.c.front().get_num(), an = p.c.back().get_num(), dl(1);
    for (const auto& a : p.c) mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), a.get_den().get_mpz_t());
    a0 *= dl / p.c.front().get_den();
    an *= dl / p.c.back().get_den();
    auto P = detail::small_divisors(a0);
    auto Q = detail::small_divisors(an);
    if (P.empty() || Q.empty()) {
        out.residual = p;
        out.complete = false;
        return out;
    }
    for (const auto& pp : P)
        for (const auto& qq : Q)
            for (int sign : {1, -1}) {
                Rational cand(sign * pp, qq);
                cand.canonicalize();
                int mult = 0;
                while (p.degree() > 0 && p.eval(cand) == 0) {
                    UniPoly lin;
                    lin.c = {-cand, Rational(1)};
                    p = divmod(p, lin).first;
                    ++mult;
                }
                if (mult) out.roots.push_back({cand, mult});
                if (p.degree() == 0) break;
            }
    out.residual = p;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// A multivariate polynomial that happens to be univariate in variable `var`
// (all other variables absent), as a UniPoly.
inline std::optional<UniPoly> as_univariate(const Polynomial& f, int var) {
    UniPoly u;
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i] > 0 && static_cast<int>(i) != var) return std::nullopt;
        int d = t.m.e[var];
        if (static_cast<int>(u.c.size()) <= d) u.c.resize(d + 1, Rational(0));
        u.c[d] += t.c;
    }
    u.trim();
    return u;
}

// The single variable the polynomial depends on, if exactly one.
inline std::optional<int> sole_variable(const Polynomial& f) {
    int var = -1;
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i] > 0) {
                if (var >= 0 && var != static_cast<int>(i)) return std::nullopt;
                var = static_cast<int>(i);
            }
    if (var < 0) return std::nullopt;
    return var;
}

}  // namespace tdisc
