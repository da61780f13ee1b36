#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdisc/order.hpp"
#include "tdisc/rational.hpp"
#include "tdisc/ring.hpp"

namespace tdisc {

struct Term {
    Monomial m;
    Rational c;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted descending in
// the canonical (grevlex) order with no zero coefficients, so equal
// polynomials have identical representations.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(Ring ring, const Rational& c) {
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_.push_back({Monomial::one(p.ring_->size()), c});
        return p;
    }

    static Polynomial variable(Ring ring, int idx, int power = 1) {
        Polynomial p(ring);
        p.terms_.push_back({Monomial::var(ring->size(), idx, power), Rational(1)});
        return p;
    }

    static Polynomial monomial(Ring ring, Monomial m, Rational c) {
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    static Polynomial from_terms(Ring ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex_less(b.m, a.m); });
        for (auto& t : terms) {
            if (t.c == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c += t.c;
                if (p.terms_.back().c == 0) p.terms_.pop_back();
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    bool is_monomial_poly() const {
        return terms_.size() == 1 && terms_[0].c == 1;
    }

    long total_degree() const {  // max over terms; -1 for zero
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
        return d;
    }

    long min_total_degree() const {  // order of vanishing at the origin
        long d = -1;
        for (const auto& t : terms_) {
            long td = t.m.total_degree();
            if (d < 0 || td < d) d = td;
        }
        return d;
    }

    const Term& leading(const MonomialOrder& ord) const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.less(terms_[best].m, terms_[i].m, *ring_)) best = i;
        return terms_[best];
    }

    Rational coeff(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.m == m) return t.c;
        return Rational(0);
    }

    Polynomial operator-() const {
        Polynomial p(ring_);
        p.terms_ = terms_;
        for (auto& t : p.terms_) t.c = -t.c;
        return p;
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, Rational(1)); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, Rational(-1)); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    // this + s * (m * o), the workhorse of division steps
    Polynomial add_scaled(const Polynomial& o, const Rational& s, const Monomial& m) const {
        Polynomial shifted(ring_);
        shifted.terms_.reserve(o.terms_.size());
        for (const auto& t : o.terms_) shifted.terms_.push_back({t.m * m, t.c});
        return merged_raw(shifted, s);
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial acc(ring_);
        for (const auto& t : o.terms_) acc = acc.add_scaled(*this, t.c, t.m);
        return acc;
    }

    Polynomial operator*(const Rational& s) const {
        if (s == 0) return Polynomial(ring_);
        Polynomial p(ring_);
        p.terms_ = terms_;
        for (auto& t : p.terms_) t.c *= s;
        return p;
    }

    Polynomial pow(long n) const {
        Polynomial acc = constant(ring_, Rational(1));
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Scales so coefficients are coprime integers and the canonical leading
    // coefficient is positive. Returns the factor applied.
    Rational normalize_content() {
        if (terms_.empty()) return Rational(1);
        mpz_class den(1), num(0);
        for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
        for (const auto& t : terms_) {
            mpz_class n = t.c.get_num() * (den / t.c.get_den());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        }
        Rational s(den, num);
        s.canonicalize();
        if (terms_[0].c < 0) s = -s;
        for (auto& t : terms_) {
            t.c *= s;
            t.c.canonicalize();
        }
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            Rational c = t.c;
            if (i == 0) {
                if (c < 0) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            }
            std::string mono = mono_str(t.m);
            if (mono.empty()) {
                out += rat_str(c);
            } else if (c == 1) {
                out += mono;
            } else {
                out += rat_str(c) + "*" + mono;
            }
        }
        return out;
    }

private:
    std::string mono_str(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += ring_->vars[i];
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    Polynomial merged(const Polynomial& o, const Rational& s) const { return merged_raw(o, s); }

    // merge two canonically sorted term lists: this + s*o
    Polynomial merged_raw(const Polynomial& o, const Rational& s) const {
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].m == o.terms_[j].m) {
                Rational c = terms_[i].c + s * o.terms_[j].c;
                if (c != 0) p.terms_.push_back({terms_[i].m, std::move(c)});
                ++i, ++j;
            } else if (grevlex_less(o.terms_[j].m, terms_[i].m)) {
                p.terms_.push_back(terms_[i]);
                ++i;
            } else {
                Rational c = s * o.terms_[j].c;
                if (c != 0) p.terms_.push_back({o.terms_[j].m, std::move(c)});
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            Rational c = s * o.terms_[j].c;
            if (c != 0) p.terms_.push_back({o.terms_[j].m, std::move(c)});
        }
        return p;
    }

    Ring ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

// ---- basic calculus and structural operations ----------------------------

inline Polynomial derivative(const Polynomial& f, int var) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.m.e[var] == 0) continue;
        Term d;
        d.m = t.m;
        d.c = t.c * Rational(t.m.e[var]);
        d.m.e[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

// Weighted degree of a (nonzero) polynomial; on failure returns the two
// witnessing terms with distinct weighted degrees.
struct WeightedDegreeResult {
    bool homogeneous = false;
    long degree = 0;
    Monomial witness_a, witness_b;  // set when not homogeneous
};

inline WeightedDegreeResult weighted_degree(const Polynomial& f) {
    if (f.is_zero()) throw error("weighted_degree of the zero polynomial");
    WeightedDegreeResult r;
    r.degree = f.terms()[0].m.weighted_degree(*f.ring());
    r.homogeneous = true;
    for (const auto& t : f.terms()) {
        long d = t.m.weighted_degree(*f.ring());
        if (d != r.degree) {
            r.homogeneous = false;
            r.witness_a = f.terms()[0].m;
            r.witness_b = t.m;
            return r;
        }
    }
    return r;
}

// Maps a polynomial into another ring by variable NAME. Every variable
// actually occurring must exist in the target.
inline Polynomial reindex(const Polynomial& f, const Ring& target) {
    std::vector<int> map(f.ring()->size(), -1);
    for (std::size_t i = 0; i < f.ring()->size(); ++i)
        map[i] = target->index_of(f.ring()->vars[i]);
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (map[i] < 0)
                throw error("variable '" + f.ring()->vars[i] + "' does not exist in target ring");
            m.e[map[i]] = t.m.e[i];
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(target, std::move(out));
}

// Substitutes images[i] for variable i; images live in `target`.
inline Polynomial substitute(const Polynomial& f, const Ring& target,
                             const std::vector<Polynomial>& images) {
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.c);
        for (std::size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i] > 0) prod = prod * images[i].pow(t.m.e[i]);
        acc += prod;
    }
    return acc;
}

// Substitute a constant for one variable, staying in the same ring.
inline Polynomial substitute_value(const Polynomial& f, int var, const Rational& value) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Term s = t;
        if (s.m.e[var] > 0) {
            Rational pw(1);
            for (int i = 0; i < s.m.e[var]; ++i) pw *= value;
            s.c *= pw;
            s.m.e[var] = 0;
        }
        if (s.c != 0) out.push_back(std::move(s));
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

// x_var -> x_var + value (translation of a point to the origin and back).
inline Polynomial shift_variable(const Polynomial& f, int var, const Rational& value) {
    if (value == 0) return f;
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < f.ring()->size(); ++i) {
        Polynomial v = Polynomial::variable(f.ring(), static_cast<int>(i));
        if (static_cast<int>(i) == var) v += Polynomial::constant(f.ring(), value);
        images.push_back(std::move(v));
    }
    return substitute(f, f.ring(), images);
}

inline Polynomial homogenize(const Polynomial& f, const Ring& target, int new_var) {
    long d = f.total_degree();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            int idx = target->index_of(f.ring()->vars[i]);
            if (idx < 0) throw error("homogenize: variable missing in target ring");
            m.e[idx] = t.m.e[i];
        }
        m.e[new_var] = static_cast<int>(d - t.m.total_degree());
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(target, std::move(out));
}

inline Polynomial dehomogenize(const Polynomial& f, int var, const Rational& value = Rational(1)) {
    return substitute_value(f, var, value);
}

}  // namespace tdisc
