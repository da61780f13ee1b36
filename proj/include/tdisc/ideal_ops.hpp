#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdisc/groebner.hpp"

namespace tdisc {

inline bool ideal_membership(const Polynomial& f, const Ideal& I, const Budget& budget = Budget()) {
    if (f.is_zero()) return true;
    if (I.trivial()) return false;
    return nf_remainder(f, I.groebner(MonomialOrder::grevlex(), budget), budget).is_zero();
}

inline bool ideal_contains(const Ideal& big, const Ideal& small, const Budget& budget = Budget()) {
    for (const auto& g : small.gens())
        if (!ideal_membership(g, big, budget)) return false;
    return true;
}

inline bool ideal_equality(const Ideal& a, const Ideal& b, const Budget& budget = Budget()) {
    return ideal_contains(a, b, budget) && ideal_contains(b, a, budget);
}

inline bool is_unit_ideal(const Ideal& I, const Budget& budget = Budget()) {
    if (I.trivial()) return false;
    return I.groebner(MonomialOrder::grevlex(), budget).is_unit();
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

// Generated by all products of p generators (multisets), in a fixed
// deterministic order: the colexicographically increasing exponent vectors.
inline std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens, int p,
                                              std::vector<std::vector<int>>* exponents = nullptr) {
    std::vector<Polynomial> out;
    std::vector<int> expo(gens.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == gens.size()) {
            expo[i] = left;
            Polynomial prod = Polynomial::constant(gens[0].ring(), Rational(1));
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (expo[j] > 0) prod = prod * gens[j].pow(expo[j]);
            out.push_back(prod);
            if (exponents) exponents->push_back(expo);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            expo[i] = e;
            rec(i + 1, left - e);
        }
    };
    if (!gens.empty()) rec(0, p);
    return out;
}

inline Ideal ideal_power(const Ideal& I, int p) {
    if (p == 0) return Ideal(I.ring(), {Polynomial::constant(I.ring(), Rational(1))});
    return Ideal(I.ring(), power_products(I.gens(), p));
}

// ---- elimination ----------------------------------------------------------

// Generators of I restricted to the subring without `vars`: the block order
// puts the removed variables first, and basis elements free of them generate
// the elimination ideal.
inline Ideal eliminate(const Ideal& I, const std::vector<int>& vars, const Budget& budget = Budget()) {
    if (vars.empty()) return I;
    const GroebnerBasis& gb = I.groebner(MonomialOrder::elim(vars), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elems) {
        bool free = true;
        for (const auto& t : g.terms())
            if (t.m.depends_on_any(vars)) {
                free = false;
                break;
            }
        if (free) kept.push_back(g);
    }
    return Ideal(I.ring(), std::move(kept));
}

// ---- intersection / quotient / saturation ---------------------------------

inline Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = Budget()) {
    if (a.trivial() || b.trivial()) return Ideal(a.ring(), {});
    const Ring& r = a.ring();
    auto tname = fresh_names(r, "t", 1)[0];
    Ring ext = extend_ring(r, {tname});
    int ti = ext->index_of(tname);
    Polynomial t = Polynomial::variable(ext, ti);
    Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(t * reindex(f, ext));
    for (const auto& g : b.gens()) gens.push_back(one_minus_t * reindex(g, ext));
    Ideal J(ext, std::move(gens));
    Ideal E = eliminate(J, {ti}, budget);
    std::vector<Polynomial> back;
    for (const auto& g : E.gens()) back.push_back(reindex(g, r));
    return Ideal(r, std::move(back));
}

// I : (g) for a single polynomial, via (I ∩ (g)) / g.
inline Ideal ideal_quotient_single(const Ideal& I, const Polynomial& g, const Budget& budget = Budget()) {
    if (g.is_zero()) return Ideal(I.ring(), {Polynomial::constant(I.ring(), Rational(1))});
    Ideal cap = intersect(I, Ideal(I.ring(), {g}), budget);
    GroebnerBasis gbg;
    gbg.ring = I.ring();
    gbg.order = MonomialOrder::grevlex();
    gbg.elems = {g};
    gbg.lead = {g.leading(gbg.order).m};
    std::vector<Polynomial> gens;
    for (const auto& f : cap.gens()) {
        DivisionCertificate c = normal_form(f, gbg, budget);
        if (!c.remainder.is_zero()) throw error("internal: quotient division not exact");
        gens.push_back(c.cofactors[0]);
    }
    return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_quotient(const Ideal& I, const Ideal& J, const Budget& budget = Budget()) {
    if (J.trivial()) return Ideal(I.ring(), {Polynomial::constant(I.ring(), Rational(1))});
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        Ideal q = ideal_quotient_single(I, g, budget);
        acc = acc ? intersect(*acc, q, budget) : q;
    }
    return *acc;
}

// I : f^∞ by the Rabinowitsch trick: eliminate t from I + (1 - t*f).
inline Ideal saturate_single(const Ideal& I, const Polynomial& f, const Budget& budget = Budget()) {
    if (f.is_zero()) return Ideal(I.ring(), {Polynomial::constant(I.ring(), Rational(1))});
    const Ring& r = I.ring();
    auto tname = fresh_names(r, "t", 1)[0];
    Ring ext = extend_ring(r, {tname});
    int ti = ext->index_of(tname);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(reindex(g, ext));
    gens.push_back(Polynomial::constant(ext, Rational(1)) -
                   Polynomial::variable(ext, ti) * reindex(f, ext));
    Ideal J(ext, std::move(gens));
    Ideal E = eliminate(J, {ti}, budget);
    std::vector<Polynomial> back;
    for (const auto& g : E.gens()) back.push_back(reindex(g, r));
    return Ideal(r, std::move(back));
}

// I : J^∞. Every element with f*J^N ⊆ I satisfies f*g^N' ∈ I for each
// generator g and conversely (pigeonhole on generator products), so the
// saturation is the intersection of the single-generator saturations.
inline Ideal saturate(const Ideal& I, const Ideal& J, const Budget& budget = Budget()) {
    if (J.trivial()) return Ideal(I.ring(), {Polynomial::constant(I.ring(), Rational(1))});
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        Ideal s = saturate_single(I, g, budget);
        acc = acc ? intersect(*acc, s, budget) : s;
    }
    return *acc;
}

// stabilization witness: sat : J == sat
inline bool saturation_certificate(const Ideal& sat, const Ideal& J, const Budget& budget = Budget()) {
    return ideal_equality(ideal_quotient(sat, J, budget), sat, budget);
}

// ---- dimension and colength ------------------------------------------------

// Krull dimension of R/I via maximal sets of variables independent modulo the
// leading-term ideal. Unit ideal -> -1.
inline int krull_dimension(const Ideal& I, const Budget& budget = Budget()) {
    std::size_t n = I.ring()->size();
    if (I.trivial()) return static_cast<int>(n);
    const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex(), budget);
    if (gb.is_unit()) return -1;
    int best = 0;
    for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
        int card = __builtin_popcountll(mask);
        if (card <= best) continue;
        bool independent = true;
        for (const auto& m : gb.lead) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m.e[i] > 0 && !(mask >> i & 1)) inside = false;
            if (inside) {  // a leading monomial supported inside the candidate set
                independent = false;
                break;
            }
        }
        if (independent) best = card;
    }
    return best;
}

// Vector-space dimension of R/I for zero-dimensional I: counts the standard
// monomials under the staircase of leading terms.
inline long quotient_dim(const Ideal& I, const Budget& budget = Budget()) {
    const std::size_t n = I.ring()->size();
    if (I.trivial()) throw error("quotient_dim: positive-dimensional input (zero ideal)");
    const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex(), budget);
    if (gb.is_unit()) return 0;
    std::vector<long> cap(n, -1);
    for (const auto& m : gb.lead) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i)
            if (m.e[i] > 0) {
                if (support >= 0) pure = false;
                support = static_cast<int>(i);
            }
        if (pure && support >= 0)
            if (cap[support] < 0 || m.e[support] < cap[support]) cap[support] = m.e[support];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (cap[i] < 0) throw error("quotient_dim: positive-dimensional input");

    long count = 0;
    Monomial cur(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
            for (const auto& m : gb.lead)
                if (m.divides(cur)) return;
            ++count;
            return;
        }
        for (long e = 0; e < cap[i]; ++e) {
            cur.e[i] = static_cast<int>(e);
            bool divisible = false;
            for (const auto& m : gb.lead)
                if (m.divides(cur)) {
                    bool later = false;
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (m.e[j] > 0) later = true;
                    if (!later) {
                        divisible = true;
                        break;
                    }
                }
            if (divisible) break;  // larger e stays divisible
            walk(i + 1);
        }
        cur.e[i] = 0;
    };
    walk(0);
    return count;
}

// Enumerates the standard monomials themselves (ascending grevlex).
inline std::vector<Monomial> standard_monomials(const Ideal& I, const Budget& budget = Budget()) {
    const std::size_t n = I.ring()->size();
    const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex(), budget);
    std::vector<Monomial> out;
    if (gb.is_unit()) return out;
    std::vector<long> cap(n, -1);
    for (const auto& m : gb.lead) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i)
            if (m.e[i] > 0) {
                if (support >= 0) pure = false;
                support = static_cast<int>(i);
            }
        if (pure && support >= 0)
            if (cap[support] < 0 || m.e[support] < cap[support]) cap[support] = m.e[support];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (cap[i] < 0) throw error("standard_monomials: positive-dimensional input");
    Monomial cur(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
            for (const auto& m : gb.lead)
                if (m.divides(cur)) return;
            out.push_back(cur);
            return;
        }
        for (long e = 0; e < cap[i]; ++e) {
            cur.e[i] = static_cast<int>(e);
            walk(i + 1);
        }
        cur.e[i] = 0;
    };
    walk(0);
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

// All monomials of exact degree d in the given variables.
inline std::vector<Monomial> monomials_of_degree(const Ring& ring, const std::vector<int>& vars, int d) {
    std::vector<Monomial> out;
    Monomial cur(ring->size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == vars.size()) {
            cur.e[vars[i]] = left;
            out.push_back(cur);
            cur.e[vars[i]] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur.e[vars[i]] = e;
            rec(i + 1, left - e);
        }
        cur.e[vars[i]] = 0;
    };
    if (!vars.empty()) rec(0, d);
    return out;
}

struct LocalColength {
    long value = 0;
    int stabilized_at = 0;  // the N whose value matched the previous one
};

// Colength of I localized at the common zero of `vars` (= the origin in those
// coordinates, all other directions left global): the stabilized value of
// quotient_dim(I + (vars)^N) for N = 2,4,...  Throws hypothesis_error when the
// values keep growing (the locus is not finite there).
inline LocalColength local_colength_over(const Ideal& I, const std::vector<int>& vars,
                                         const Budget& budget = Budget(), int cap = 64) {
    long prev = -1;
    for (int N = 2; N <= cap; N *= 2) {
        std::vector<Polynomial> gens = I.gens();
        for (const auto& m : monomials_of_degree(I.ring(), vars, N))
            gens.push_back(Polynomial::monomial(I.ring(), m, Rational(1)));
        Ideal J(I.ring(), std::move(gens));
        long qd;
        try {
            qd = quotient_dim(J, budget);
        } catch (const error&) {
            throw hypothesis_error("not finite at origin (fiber directions unbounded)");
        }
        if (qd == prev) return {qd, N};
        prev = qd;
    }
    throw hypothesis_error("not finite at origin (colength did not stabilize)");
}

// Colength of I in the local ring at the origin (all variables).
inline LocalColength local_colength_at_origin(const Ideal& I, const Budget& budget = Budget(),
                                              int cap = 64) {
    std::vector<int> vars;
    for (std::size_t i = 0; i < I.ring()->size(); ++i) vars.push_back(static_cast<int>(i));
    return local_colength_over(I, vars, budget, cap);
}

}  // namespace tdisc
