#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tdisc/errors.hpp"
#include "tdisc/polynomial.hpp"

namespace tdisc {

// Resource caps for the Buchberger engine. Exceeding a cap raises
// budget_error; the engine never silently truncates.
struct Budget {
    long max_pair_reductions = 400000;
    long max_term_degree = 400;
};

struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    std::vector<Polynomial> elems;  // reduced, monic, sorted by leading monomial (ascending)
    std::vector<Monomial> lead;

    bool is_unit() const {
        return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
    }
    bool is_zero_ideal() const { return elems.empty(); }
};

// remainder + one cofactor per basis element; input = sum cof_i*basis_i + remainder
struct DivisionCertificate {
    Polynomial remainder;
    std::vector<Polynomial> cofactors;
};

namespace detail {

struct TrackedPoly {
    Polynomial p;
    std::vector<Polynomial> rep;  // representation over the original generators
    bool single_term = false;
};

inline void refresh_flags(TrackedPoly& t) { t.single_term = t.p.term_count() == 1; }

// Divides f by the list `basis` w.r.t. `order`, fully reducing every term.
// Deterministic: the dividing element is always the first whose leading
// monomial divides the current term.
inline DivisionCertificate divide_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                                       const std::vector<Monomial>& lead, const MonomialOrder& order,
                                       const Budget& budget, bool want_cofactors) {
    const Ring& ring = f.ring();
    DivisionCertificate cert;
    if (want_cofactors) cert.cofactors.assign(basis.size(), Polynomial::zero(ring));
    Polynomial p = f;
    std::vector<Term> rem;
    while (!p.is_zero()) {
        const Term& lt = p.leading(order);
        if (lt.m.total_degree() > budget.max_term_degree)
            throw budget_error("term degree cap during division");
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!lead[i].divides(lt.m)) continue;
            Monomial m = lt.m / lead[i];
            Rational q = lt.c / basis[i].leading(order).c;
            p = p.add_scaled(basis[i], -q, m);
            if (want_cofactors)
                cert.cofactors[i] = cert.cofactors[i] + Polynomial::monomial(ring, m, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lt);
            p = p + Polynomial::monomial(ring, lt.m, -lt.c);
        }
    }
    cert.remainder = Polynomial::from_terms(ring, std::move(rem));
    return cert;
}

inline Polynomial spoly(const Polynomial& a, const Polynomial& b, const MonomialOrder& order) {
    const Term& la = a.leading(order);
    const Term& lb = b.leading(order);
    Monomial l = lcm(la.m, lb.m);
    Polynomial s = Polynomial::zero(a.ring())
                       .add_scaled(a, Rational(1) / la.c, l / la.m)
                       .add_scaled(b, Rational(-1) / lb.c, l / lb.m);
    return s;
}

}  // namespace detail

// Buchberger with the normal selection strategy (minimal lcm degree, ties by
// generator index) and the coprime/chain criteria. Output is the unique
// reduced basis. With `track` set, each element also carries its expression
// over the input generators.
struct ExtendedGroebner {
    GroebnerBasis gb;
    std::vector<std::vector<Polynomial>> rep;  // rep[i][j]: gb.elems[i] = sum_j rep[i][j]*gens[j]
};

inline ExtendedGroebner buchberger_core(const Ring& ring, const std::vector<Polynomial>& gens_in,
                                        const MonomialOrder& order, const Budget& budget, bool track) {
    using detail::TrackedPoly;
    std::vector<TrackedPoly> G;
    std::size_t ngens = gens_in.size();
    for (std::size_t j = 0; j < gens_in.size(); ++j) {
        if (gens_in[j].is_zero()) continue;
        TrackedPoly t;
        t.p = gens_in[j];
        if (track) {
            t.rep.assign(ngens, Polynomial::zero(ring));
            t.rep[j] = Polynomial::constant(ring, Rational(1));
        }
        Rational s = t.p.normalize_content();
        if (track) t.rep[j] = t.rep[j] * s;
        detail::refresh_flags(t);
        G.push_back(std::move(t));
    }

    auto basis_leads = [&](std::vector<Polynomial>& ps, std::vector<Monomial>& ls) {
        ps.clear();
        ls.clear();
        for (const auto& g : G) {
            ps.push_back(g.p);
            ls.push_back(g.p.leading(order).m);
        }
    };

    // pair queue keyed by (lcm total degree, i, j)
    std::set<std::tuple<long, int, int>> queue;
    std::set<std::pair<int, int>> done;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            const Monomial& mi = G[i].p.leading(order).m;
            const Monomial& mj = G[j].p.leading(order).m;
            if (G[i].single_term && G[j].single_term) {
                done.insert({i, j});  // S-polynomial of two terms is identically zero
                continue;
            }
            queue.insert({lcm(mi, mj).total_degree(), i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs_for(j);

    long reductions = 0;
    std::vector<Polynomial> basis;
    std::vector<Monomial> leads;
    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.insert({i, j});
        const Monomial& mi = G[i].p.leading(order).m;
        const Monomial& mj = G[j].p.leading(order).m;
        if (coprime(mi, mj)) continue;
        Monomial l = lcm(mi, mj);
        bool chained = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!G[k].p.leading(order).m.divides(l)) continue;
            auto pik = std::minmax(i, k), pjk = std::minmax(j, k);
            if (done.count({pik.first, pik.second}) && done.count({pjk.first, pjk.second}))
                chained = true;
        }
        if (chained) continue;

        if (++reductions > budget.max_pair_reductions)
            throw budget_error("S-pair cap in Buchberger");
        basis_leads(basis, leads);
        Polynomial s = detail::spoly(G[i].p, G[j].p, order);
        DivisionCertificate cert = detail::divide_full(s, basis, leads, order, budget, track);
        if (cert.remainder.is_zero()) continue;

        TrackedPoly t;
        t.p = cert.remainder;
        if (track) {
            // S(i,j) = (l/mi)/lc_i * G_i - (l/mj)/lc_j * G_j, then subtract the division cofactors
            t.rep.assign(ngens, Polynomial::zero(ring));
            Polynomial ui = Polynomial::monomial(ring, l / mi, Rational(1) / G[i].p.leading(order).c);
            Polynomial uj = Polynomial::monomial(ring, l / mj, Rational(1) / G[j].p.leading(order).c);
            for (std::size_t g = 0; g < ngens; ++g)
                t.rep[g] = ui * G[i].rep[g] - uj * G[j].rep[g];
            for (std::size_t b = 0; b < G.size(); ++b) {
                if (cert.cofactors[b].is_zero()) continue;
                for (std::size_t g = 0; g < ngens; ++g)
                    t.rep[g] -= cert.cofactors[b] * G[b].rep[g];
            }
        }
        Rational sc = t.p.normalize_content();
        if (track)
            for (auto& r : t.rep) r = r * sc;
        detail::refresh_flags(t);
        G.push_back(std::move(t));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    }

    // minimalize: drop elements whose leading monomial is divided by another's
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(G.size()); ++i) {
        const Monomial& mi = G[i].p.leading(order).m;
        bool redundant = false;
        for (int j = 0; j < static_cast<int>(G.size()) && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = G[j].p.leading(order).m;
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<TrackedPoly> M;
    for (int i : keep) M.push_back(std::move(G[i]));

    // interreduce to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < M.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<Monomial> oleads;
            std::vector<std::size_t> omap;
            for (std::size_t j = 0; j < M.size(); ++j) {
                if (j == i) continue;
                others.push_back(M[j].p);
                oleads.push_back(M[j].p.leading(order).m);
                omap.push_back(j);
            }
            DivisionCertificate cert =
                detail::divide_full(M[i].p, others, oleads, order, budget, track);
            if (cert.remainder != M[i].p) {
                changed = true;
                M[i].p = cert.remainder;
                if (track)
                    for (std::size_t b = 0; b < others.size(); ++b) {
                        if (cert.cofactors[b].is_zero()) continue;
                        for (std::size_t g = 0; g < ngens; ++g)
                            M[i].rep[g] -= cert.cofactors[b] * M[omap[b]].rep[g];
                    }
                if (M[i].p.is_zero()) {
                    M.erase(M.begin() + static_cast<long>(i));
                    --i;
                }
            }
        }
    }

    // monic, then sort by leading monomial ascending
    for (auto& t : M) {
        Rational lc = t.p.leading(order).c;
        t.p = t.p * (Rational(1) / lc);
        if (track)
            for (auto& r : t.rep) r = r * (Rational(1) / lc);
    }
    std::vector<std::size_t> perm(M.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return order.less(M[a].p.leading(order).m, M[b].p.leading(order).m, *ring);
    });

    ExtendedGroebner out;
    out.gb.ring = ring;
    out.gb.order = order;
    for (std::size_t i : perm) {
        out.gb.elems.push_back(M[i].p);
        out.gb.lead.push_back(M[i].p.leading(order).m);
        if (track) out.rep.push_back(M[i].rep);
    }
    return out;
}

inline DivisionCertificate normal_form(const Polynomial& f, const GroebnerBasis& gb,
                                       const Budget& budget = Budget()) {
    return detail::divide_full(f, gb.elems, gb.lead, gb.order, budget, true);
}

inline Polynomial nf_remainder(const Polynomial& f, const GroebnerBasis& gb,
                               const Budget& budget = Budget()) {
    return detail::divide_full(f, gb.elems, gb.lead, gb.order, budget, false).remainder;
}

// Generator list + per-order cache of reduced bases. Value semantics; copies
// share the cache. Cache fills are write-once per order key.
class Ideal {
public:
    Ideal() = default;
    Ideal(Ring ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool trivial() const { return gens_.empty(); }  // the zero ideal

    const GroebnerBasis& groebner(const MonomialOrder& order, const Budget& budget = Budget()) const {
        std::string k = order.key();
        auto it = cache_->bases.find(k);
        if (it != cache_->bases.end()) return it->second;
        ExtendedGroebner eg = buchberger_core(ring_, gens_, order, budget, false);
        return cache_->bases.emplace(std::move(k), std::move(eg.gb)).first->second;
    }

    std::string str() const {
        if (gens_.empty()) return "(0)";
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ", ";
            s += gens_[i].str();
        }
        return s + ")";
    }

private:
    struct Cache {
        std::map<std::string, GroebnerBasis> bases;
    };
    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline Ideal make_ideal(const Ring& ring, std::vector<Polynomial> gens) {
    return Ideal(ring, std::move(gens));
}

inline ExtendedGroebner extended_groebner(const Ideal& ideal, const MonomialOrder& order,
                                          const Budget& budget = Budget()) {
    return buchberger_core(ideal.ring(), ideal.gens(), order, budget, true);
}

// Expresses f over the ORIGINAL generators of the tracked basis. Returns
// nothing when f is not a member.
inline std::optional<std::vector<Polynomial>> express_over_generators(
    const Polynomial& f, const ExtendedGroebner& eg, std::size_t ngens,
    const Budget& budget = Budget()) {
    DivisionCertificate cert = normal_form(f, eg.gb, budget);
    if (!cert.remainder.is_zero()) return std::nullopt;
    std::vector<Polynomial> out(ngens, Polynomial::zero(f.ring()));
    for (std::size_t i = 0; i < eg.gb.elems.size(); ++i) {
        if (cert.cofactors[i].is_zero()) continue;
        for (std::size_t g = 0; g < ngens; ++g)
            out[g] += cert.cofactors[i] * eg.rep[i][g];
    }
    return out;
}

}  // namespace tdisc
