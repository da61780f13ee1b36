#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdisc/ideal_ops.hpp"

namespace tdisc {

inline constexpr long kInfiniteOrder = -1;

// A polynomially presented pair Z ⊂ X: I_Z = (g_1..g_k), I_X = (f_1..f_r).
// The generator lists are ordered and fixed; the conormal construction and
// the coefficient tables depend on them (up to the GL-action ambiguity).
struct PairSetup {
    Ring ring;
    Ideal IZ;
    Ideal IX;
    std::vector<Ideal> components;  // optional: user-supplied minimal primes of I_Z

    std::size_t k() const { return IZ.gens().size(); }
    std::size_t r() const { return IX.gens().size(); }
};

// Largest p with f ∈ I_Z^p (ordinary powers; for a complete intersection they
// agree with symbolic powers, so this is the generic order along Z).
inline long ord_along(const Polynomial& f, const Ideal& IZ, const Budget& budget = Budget()) {
    if (f.is_zero()) return kInfiniteOrder;
    if (IZ.trivial() || is_unit_ideal(IZ, budget)) throw error("ord_along: improper ideal");
    long p = 0;
    while (true) {
        Ideal pw = ideal_power(IZ, static_cast<int>(p + 1));
        if (!ideal_membership(f, pw, budget)) return p;
        ++p;
        if (p > 512) throw error("ord_along: order exceeds 512, filtration not separated?");
    }
}

// f ∈ p_i^m for every supplied minimal prime (each assumed a complete
// intersection, so ordinary powers realize generic order).
inline bool symbolic_membership(const Polynomial& f, const std::vector<Ideal>& components, int m,
                                const Budget& budget = Budget()) {
    if (components.empty()) throw error("symbolic_membership: empty component list");
    for (const auto& c : components)
        if (!ideal_membership(f, ideal_power(c, m), budget)) return false;
    return true;
}

// The conormal ideal gr_{I_Z}(I_X) presented in O_Z[y]: an ideal of the
// extended ring k[x;y] that contains I_Z, homogeneous in the y-block, with
// per-generator coefficient tables  f_j = Σ_{|m|=p_j} g^m a^{(j)}_m.
struct ConormalData {
    PairSetup setup;
    Ring ext;                  // base vars then y_1..y_k; base_count = |x|
    std::vector<int> y_idx;    // indices of the y block in ext
    std::vector<int> base_idx;
    Ideal IZ_ext;              // I_Z inside ext
    Ideal gr_ideal;            // contains IZ_ext, y-homogeneous generators

    std::vector<long> orders;              // p_j = ord along Z of f_j
    std::vector<Polynomial> lead_forms;    // f̃_j in ext, coefficients reduced mod I_Z
    // coefficient table per generator: exponent m (over the g-list) -> a_m mod I_Z (in base ring)
    std::vector<std::vector<std::pair<std::vector<int>, Polynomial>>> coeff_tables;

    const GroebnerBasis& gbZ(const Budget& budget = Budget()) const {
        return IZ_ext.groebner(MonomialOrder::grevlex(), budget);
    }
};

namespace detail {

// y-homogeneous components of a polynomial of the extended ring
inline std::vector<Polynomial> y_components(const Polynomial& f, const std::vector<int>& y_idx) {
    std::map<long, std::vector<Term>> parts;
    for (const auto& t : f.terms()) parts[t.m.degree_on(y_idx)].push_back(t);
    std::vector<Polynomial> out;
    for (auto& [d, ts] : parts) out.push_back(Polynomial::from_terms(f.ring(), std::move(ts)));
    return out;
}

}  // namespace detail

// Expansion of f (of order p along I_Z) over the monomial products g^m,
// |m| = p, with the restrictions a_m|_Z. The products seed the basis in a
// fixed deterministic order, so the cofactors are reproducible; coefficients
// are stored reduced mod I_Z where they are unique.
inline std::vector<std::pair<std::vector<int>, Polynomial>> expansion_coefficients(
    const Polynomial& f, const Ideal& IZ, long p, const Budget& budget = Budget()) {
    std::vector<std::vector<int>> expos;
    std::vector<Polynomial> prods = power_products(IZ.gens(), static_cast<int>(p), &expos);
    Ideal P(IZ.ring(), prods);
    ExtendedGroebner eg = extended_groebner(P, MonomialOrder::grevlex(), budget);
    auto cof = express_over_generators(f, eg, prods.size(), budget);
    if (!cof) throw error("expansion_coefficients: f not in the stated power of I_Z");
    const GroebnerBasis& gbZ = IZ.groebner(MonomialOrder::grevlex(), budget);
    std::vector<std::pair<std::vector<int>, Polynomial>> out;
    for (std::size_t i = 0; i < prods.size(); ++i) {
        Polynomial a = nf_remainder((*cof)[i], gbZ, budget);
        if (!a.is_zero()) out.push_back({expos[i], std::move(a)});
    }
    return out;
}

// Leading form f̃ ∈ O_Z[y] of f along I_Z, assembled in the extended ring.
inline Polynomial assemble_lead_form(const std::vector<std::pair<std::vector<int>, Polynomial>>& table,
                                     const Ring& ext, const std::vector<int>& y_idx) {
    Polynomial acc = Polynomial::zero(ext);
    for (const auto& [m, a] : table) {
        Polynomial mono = Polynomial::constant(ext, Rational(1));
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) mono = mono * Polynomial::variable(ext, y_idx[i], m[i]);
        acc += mono * reindex(a, ext);
    }
    return acc;
}

inline Polynomial leading_form(const Polynomial& f, const Ideal& IZ, const Ring& ext,
                               const std::vector<int>& y_idx, const Budget& budget = Budget()) {
    if (f.is_zero()) throw error("leading_form of zero polynomial");
    long p = ord_along(f, IZ, budget);
    auto table = expansion_coefficients(f, IZ, p, budget);
    Polynomial lf = assemble_lead_form(table, ext, y_idx);
    if (lf.is_zero()) throw error("internal: vanishing leading form");
    return lf;
}

// gr_{I_Z}(I_X) via Rees elimination: in k[x;y;t] eliminate t from
// I_X + (y_i - t g_i); the result plus I_Z is the conormal ideal, with the
// Koszul relations absorbed into I_Z·k[x;y].
inline ConormalData conormal_ideal(const PairSetup& setup, const Budget& budget = Budget()) {
    const std::size_t k = setup.k();
    if (k == 0) throw error("conormal_ideal: empty I_Z");
    if (setup.r() == 0) throw error("conormal_ideal: empty I_X");

    ConormalData cd;
    cd.setup = setup;

    std::vector<std::string> ynames = fresh_names(setup.ring, "y", static_cast<int>(k));
    std::vector<long> yweights;
    for (const auto& g : setup.IZ.gens()) {
        WeightedDegreeResult wd = weighted_degree(g);
        yweights.push_back(wd.homogeneous ? wd.degree : 1);
    }
    cd.ext = extend_ring(setup.ring, ynames, yweights, static_cast<int>(setup.ring->size()));
    for (const auto& n : ynames) cd.y_idx.push_back(cd.ext->index_of(n));
    for (std::size_t i = 0; i < setup.ring->size(); ++i) cd.base_idx.push_back(static_cast<int>(i));

    std::vector<Polynomial> iz_ext;
    for (const auto& g : setup.IZ.gens()) iz_ext.push_back(reindex(g, cd.ext));
    cd.IZ_ext = Ideal(cd.ext, iz_ext);

    // Rees ring with the auxiliary parameter
    std::string tname = fresh_names(cd.ext, "t", 1)[0];
    Ring rees = extend_ring(cd.ext, {tname});
    int ti = rees->index_of(tname);
    std::vector<Polynomial> H;
    for (const auto& f : setup.IX.gens()) H.push_back(reindex(f, rees));
    for (std::size_t i = 0; i < k; ++i)
        H.push_back(Polynomial::variable(rees, rees->index_of(ynames[i])) -
                    Polynomial::variable(rees, ti) * reindex(setup.IZ.gens()[i], rees));
    Ideal E = eliminate(Ideal(rees, std::move(H)), {ti}, budget);

    const GroebnerBasis& gbZ = cd.gbZ(budget);
    std::vector<Polynomial> gens = iz_ext;
    for (const auto& e : E.gens()) {
        for (const auto& comp : detail::y_components(reindex(e, cd.ext), cd.y_idx)) {
            Polynomial red = nf_remainder(comp, gbZ, budget);
            if (red.is_zero()) continue;
            bool dup = false;
            for (const auto& g : gens)
                if (g == red) {
                    dup = true;
                    break;
                }
            if (!dup) gens.push_back(std::move(red));
        }
    }
    cd.gr_ideal = Ideal(cd.ext, std::move(gens));

    for (const auto& f : setup.IX.gens()) {
        long p = ord_along(f, setup.IZ, budget);
        if (p == kInfiniteOrder) throw error("conormal_ideal: zero generator in I_X");
        if (p == 0)
            throw hypothesis_error("generator of I_X does not vanish on Z (order 0 along I_Z)");
        cd.orders.push_back(p);
        auto table = expansion_coefficients(f, setup.IZ, p, budget);
        cd.lead_forms.push_back(assemble_lead_form(table, cd.ext, cd.y_idx));
        cd.coeff_tables.push_back(std::move(table));
    }
    return cd;
}

// Substituting y_i -> g_i in a y-degree-p form recovers f modulo I_Z^{p+1}
// (used by the tests as the expansion oracle).
inline Polynomial substitute_y_by_g(const Polynomial& form, const ConormalData& cd) {
    std::vector<Polynomial> images;
    const Ring& base = cd.setup.ring;
    for (std::size_t i = 0; i < cd.ext->size(); ++i) {
        int bi = base->index_of(cd.ext->vars[i]);
        if (bi >= 0) {
            images.push_back(Polynomial::variable(base, bi));
        } else {
            // a y-variable: find its position
            std::size_t pos = 0;
            for (; pos < cd.y_idx.size(); ++pos)
                if (cd.y_idx[pos] == static_cast<int>(i)) break;
            images.push_back(cd.setup.IZ.gens()[pos]);
        }
    }
    return substitute(form, base, images);
}

struct MultiplicitySequence {
    std::vector<long> orders;  // nondecreasing
    long generic_multiplicity = 1;
};

struct SciReport {
    bool is_sci = false;
    bool span_ok = false;   // leading forms of the supplied basis generate gr
    bool codim_ok = false;  // codimension certificate
    std::string detail;
    std::vector<std::pair<Polynomial, Polynomial>> good_basis;  // (f_j, f̃_j), sorted by order
    MultiplicitySequence multseq;
};

// Verifies the supplied generators form a good basis: (a) their leading forms
// generate the conormal ideal, (b) the cone has complete-intersection
// dimension dim Z + k - r (codimension certificate, not a depth computation).
inline SciReport sci_check(const ConormalData& cd, const Budget& budget = Budget()) {
    SciReport rep;
    const std::size_t k = cd.setup.k(), r = cd.setup.r();
    if (r > k) throw hypothesis_error("r > k: more X-equations than Z-equations");

    std::vector<Polynomial> cand = cd.IZ_ext.gens();
    for (const auto& lf : cd.lead_forms) cand.push_back(lf);
    Ideal candidate(cd.ext, std::move(cand));
    rep.span_ok = ideal_equality(cd.gr_ideal, candidate, budget);

    int dimZ = krull_dimension(cd.setup.IZ, budget);
    int dim_cone = krull_dimension(cd.gr_ideal, budget);
    rep.codim_ok = (dim_cone == dimZ + static_cast<int>(k) - static_cast<int>(r));

    rep.is_sci = rep.span_ok && rep.codim_ok;
    if (!rep.span_ok)
        rep.detail = "leading forms of the supplied basis do not generate the conormal ideal";
    else if (!rep.codim_ok)
        rep.detail = "codimension certificate failed: cone dimension " + std::to_string(dim_cone) +
                     ", expected " + std::to_string(dimZ + static_cast<int>(k) - static_cast<int>(r)) +
                     " (a generator is a zero divisor or the cone is not a complete intersection)";

    if (rep.is_sci) {
        std::vector<std::size_t> perm(r);
        for (std::size_t i = 0; i < r; ++i) perm[i] = i;
        std::stable_sort(perm.begin(), perm.end(),
                         [&](std::size_t a, std::size_t b) { return cd.orders[a] < cd.orders[b]; });
        for (std::size_t i : perm) {
            rep.good_basis.push_back({cd.setup.IX.gens()[i], cd.lead_forms[i]});
            rep.multseq.orders.push_back(cd.orders[i]);
            rep.multseq.generic_multiplicity *= cd.orders[i];
        }
    }
    return rep;
}

inline MultiplicitySequence multiplicity_sequence(const ConormalData& cd, const Budget& budget = Budget()) {
    SciReport rep = sci_check(cd, budget);
    if (!rep.is_sci) throw hypothesis_error("multiplicity sequence requires a strict complete intersection: " + rep.detail);
    return rep.multseq;
}

}  // namespace tdisc
