#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tdisc/filtration.hpp"

namespace tdisc {

// Deterministic RNG for "generic" choices (curves, admissible deformations).
// Values are reproducible across platforms; genericity is certified by
// agreement of two independent draws, never assumed.
struct DetRng {
    std::mt19937_64 eng;
    explicit DetRng(unsigned long long seed) : eng(seed) {}
    long pick(long lo, long hi) { return lo + static_cast<long>(eng() % static_cast<unsigned long long>(hi - lo + 1)); }
    Rational coeff() {  // small nonzero rational
        long v = pick(1, 4);
        return Rational(pick(0, 1) ? v : -v);
    }
};

inline Polynomial poly_det(const Ring& ring, const std::vector<std::vector<Polynomial>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, Rational(1));
    if (n == 1) return m[0][0];
    Polynomial acc = Polynomial::zero(ring);
    std::vector<std::vector<Polynomial>> sub(n - 1, std::vector<Polynomial>(n - 1, Polynomial::zero(ring)));
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub[i - 1][jj++] = m[i][j];
            }
        }
        Polynomial term = m[0][c] * poly_det(ring, sub);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// all r x r minors of an r x n polynomial matrix
inline std::vector<Polynomial> maximal_minors(const Ring& ring,
                                              const std::vector<std::vector<Polynomial>>& jac) {
    std::size_t r = jac.size();
    std::size_t n = r ? jac[0].size() : 0;
    std::vector<Polynomial> out;
    std::vector<std::size_t> cols(r);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == r) {
            std::vector<std::vector<Polynomial>> sq(r, std::vector<Polynomial>(r, Polynomial::zero(ring)));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sq[i][j] = jac[i][cols[j]];
            out.push_back(poly_det(ring, sq));
            return;
        }
        for (std::size_t c = start; c + (r - pos - 1) < n; ++c) {
            cols[pos] = c;
            rec(pos + 1, c + 1);
        }
    };
    if (r > 0 && n >= r) rec(0, 0);
    return out;
}

// Critical locus of the projectivized normal cone over Z: the good-basis
// leading forms plus the r x r minors of their y-Jacobian, saturated by the
// irrelevant ideal (y_1..y_k).
struct CritData {
    ConormalData cd;
    std::vector<Polynomial> good_forms;  // lead forms sorted by y-degree
    MultiplicitySequence multseq;
    Ideal crit;  // saturated, in cd.ext, contains I_Z
    bool saturation_certified = false;
};

inline Ideal crit_from_forms(const ConormalData& cd, const std::vector<Polynomial>& forms,
                             const Budget& budget = Budget(), bool* cert = nullptr) {
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& f : forms) {
        std::vector<Polynomial> row;
        for (int yi : cd.y_idx) row.push_back(derivative(f, yi));
        jac.push_back(std::move(row));
    }
    std::vector<Polynomial> gens = cd.IZ_ext.gens();
    for (const auto& f : forms) gens.push_back(f);
    for (auto& m : maximal_minors(cd.ext, jac)) gens.push_back(std::move(m));
    Ideal crit0(cd.ext, std::move(gens));

    std::vector<Polynomial> yvars;
    for (int yi : cd.y_idx) yvars.push_back(Polynomial::variable(cd.ext, yi));
    Ideal irrelevant(cd.ext, yvars);
    Ideal sat = saturate(crit0, irrelevant, budget);
    if (cert) *cert = saturation_certificate(sat, irrelevant, budget);
    return sat;
}

inline CritData crit_ideal(const ConormalData& cd, const Budget& budget = Budget()) {
    SciReport sci = sci_check(cd, budget);
    if (!sci.is_sci)
        throw hypothesis_error("crit_ideal requires a strict complete intersection: " + sci.detail);
    CritData out;
    out.cd = cd;
    out.multseq = sci.multseq;
    for (const auto& [f, lf] : sci.good_basis) out.good_forms.push_back(lf);
    out.crit = crit_from_forms(cd, out.good_forms, budget, &out.saturation_certified);
    return out;
}

// Support of the discriminant: the y-block eliminated from Crit, as an ideal
// of the base ring containing I_Z, plus its generators reduced mod I_Z.
struct SupportData {
    Ideal full;                      // in the base ring, contains I_Z
    std::vector<Polynomial> reduced;  // normal forms mod I_Z, nonzero
};

inline SupportData support_of_crit(const Ideal& crit, const ConormalData& cd,
                                   const Budget& budget = Budget()) {
    Ideal elim = eliminate(crit, cd.y_idx, budget);
    const Ring& base = cd.setup.ring;
    std::vector<Polynomial> gens;
    for (const auto& g : elim.gens()) gens.push_back(reindex(g, base));
    for (const auto& g : cd.setup.IZ.gens()) gens.push_back(g);
    SupportData s;
    s.full = Ideal(base, gens);
    const GroebnerBasis& gbZ = cd.setup.IZ.groebner(MonomialOrder::grevlex(), budget);
    for (const auto& g : s.full.gens()) {
        Polynomial red = nf_remainder(g, gbZ, budget);
        if (red.is_zero()) continue;
        red.normalize_content();
        bool dup = false;
        for (const auto& h : s.reduced)
            if (h == red) dup = true;
        if (!dup) s.reduced.push_back(std::move(red));
    }
    return s;
}

struct OrdinaryReport {
    bool ordinary = false;
    SupportData support;
    std::string witness;
};

// Generically ordinary <=> the support is a proper subscheme of Z (of every
// component, when the minimal primes are supplied).
inline OrdinaryReport generically_ordinary_check(const CritData& crit,
                                                 const Budget& budget = Budget()) {
    OrdinaryReport rep;
    rep.support = support_of_crit(crit.crit, crit.cd, budget);
    const auto& components = crit.cd.setup.components;
    if (components.empty()) {
        rep.ordinary = !rep.support.reduced.empty();
        rep.witness = rep.ordinary ? "support ideal proper (components unverified)"
                                   : "critical locus projects onto Z";
    } else {
        rep.ordinary = true;
        for (std::size_t ci = 0; ci < components.size(); ++ci) {
            bool proper = false;
            for (const auto& g : rep.support.full.gens())
                if (!ideal_membership(g, components[ci], budget)) {
                    proper = true;
                    break;
                }
            if (!proper) {
                rep.ordinary = false;
                rep.witness = "support contains component " + std::to_string(ci + 1);
                return rep;
            }
        }
        rep.witness = "support proper on every supplied component";
    }
    return rep;
}

inline SupportData db_support(const CritData& crit, const Budget& budget = Budget()) {
    OrdinaryReport rep = generically_ordinary_check(crit, budget);
    if (!rep.ordinary)
        throw hypothesis_error("not generically ordinary along Z: " + rep.witness);
    return rep.support;
}

// ---- chart machinery -------------------------------------------------------

struct Chart {
    int a;                      // index into cd.y_idx (precedence order)
    Ring ring;                  // base vars + the other y's
    std::vector<int> base_idx;  // base-var indices inside chart ring
    std::vector<int> prev_sigma_idx;  // sigma vars of earlier charts (double-count guard)
};

inline Chart make_chart(const ConormalData& cd, int a) {
    Chart ch;
    ch.a = a;
    std::vector<std::string> vars;
    std::vector<long> weights;
    for (int bi : cd.base_idx) {
        vars.push_back(cd.ext->vars[bi]);
        weights.push_back(cd.ext->weights[bi]);
    }
    int nbase = static_cast<int>(vars.size());
    for (std::size_t j = 0; j < cd.y_idx.size(); ++j) {
        if (static_cast<int>(j) == a) continue;
        vars.push_back(cd.ext->vars[cd.y_idx[j]]);
        weights.push_back(1);
    }
    ch.ring = make_ring(std::move(vars), std::move(weights), nbase);
    for (int i = 0; i < nbase; ++i) ch.base_idx.push_back(i);
    for (int j = 0; j < a; ++j)
        ch.prev_sigma_idx.push_back(ch.ring->index_of(cd.ext->vars[cd.y_idx[j]]));
    return ch;
}

inline Polynomial to_chart(const Polynomial& f, const ConormalData& cd, const Chart& ch) {
    return reindex(dehomogenize(f, cd.y_idx[ch.a]), ch.ring);
}

// Crit restricted to the chart y_a = 1, optional extra (curve) generators,
// the named point of Z translated to the origin of the base block.
inline Ideal chart_ideal_at_point(const CritData& crit, const Chart& ch,
                                  const std::vector<Rational>& point,
                                  const std::vector<Polynomial>& extra_base_gens,
                                  const Budget& budget = Budget()) {
    std::vector<Polynomial> gens;
    for (const auto& g : crit.crit.gens()) gens.push_back(to_chart(g, crit.cd, ch));
    for (const auto& g : extra_base_gens) gens.push_back(reindex(g, ch.ring));
    for (auto& g : gens)
        for (std::size_t i = 0; i < ch.base_idx.size(); ++i)
            if (point[i] != 0) g = shift_variable(g, ch.base_idx[i], point[i]);
    return Ideal(ch.ring, std::move(gens));
}

// Local colength of a chart ideal over the base origin, minus the part
// already counted by earlier charts (points with some earlier sigma nonzero).
inline long chart_local_contribution(const Ideal& K, const Chart& ch, const Budget& budget = Budget()) {
    {
        std::vector<Polynomial> fib = K.gens();
        for (int bi : ch.base_idx) fib.push_back(Polynomial::variable(ch.ring, bi));
        int d = krull_dimension(Ideal(ch.ring, std::move(fib)), budget);
        if (d > 0) throw hypothesis_error("positive-dimensional critical fiber");
    }
    long raw = local_colength_over(K, ch.base_idx, budget).value;
    if (raw == 0 || ch.prev_sigma_idx.empty()) return raw;
    std::vector<Polynomial> prev;
    for (int si : ch.prev_sigma_idx) prev.push_back(Polynomial::variable(ch.ring, si));
    Ideal sat = saturate(K, Ideal(ch.ring, prev), budget);
    if (is_unit_ideal(sat, budget)) return raw;
    long excl = local_colength_over(sat, ch.base_idx, budget).value;
    return raw - excl;
}

// Random rational curve C = Z ∩ {generic affine-linear forms through the point}
inline std::vector<Polynomial> random_curve_through(const Ring& base, const std::vector<Rational>& point,
                                                    int count, DetRng& rng) {
    std::vector<Polynomial> out;
    for (int c = 0; c < count; ++c) {
        Polynomial L = Polynomial::zero(base);
        for (std::size_t i = 0; i < base->size(); ++i) {
            Polynomial xi = Polynomial::variable(base, static_cast<int>(i)) -
                            Polynomial::constant(base, point[i]);
            L += Polynomial::constant(base, rng.coeff()) * xi;
        }
        out.push_back(L);
    }
    return out;
}

// deg((C,o) ∩ Db) computed upstairs: the colength of Crit over the curve germ,
// summed over charts with the first-nonzero-coordinate precedence rule.
inline long db_multiplicity_at_point(const CritData& crit, const std::vector<Rational>& point,
                                     const std::vector<Polynomial>& curve = {},
                                     const Budget& budget = Budget()) {
    const Ring& base = crit.cd.setup.ring;
    if (point.size() != base->size()) throw error("point arity mismatch");
    for (const auto& g : crit.cd.setup.IZ.gens()) {
        Polynomial v = g;
        for (std::size_t i = 0; i < point.size(); ++i) v = substitute_value(v, static_cast<int>(i), point[i]);
        if (!v.is_zero()) throw hypothesis_error("point does not lie on Z");
    }
    int dimZ = krull_dimension(crit.cd.setup.IZ, budget);

    auto run = [&](const std::vector<Polynomial>& extra) {
        long total = 0;
        for (std::size_t a = 0; a < crit.cd.y_idx.size(); ++a) {
            Chart ch = make_chart(crit.cd, static_cast<int>(a));
            Ideal K = chart_ideal_at_point(crit, ch, point, extra, budget);
            total += chart_local_contribution(K, ch, budget);
        }
        return total;
    };

    if (dimZ <= 1) {
        if (!curve.empty()) return run(curve);
        return run({});
    }
    if (!curve.empty()) return run(curve);
    // generic curve: random slices, certified by agreement of two draws
    DetRng r1(0x5eedc01dULL), r2(0xfeedbeefULL);
    auto c1 = random_curve_through(base, point, dimZ - 1, r1);
    auto c2 = random_curve_through(base, point, dimZ - 1, r2);
    long v1 = run(c1), v2 = run(c2);
    if (v1 != v2)
        throw hypothesis_error("random curve certificates disagree (" + std::to_string(v1) + " vs " +
                               std::to_string(v2) + "); supply a curve");
    return v1;
}

// Total degree of Db over all of (affine) Z, counting irrational support
// points exactly. Requires Crit finite over Z.
inline long total_db_degree(const CritData& crit, const Budget& budget = Budget()) {
    long total = 0;
    for (std::size_t a = 0; a < crit.cd.y_idx.size(); ++a) {
        Chart ch = make_chart(crit.cd, static_cast<int>(a));
        std::vector<Polynomial> gens;
        for (const auto& g : crit.crit.gens()) gens.push_back(to_chart(g, crit.cd, ch));
        Ideal K(ch.ring, std::move(gens));
        int d = krull_dimension(K, budget);
        if (d < 0) continue;
        if (d > 0) throw hypothesis_error("critical locus not finite over Z");
        long raw = quotient_dim(K, budget);
        long excl = 0;
        if (!ch.prev_sigma_idx.empty()) {
            std::vector<Polynomial> prev;
            for (int si : ch.prev_sigma_idx) prev.push_back(Polynomial::variable(ch.ring, si));
            Ideal sat = saturate(K, Ideal(ch.ring, prev), budget);
            if (!is_unit_ideal(sat, budget)) excl = quotient_dim(sat, budget);
        }
        total += raw - excl;
    }
    return total;
}

// mult(Db,o) = mu(f) * ord(h) for a chart equation split as f(sigma) + h(z).
inline long db_mult_splitform(const Polynomial& f_part, const Polynomial& h_part,
                              const Budget& budget = Budget()) {
    if (h_part.is_zero()) throw error("db_mult_splitform: zero base part");
    std::vector<Polynomial> jac;
    for (std::size_t i = 0; i < f_part.ring()->size(); ++i) {
        Polynomial d = derivative(f_part, static_cast<int>(i));
        if (!d.is_zero()) jac.push_back(std::move(d));
    }
    long mu;
    try {
        mu = local_colength_at_origin(Ideal(f_part.ring(), jac), budget).value;
    } catch (const hypothesis_error&) {
        throw hypothesis_error("db_mult_splitform: fiber part has a non-isolated critical point");
    }
    return mu * h_part.min_total_degree();
}

// Cone-level admissible deformation: adds random constants at the same
// y-degrees, preserving the multiplicity sequence. Used when the critical
// fiber over a point is positive-dimensional and the multiplicity is
// recovered from the total degree of the split discriminant.
inline std::vector<Polynomial> deform_forms(const CritData& crit, DetRng& rng) {
    std::vector<Polynomial> out;
    for (std::size_t j = 0; j < crit.good_forms.size(); ++j) {
        Polynomial f = crit.good_forms[j];
        long p = crit.multseq.orders[j];
        Polynomial extra = Polynomial::zero(crit.cd.ext);
        for (const auto& m : monomials_of_degree(crit.cd.ext, crit.cd.y_idx, static_cast<int>(p))) {
            // denominators coprime to typical small coefficients, so the
            // deformation cannot cancel existing leading structure
            Rational c(rng.pick(0, 1) ? rng.pick(5, 12) : -rng.pick(5, 12), rng.pick(0, 1) ? 7 : 11);
            c.canonicalize();
            extra += Polynomial::monomial(crit.cd.ext, m, c);
        }
        out.push_back(f + extra);
    }
    return out;
}

// Total degree of the split discriminant under a random admissible
// deformation. Degenerate draws can only lose degree (a point escapes the
// affine chart), so the certified value is the maximum, witnessed twice.
inline long splitting_multiplicity(const CritData& crit, const Budget& budget = Budget()) {
    auto run = [&](unsigned long long seed) {
        DetRng rng(seed);
        std::vector<Polynomial> forms = deform_forms(crit, rng);
        CritData dcrit;
        dcrit.cd = crit.cd;
        dcrit.good_forms = forms;
        dcrit.multseq = crit.multseq;
        dcrit.crit = crit_from_forms(crit.cd, forms, budget);
        return total_db_degree(dcrit, budget);
    };
    const unsigned long long seeds[] = {0x0badcafeULL, 0x0defacedULL, 0x5eed0003ULL,
                                        0x5eed0004ULL, 0x5eed0005ULL, 0x5eed0006ULL};
    long best = -1;
    int agree = 0;
    for (unsigned long long s : seeds) {
        long v = run(s);
        if (v > best) {
            best = v;
            agree = 1;
        } else if (v == best) {
            if (++agree >= 2) return best;
        }
    }
    throw hypothesis_error("splitting deformations kept disagreeing (max " + std::to_string(best) + ")");
}

}  // namespace tdisc
