#pragma once

#include <string>
#include <vector>

#include "tdisc/transversal.hpp"
#include "tdisc/univariate.hpp"

namespace tdisc {

// A family of projective complete intersections over a small parameter space:
// F_j(x, s) homogeneous in the fiber block x of degree p_j.
struct FamilySetup {
    Ring ring;                   // fiber variables then parameter variables
    std::vector<int> fiber_idx;
    std::vector<int> param_idx;
    std::vector<Polynomial> F;
    std::vector<long> multidegree;

    void validate() const {
        if (F.empty()) throw error("family with no equations");
        for (std::size_t j = 0; j < F.size(); ++j) {
            long d = -1;
            for (const auto& t : F[j].terms()) {
                long fd = t.m.degree_on(fiber_idx);
                if (d < 0) d = fd;
                if (fd != d) throw error("family generator not fiber-homogeneous");
            }
        }
    }
};

inline FamilySetup make_family(const Ring& ring, const std::vector<int>& fiber_idx,
                               const std::vector<int>& param_idx, std::vector<Polynomial> F) {
    FamilySetup fs;
    fs.ring = ring;
    fs.fiber_idx = fiber_idx;
    fs.param_idx = param_idx;
    fs.F = std::move(F);
    for (const auto& f : fs.F) {
        long d = f.is_zero() ? 0 : f.terms()[0].m.degree_on(fiber_idx);
        fs.multidegree.push_back(d);
    }
    fs.validate();
    return fs;
}

// (F_1..F_r) + r x r minors of the homogeneous fiber Jacobian, saturated by
// the fiber irrelevant ideal.
inline Ideal classical_crit_ideal(const FamilySetup& fs, const Budget& budget = Budget()) {
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& f : fs.F) {
        std::vector<Polynomial> row;
        for (int xi : fs.fiber_idx) row.push_back(derivative(f, xi));
        jac.push_back(std::move(row));
    }
    std::vector<Polynomial> gens = fs.F;
    for (auto& m : maximal_minors(fs.ring, jac)) gens.push_back(std::move(m));
    std::vector<Polynomial> xv;
    for (int xi : fs.fiber_idx) xv.push_back(Polynomial::variable(fs.ring, xi));
    return saturate(Ideal(fs.ring, std::move(gens)), Ideal(fs.ring, xv), budget);
}

struct ClassicalDiscriminant {
    Ideal elimination;             // crit with the fiber block eliminated
    bool empty = false;            // unit ideal: no degenerate members
    Polynomial generator;          // when principal (up to unit)
    bool principal = false;
};

// Set-theoretic discriminant by elimination; the scheme structure at points
// comes from classical_multiplicity.
inline ClassicalDiscriminant classical_discriminant_eliminate(const FamilySetup& fs,
                                                              const Budget& budget = Budget()) {
    Ideal crit = classical_crit_ideal(fs, budget);
    ClassicalDiscriminant out;
    out.generator = Polynomial::zero(fs.ring);
    out.elimination = eliminate(crit, fs.fiber_idx, budget);
    if (out.elimination.trivial())
        throw hypothesis_error("classical discriminant: critical locus dominates the parameter space");
    if (is_unit_ideal(out.elimination, budget)) {
        out.empty = true;
        out.generator = Polynomial::constant(fs.ring, Rational(1));
        out.principal = true;
        return out;
    }
    const GroebnerBasis& gb = out.elimination.groebner(MonomialOrder::grevlex(), budget);
    if (gb.elems.size() == 1) {
        out.generator = gb.elems[0];
        out.generator.normalize_content();
        out.principal = true;
    }
    return out;
}

// Resultant of two binary forms (degrees m, n in the two named variables) as
// the Sylvester determinant; the oracle route for small hypersurface cases.
inline Polynomial binary_resultant(const Polynomial& f, const Polynomial& g, int u, int v) {
    const Ring& ring = f.ring();
    auto form_coeffs = [&](const Polynomial& p) {
        long d = -1;
        for (const auto& t : p.terms()) {
            long fd = t.m.e[u] + t.m.e[v];
            if (d < 0) d = fd;
            if (fd != d) throw error("binary_resultant: input not a binary form");
        }
        std::vector<Polynomial> c(d + 1, Polynomial::zero(ring));  // c[i]: coeff of u^{d-i} v^i
        for (const auto& t : p.terms()) {
            Term s = t;
            int i = s.m.e[v];
            s.m.e[u] = 0;
            s.m.e[v] = 0;
            c[i] += Polynomial::monomial(ring, s.m, s.c);
        }
        return c;
    };
    std::vector<Polynomial> a = form_coeffs(f), b = form_coeffs(g);
    std::size_t m = a.size() - 1, n = b.size() - 1;
    std::size_t N = m + n;
    std::vector<std::vector<Polynomial>> S(N, std::vector<Polynomial>(N, Polynomial::zero(ring)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) S[i][i + j] = a[j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) S[n + i][i + j] = b[j];
    return poly_det(ring, S);
}

// Local multiplicity of the classical discriminant at a parameter point:
// colength of pi_* O_Crit over the translated point, summed over fiber charts
// with the usual precedence guard.
inline long classical_multiplicity(const FamilySetup& fs, const std::vector<Rational>& s0,
                                   const Budget& budget = Budget()) {
    if (s0.size() != fs.param_idx.size()) throw error("classical_multiplicity: point arity mismatch");
    Ideal crit = classical_crit_ideal(fs, budget);
    long total = 0;
    for (std::size_t a = 0; a < fs.fiber_idx.size(); ++a) {
        // chart x_a = 1
        std::vector<std::string> vars;
        std::vector<long> weights;
        for (int pi : fs.param_idx) {
            vars.push_back(fs.ring->vars[pi]);
            weights.push_back(1);
        }
        int npar = static_cast<int>(vars.size());
        for (std::size_t j = 0; j < fs.fiber_idx.size(); ++j) {
            if (j == a) continue;
            vars.push_back(fs.ring->vars[fs.fiber_idx[j]]);
            weights.push_back(1);
        }
        Ring chart = make_ring(vars, weights, npar);
        std::vector<Polynomial> gens;
        for (const auto& g : crit.gens())
            gens.push_back(reindex(dehomogenize(g, fs.fiber_idx[a]), chart));
        for (auto& g : gens)
            for (std::size_t i = 0; i < fs.param_idx.size(); ++i)
                if (s0[i] != 0) g = shift_variable(g, static_cast<int>(i), s0[i]);
        Ideal K(chart, std::move(gens));
        std::vector<int> par_idx;
        for (int i = 0; i < npar; ++i) par_idx.push_back(i);
        {
            std::vector<Polynomial> fib = K.gens();
            for (int i = 0; i < npar; ++i) fib.push_back(Polynomial::variable(chart, i));
            if (krull_dimension(Ideal(chart, std::move(fib)), budget) > 0)
                throw hypothesis_error("classical_multiplicity: non-finite critical fiber over the point");
        }
        long raw = local_colength_over(K, par_idx, budget).value;
        long excl = 0;
        if (raw > 0 && a > 0) {
            std::vector<Polynomial> prev;
            for (std::size_t j = 0; j < a; ++j)
                prev.push_back(Polynomial::variable(chart, chart->index_of(fs.ring->vars[fs.fiber_idx[j]])));
            Ideal sat = saturate(K, Ideal(chart, prev), budget);
            if (!is_unit_ideal(sat, budget)) excl = local_colength_over(sat, par_idx, budget).value;
        }
        total += raw - excl;
    }
    return total;
}

}  // namespace tdisc
