#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdisc/transversal.hpp"
#include "tdisc/univariate.hpp"

namespace tdisc {

// ---- Milnor numbers by Lê-Greuel colengths ----------------------------------

struct MilnorResult {
    long mu = 0;        // Milnor number of the full ICIS
    long colength = 0;  // the Lê-Greuel colength mu(h_1..h_r) + mu(h_2..h_r)
};

// mu(h_1..h_r) via the recursion
//   mu(h_1..h_r) + mu(h_2..h_r) = colength(h_2..h_r, maximal minors of Jac),
// with mu(empty) = 0. Generators live in a fiber-only ring; the singularity
// must be isolated at the origin.
inline MilnorResult milnor_colength(const std::vector<Polynomial>& h, const Ring& ring,
                                    const Budget& budget = Budget()) {
    if (h.empty()) return {0, 0};
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& f : h) {
        std::vector<Polynomial> row;
        for (std::size_t i = 0; i < ring->size(); ++i) row.push_back(derivative(f, static_cast<int>(i)));
        jac.push_back(std::move(row));
    }
    std::vector<Polynomial> gens(h.begin() + 1, h.end());
    for (auto& m : maximal_minors(ring, jac)) gens.push_back(std::move(m));
    long col;
    try {
        col = local_colength_at_origin(Ideal(ring, gens), budget).value;
    } catch (const hypothesis_error&) {
        throw hypothesis_error("milnor_colength: non-isolated singularity");
    }
    std::vector<Polynomial> tail(h.begin() + 1, h.end());
    MilnorResult sub = milnor_colength(tail, ring, budget);
    MilnorResult out;
    out.colength = col;
    out.mu = col - sub.mu;
    if (out.mu < 0) throw hypothesis_error("milnor_colength: negative Milnor number, input not an ICIS");
    return out;
}

struct MuPair {
    long mu = 0;
    long mu_hat = 0;  // Milnor number with the first equation dropped
};

// ---- presentation of pi_* O_Crit over O_Z -----------------------------------

// Chart data for the O_Z-module presentation. Requires Z smooth with explicit
// coordinates: every generator of I_Z is (a nonzero multiple of) a single
// variable; the remaining base variables are coordinates on Z.
struct FiberBasis {
    int chart = 0;               // index into cd.y_idx
    Ring ring;                   // z-coordinates then sigma variables
    Ring fiber_ring;             // sigma variables only
    std::vector<int> z_idx, sigma_idx;
    std::vector<Rational> sigma_point;  // fiber point translated to the chart origin
    std::vector<Polynomial> F;   // chart equations of the good forms (translated)
    std::vector<Polynomial> H;   // relation generators: F_2..F_r and the sigma-Jacobian minors
    std::vector<Polynomial> h0;  // H specialized at z = 0
    std::vector<Monomial> basis;        // standard monomials {v_alpha} in fiber_ring
    long size = 0;                      // mu + mu_hat_1
    std::vector<Polynomial> h0_fiber;   // h0 reindexed into fiber_ring
};

namespace detail {

inline void require_coordinate_z(const PairSetup& setup, std::vector<int>& iz_vars,
                                 std::vector<int>& z_coords) {
    for (const auto& g : setup.IZ.gens()) {
        if (g.term_count() != 1 || g.terms()[0].m.total_degree() != 1)
            throw hypothesis_error("presentation requires Z to be a coordinate subspace");
        for (std::size_t i = 0; i < g.terms()[0].m.e.size(); ++i)
            if (g.terms()[0].m.e[i] == 1) iz_vars.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < setup.ring->size(); ++i)
        if (std::find(iz_vars.begin(), iz_vars.end(), static_cast<int>(i)) == iz_vars.end())
            z_coords.push_back(static_cast<int>(i));
}

}  // namespace detail

// point: coordinates for ALL base variables (those on I_Z must vanish);
// sigma_point: coordinates of the single critical point in the chart.
inline FiberBasis fiber_basis(const CritData& crit, int chart, const std::vector<Rational>& point,
                              const std::vector<Rational>& sigma_point, const Budget& budget = Budget()) {
    const ConormalData& cd = crit.cd;
    std::vector<int> iz_vars, z_coords;
    detail::require_coordinate_z(cd.setup, iz_vars, z_coords);

    FiberBasis fb;
    fb.chart = chart;
    std::vector<std::string> vars;
    std::vector<long> weights;
    for (int zi : z_coords) {
        vars.push_back(cd.setup.ring->vars[zi]);
        weights.push_back(cd.setup.ring->weights[zi]);
    }
    int nz = static_cast<int>(vars.size());
    std::vector<std::string> sigma_names;
    for (std::size_t j = 0; j < cd.y_idx.size(); ++j) {
        if (static_cast<int>(j) == chart) continue;
        vars.push_back(cd.ext->vars[cd.y_idx[j]]);
        weights.push_back(1);
        sigma_names.push_back(cd.ext->vars[cd.y_idx[j]]);
    }
    fb.ring = make_ring(vars, weights, nz);
    for (int i = 0; i < nz; ++i) fb.z_idx.push_back(i);
    for (std::size_t i = nz; i < vars.size(); ++i) fb.sigma_idx.push_back(static_cast<int>(i));
    fb.fiber_ring = make_ring(sigma_names);
    fb.sigma_point = sigma_point;

    for (const auto& form : crit.good_forms) {
        Polynomial g = dehomogenize(form, cd.y_idx[chart]);
        for (int zi : iz_vars) g = substitute_value(g, zi, Rational(0));
        g = reindex(g, fb.ring);
        for (std::size_t i = 0; i < fb.z_idx.size(); ++i) {
            int base_var = z_coords[i];
            if (point[base_var] != 0) g = shift_variable(g, fb.z_idx[i], point[base_var]);
        }
        for (std::size_t i = 0; i < fb.sigma_idx.size(); ++i)
            if (sigma_point[i] != 0) g = shift_variable(g, fb.sigma_idx[i], sigma_point[i]);
        fb.F.push_back(std::move(g));
    }

    // relation generators: the good forms beyond the first, plus the minors
    for (std::size_t j = 1; j < fb.F.size(); ++j) fb.H.push_back(fb.F[j]);
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& f : fb.F) {
        std::vector<Polynomial> row;
        for (int si : fb.sigma_idx) row.push_back(derivative(f, si));
        jac.push_back(std::move(row));
    }
    for (auto& m : maximal_minors(fb.ring, jac)) fb.H.push_back(std::move(m));

    for (const auto& hgen : fb.H) {
        Polynomial s = hgen;
        for (int zi : fb.z_idx) s = substitute_value(s, zi, Rational(0));
        fb.h0.push_back(s);
        fb.h0_fiber.push_back(reindex(s, fb.fiber_ring));
    }

    Ideal fiber(fb.fiber_ring, fb.h0_fiber);
    long qd;
    try {
        qd = quotient_dim(fiber, budget);
    } catch (const error&) {
        throw hypothesis_error("fiber_basis: non-finite critical fiber at the point");
    }
    if (qd == 0) throw hypothesis_error("fiber_basis: the chart point is not critical");
    long local = local_colength_at_origin(fiber, budget).value;
    if (local != qd)
        throw hypothesis_error("fiber_basis: multi-point critical fiber; split by additivity first");
    fb.basis = standard_monomials(fiber, budget);
    fb.size = qd;
    return fb;
}

// Operator machinery: for w in the chart ring, the matrix of multiplication
// by w on pi_* O_Crit over the basis {v_alpha}, with entries polynomials in
// the z-coordinates truncated at total degree D.
class PresentationOps {
public:
    PresentationOps(FiberBasis fb, long trunc, const Budget& budget = Budget())
        : fb_(std::move(fb)), D_(trunc), budget_(budget) {
        eg_ = extended_groebner(Ideal(fb_.fiber_ring, fb_.h0_fiber), MonomialOrder::grevlex(), budget_);
        for (std::size_t g = 0; g < fb_.H.size(); ++g) delta_.push_back(fb_.H[g] - fb_.h0[g]);
    }

    const FiberBasis& fb() const { return fb_; }
    long truncation() const { return D_; }

    // columns are reductions of w * v_alpha
    std::vector<std::vector<Polynomial>> operator_matrix(const Polynomial& w) {
        std::size_t m = fb_.basis.size();
        std::vector<std::vector<Polynomial>> M(m, std::vector<Polynomial>(m, Polynomial::zero(fb_.ring)));
        for (std::size_t a = 0; a < m; ++a) {
            Polynomial va = Polynomial::monomial(fb_.ring, lift_monomial(fb_.basis[a]), Rational(1));
            std::vector<Polynomial> col = reduce_to_basis(w * va);
            for (std::size_t b = 0; b < m; ++b) M[b][a] = col[b];
        }
        return M;
    }

    // Expresses v as sum_b c_b(z) v_b in pi_* O_Crit, coefficients truncated
    // at base degree D. Every discarded term has base order > D.
    std::vector<Polynomial> reduce_to_basis(const Polynomial& v) {
        std::vector<Polynomial> out(fb_.basis.size(), Polynomial::zero(fb_.ring));
        Polynomial rest = base_trunc(v);
        int guard = 0;
        while (!rest.is_zero()) {
            if (++guard > static_cast<int>(D_) + 4)
                throw error("presentation: reduction failed to terminate within the truncation bound");
            // group by sigma-monomial
            std::map<std::vector<int>, std::vector<Term>> groups;
            for (const auto& t : rest.terms()) {
                std::vector<int> key;
                for (int si : fb_.sigma_idx) key.push_back(t.m.e[si]);
                Term zt = t;
                for (int si : fb_.sigma_idx) zt.m.e[si] = 0;
                groups[key].push_back(std::move(zt));
            }
            Polynomial next = Polynomial::zero(fb_.ring);
            for (auto& [key, zterms] : groups) {
                Polynomial zc = Polynomial::from_terms(fb_.ring, std::move(zterms));
                const MonoData& md = mono_data(key);
                for (std::size_t b = 0; b < fb_.basis.size(); ++b)
                    if (md.b[b] != 0)
                        out[b] = base_trunc(out[b] + zc * Rational(md.b[b]));
                for (std::size_t g = 0; g < delta_.size(); ++g) {
                    if (md.q[g].is_zero() || delta_[g].is_zero()) continue;
                    next -= zc * md.q[g] * delta_[g];
                }
            }
            rest = base_trunc(next);
        }
        return out;
    }

    Polynomial base_trunc(const Polynomial& f) const {
        std::vector<Term> kept;
        for (const auto& t : f.terms())
            if (t.m.degree_on(fb_.z_idx) <= D_) kept.push_back(t);
        return Polynomial::from_terms(fb_.ring, std::move(kept));
    }

private:
    struct MonoData {
        std::vector<Rational> b;    // coefficients over the basis
        std::vector<Polynomial> q;  // cofactors over h0 (lifted to chart ring)
    };

    Monomial lift_monomial(const Monomial& fm) const {
        Monomial m(fb_.ring->size());
        for (std::size_t i = 0; i < fb_.sigma_idx.size(); ++i) m.e[fb_.sigma_idx[i]] = fm.e[i];
        return m;
    }

    const MonoData& mono_data(const std::vector<int>& key) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Monomial fm(fb_.fiber_ring->size());
        for (std::size_t i = 0; i < key.size(); ++i) fm.e[i] = key[i];
        Polynomial mu = Polynomial::monomial(fb_.fiber_ring, fm, Rational(1));
        auto cof = express_over_generators_with_remainder(mu);
        MonoData md;
        md.b.assign(fb_.basis.size(), Rational(0));
        for (const auto& t : cof.first.terms())
            for (std::size_t b = 0; b < fb_.basis.size(); ++b)
                if (t.m == fb_.basis[b]) md.b[b] = t.c;
        for (auto& qf : cof.second) md.q.push_back(reindex(qf, fb_.ring));
        return memo_.emplace(key, std::move(md)).first->second;
    }

    // normal form (supported on standard monomials) + cofactors over h0
    std::pair<Polynomial, std::vector<Polynomial>> express_over_generators_with_remainder(
        const Polynomial& f) {
        DivisionCertificate cert = normal_form(f, eg_.gb, budget_);
        std::vector<Polynomial> q(fb_.h0_fiber.size(), Polynomial::zero(fb_.fiber_ring));
        for (std::size_t i = 0; i < eg_.gb.elems.size(); ++i) {
            if (cert.cofactors[i].is_zero()) continue;
            for (std::size_t g = 0; g < fb_.h0_fiber.size(); ++g)
                q[g] += cert.cofactors[i] * eg_.rep[i][g];
        }
        return {cert.remainder, std::move(q)};
    }

    FiberBasis fb_;
    long D_;
    Budget budget_;
    ExtendedGroebner eg_;
    std::vector<Polynomial> delta_;  // H - h0, base order >= 1
    std::map<std::vector<int>, MonoData> memo_;
};

inline Polynomial trunc_det(const Ring& ring, const std::vector<std::vector<Polynomial>>& m,
                            const std::vector<int>& z_idx, long D) {
    std::size_t n = m.size();
    std::function<Polynomial(std::vector<std::size_t>, std::size_t)> rec;
    auto tr = [&](const Polynomial& f) {
        std::vector<Term> kept;
        for (const auto& t : f.terms())
            if (t.m.degree_on(z_idx) <= D) kept.push_back(t);
        return Polynomial::from_terms(ring, std::move(kept));
    };
    std::function<Polynomial(const std::vector<std::size_t>&, std::size_t)> det =
        [&](const std::vector<std::size_t>& cols, std::size_t row) -> Polynomial {
        if (cols.empty()) return Polynomial::constant(ring, Rational(1));
        Polynomial acc = Polynomial::zero(ring);
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (m[row][cols[i]].is_zero()) continue;
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != i) rest.push_back(cols[j]);
            Polynomial term = tr(m[row][cols[i]] * det(rest, row + 1));
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det(cols, 0);
}

struct PresentationDeterminant {
    Polynomial det;         // in the chart ring (z-coordinates only), truncated
    long order = -1;        // vanishing order at the point
    long truncation = 0;
    bool stable = false;    // order unchanged under D -> D+2
    long basis_size = 0;
};

// Determinant of the operator [f~_1 + a_1]; the local equation of Db up to a
// unit, reported with its vanishing order and a stabilization certificate.
inline PresentationDeterminant presentation_determinant(const FiberBasis& fb, long D,
                                                        const Budget& budget = Budget()) {
    auto compute = [&](long trunc) {
        PresentationOps ops(fb, trunc, budget);
        auto M = ops.operator_matrix(fb.F[0]);
        return trunc_det(fb.ring, M, fb.z_idx, trunc);
    };
    PresentationDeterminant out;
    out.basis_size = fb.size;
    Polynomial d1 = compute(D);
    if (d1.is_zero())
        throw hypothesis_error("presentation determinant vanished to truncation; not finite or D too small");
    Polynomial d2 = compute(D + 2);
    out.det = d2;
    out.truncation = D;
    out.order = d2.min_total_degree();
    out.stable = (d1.min_total_degree() == d2.min_total_degree());
    // normalize up to unit: make the canonical leading coefficient of the
    // lowest-degree part equal to 1
    long low = out.det.min_total_degree();
    Rational scale(0);
    for (auto it = out.det.terms().rbegin(); it != out.det.terms().rend(); ++it)
        if (it->m.total_degree() == low) {
            scale = it->c;
            break;
        }
    if (scale != 0) out.det = out.det * (Rational(1) / scale);
    return out;
}

inline long default_truncation(long basis_size, const MultiplicitySequence& ms) {
    long pmax = 1;
    for (long p : ms.orders) pmax = std::max(pmax, p);
    return 2 * basis_size * pmax;
}

// Forced pure-power monomials s_j^{mu+mu_hat_j} of the constant-term
// discriminant; mixed monomials in several s_i are unconstrained here.
inline std::vector<long> constant_term_shape(long mu, const std::vector<long>& mu_hats) {
    std::vector<long> out;
    for (long mh : mu_hats) out.push_back(mu + mh);
    return out;
}

}  // namespace tdisc
