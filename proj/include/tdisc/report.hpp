#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tdisc/classical.hpp"
#include "tdisc/presentation.hpp"
#include "tdisc/transversal.hpp"

namespace tdisc {

enum class HypStatus { Certified, Asserted, Failed };

struct Hypothesis {
    std::string name;
    HypStatus status;
    std::string detail;
};

inline std::string hyp_status_str(HypStatus s) {
    switch (s) {
        case HypStatus::Certified: return "certified";
        case HypStatus::Asserted: return "asserted";
        case HypStatus::Failed: return "failed";
    }
    return "?";
}

struct PointMult {
    std::vector<Rational> point;  // base coordinates; empty for a cluster entry
    bool clustered = false;
    Polynomial cluster_factor;    // irrational support factor (base ring)
    long multiplicity = 0;
    std::string method;
};

struct DiscriminantReport {
    bool empty_db = false;
    MultiplicitySequence multseq;
    SupportData support;
    std::vector<PointMult> points;
    std::optional<Polynomial> equation;  // local equation up to unit (z-coordinates)
    std::optional<long> equation_order;
    long total_degree = -1;  // over affine Z; -1 when not computed
    std::vector<Hypothesis> log;

    long sum_of_multiplicities() const {
        long s = 0;
        for (const auto& p : points) s += p.multiplicity;
        return s;
    }
};

struct ReportOptions {
    std::vector<std::vector<Rational>> points;  // caller-named support points
    std::vector<Polynomial> curve;              // generic curve through the point (dim Z > 1)
    bool want_equation = true;
    long trunc = -1;  // presentation truncation; -1 = default policy
    Budget budget;
};

// ---- fiber point location (for the presentation equation) -------------------

struct FiberPointInfo {
    int chart = -1;
    std::vector<Rational> sigma;  // coordinates in the chart
    long local_degree = 0;
};

// Rational points of the critical fiber over `point` in chart `a`, after the
// first-nonzero-coordinate exclusion. Returns nothing when the fiber there is
// empty, irrational or not concentrated at a single point.
inline std::optional<FiberPointInfo> locate_single_fiber_point(const CritData& crit, int a,
                                                               const std::vector<Rational>& point,
                                                               const std::vector<Polynomial>& curve,
                                                               const Budget& budget) {
    Chart ch = make_chart(crit.cd, a);
    Ideal K = chart_ideal_at_point(crit, ch, point, curve, budget);
    long contrib;
    try {
        contrib = chart_local_contribution(K, ch, budget);
    } catch (const hypothesis_error&) {
        return std::nullopt;
    }
    if (contrib == 0) return std::nullopt;

    // the fiber ideal over the reduced point, in the sigma variables
    std::vector<Polynomial> fib_gens;
    for (auto g : K.gens()) {
        for (int bi : ch.base_idx) g = substitute_value(g, bi, Rational(0));
        fib_gens.push_back(g);
    }
    std::vector<std::string> snames;
    for (std::size_t i = ch.base_idx.size(); i < ch.ring->size(); ++i) snames.push_back(ch.ring->vars[i]);
    if (snames.empty()) {  // k = 1: the chart is the base itself
        FiberPointInfo info;
        info.chart = a;
        info.local_degree = contrib;
        return info;
    }
    Ring sring = make_ring(snames);
    std::vector<Polynomial> sgens;
    for (const auto& g : fib_gens) sgens.push_back(reindex(g, sring));
    Ideal fib(sring, sgens);
    if (is_unit_ideal(fib, budget)) return std::nullopt;

    std::vector<Rational> pt;
    for (std::size_t b = 0; b < sring->size(); ++b) {
        std::vector<int> others;
        for (std::size_t c = 0; c < sring->size(); ++c)
            if (c != b) others.push_back(static_cast<int>(c));
        Ideal uni = eliminate(fib, others, budget);
        // the elimination ideal in one variable is principal: gcd of the
        // univariate generators
        std::optional<UniPoly> u;
        for (const auto& g : uni.gens()) {
            auto gu = as_univariate(g, static_cast<int>(b));
            if (!gu) continue;
            u = u ? gcd(*u, *gu) : *gu;
        }
        if (!u || u->is_zero() || u->degree() == 0) return std::nullopt;
        RationalRoots rr = rational_roots(*u);
        if (rr.roots.size() != 1 || rr.residual.degree() > 0 || !rr.complete) return std::nullopt;
        pt.push_back(rr.roots[0].first);
    }
    // the candidate must carry the whole local contribution
    std::vector<Polynomial> shifted;
    for (auto g : fib.gens()) {
        for (std::size_t b = 0; b < pt.size(); ++b)
            if (pt[b] != 0) g = shift_variable(g, static_cast<int>(b), pt[b]);
        shifted.push_back(g);
    }
    Ideal at(sring, shifted);
    long local = local_colength_at_origin(at, budget).value;
    long qd = quotient_dim(fib, budget);
    if (local != qd) return std::nullopt;  // multi-point fiber in this chart
    FiberPointInfo info;
    info.chart = a;
    info.sigma = pt;
    info.local_degree = contrib;
    return info;
}

// ---- the full report ---------------------------------------------------------

inline DiscriminantReport db_report(const PairSetup& setup, const ReportOptions& opt = {}) {
    const Budget& budget = opt.budget;
    DiscriminantReport rep;
    rep.support.full = Ideal(setup.ring, {});

    ConormalData cd = conormal_ideal(setup, budget);
    SciReport sci = sci_check(cd, budget);
    if (!sci.is_sci) throw hypothesis_error("not a strict complete intersection: " + sci.detail);
    rep.log.push_back({"strict complete intersection (codimension certificate)", HypStatus::Certified,
                       sci.detail});
    rep.multseq = sci.multseq;

    bool all_ones = true;
    for (long p : rep.multseq.orders)
        if (p != 1) all_ones = false;
    if (all_ones) {
        rep.empty_db = true;
        rep.total_degree = 0;
        rep.log.push_back({"multiplicity sequence (1,..,1): discriminant empty", HypStatus::Certified, ""});
        return rep;
    }

    CritData crit = crit_ideal(cd, budget);
    rep.log.push_back({"irrelevant-ideal saturation stabilized",
                       crit.saturation_certified ? HypStatus::Certified : HypStatus::Failed, ""});
    OrdinaryReport ord = generically_ordinary_check(crit, budget);
    if (!ord.ordinary) throw hypothesis_error("not generically ordinary along Z: " + ord.witness);
    rep.log.push_back({"generically ordinary along Z", HypStatus::Certified, ord.witness});
    if (setup.components.empty())
        rep.log.push_back({"component list", HypStatus::Asserted, "components unverified (none supplied)"});
    rep.support = ord.support;

    if (is_unit_ideal(rep.support.full, budget)) {
        rep.empty_db = true;
        rep.total_degree = 0;
        rep.log.push_back({"critical locus empty after saturation", HypStatus::Certified, ""});
        return rep;
    }

    try {
        rep.total_degree = total_db_degree(crit, budget);
        rep.log.push_back({"critical locus finite over Z", HypStatus::Certified, ""});
    } catch (const hypothesis_error& e) {
        rep.log.push_back({"critical locus finite over Z", HypStatus::Failed, e.what()});
    }

    // ---- support points
    std::vector<std::vector<Rational>> points = opt.points;
    Polynomial cluster = Polynomial::zero(setup.ring);
    bool cluster_known_empty = false;
    if (points.empty()) {
        // automatic extraction: Z a coordinate line and principal support
        std::vector<int> iz_vars;
        bool coord = true;
        for (const auto& g : setup.IZ.gens()) {
            if (g.term_count() == 1 && g.terms()[0].m.total_degree() == 1) {
                for (std::size_t i = 0; i < g.terms()[0].m.e.size(); ++i)
                    if (g.terms()[0].m.e[i] == 1) iz_vars.push_back(static_cast<int>(i));
            } else {
                coord = false;
            }
        }
        std::vector<int> free_vars;
        for (std::size_t i = 0; i < setup.ring->size(); ++i)
            if (std::find(iz_vars.begin(), iz_vars.end(), static_cast<int>(i)) == iz_vars.end())
                free_vars.push_back(static_cast<int>(i));
        if (coord && free_vars.size() == 1 && !rep.support.reduced.empty()) {
            int b = free_vars[0];
            std::optional<UniPoly> u;
            for (const auto& g : rep.support.reduced) {
                auto gu = as_univariate(g, b);
                if (!gu) {
                    u.reset();
                    break;
                }
                u = u ? gcd(*u, *gu) : *gu;
            }
            if (u && !u->is_zero() && u->degree() > 0) {
                RationalRoots rr = rational_roots(*u);
                for (const auto& [root, mult] : rr.roots) {
                    std::vector<Rational> pt(setup.ring->size(), Rational(0));
                    pt[b] = root;
                    points.push_back(std::move(pt));
                }
                if (rr.residual.degree() > 0 && rr.complete) {
                    std::vector<Term> terms;
                    for (std::size_t i = 0; i < rr.residual.c.size(); ++i)
                        if (rr.residual.c[i] != 0)
                            terms.push_back({Monomial::var(setup.ring->size(), b, static_cast<int>(i)),
                                             rr.residual.c[i]});
                    cluster = Polynomial::from_terms(setup.ring, std::move(terms));
                    cluster.normalize_content();
                } else if (!rr.complete) {
                    rep.log.push_back({"rational point extraction", HypStatus::Failed,
                                       "coefficients too large for root search"});
                } else {
                    cluster_known_empty = true;
                }
            }
        }
    }

    bool used_splitting = false;
    for (const auto& pt : points) {
        PointMult pm;
        pm.point = pt;
        try {
            pm.multiplicity = db_multiplicity_at_point(crit, pt, opt.curve, budget);
            pm.method = "colength";
        } catch (const hypothesis_error& e) {
            bool concentrated = (points.size() == 1) && (cluster.is_zero() || cluster_known_empty);
            if (!concentrated) throw;
            pm.multiplicity = splitting_multiplicity(crit, budget);
            pm.method = "splitting";
            used_splitting = true;
            rep.log.push_back({"finite critical fiber at the point", HypStatus::Failed, e.what()});
            rep.log.push_back({"flat splitting deformation (two random draws agree)",
                               HypStatus::Asserted, ""});
        }
        if (pm.multiplicity > 0) rep.points.push_back(std::move(pm));
    }
    if (!cluster.is_zero()) {
        PointMult pm;
        pm.clustered = true;
        pm.cluster_factor = cluster;
        pm.method = "clustered";
        long named = 0;
        for (const auto& p : rep.points) named += p.multiplicity;
        if (rep.total_degree >= 0) {
            pm.multiplicity = rep.total_degree - named;
            if (pm.multiplicity > 0) rep.points.push_back(std::move(pm));
        } else {
            rep.log.push_back({"clustered multiplicity", HypStatus::Failed,
                               "total degree unavailable for the residual factor"});
        }
    }
    if (used_splitting && rep.total_degree < 0 && rep.points.size() == 1)
        rep.total_degree = rep.points[0].multiplicity;

    // ---- local equation by the presentation determinant
    if (opt.want_equation && !rep.points.empty() && !rep.points[0].clustered &&
        rep.points[0].method == "colength") {
        const auto& pt = rep.points[0].point;
        try {
            Polynomial full_eq;
            bool have = false;
            long order_sum = 0;
            for (std::size_t a = 0; a < cd.y_idx.size(); ++a) {
                auto info = locate_single_fiber_point(crit, static_cast<int>(a), pt, opt.curve, budget);
                if (!info) continue;
                FiberBasis fb = fiber_basis(crit, info->chart, pt, info->sigma, budget);
                long D = opt.trunc > 0 ? opt.trunc : default_truncation(fb.size, rep.multseq);
                PresentationDeterminant pd = presentation_determinant(fb, D, budget);
                order_sum += pd.order;
                rep.log.push_back({"determinant stabilization (order fixed under D -> D+2)",
                                   pd.stable ? HypStatus::Certified : HypStatus::Failed,
                                   "D = " + std::to_string(pd.truncation)});
                if (!have) {
                    full_eq = pd.det;
                    have = true;
                } else {
                    Polynomial prod = full_eq * reindex(pd.det, full_eq.ring());
                    std::vector<Term> kept;
                    for (const auto& t : prod.terms())
                        if (t.m.total_degree() <= D) kept.push_back(t);
                    full_eq = Polynomial::from_terms(full_eq.ring(), std::move(kept));
                }
            }
            if (have) {
                rep.equation = full_eq;
                rep.equation_order = order_sum;
                bool agree = (order_sum == rep.points[0].multiplicity);
                rep.log.push_back({"determinant order equals colength multiplicity",
                                   agree ? HypStatus::Certified : HypStatus::Failed,
                                   std::to_string(order_sum) + " vs " +
                                       std::to_string(rep.points[0].multiplicity)});
            } else {
                rep.log.push_back({"presentation equation", HypStatus::Asserted,
                                   "no single rational fiber point located; colength value stands"});
            }
        } catch (const hypothesis_error& e) {
            rep.log.push_back({"presentation equation", HypStatus::Asserted, e.what()});
        }
    }
    return rep;
}

// ---- pullback ----------------------------------------------------------------

// Local order of f restricted to (Z, point): max p with f in I_Z + m_point^p.
inline long ord_on_z(Polynomial f, const Ideal& IZ, const std::vector<Rational>& point,
                     const Budget& budget = Budget()) {
    const Ring& ring = IZ.ring();
    for (std::size_t i = 0; i < point.size(); ++i)
        if (point[i] != 0) f = shift_variable(f, static_cast<int>(i), point[i]);
    std::vector<Polynomial> izg = IZ.gens();
    for (auto& g : izg)
        for (std::size_t i = 0; i < point.size(); ++i)
            if (point[i] != 0) g = shift_variable(g, static_cast<int>(i), point[i]);
    std::vector<int> all;
    for (std::size_t i = 0; i < ring->size(); ++i) all.push_back(static_cast<int>(i));
    for (long p = 1; p <= 256; ++p) {
        std::vector<Polynomial> gens = izg;
        for (const auto& m : monomials_of_degree(ring, all, static_cast<int>(p)))
            gens.push_back(Polynomial::monomial(ring, m, Rational(1)));
        if (!ideal_membership(f, Ideal(ring, gens), budget)) return p - 1;
    }
    throw error("ord_on_z: order exceeds 256");
}

struct PullbackCheck {
    bool ok = false;
    std::string detail;
    DiscriminantReport pulled_report;  // report of the pulled-back pair
};

// phi: M1 -> M2 given by the images (in ring1) of every variable of ring2.
// Checks Db_{X1/Z1} = phi^* Db_{X2/Z2} at the named point pair.
inline PullbackCheck pullback_check(const Ring& ring1, const std::vector<Polynomial>& images,
                                    const PairSetup& setup2, const std::vector<Rational>& point1,
                                    const ReportOptions& opt = {}) {
    const Budget& budget = opt.budget;
    if (images.size() != setup2.ring->size()) throw error("pullback: image list arity mismatch");

    auto pull = [&](const Polynomial& f) { return substitute(f, ring1, images); };
    std::vector<Polynomial> z1, x1;
    for (const auto& g : setup2.IZ.gens()) z1.push_back(pull(g));
    for (const auto& f : setup2.IX.gens()) x1.push_back(pull(f));
    PairSetup setup1{ring1, Ideal(ring1, z1), Ideal(ring1, x1), {}};

    // phi^*(Z) must stay a reduced complete intersection of the same codimension
    int dimZ1 = krull_dimension(setup1.IZ, budget);
    if (dimZ1 != static_cast<int>(ring1->size()) - static_cast<int>(z1.size()))
        throw hypothesis_error("pullback: phi^*(Z) is not a complete intersection of expected codimension");
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& g : z1) {
        std::vector<Polynomial> row;
        for (std::size_t i = 0; i < ring1->size(); ++i) row.push_back(derivative(g, static_cast<int>(i)));
        jac.push_back(std::move(row));
    }
    std::vector<Polynomial> jg = z1;
    for (auto& m : maximal_minors(ring1, jac)) jg.push_back(std::move(m));
    int dim_sing = krull_dimension(Ideal(ring1, jg), budget);
    if (dim_sing >= dimZ1)
        throw hypothesis_error("pullback: phi^*(Z) is not reduced (singular in codimension 0)");

    // the image point
    std::vector<Rational> point2;
    for (const auto& im : images) {
        Polynomial v = im;
        for (std::size_t i = 0; i < point1.size(); ++i) v = substitute_value(v, static_cast<int>(i), point1[i]);
        if (!v.is_constant()) throw error("pullback: point image not constant");
        point2.push_back(v.is_zero() ? Rational(0) : v.terms()[0].c);
    }

    ReportOptions o1 = opt, o2 = opt;
    o1.points = {point1};
    o2.points = {point2};
    PullbackCheck out;
    DiscriminantReport rep1 = db_report(setup1, o1);
    DiscriminantReport rep2 = db_report(setup2, o2);
    out.pulled_report = rep1;

    long mult1 = rep1.points.empty() ? 0 : rep1.points[0].multiplicity;
    long mult2 = rep2.points.empty() ? 0 : rep2.points[0].multiplicity;
    if (rep2.empty_db || mult2 == 0) {
        out.ok = (rep1.empty_db || mult1 == 0);
        out.detail = out.ok ? "both discriminants avoid the point" : "pullback acquired a discriminant point";
        return out;
    }

    // order of the pulled local equation along Z1 at the point
    long expected;
    if (rep2.equation) {
        // translate back: equation lives at the origin of the shifted chart
        Polynomial e2src = reindex(*rep2.equation, setup2.ring);
        std::vector<int> zc;
        for (std::size_t i = 0; i < setup2.ring->size(); ++i)
            if (rep2.equation->ring()->index_of(setup2.ring->vars[i]) >= 0) zc.push_back(static_cast<int>(i));
        for (int i : zc)
            if (point2[i] != 0) e2src = shift_variable(e2src, i, -point2[i]);
        expected = ord_on_z(pull(e2src), setup1.IZ, point1, budget);
    } else if (rep2.support.reduced.size() == 1 && mult2 == 1) {
        expected = ord_on_z(pull(rep2.support.reduced[0]), setup1.IZ, point1, budget);
    } else {
        out.ok = false;
        out.detail = "no local equation available on the target side";
        return out;
    }
    out.ok = (mult1 == expected);
    std::ostringstream ss;
    ss << "pullback order " << expected << ", direct multiplicity " << mult1;
    out.detail = ss.str();
    return out;
}

// ---- infinitesimal determination ----------------------------------------------

struct TruncationCheck {
    bool identical = false;
    std::string detail;
};

// Perturbs each f_j by tau_j in I_Z^{p_r+1} and checks that the conormal data
// and the report are unchanged. Supplied perturbations below the threshold are
// rejected (outside the precondition).
inline TruncationCheck truncation_invariance_check(const PairSetup& setup,
                                                   const std::vector<Polynomial>& taus = {},
                                                   const ReportOptions& opt = {}) {
    const Budget& budget = opt.budget;
    ConormalData cd = conormal_ideal(setup, budget);
    long pr = 0;
    for (long p : cd.orders) pr = std::max(pr, p);

    std::vector<Polynomial> t = taus;
    if (!t.empty()) {
        if (t.size() != setup.IX.gens().size()) throw error("truncation check: tau arity mismatch");
        for (const auto& tau : t) {
            if (tau.is_zero()) continue;
            if (ord_along(tau, setup.IZ, budget) < pr + 1)
                throw hypothesis_error("perturbation below the determination threshold (order <= p_r)");
        }
    } else {
        DetRng rng(0xacc01adeULL);
        std::vector<Polynomial> prods = power_products(setup.IZ.gens(), static_cast<int>(pr + 1));
        for (std::size_t j = 0; j < setup.IX.gens().size(); ++j) {
            Polynomial tau = Polynomial::zero(setup.ring);
            for (int pick = 0; pick < 2; ++pick) {
                const Polynomial& prod = prods[static_cast<std::size_t>(
                    rng.pick(0, static_cast<long>(prods.size()) - 1))];
                int var = static_cast<int>(rng.pick(0, static_cast<long>(setup.ring->size()) - 1));
                tau += Polynomial::constant(setup.ring, rng.coeff()) * prod *
                       Polynomial::variable(setup.ring, var);
            }
            t.push_back(tau);
        }
    }

    std::vector<Polynomial> fx;
    for (std::size_t j = 0; j < setup.IX.gens().size(); ++j) fx.push_back(setup.IX.gens()[j] + t[j]);
    PairSetup pert{setup.ring, setup.IZ, Ideal(setup.ring, fx), setup.components};
    ConormalData cd2 = conormal_ideal(pert, budget);

    TruncationCheck out;
    if (cd.orders != cd2.orders) {
        out.detail = "orders changed";
        return out;
    }
    for (std::size_t j = 0; j < cd.lead_forms.size(); ++j)
        if (cd.lead_forms[j] != cd2.lead_forms[j]) {
            out.detail = "leading forms changed";
            return out;
        }
    if (!ideal_equality(cd.gr_ideal, cd2.gr_ideal, budget)) {
        out.detail = "conormal ideals differ";
        return out;
    }
    DiscriminantReport r1 = db_report(setup, opt);
    DiscriminantReport r2 = db_report(pert, opt);
    if (r1.empty_db != r2.empty_db || r1.total_degree != r2.total_degree ||
        r1.points.size() != r2.points.size()) {
        out.detail = "reports differ";
        return out;
    }
    for (std::size_t i = 0; i < r1.points.size(); ++i)
        if (r1.points[i].point != r2.points[i].point ||
            r1.points[i].multiplicity != r2.points[i].multiplicity) {
            out.detail = "point multiplicities differ";
            return out;
        }
    out.identical = true;
    out.detail = "conormal data and report unchanged";
    return out;
}

// ---- flat families --------------------------------------------------------------

struct FamilySample {
    Rational t;
    bool ok = false;
    long degree = -1;
    std::vector<long> multseq;
    std::string failure;
};

struct FamilyDegrees {
    std::vector<FamilySample> samples;
    bool constant_degree = false;
    bool constant_multseq = false;
    bool flagged_nonflat = false;
};

inline FamilyDegrees family_db_degrees(const Ring& ring, const std::vector<Polynomial>& zgens,
                                       const std::vector<Polynomial>& xgens, int param,
                                       const std::vector<Rational>& samples,
                                       const Budget& budget = Budget()) {
    FamilyDegrees out;
    std::vector<std::string> vars;
    std::vector<long> weights;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (static_cast<int>(i) == param) continue;
        vars.push_back(ring->vars[i]);
        weights.push_back(ring->weights[i]);
    }
    Ring sub = make_ring(vars, weights);
    for (const auto& tv : samples) {
        FamilySample s;
        s.t = tv;
        try {
            std::vector<Polynomial> zg, xg;
            for (const auto& g : zgens) zg.push_back(reindex(substitute_value(g, param, tv), sub));
            for (const auto& f : xgens) xg.push_back(reindex(substitute_value(f, param, tv), sub));
            PairSetup setup{sub, Ideal(sub, zg), Ideal(sub, xg), {}};
            ConormalData cd = conormal_ideal(setup, budget);
            SciReport sci = sci_check(cd, budget);
            if (!sci.is_sci) throw hypothesis_error("not s.c.i. at this parameter: " + sci.detail);
            s.multseq = sci.multseq.orders;
            bool all_ones = true;
            for (long p : s.multseq)
                if (p != 1) all_ones = false;
            if (all_ones) {
                s.degree = 0;
            } else {
                CritData crit = crit_ideal(cd, budget);
                OrdinaryReport ordi = generically_ordinary_check(crit, budget);
                if (!ordi.ordinary) throw hypothesis_error("not generically ordinary at this parameter");
                s.degree = total_db_degree(crit, budget);
            }
            s.ok = true;
        } catch (const error& e) {
            s.failure = e.what();
        }
        out.samples.push_back(std::move(s));
    }
    out.constant_degree = true;
    out.constant_multseq = true;
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        if (!out.samples[i].ok) {
            out.constant_degree = out.constant_multseq = false;
            break;
        }
        if (i > 0 && out.samples[i].degree != out.samples[0].degree) out.constant_degree = false;
        if (i > 0 && out.samples[i].multseq != out.samples[0].multseq) out.constant_multseq = false;
    }
    out.flagged_nonflat = !(out.constant_degree && out.constant_multseq);
    return out;
}

}  // namespace tdisc
