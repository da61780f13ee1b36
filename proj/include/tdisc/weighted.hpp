#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tdisc/errors.hpp"
#include "tdisc/univariate.hpp"

namespace tdisc {

// Weighted-homogeneous data: variable weights w(x_1..x_k), equation weights
// w(f~_1..f~_r), fiber dimension n = k - r.
struct WeightData {
    std::vector<long> var_weights;
    std::vector<long> eq_weights;

    std::size_t k() const { return var_weights.size(); }
    std::size_t r() const { return eq_weights.size(); }
    long n() const { return static_cast<long>(k()) - static_cast<long>(r()); }

    void validate() const {
        if (var_weights.empty() || eq_weights.empty()) throw error("empty weight data");
        for (long w : var_weights)
            if (w <= 0) throw error("variable weights must be positive");
        for (long w : eq_weights)
            if (w <= 0) throw error("equation weights must be positive");
        if (n() < 0) throw error("more equations than variables");
    }
};

// Milnor number of a weighted-homogeneous hypersurface: prod (d/w_i - 1).
// Reported exactly; a non-integer value signals inconsistent weight data.
inline Rational milnor_weighted_hypersurface(const WeightData& wd) {
    wd.validate();
    if (wd.r() != 1) throw error("milnor_weighted_hypersurface needs exactly one equation weight");
    Rational mu(1);
    for (long w : wd.var_weights) mu *= rat_of(wd.eq_weights[0], w) - 1;
    return mu;
}

// (mu + mu_hat_1) from the closed form
//   sum_j (w_j/w_1) prod_i (w_j/w(x_i) - 1) prod_{q != j} w_q/(w_j - w_q).
// Repeated equation weights are handled by the symbolic perturbation
// w_j -> w_j + j^pow * eps in exact rational-function arithmetic over eps,
// evaluated at eps = 0.
inline Rational mu_plus_muhat(const WeightData& wd, int perturb_power = 1) {
    wd.validate();
    const std::size_t r = wd.r();
    bool repeated = false;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (wd.eq_weights[i] == wd.eq_weights[j]) repeated = true;

    auto weight = [&](std::size_t j) -> RatFunc {
        UniPoly p = UniPoly::constant(Rational(wd.eq_weights[j]));
        if (repeated) {
            long mult = 1;
            for (int e = 0; e < perturb_power; ++e) mult *= static_cast<long>(j + 1);
            p = p + UniPoly::X(1, Rational(mult));
        }
        return RatFunc::of(p);
    };

    RatFunc acc = RatFunc::constant(Rational(0));
    for (std::size_t j = 0; j < r; ++j) {
        RatFunc term = weight(j) / weight(0);
        for (long w : wd.var_weights)
            term = term * (weight(j) / RatFunc::constant(Rational(w)) - RatFunc::constant(Rational(1)));
        for (std::size_t q = 0; q < r; ++q) {
            if (q == j) continue;
            term = term * (weight(q) / (weight(j) - weight(q)));
        }
        acc = acc + term;
    }
    auto val = acc.eval(Rational(0));
    if (!val) throw hypothesis_error("mu_plus_muhat: formula singular (pole survives the eps-limit)");
    return *val;
}

// ---- Greuel-Hamm Poincaré series --------------------------------------------

namespace detail {

// truncated series in tau with rational-function coefficients in t
using TauSeries = std::vector<RatFunc>;

inline TauSeries series_mul(const TauSeries& a, const TauSeries& b, std::size_t order) {
    TauSeries out(order + 1, RatFunc::constant(Rational(0)));
    for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order && j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

inline TauSeries geometric(const RatFunc& ratio, std::size_t order) {
    // 1/(1 - ratio*tau) = sum ratio^i tau^i
    TauSeries out(order + 1, RatFunc::constant(Rational(0)));
    RatFunc acc = RatFunc::constant(Rational(1));
    for (std::size_t i = 0; i <= order; ++i) {
        out[i] = acc;
        acc = acc * ratio;
    }
    return out;
}

}  // namespace detail

// mu = P(1) with P(t) the coefficient of tau^n in (B(tau,t) - 1)/(1+tau),
//   B = prod_i (1+tau t^{w_i})/(1-t^{w_i}) * prod_j (1-t^{d_j})/(1+tau t^{d_j}),
// evaluated by exact rational-function arithmetic and cancellation at t = 1.
inline Rational poincare_series_mu(const WeightData& wd) {
    wd.validate();
    std::size_t n = static_cast<std::size_t>(wd.n());
    using detail::TauSeries;
    TauSeries B(n + 1, RatFunc::constant(Rational(0)));
    B[0] = RatFunc::constant(Rational(1));
    for (long w : wd.var_weights) {
        TauSeries lin(n + 1, RatFunc::constant(Rational(0)));
        lin[0] = RatFunc::constant(Rational(1));
        if (n >= 1) lin[1] = RatFunc::of(UniPoly::X(static_cast<int>(w)));
        B = detail::series_mul(B, lin, n);
        RatFunc scale = RatFunc::of(UniPoly::constant(Rational(1)),
                                    UniPoly::constant(Rational(1)) - UniPoly::X(static_cast<int>(w)));
        for (auto& c : B) c = c * scale;
    }
    for (long d : wd.eq_weights) {
        RatFunc neg = RatFunc::of(-UniPoly::X(static_cast<int>(d)));
        B = detail::series_mul(B, detail::geometric(neg, n), n);
        RatFunc scale = RatFunc::of(UniPoly::constant(Rational(1)) - UniPoly::X(static_cast<int>(d)));
        for (auto& c : B) c = c * scale;
    }
    B[0] = B[0] - RatFunc::constant(Rational(1));
    TauSeries phi = detail::series_mul(B, detail::geometric(RatFunc::constant(Rational(-1)), n), n);
    RatFunc P = phi[n];
    auto val = P.eval(Rational(1));
    if (!val) throw hypothesis_error("poincare_series_mu: unexpected pole at t = 1");
    return *val;
}

// ---- monomial support of the discriminant ------------------------------------

// Deformation monomial of equation j: exponent vector m over the x-variables.
struct DeformMonomial {
    std::size_t eq;           // 0-based equation index
    std::vector<int> expo;    // exponents over x
};

// Solutions n >= 0 of  sum n_{j,m} (w(f_j) - w(x^m)) = (mu+mu_hat_1) w(f_1),
// enumerated exhaustively (finite because all reduced weights are positive).
inline std::vector<std::vector<long>> disc_monomial_support(const WeightData& wd,
                                                            const std::vector<DeformMonomial>& monos) {
    wd.validate();
    if (monos.empty()) throw error("disc_monomial_support: empty deformation list");
    std::vector<long> cost;
    for (const auto& dm : monos) {
        if (dm.eq >= wd.r()) throw error("disc_monomial_support: equation index out of range");
        long wm = 0;
        for (std::size_t i = 0; i < dm.expo.size(); ++i) wm += dm.expo[i] * wd.var_weights[i];
        long c = wd.eq_weights[dm.eq] - wm;
        if (c < 0) throw error("disc_monomial_support: monomial heavier than its equation");
        if (c == 0)
            throw hypothesis_error(
                "disc_monomial_support: weight-zero deformation coefficient, exponent unconstrained");
        cost.push_back(c);
    }
    Rational rhs_q = mu_plus_muhat(wd) * Rational(wd.eq_weights[0]);
    if (!rat_is_integer(rhs_q) || rhs_q < 0)
        throw hypothesis_error("disc_monomial_support: non-integer target degree " + rat_str(rhs_q));
    long rhs = static_cast<long>(rhs_q.get_num().get_si());

    std::vector<std::vector<long>> out;
    std::vector<long> cur(monos.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i + 1 == monos.size()) {
            if (left % cost[i] == 0) {
                cur[i] = left / cost[i];
                out.push_back(cur);
            }
            return;
        }
        for (long e = 0; e * cost[i] <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e * cost[i]);
        }
        cur[i] = 0;
    };
    rec(0, rhs);
    return out;
}

}  // namespace tdisc
