#include <catch2/catch_amalgamated.hpp>

#include "tdisc/weighted.hpp"

using namespace tdisc;

TEST_CASE("weighted hypersurface Milnor numbers") {
    REQUIRE(milnor_weighted_hypersurface(WeightData{{1, 1}, {3}}) == Rational(4));
    for (long p : {2L, 3L, 7L})
        REQUIRE(milnor_weighted_hypersurface(WeightData{{1}, {p}}) == Rational(p - 1));
    REQUIRE(milnor_weighted_hypersurface(WeightData{{2, 3}, {6}}) == Rational(2));  // the cusp
    // (p-1)^2 for the plane p-fold point
    REQUIRE(milnor_weighted_hypersurface(WeightData{{1, 1}, {4}}) == Rational(9));
    // non-integer output is reported, not rounded
    Rational odd = milnor_weighted_hypersurface(WeightData{{2}, {3}});
    REQUIRE_FALSE(rat_is_integer(odd));
}

TEST_CASE("Poincare series route agrees with the closed form on the full grid") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<long> w(k, 1);
        std::function<void(int)> rec = [&](int i) {
            if (i == k) {
                for (long d = 1; d <= 12; ++d) {
                    WeightData wd{w, {d}};
                    REQUIRE(poincare_series_mu(wd) == milnor_weighted_hypersurface(wd));
                }
                return;
            }
            for (long ww = 1; ww <= 4; ++ww) {
                w[i] = ww;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("boundary case n = 0") {
    for (long p : {2L, 3L, 5L})
        REQUIRE(poincare_series_mu(WeightData{{1}, {p}}) == Rational(p - 1));
    // zero-dimensional complete intersection (x^2, y^3): colength 6, mu 5
    REQUIRE(poincare_series_mu(WeightData{{1, 1}, {2, 3}}) == Rational(5));
}

TEST_CASE("mu plus mu-hat") {
    // r = 1 specialization equals the hypersurface Milnor number
    for (long d : {2L, 3L, 5L})
        REQUIRE(mu_plus_muhat(WeightData{{1, 1, 1}, {d}}) ==
                milnor_weighted_hypersurface(WeightData{{1, 1, 1}, {d}}));
    REQUIRE(mu_plus_muhat(WeightData{{1, 1, 1}, {2}}) == Rational(1));  // A1

    // r = 2 cross-check against two Greuel-Hamm evaluations
    WeightData pair{{1, 1, 1}, {2, 3}};
    Rational mu = poincare_series_mu(pair);
    Rational muhat = poincare_series_mu(WeightData{{1, 1, 1}, {3}});
    REQUIRE(mu == Rational(13));
    REQUIRE(muhat == Rational(8));
    REQUIRE(mu_plus_muhat(pair) == mu + muhat);
}

TEST_CASE("repeated equation weights need the eps-limit") {
    WeightData eq{{1, 1, 1}, {2, 2}};
    Rational v1 = mu_plus_muhat(eq, 1);
    Rational v2 = mu_plus_muhat(eq, 2);  // different perturbation direction
    REQUIRE(v1 == v2);
    // cross-check: mu(2,2;1,1,1) + mu(2;1,1,1)
    Rational mu = poincare_series_mu(eq);
    Rational muhat = poincare_series_mu(WeightData{{1, 1, 1}, {2}});
    REQUIRE(v1 == mu + muhat);
}

TEST_CASE("discriminant monomial support") {
    {
        // f = x^2 deformed by the constant s: single solution s^1
        auto sols = disc_monomial_support(WeightData{{1}, {2}}, {{0, {0}}});
        REQUIRE(sols.size() == 1);
        REQUIRE(sols[0] == std::vector<long>{1});
    }
    {
        // f = sigma^p deformed by a constant: s^{p-1}
        for (long p : {3L, 4L}) {
            auto sols = disc_monomial_support(WeightData{{1}, {p}}, {{0, {0}}});
            REQUIRE(sols.size() == 1);
            REQUIRE(sols[0][0] == p - 1);
        }
    }
    {
        // the cubic with linear deformations: n0 + (2/3)(n1 + n2) = 4
        auto sols = disc_monomial_support(WeightData{{1, 1}, {3}},
                                          {{0, {0, 0}}, {0, {1, 0}}, {0, {0, 1}}});
        REQUIRE(sols.size() == 12);
        for (const auto& s : sols) REQUIRE(3 * s[0] + 2 * s[1] + 2 * s[2] == 12);
    }
    REQUIRE_THROWS_AS(disc_monomial_support(WeightData{{1}, {2}}, {}), error);
    // weight-zero deformation coefficient leaves the exponent unconstrained
    REQUIRE_THROWS_AS(disc_monomial_support(WeightData{{1}, {2}}, {{0, {2}}}), hypothesis_error);
}

TEST_CASE("rational function arithmetic") {
    UniPoly t = UniPoly::X(1);
    RatFunc f = RatFunc::of(UniPoly::constant(Rational(1)) - t * t,
                            UniPoly::constant(Rational(1)) - t);
    // (1 - t^2)/(1 - t) reduces to 1 + t
    REQUIRE(f.den.degree() == 0);
    REQUIRE(f.eval(Rational(1)).value() == Rational(2));
    RatFunc g = RatFunc::of(UniPoly::constant(Rational(1)), UniPoly::constant(Rational(1)) - t);
    REQUIRE_FALSE(g.eval(Rational(1)).has_value());  // genuine pole

    RationalRoots rr = rational_roots(
        (UniPoly::X(1) - UniPoly::constant(Rational(1))) *
        (UniPoly::X(1) - UniPoly::constant(Rational(1))) *
        (UniPoly::X(1) + UniPoly::constant(rat_of(1, 2))) * UniPoly::X(2));
    REQUIRE(rr.roots.size() == 3);
    long checked = 0;
    for (const auto& [root, mult] : rr.roots) {
        if (root == Rational(0)) { REQUIRE(mult == 2); ++checked; }
        if (root == Rational(1)) { REQUIRE(mult == 2); ++checked; }
        if (root == rat_of(-1, 2)) { REQUIRE(mult == 1); ++checked; }
    }
    REQUIRE(checked == 3);
    REQUIRE(rr.residual.degree() == 0);
}
