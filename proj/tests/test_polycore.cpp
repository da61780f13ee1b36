#include <catch2/catch_amalgamated.hpp>

#include "tdisc/parser.hpp"
#include "tdisc/transversal.hpp"

using namespace tdisc;

namespace {

Ring R3() { return make_ring({"x", "y", "z"}); }

Polynomial random_poly(const Ring& ring, DetRng& rng, int max_terms = 4, int max_deg = 3) {
    std::vector<Term> ts;
    long n = rng.pick(0, max_terms);
    for (long i = 0; i < n; ++i) {
        Monomial m(ring->size());
        for (std::size_t v = 0; v < ring->size(); ++v) m.e[v] = static_cast<int>(rng.pick(0, max_deg));
        ts.push_back({m, rng.coeff()});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

std::vector<Monomial> all_monomials_upto(const Ring& ring, int maxdeg) {
    std::vector<Monomial> out;
    for (int d = 0; d <= maxdeg; ++d) {
        std::vector<int> vars;
        for (std::size_t i = 0; i < ring->size(); ++i) vars.push_back(static_cast<int>(i));
        for (auto& m : monomials_of_degree(ring, vars, d)) out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_CASE("parser handles the grammar") {
    Ring r = R3();
    Polynomial f = parse_polynomial("x^2*z - y^2", r);
    REQUIRE(f.term_count() == 2);
    REQUIRE(f.coeff(Monomial({2, 0, 1})) == 1);
    REQUIRE(f.coeff(Monomial({0, 2, 0})) == -1);

    REQUIRE(parse_polynomial("0", r).is_zero());
    REQUIRE(parse_polynomial("(x+y)^2", r) ==
            parse_polynomial("x^2 + 2*x*y + y^2", r));
    REQUIRE(parse_polynomial("1/2*x - 3/4", r) * Rational(4) ==
            parse_polynomial("2*x - 3", r));
    REQUIRE(parse_polynomial("-x^2", r) == -parse_polynomial("x^2", r));
}

TEST_CASE("parser rejects bad input with positions") {
    Ring r = R3();
    REQUIRE_THROWS_AS(parse_polynomial("x + w", r), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial("2x", r), parse_error);  // implicit multiplication
    REQUIRE_THROWS_AS(parse_polynomial("x + ", r), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial("(x", r), parse_error);
    try {
        parse_polynomial("x + q", r);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.pos == 4);
    }
}

TEST_CASE("parse-serialize round trip on random polynomials") {
    Ring r = R3();
    DetRng rng(7);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_poly(r, rng);
        REQUIRE(parse_polynomial(f.str(), r) == f);
    }
}

TEST_CASE("ring axioms hold exactly") {
    Ring r = R3();
    DetRng rng(11);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
        REQUIRE(a - a == Polynomial::zero(r));
    }
}

TEST_CASE("weighted degree") {
    Ring r = make_ring({"x", "y"});
    auto wd = weighted_degree(parse_polynomial("x^3 + y^3", r));
    REQUIRE(wd.homogeneous);
    REQUIRE(wd.degree == 3);

    Ring rw = make_ring({"x", "y", "z"}, {3, 1, 3});
    auto wd2 = weighted_degree(parse_polynomial("x^2 + z*y^3", rw));
    REQUIRE(wd2.homogeneous);
    REQUIRE(wd2.degree == 6);

    auto wd3 = weighted_degree(parse_polynomial("x^2 + x^3", r));
    REQUIRE_FALSE(wd3.homogeneous);
    REQUIRE(wd3.witness_a != wd3.witness_b);

    REQUIRE_THROWS_AS(weighted_degree(Polynomial::zero(r)), error);
}

TEST_CASE("homogenize and dehomogenize") {
    Ring r = R3();
    Ring rw = extend_ring(r, {"w"});
    int wi = rw->index_of("w");
    Polynomial f = parse_polynomial("x^2 + z*y^3", r);
    Polynomial h = homogenize(f, rw, wi);
    REQUIRE(h == parse_polynomial("w^2*x^2 + z*y^3", rw));
    REQUIRE(reindex(dehomogenize(h, wi), r) == f);

    Polynomial g = parse_polynomial("x*y + z^3", r);
    REQUIRE(homogenize(g, rw, wi) == parse_polynomial("w*x*y + z^3", rw));

    Polynomial one = parse_polynomial("1", r);
    REQUIRE(homogenize(one, rw, wi) == parse_polynomial("1", rw));

    REQUIRE_THROWS_AS(extend_ring(r, {"x"}), error);  // name collision
}

TEST_CASE("partial derivatives and the Euler identity") {
    Ring r = R3();
    Polynomial f = parse_polynomial("x^2*z - y^2", r);
    REQUIRE(derivative(f, 0) == parse_polynomial("2*x*z", r));
    REQUIRE(derivative(f, 1) == parse_polynomial("-2*y", r));

    // Euler only applies once weighted_degree succeeds
    Ring rw = make_ring({"x", "y", "z"}, {1, 2, 2});
    DetRng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        // random weighted-homogeneous polynomial of weight 4
        std::vector<Term> ts;
        for (const auto& m : all_monomials_upto(rw, 4))
            if (m.weighted_degree(*rw) == 4 && rng.pick(0, 2) == 0) ts.push_back({m, rng.coeff()});
        Polynomial f4 = Polynomial::from_terms(rw, std::move(ts));
        if (f4.is_zero()) continue;
        REQUIRE(weighted_degree(f4).homogeneous);
        Polynomial euler = Polynomial::zero(rw);
        for (int v = 0; v < 3; ++v)
            euler += Polynomial::constant(rw, Rational(rw->weights[v])) *
                     Polynomial::variable(rw, v) * derivative(f4, v);
        REQUIRE(euler == f4 * Rational(4));
    }
}

TEST_CASE("monomial orders: totality, multiplicativity, elimination property") {
    Ring r = R3();
    auto monos = all_monomials_upto(r, 4);
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                                         MonomialOrder::wgrevlex(), MonomialOrder::elim({0})};
    for (const auto& ord : orders) {
        for (const auto& a : monos)
            for (const auto& b : monos) {
                bool ab = ord.less(a, b, *r), ba = ord.less(b, a, *r);
                if (a == b) {
                    REQUIRE_FALSE(ab);
                    REQUIRE_FALSE(ba);
                } else {
                    REQUIRE(ab != ba);  // total
                }
            }
        // multiplicativity on a subsample
        DetRng rng(17);
        for (int i = 0; i < 400; ++i) {
            const Monomial& a = monos[rng.pick(0, static_cast<long>(monos.size()) - 1)];
            const Monomial& b = monos[rng.pick(0, static_cast<long>(monos.size()) - 1)];
            const Monomial& c = monos[rng.pick(0, static_cast<long>(monos.size()) - 1)];
            if (ord.less(a, b, *r)) REQUIRE(ord.less(a * c, b * c, *r));
        }
        // 1 is minimal (well-foundedness witness on bounded sets)
        for (const auto& a : monos)
            if (!a.is_one()) REQUIRE(ord.less(Monomial::one(3), a, *r));
    }
    // elimination order: any monomial meeting the block beats any free of it
    MonomialOrder elim = MonomialOrder::elim({0});
    for (const auto& a : monos)
        for (const auto& b : monos)
            if (a.e[0] > 0 && b.e[0] == 0) REQUIRE(elim.less(b, a, *r));
}

TEST_CASE("canonical serialization is grevlex-sorted and stable") {
    Ring r = R3();
    Polynomial f = parse_polynomial("z + x^2*z - y^2 + 1", r);
    REQUIRE(f.str() == "x^2*z - y^2 + z + 1");
    REQUIRE(parse_polynomial(f.str(), r).str() == f.str());
}

TEST_CASE("substitution and shifting") {
    Ring r = R3();
    Polynomial f = parse_polynomial("x^2*z - y^2", r);
    Polynomial g = shift_variable(f, 2, Rational(1));  // z -> z + 1
    REQUIRE(g == parse_polynomial("x^2*z + x^2 - y^2", r));
    REQUIRE(shift_variable(g, 2, Rational(-1)) == f);
    REQUIRE(substitute_value(f, 2, Rational(3)) == parse_polynomial("3*x^2 - y^2", r));
}
