#include <catch2/catch_amalgamated.hpp>

#include "tdisc/parser.hpp"
#include "tdisc/transversal.hpp"

using namespace tdisc;

namespace {

Ring R3() { return make_ring({"x", "y", "z"}); }

PairSetup setup_of(const Ring& r, std::initializer_list<const char*> zs,
                   std::initializer_list<const char*> xs) {
    std::vector<Polynomial> z, x;
    for (const char* t : zs) z.push_back(parse_polynomial(t, r));
    for (const char* t : xs) x.push_back(parse_polynomial(t, r));
    return PairSetup{r, Ideal(r, z), Ideal(r, x), {}};
}

}  // namespace

TEST_CASE("order along Z") {
    Ring r = R3();
    Ideal IZ(r, {parse_polynomial("x", r), parse_polynomial("y", r)});
    REQUIRE(ord_along(parse_polynomial("x^2*z - y^2", r), IZ) == 2);
    REQUIRE(ord_along(parse_polynomial("x^2*z^2 - y^2 - x^3", r), IZ) == 2);
    REQUIRE(ord_along(parse_polynomial("x", r), IZ) == 1);
    REQUIRE(ord_along(Polynomial::zero(r), IZ) == kInfiniteOrder);
}

TEST_CASE("symbolic membership against supplied components") {
    Ring r = R3();
    std::vector<Ideal> comps = {Ideal(r, {parse_polynomial("x", r), parse_polynomial("y", r)}),
                                Ideal(r, {parse_polynomial("y", r), parse_polynomial("z", r)}),
                                Ideal(r, {parse_polynomial("x", r), parse_polynomial("z", r)})};
    Polynomial xyz = parse_polynomial("x*y*z", r);
    REQUIRE(symbolic_membership(xyz, comps, 2));
    Ideal I(r, {parse_polynomial("x*y", r), parse_polynomial("y*z", r), parse_polynomial("x*z", r)});
    REQUIRE_FALSE(ideal_membership(xyz, ideal_power(I, 2)));
    REQUIRE(symbolic_membership(parse_polynomial("x", r),
                                {Ideal(r, {parse_polynomial("x", r), parse_polynomial("y", r)})}, 1));
    REQUIRE_THROWS_AS(symbolic_membership(xyz, {}, 2), error);
}

TEST_CASE("conormal ideal of the Whitney umbrella") {
    Ring r = R3();
    PairSetup ps = setup_of(r, {"x", "y"}, {"x^2*z - y^2"});
    ConormalData cd = conormal_ideal(ps);
    REQUIRE(cd.orders == std::vector<long>{2});
    Polynomial expected = parse_polynomial("z*y1^2 - y2^2", cd.ext);
    REQUIRE(cd.lead_forms[0] == expected);
    // presented in O_Z[y]: the conormal ideal is (I_Z, y1^2 z - y2^2)
    std::vector<Polynomial> gens = {parse_polynomial("x", cd.ext), parse_polynomial("y", cd.ext),
                                    expected};
    REQUIRE(ideal_equality(cd.gr_ideal, Ideal(cd.ext, gens)));
    // every generator is homogeneous in the y-block
    for (const auto& g : cd.gr_ideal.gens()) {
        long d = -1;
        for (const auto& t : g.terms()) {
            long yd = t.m.degree_on(cd.y_idx);
            if (d < 0) d = yd;
            REQUIRE(yd == d);
        }
    }
}

TEST_CASE("conormal ideal over a singular Z and the A1 model") {
    Ring r = R3();
    {
        PairSetup ps = setup_of(r, {"x*y", "z"}, {"x^2*y^2 - z^2"});
        ConormalData cd = conormal_ideal(ps);
        REQUIRE(cd.lead_forms[0] == parse_polynomial("y1^2 - y2^2", cd.ext));
    }
    {
        PairSetup ps = setup_of(r, {"x", "y"}, {"z*x^2 + y^2"});
        ConormalData cd = conormal_ideal(ps);
        REQUIRE(cd.lead_forms[0] == parse_polynomial("z*y1^2 + y2^2", cd.ext));
    }
}

TEST_CASE("leading forms") {
    Ring r = R3();
    Ideal IZ(r, {parse_polynomial("x", r), parse_polynomial("y", r)});
    auto ynames = fresh_names(r, "y", 2);
    Ring ext = extend_ring(r, ynames, {}, 3);
    std::vector<int> y_idx = {ext->index_of("y1"), ext->index_of("y2")};

    // the x^3 term has order 3 > 2 and is absorbed
    REQUIRE(leading_form(parse_polynomial("x^2*z^2 - y^2 - x^3", r), IZ, ext, y_idx) ==
            parse_polynomial("z^2*y1^2 - y2^2", ext));
    REQUIRE(leading_form(parse_polynomial("x^2*z - y^2", r), IZ, ext, y_idx) ==
            parse_polynomial("z*y1^2 - y2^2", ext));
    REQUIRE(leading_form(parse_polynomial("x", r), IZ, ext, y_idx) ==
            parse_polynomial("y1", ext));
    REQUIRE_THROWS_AS(leading_form(Polynomial::zero(r), IZ, ext, y_idx), error);
}

TEST_CASE("leading form is y-homogeneous of the right degree, and substitution recovers f") {
    Ring r = R3();
    PairSetup ps = setup_of(r, {"x", "y"}, {"x^2*z^3 - y^2 - x^3", "x^3*z - y^3 - x^4"});
    ConormalData cd = conormal_ideal(ps);
    for (std::size_t j = 0; j < cd.lead_forms.size(); ++j) {
        long p = cd.orders[j];
        for (const auto& t : cd.lead_forms[j].terms())
            REQUIRE(t.m.degree_on(cd.y_idx) == p);
        // y_i -> g_i reproduces f modulo I_Z^{p+1}
        Polynomial back = substitute_y_by_g(cd.lead_forms[j], cd);
        Polynomial diff = back - ps.IX.gens()[j];
        REQUIRE(ideal_membership(diff, ideal_power(ps.IZ, static_cast<int>(p) + 1)));
    }
}

TEST_CASE("GL invariance of the conormal ideal") {
    Ring r = R3();
    PairSetup ps1 = setup_of(r, {"x", "y"}, {"x^2*z - y^2"});
    // g' = (x + y, y) also generates I_Z; old generators expand as
    // g1 = g1' - g2', g2 = g2'
    PairSetup ps2 = setup_of(r, {"x + y", "y"}, {"x^2*z - y^2"});
    ConormalData cd1 = conormal_ideal(ps1);
    ConormalData cd2 = conormal_ideal(ps2);

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < cd1.ext->size(); ++i)
        images.push_back(Polynomial::variable(cd2.ext, cd2.ext->index_of(cd1.ext->vars[i])));
    images[cd1.y_idx[0]] = parse_polynomial("y1 - y2", cd2.ext);  // y1 -> y1' - y2'
    std::vector<Polynomial> mapped;
    for (const auto& g : cd1.gr_ideal.gens()) mapped.push_back(substitute(g, cd2.ext, images));
    REQUIRE(ideal_equality(cd2.gr_ideal, Ideal(cd2.ext, mapped)));
}

TEST_CASE("sci check accepts the umbrella and reports the multiplicity sequence") {
    Ring r = R3();
    ConormalData cd = conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z - y^2"}));
    SciReport rep = sci_check(cd);
    REQUIRE(rep.is_sci);
    REQUIRE(rep.multseq.orders == std::vector<long>{2});
    REQUIRE(rep.multseq.generic_multiplicity == 2);
}

TEST_CASE("sci check rejects a zero-divisor conormal generator") {
    Ring r = make_ring({"x1", "x2", "x3"});
    ConormalData cd = conormal_ideal(setup_of(r, {"x1^2", "x2^2"}, {"x1^3 + x2^3"}));
    SciReport rep = sci_check(cd);
    REQUIRE_FALSE(rep.is_sci);
    REQUIRE_FALSE(rep.detail.empty());
    REQUIRE_THROWS_AS(multiplicity_sequence(cd), hypothesis_error);
}

TEST_CASE("sci check rejects an order mismatch across components") {
    // f vanishes to order 2 on {x = y = 0} and to order 1 on {y = z = 0}
    Ring r = R3();
    std::vector<Polynomial> zg = {parse_polynomial("x*z", r), parse_polynomial("y", r)};
    std::vector<Polynomial> xg = {parse_polynomial("x^2*z - y^2", r)};
    PairSetup ps{r, Ideal(r, zg), Ideal(r, xg), {}};
    ConormalData cd = conormal_ideal(ps);
    // ord along (xz, y) is 1: f = x*(xz) - y*y
    REQUIRE(cd.orders[0] == 1);
    SciReport rep = sci_check(cd);
    REQUIRE_FALSE(rep.is_sci);
}

TEST_CASE("multiplicity sequence for higher orders and r = 2") {
    Ring r = R3();
    {
        ConormalData cd = conormal_ideal(setup_of(r, {"x", "y"}, {"x^3*z - y^3 - x^4"}));
        MultiplicitySequence ms = multiplicity_sequence(cd);
        REQUIRE(ms.orders == std::vector<long>{3});
        REQUIRE(ms.generic_multiplicity == 3);
    }
    {
        Ring r4 = make_ring({"x", "y", "w", "z"});
        // f1 = g1^2 - z g2^2, f2 = g1 g2 with g = (x, y, w) ... r = 2, k = 3
        std::vector<Polynomial> zg = {parse_polynomial("x", r4), parse_polynomial("y", r4),
                                      parse_polynomial("w", r4)};
        std::vector<Polynomial> xg = {parse_polynomial("x^2 - z*y^2 - w^3", r4),
                                      parse_polynomial("x*y - w^2 + x^3", r4)};
        PairSetup ps{r4, Ideal(r4, zg), Ideal(r4, xg), {}};
        ConormalData cd = conormal_ideal(ps);
        SciReport rep = sci_check(cd);
        if (rep.is_sci) {
            for (std::size_t i = 1; i < rep.multseq.orders.size(); ++i)
                REQUIRE(rep.multseq.orders[i - 1] <= rep.multseq.orders[i]);
            long prod = 1;
            for (long p : rep.multseq.orders) prod *= p;
            REQUIRE(prod == rep.multseq.generic_multiplicity);
        }
    }
}

TEST_CASE("generic multiplicity equals the fiber degree at a generic point") {
    Ring r = R3();
    ConormalData cd = conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z^2 - y^2 - x^3"}));
    MultiplicitySequence ms = multiplicity_sequence(cd);

    // fiber of the cone over z = 1, sliced by affine lines in y; two
    // independent slices must agree (genericity by agreement)
    std::vector<std::pair<long, long>> slices = {{1, 2}, {-2, 3}};
    for (auto [c1, c2] : slices) {
        std::vector<Polynomial> gens;
        for (const auto& g : cd.gr_ideal.gens())
            gens.push_back(substitute_value(g, r->index_of("z"), Rational(1)));
        Polynomial slice = Polynomial::constant(cd.ext, Rational(-1)) +
                           Polynomial::constant(cd.ext, Rational(c1)) *
                               Polynomial::variable(cd.ext, cd.y_idx[0]) +
                           Polynomial::constant(cd.ext, Rational(c2)) *
                               Polynomial::variable(cd.ext, cd.y_idx[1]);
        gens.push_back(slice);
        gens.push_back(parse_polynomial("x", cd.ext));
        gens.push_back(parse_polynomial("y", cd.ext));
        gens.push_back(parse_polynomial("z", cd.ext));  // z pinned after the substitution
        Ideal fiber(cd.ext, gens);
        REQUIRE(quotient_dim(fiber) == ms.generic_multiplicity);
    }
}

TEST_CASE("coefficient tables match the stored leading forms") {
    Ring r = R3();
    ConormalData cd = conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z^3 - y^2 - x^3"}));
    Polynomial rebuilt = assemble_lead_form(cd.coeff_tables[0], cd.ext, cd.y_idx);
    REQUIRE(rebuilt == cd.lead_forms[0]);
    REQUIRE(cd.lead_forms[0] ==
            leading_form(cd.setup.IX.gens()[0], cd.setup.IZ, cd.ext, cd.y_idx));
}
