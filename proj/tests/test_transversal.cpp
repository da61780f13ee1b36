#include <catch2/catch_amalgamated.hpp>

#include "tdisc/parser.hpp"
#include "tdisc/report.hpp"

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

std::vector<Rational> origin(const Ring& r) { return std::vector<Rational>(r->size(), Rational(0)); }

}  // namespace

TEST_CASE("critical locus of the Whitney umbrella") {
    Ring r = R3();
    CritData crit = crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z - y^2"})));
    REQUIRE(crit.saturation_certified);
    std::vector<Polynomial> expected = {parse_polynomial("x", crit.cd.ext),
                                        parse_polynomial("y", crit.cd.ext),
                                        parse_polynomial("y2", crit.cd.ext),
                                        parse_polynomial("z", crit.cd.ext)};
    REQUIRE(ideal_equality(crit.crit, Ideal(crit.cd.ext, expected)));
    REQUIRE(ideal_contains(crit.crit, crit.cd.gr_ideal));  // crit contains the cone
}

TEST_CASE("critical locus of the fast-dying umbrella concentrates in one chart") {
    Ring r = R3();
    CritData crit = crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^3*z - y^3 - x^4"})));
    // support {y2 = 0, z = 0} in the chart y1 = 1
    REQUIRE(ideal_membership(parse_polynomial("z", crit.cd.ext), crit.crit));
    REQUIRE(ideal_membership(parse_polynomial("y2^2", crit.cd.ext), crit.crit));
}

TEST_CASE("smooth cone family saturates to the unit ideal") {
    Ring r = R3();
    CritData crit = crit_ideal(conormal_ideal(setup_of(r, {"x*y", "z"}, {"x^2*y^2 - z^2"})));
    REQUIRE(is_unit_ideal(crit.crit));
}

TEST_CASE("generically ordinary check") {
    Ring r = R3();
    {
        CritData crit = crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^3*z + y^4"})));
        OrdinaryReport rep = generically_ordinary_check(crit);
        REQUIRE_FALSE(rep.ordinary);
        REQUIRE_THROWS_AS(db_support(crit), hypothesis_error);
    }
    {
        Ring r4 = make_ring({"x", "y", "z", "w"});
        CritData crit =
            crit_ideal(conormal_ideal(setup_of(r4, {"x", "y"}, {"x^2*z + y^2*w + x^4 + y^4"})));
        REQUIRE(generically_ordinary_check(crit).ordinary);
    }
    {
        CritData crit = crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z - y^2"})));
        OrdinaryReport rep = generically_ordinary_check(crit);
        REQUIRE(rep.ordinary);
        REQUIRE(rep.support.reduced.size() == 1);
        REQUIRE(rep.support.reduced[0] == parse_polynomial("z", r));
    }
}

TEST_CASE("ordinary check against supplied components") {
    Ring r = R3();
    PairSetup ps = setup_of(r, {"x*y", "z"}, {"x^2*y^2 - z^2"});
    ps.components = {Ideal(r, {parse_polynomial("x", r), parse_polynomial("z", r)}),
                     Ideal(r, {parse_polynomial("y", r), parse_polynomial("z", r)})};
    CritData crit = crit_ideal(conormal_ideal(ps));
    REQUIRE(generically_ordinary_check(crit).ordinary);
}

TEST_CASE("db support") {
    Ring r = R3();
    {
        SupportData s = db_support(crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z - y^2"}))));
        REQUIRE(s.reduced.size() == 1);
        REQUIRE(s.reduced[0] == parse_polynomial("z", r));
    }
    {
        SupportData s = db_support(
            crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"z*(x^2 + y^2) - x^3 - y^4"}))));
        // support is the point z = 0 (as a set)
        bool has_zpow = false;
        for (const auto& g : s.reduced) {
            auto u = as_univariate(g, r->index_of("z"));
            if (u && !u->is_zero()) has_zpow = true;
        }
        REQUIRE(has_zpow);
    }
}

TEST_CASE("multiplicity at a point by local colengths") {
    Ring r = R3();
    {
        CritData crit =
            crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z^3 - y^2 - x^3"})));
        REQUIRE(db_multiplicity_at_point(crit, origin(r)) == 3);
    }
    {
        CritData crit =
            crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^4*z - y^4 - x^5"})));
        REQUIRE(db_multiplicity_at_point(crit, origin(r)) == 3);
    }
    {
        // positive-dimensional fiber: every cone coefficient vanishes at z = 0
        CritData crit = crit_ideal(
            conormal_ideal(setup_of(r, {"x", "y"}, {"z*(x^3 + y^3) - x^4 - y^5"})));
        REQUIRE_THROWS_AS(db_multiplicity_at_point(crit, origin(r)), hypothesis_error);
        REQUIRE(splitting_multiplicity(crit) == 4);  // 2(p-1), recovered by flat splitting
    }
    {
        // off-support point has multiplicity zero
        CritData crit = crit_ideal(conormal_ideal(setup_of(r, {"x", "y"}, {"x^2*z - y^2"})));
        REQUIRE(db_multiplicity_at_point(crit, {Rational(0), Rational(0), Rational(5)}) == 0);
        REQUIRE_THROWS_AS(db_multiplicity_at_point(crit, {Rational(1), Rational(0), Rational(0)}),
                          hypothesis_error);  // not on Z
    }
}

TEST_CASE("split-form multiplicity") {
    Ring rf = make_ring({"s"});
    Ring rb = make_ring({"z"});
    auto F = [&](const char* t) { return parse_polynomial(t, rf); };
    auto H = [&](const char* t) { return parse_polynomial(t, rb); };
    REQUIRE(db_mult_splitform(F("s^2"), H("z^3")) == 3);
    REQUIRE(db_mult_splitform(F("s^4"), H("z")) == 3);
    REQUIRE(db_mult_splitform(F("s^3 + s^4"), H("z^2")) == 4);
    REQUIRE_THROWS_AS(db_mult_splitform(Polynomial::zero(rf), H("z")), error);
}

TEST_CASE("additivity over a multi-point critical fiber") {
    // disjoint cones z y1^2 - y2^2 and z y2^2 - y1^2: one critical point in
    // each chart over z = 0, contributions adding up
    Ring r = R3();
    PairSetup ps = setup_of(r, {"x", "y"}, {"(x^2*z - y^2)*(y^2*z - x^2)"});
    CritData crit = crit_ideal(conormal_ideal(ps));
    REQUIRE(db_multiplicity_at_point(crit, origin(r)) == 2);

    // chart independence: swapping the generator order permutes the charts
    PairSetup ps2 = setup_of(r, {"y", "x"}, {"(x^2*z - y^2)*(y^2*z - x^2)"});
    CritData crit2 = crit_ideal(conormal_ideal(ps2));
    REQUIRE(db_multiplicity_at_point(crit2, origin(r)) == 2);
}

TEST_CASE("consistency triangle: colength, determinant order, splitting degree") {
    Ring r = R3();
    for (int q : {1, 2, 3}) {
        std::string f = "x^2*z^" + std::to_string(q) + " - y^2 - x^3";
        PairSetup ps = setup_of(r, {"x", "y"}, {});
        ps.IX = Ideal(r, {parse_polynomial(f, r)});
        CritData crit = crit_ideal(conormal_ideal(ps));
        long by_colength = db_multiplicity_at_point(crit, origin(r));
        long by_splitting = splitting_multiplicity(crit);
        DiscriminantReport rep = db_report(ps);
        REQUIRE(by_colength == q);
        REQUIRE(by_splitting == q);
        REQUIRE(rep.equation_order.has_value());
        REQUIRE(*rep.equation_order == q);
    }
}

TEST_CASE("report: empty discriminant for multiplicity sequence (1)") {
    Ring r = R3();
    DiscriminantReport rep = db_report(setup_of(r, {"x", "y"}, {"x + y^2"}));
    REQUIRE(rep.empty_db);
    REQUIRE(rep.total_degree == 0);
}

TEST_CASE("GL invariance of the full report") {
    Ring r = R3();
    // non-coordinate Z generators: the support point is named explicitly
    ReportOptions opt;
    opt.points = {origin(r)};
    DiscriminantReport r1 = db_report(setup_of(r, {"x", "y"}, {"x^2*z^2 - y^2 - x^3"}), opt);
    DiscriminantReport r2 = db_report(setup_of(r, {"x + y", "y"}, {"x^2*z^2 - y^2 - x^3"}), opt);
    REQUIRE(r1.points.size() == r2.points.size());
    REQUIRE(r1.points[0].multiplicity == r2.points[0].multiplicity);
    REQUIRE(r1.total_degree == r2.total_degree);
    // the support ideals agree as ideals of the base ring
    REQUIRE(ideal_equality(r1.support.full, r2.support.full));
}

TEST_CASE("pullback of the discriminant under z -> z^q") {
    Ring r = R3();
    PairSetup s2 = setup_of(r, {"x", "y"}, {"x^2*z - y^2 - x^3"});
    std::vector<Polynomial> images = {parse_polynomial("x", r), parse_polynomial("y", r),
                                      parse_polynomial("z^3", r)};
    PullbackCheck pc = pullback_check(r, images, s2, origin(r));
    REQUIRE(pc.ok);
    REQUIRE(pc.pulled_report.points[0].multiplicity == 3);

    std::vector<Polynomial> id = {parse_polynomial("x", r), parse_polynomial("y", r),
                                  parse_polynomial("z", r)};
    REQUIRE(pullback_check(r, id, s2, origin(r)).ok);
}

TEST_CASE("pullback hypothesis violations are reported") {
    Ring r = R3();
    PairSetup s2 = setup_of(r, {"x", "y"}, {"x^2 - y^2"});
    std::vector<Polynomial> bad = {parse_polynomial("x^2", r), parse_polynomial("y", r),
                                   parse_polynomial("z", r)};
    REQUIRE_THROWS_AS(pullback_check(r, bad, s2, origin(r)), hypothesis_error);
}

TEST_CASE("truncation invariance at the determination threshold") {
    Ring r = R3();
    PairSetup ps = setup_of(r, {"x", "y"}, {"x^2*z - y^2"});
    REQUIRE(truncation_invariance_check(ps).identical);
    REQUIRE(truncation_invariance_check(ps, {parse_polynomial("x^3*y^3", r)}).identical);
    REQUIRE_THROWS_AS(truncation_invariance_check(ps, {parse_polynomial("x*y", r)}),
                      hypothesis_error);

    // tangent-cone-only dependence: changing the absorbed tail changes nothing
    DiscriminantReport a = db_report(setup_of(r, {"x", "y"}, {"z*(x^2 + y^2) - x^3"}));
    DiscriminantReport b = db_report(setup_of(r, {"x", "y"}, {"z*(x^2 + y^2) - x^5 - y^7"}));
    REQUIRE(a.points[0].multiplicity == b.points[0].multiplicity);
    REQUIRE(a.total_degree == b.total_degree);
}

TEST_CASE("family degrees and flatness flags") {
    Ring rt = make_ring({"x", "y", "z", "t"});
    auto Q = [&](const char* s) { return parse_polynomial(s, rt); };
    {
        FamilyDegrees fd = family_db_degrees(rt, {Q("x"), Q("y")},
                                             {Q("x^2*(z^2 - t) - y^2 - x^3")}, 3,
                                             {Rational(0), Rational(1), Rational(4)});
        REQUIRE_FALSE(fd.flagged_nonflat);
        for (const auto& s : fd.samples) REQUIRE(s.degree == 2);
    }
    {
        FamilyDegrees fd = family_db_degrees(rt, {Q("x"), Q("y")},
                                             {Q("x^3 + y^3 + t*(x^2 + z*y^2)")}, 3,
                                             {Rational(0), Rational(1)});
        REQUIRE(fd.flagged_nonflat);
        REQUIRE(fd.samples[0].degree == 0);
        REQUIRE(fd.samples[1].degree == 1);
        REQUIRE(fd.samples[0].multseq != fd.samples[1].multseq);
    }
    {
        FamilyDegrees fd = family_db_degrees(rt, {Q("x"), Q("y")}, {Q("x^2*z - y^2 - x^3")}, 3,
                                             {Rational(0), Rational(2)});
        REQUIRE_FALSE(fd.flagged_nonflat);  // constant family
    }
}

TEST_CASE("higher-dimensional Z through a random certified curve") {
    // Z is the (z,w)-plane; f = x^2 z - y^2 degenerates along z = 0
    Ring r4 = make_ring({"x", "y", "z", "w"});
    auto Q = [&](const char* s) { return parse_polynomial(s, r4); };
    PairSetup ps{r4, Ideal(r4, {Q("x"), Q("y")}), Ideal(r4, {Q("x^2*z - y^2")}), {}};
    CritData crit = crit_ideal(conormal_ideal(ps));
    long m = db_multiplicity_at_point(crit, std::vector<Rational>(4, Rational(0)));
    REQUIRE(m == 1);
}
