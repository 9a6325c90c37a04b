#include <doctest.h>

#include "polystab/json_io.hpp"
#include "support/gen.hpp"

using namespace polystab;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

}  // namespace

TEST_CASE("rational serialization is canonical and bit-exact") {
    CHECK(formatRational(Rational(3, 6)) == "1/2");
    CHECK(formatRational(Rational(-4, 2)) == "-2/1");
    CHECK(formatRational(Rational(0)) == "0/1");
    auto r = parseRational("6/-4");
    CHECK(!r.has_value());  // signs belong to the numerator
    auto ok = parseRational("-3/4");
    REQUIRE(ok.has_value());
    CHECK(*ok == Rational(-3, 4));
    auto bare = parseRational("17");
    REQUIRE(bare.has_value());
    CHECK(*bare == Rational(17));
    CHECK(!parseRational("1/0").has_value());
    CHECK(!parseRational("a/b").has_value());

    testgen::Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        Rational x(rng.intIn(-100000, 100000), rng.intIn(1, 9999));
        auto back = parseRational(formatRational(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
}

TEST_CASE("value round trips are bit-exact") {
    testgen::Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        GaussianRational z = rng.gaussian();
        CHECK(gaussianFromJson(toJson(z)) == z);
        CPoly p = rng.poly();
        CHECK(cpolyFromJson(toJson(p)) == p);
        PhaseGerm g = rng.germ();
        PhaseGerm back = phaseGermFromJson(toJson(g));
        CHECK(back.poly == g.poly);
        CHECK(back.branch == g.branch);
    }
}

TEST_CASE("class and model round trips") {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    testgen::Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        NumClass c(p3);
        for (int d = 0; d <= 3; ++d) c.setCoord(d, 0, rng.gaussian());
        CHECK(numClassFromJson(toJson(c), p3) == c);
    }
    // model JSON reconstructs an equivalent ring
    Json mj = toJson(*p3);
    ModelPtr back = modelFromJson(mj);
    CHECK(back->dimension() == 3);
    CHECK(back->bases() == p3->bases());
    NumClass h = NumClass::basisElement(back, 1, 0);
    NumClass hh = cup(h, h);
    CHECK(integrate(cup(hh, h)) == gaussianOne());
    CHECK(toddClass(back).coord(2, 0) == GaussianRational(Rational(11, 6)));
}

TEST_CASE("loadModel presets") {
    CHECK(loadModel("P2")->dimension() == 2);
    CHECK(loadModel("degree-only:3")->dimension() == 3);
    ModelPtr scaled = loadModel("degree-only:2:5/2");
    NumClass w = NumClass::basisElement(scaled, 1, 0);
    CHECK(integrate(cup(w, w)) == GaussianRational(Rational(5, 2)));
    CHECK_THROWS_AS(loadModel("/nonexistent/path.json"), ParseError);
}

TEST_CASE("omega JSON round trip and validation") {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    NumClass h = NumClass::basisElement(p3, 1, 0);
    OmegaData lv = largeVolumeOmega(p3, NumClass(p3), AmpleClass{h}).get();
    Json j = toJson(lv);
    auto v = omegaFromJson(j, p3);
    REQUIRE(v.ok());
    CHECK(v.get().rho.rho == lv.rho.rho);
    CHECK(v.get().p.p == lv.p.p);
    CHECK(v.get().U == lv.U);
    CHECK(v.get().omega == lv.omega);
}

TEST_CASE("quiver and rep JSON round trip") {
    Json qj = {
        {"vertices", {"1", "2"}},
        {"arrows", {{{"from", "1"}, {"to", "2"}}}},
        {"field", 2},
        {"charges",
         {{"1", Json::array({toJson(gr(1)), toJson(gr(0, 1))})},
          {"2", Json::array({toJson(gr(-1)), toJson(gr(0, 1))})}}},
    };
    QuiverModel m = quiverFromJson(qj);
    CHECK(m.vertices.size() == 2);
    CHECK(m.arrows.size() == 1);
    QuiverRep r = repFromJson({{"dims", {{"1", 1}, {"2", 1}}},
                               {"matrices", {{"1->2", {{1}}}}}},
                              m);
    CHECK(r.dims == std::vector<int>{1, 1});
    QuiverRep back = repFromJson(repToJson(m, r), m);
    CHECK(back.dims == r.dims);
    CHECK(back.mats == r.mats);

    QuiverModel reparsed = quiverFromJson(toJson(m));
    CHECK(reparsed.charges == m.charges);
}

TEST_CASE("presentation and charge map round trips") {
    FiniteStabilityPresentation p;
    PhaseGerm g(CPoly({gr(0), gr(0, 1)}), 0);
    p.objects.push_back(TestObject{"x", CPoly({gr(0), gr(0, 1)}), g, g, true});
    Json j = toJson(p);
    FiniteStabilityPresentation back = presentationFromJson(j);
    REQUIRE(back.objects.size() == 1);
    CHECK(back.objects[0].Z == p.objects[0].Z);
    CHECK(back.objects[0].semistable);

    CentralChargeMap m;
    m.charges["x"] = CPoly({gr(1), gr(2, -1)});
    CentralChargeMap mback = chargeMapFromJson(toJson(m));
    CHECK(mback.charges == m.charges);
}

TEST_CASE("surface input round trip") {
    SurfaceInput in;
    in.h0 = SurfaceClass{Rational(2), Rational(3), Rational(0), Rational(1),
                         Rational(0), Rational(2), Rational(1), Rational(0)};
    in.h0Decl = {true, false, true};
    SurfaceInput back = surfaceInputFromJson(toJson(in));
    REQUIRE(back.h0.has_value());
    CHECK(back.h0->rk == Rational(2));
    CHECK(back.h0Decl.muSemistable);
    CHECK(back.h0Decl.torsionFree);
    CHECK(!back.hMinus1.has_value());
}

TEST_CASE("malformed input is rejected with ParseError") {
    CHECK_THROWS_AS(rationalFromJson(Json(12)), ParseError);
    CHECK_THROWS_AS(gaussianFromJson(Json{{"re", "1/2"}}), ParseError);
    CHECK_THROWS_AS(phaseGermFromJson(Json{{"poly", Json::array()}, {"branch", 0}}), ParseError);
    ModelPtr p2 = GradedRingModel::projectiveSpace(2);
    CHECK_THROWS_AS(numClassFromJson(Json{{"7", Json::array()}}, p2), ParseError);
    CHECK_THROWS_AS(quiverFromJson(Json{{"vertices", {"1"}}}), ParseError);
}

TEST_CASE("large-volume fixture carries the genuine square root of td") {
    Json j = loadJsonFile(std::string(POLYSTAB_TEST_DATA) + "/omega_lv_p3.json");
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    auto v = omegaFromJson(j, p3);
    REQUIRE(v.ok());
    CHECK(v.get().U == sqrtUnipotent(toddClass(p3)));
    OmegaData lv = largeVolumeOmega(p3, NumClass(p3),
                                    AmpleClass{NumClass::basisElement(p3, 1, 0)})
                       .get();
    CHECK(v.get().rho.rho == lv.rho.rho);
    CHECK(v.get().p.p == lv.p.p);
    CHECK(v.get().U == lv.U);
}
