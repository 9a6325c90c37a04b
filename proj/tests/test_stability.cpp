#include <doctest.h>

#include "polystab/enclosure.hpp"
#include "polystab/stability.hpp"
#include "support/gen.hpp"

using namespace polystab;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

NumClass randomRealClass(testgen::Rng& rng, const ModelPtr& model) {
    NumClass c(model);
    for (int d = 0; d <= model->dimension(); ++d)
        for (int i = 0; i < model->basisSize(d); ++i)
            c.setCoord(d, i, GaussianRational(rng.rational()));
    return c;
}

OmegaData interiorOmegaP3() {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    NumClass h = NumClass::basisElement(p3, 1, 0);
    StabilityVector rho{{gr(0, 2), gr(1, 1), gr(1, -1), gr(0, -2)}};
    PerversityFunction p{{0, 0, -1, -1}};
    return validateOmega(p3, h, rho, p, NumClass::unit(p3)).get();
}

DualizingData dualizingP3() {
    // omega_X = O(-4)[3]: ch = -e^{-4H}, shift D = 3
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    NumClass minus4H = NumClass::basisElement(p3, 1, 0, gr(-4));
    DualizingData dd;
    dd.D = 3;
    dd.chOmegaX = -expNil(minus4H);
    return dd;
}

CPoly conjCoeffs(const CPoly& p) { return p.conjCoeffs(); }

}  // namespace

TEST_CASE("validateOmega worked examples") {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    NumClass h = NumClass::basisElement(p3, 1, 0);
    StabilityVector rho{{gr(-1), gr(0, 1), gr(1), gr(1, -1)}};
    PerversityFunction p{{0, 0, -1, -1}};
    auto v = validateOmega(p3, h, rho, p, NumClass::unit(p3));
    CHECK(v.ok());

    ModelPtr p1 = GradedRingModel::projectiveSpace(1);
    NumClass h1 = NumClass::basisElement(p1, 1, 0);
    auto bad = validateOmega(p1, h1, StabilityVector{{gr(1), gr(0, 1)}}, PerversityFunction{{0, 0}},
                             NumClass::unit(p1));
    REQUIRE(!bad.ok());
    CHECK(bad.rejections[0].clause == OmegaClause::RhoHalfplane);
    CHECK(bad.rejections[0].index == 0);

    auto lv = largeVolumeOmega(p3, NumClass(p3), AmpleClass{h});
    CHECK(lv.ok());
}

TEST_CASE("validateOmega rejection clauses") {
    ModelPtr p2 = GradedRingModel::projectiveSpace(2);
    NumClass h = NumClass::basisElement(p2, 1, 0);
    StabilityVector rho{{gr(-1), gr(0, 1), gr(1)}};
    PerversityFunction goodP{{0, 0, -1}};

    auto badPerv = validateOmega(p2, h, rho, PerversityFunction{{0, 2, -1}}, NumClass::unit(p2));
    REQUIRE(!badPerv.ok());
    CHECK(badPerv.rejections[0].clause == OmegaClause::PerversityMonotone);

    auto badAssoc = validateOmega(p2, h, rho, PerversityFunction{{0, 0, 0}}, NumClass::unit(p2));
    REQUIRE(!badAssoc.ok());
    CHECK(badAssoc.rejections[0].clause == OmegaClause::Association);
    CHECK(badAssoc.rejections[0].index == 2);

    auto badAmple = validateOmega(p2, -h, rho, goodP, NumClass::unit(p2));
    REQUIRE(!badAmple.ok());
    CHECK(badAmple.rejections[0].clause == OmegaClause::Ample);

    NumClass u2 = NumClass::unit(p2) + NumClass::unit(p2);
    auto badUni = validateOmega(p2, h, rho, goodP, u2);
    REQUIRE(!badUni.ok());
    CHECK(badUni.rejections[0].clause == OmegaClause::Unipotent);
}

TEST_CASE("centralCharge worked examples") {
    ModelPtr p1 = GradedRingModel::projectiveSpace(1);
    NumClass h1 = NumClass::basisElement(p1, 1, 0);
    OmegaData lv = largeVolumeOmega(p1, NumClass(p1), AmpleClass{h1}).get();
    CPoly zPoint = centralCharge(lv, NumClass::basisElement(p1, 1, 0));
    CHECK(zPoint == CPoly::constant(gr(-1)));

    CHECK(centralCharge(lv, NumClass(p1)).isZero());

    // Simpson data on P^2: U = td, class ch(O(1)); coefficients must be
    // rho_d d! a_d for the Hilbert polynomial chi(O(1)(m)) = (m+3)(m+2)/2
    ModelPtr p2 = GradedRingModel::projectiveSpace(2);
    NumClass h = NumClass::basisElement(p2, 1, 0);
    StabilityVector rho{{gr(-1, 2), gr(0, 1), gr(1, 1)}};
    PerversityFunction p0{{0, 0, 0}};
    OmegaData simpson = validateOmega(p2, h, rho, p0, toddClass(p2)).get();
    NumClass chO1 = expNil(h);
    CPoly z = centralCharge(simpson, chO1);
    // independent oracle: (m+3)(m+2)/2 expanded
    std::vector<Rational> hilbert = {Rational(6, 2), Rational(5, 2), Rational(1, 2)};
    Rational factorial(1);
    for (int d = 0; d <= 2; ++d) {
        if (d > 0) factorial *= d;
        CHECK(z.coeff(d) == rho.rho[d] * (factorial * hilbert[d]));
    }
}

TEST_CASE("centralCharge is additive") {
    OmegaData o = interiorOmegaP3();
    testgen::Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        NumClass a = randomRealClass(rng, o.model);
        NumClass b = randomRealClass(rng, o.model);
        CHECK(centralCharge(o, a + b) == centralCharge(o, a) + centralCharge(o, b));
    }
}

TEST_CASE("heartPhase worked examples") {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    NumClass h = NumClass::basisElement(p3, 1, 0);
    OmegaData lv = largeVolumeOmega(p3, NumClass(p3), AmpleClass{h}).get();

    // rank-2 bundle class shifted into the heart: phi(inf) = 1/2 = 1 - 3/2 + 1
    NumClass shifted = -(Rational(2) * NumClass::unit(p3));
    auto ph = heartPhase(lv, shifted);
    REQUIRE(std::holds_alternative<PhaseGerm>(ph));
    auto v = argOverPiExactValue(phaseAtInfinity(std::get<PhaseGerm>(ph)));
    REQUIRE(v.has_value());
    CHECK(*v == Rational(1, 2));

    NumClass pt = NumClass::basisElement(p3, 3, 0);
    auto php = heartPhase(lv, pt);
    REQUIRE(std::holds_alternative<PhaseGerm>(php));
    auto vp = argOverPiExactValue(phaseAtInfinity(std::get<PhaseGerm>(php)));
    REQUIRE(vp.has_value());
    CHECK(*vp == Rational(1));

    auto zero = heartPhase(lv, NumClass(p3));
    REQUIRE(std::holds_alternative<HeartPhaseError>(zero));
    CHECK(std::get<HeartPhaseError>(zero) == HeartPhaseError::ZeroCharge);

    // unshifted positive-rank class points outside the heart window
    auto wrong = heartPhase(lv, Rational(2) * NumClass::unit(p3));
    REQUIRE(std::holds_alternative<HeartPhaseError>(wrong));
    CHECK(std::get<HeartPhaseError>(wrong) == HeartPhaseError::NotHeartDirection);
}

TEST_CASE("heart positivity on randomized sign-adjusted classes") {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    NumClass h = NumClass::basisElement(p3, 1, 0);
    OmegaData lv = largeVolumeOmega(p3, NumClass(p3), AmpleClass{h}).get();
    testgen::Rng rng(77);
    int tested = 0;
    while (tested < 100) {
        NumClass ch = randomRealClass(rng, lv.model);
        CPoly z = centralCharge(lv, ch);
        if (z.isZero()) continue;
        int d = z.degree();
        // adjust the class so the leading coefficient is a positive multiple
        // of (-1)^{p(d)} rho_d
        GaussianRational ratio = divide(z.leading(), lv.rho.rho[d]);
        if (lv.p.p[d] % 2 != 0) ratio = -ratio;
        if (!ratio.isReal()) continue;
        if (signum(ratio.re) < 0) ch = -ch;
        auto ph = heartPhase(lv, ch);
        REQUIRE(std::holds_alternative<PhaseGerm>(ph));
        GaussianRational expected = (lv.p.p[d] % 2 == 0) ? lv.rho.rho[d] : -lv.rho.rho[d];
        CHECK(cmpAtInfinity(phaseAtInfinity(std::get<PhaseGerm>(ph)),
                            PhaseAtInfinity{expected, 0}) == Ordering::EQ);
        ++tested;
    }
}

TEST_CASE("simpsonCharge worked examples") {
    std::vector<GaussianRational> rho = {gr(-1, 2), gr(0, 1), gr(1, 1)};
    CHECK(simpsonCharge(rho, {Rational(1), Rational(0), Rational(0)}) ==
          CPoly::constant(gr(-1, 2)));
    // chi(O_{P^1}(m)) = m + 1
    CPoly z = simpsonCharge(rho, {Rational(1), Rational(1)});
    CHECK(z.coeff(0) == rho[0]);
    CHECK(z.coeff(1) == rho[1]);
    CHECK(z.degree() == 1);
    CHECK(simpsonCharge(rho, {Rational(0), Rational(0)}).isZero());

    CHECK_THROWS_AS(simpsonCharge({gr(1, 1), gr(-1, 2)}, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(simpsonCharge({gr(1), gr(0, 1)}, {Rational(1)}), DomainError);
}

TEST_CASE("simpson phases satisfy the see-saw on concatenations") {
    std::vector<GaussianRational> rho = {gr(-2, 3), gr(-1, 2), gr(0, 1), gr(1, 1)};
    testgen::Rng rng(41);
    auto hilbertLike = [&](int deg) {
        std::vector<Rational> a(deg + 1);
        for (int i = 0; i < deg; ++i) a[i] = rng.rational();
        a[deg] = rng.positiveRational();
        return a;
    };
    for (int t = 0; t < 300; ++t) {
        std::vector<Rational> a = hilbertLike(rng.intIn(0, 3));
        std::vector<Rational> b = hilbertLike(rng.intIn(0, 3));
        std::vector<Rational> sum(std::max(a.size(), b.size()), Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i) sum[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
        PhaseGerm pa(simpsonCharge(rho, a), 0);
        PhaseGerm pb(simpsonCharge(rho, b), 0);
        PhaseGerm ps(simpsonCharge(rho, sum), 0);
        CHECK(cmpPhase(pa, ps) == cmpPhase(ps, pb));
    }
}

TEST_CASE("pTilt worked examples") {
    PerversityFunction p3{{0, 0, -1, -1}};
    CHECK(pTilt(p3, 1).p == std::vector<long>{0, 0, -1, -1});
    PerversityFunction p5{{0, 0, -1, -1, -2, -2}};
    CHECK(pTilt(p5, 1).p == std::vector<long>{0, 0, -1, -1, -1, -1});
    PerversityFunction p2{{0, -1, -1}};
    CHECK(pTilt(p2, 0).p == std::vector<long>{0, 0, 0});
    CHECK_THROWS_AS(pTilt(p3, 5), DomainError);
}

TEST_CASE("pTilt preserves the perversity invariants") {
    testgen::Rng rng(55);
    for (int t = 0; t < 200; ++t) {
        int n = rng.intIn(1, 6);
        PerversityFunction p;
        long v = rng.intIn(-2, 2);
        for (int d = 0; d <= n; ++d) {
            p.p.push_back(v);
            v -= rng.intIn(0, 1);
        }
        REQUIRE(p.satisfiesInvariants());
        long k = -p.p[static_cast<std::size_t>(rng.intIn(0, n))];
        CHECK(pTilt(p, k).satisfiesInvariants());
    }
}

TEST_CASE("dualClass worked examples") {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    DualizingData dd = dualizingP3();
    NumClass pt = NumClass::basisElement(p3, 3, 0);
    CHECK(dualClass(dd, pt) == pt);
    CHECK(dualClass(dd, NumClass(p3)).isZero());
    // ch(omega_X) . P(ch(omega_X)) = 1 here, so the dual is an involution
    CHECK(cup(dd.chOmegaX, parity(dd.chOmegaX)) == NumClass::unit(p3));
    testgen::Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        NumClass ch = randomRealClass(rng, p3);
        CHECK(dualClass(dd, dualClass(dd, ch)) == ch);
    }
}

TEST_CASE("dualOmega on an interior stability vector") {
    OmegaData o = interiorOmegaP3();
    DualizingData dd = dualizingP3();
    auto dual = dualOmega(o, dd);
    REQUIRE(dual.ok());
    const OmegaData& od = dual.get();
    // rho*_d = (-1)^{3+d} conj(rho_d)
    CHECK(od.rho.rho[0] == gr(0, 2));
    CHECK(od.rho.rho[1] == gr(1, -1));
    CHECK(od.rho.rho[2] == gr(-1, -1));
    CHECK(od.rho.rho[3] == gr(0, 2));
    // p* = pbar + D - n = pbar
    CHECK(od.p.p == std::vector<long>{0, -1, -1, -2});
    // U* = (-1)^3 ch(omega_X)^{-1} P(conj 1) = e^{4H}
    CHECK(od.U == expNil(NumClass::basisElement(o.model, 1, 0, gr(4))));

    auto twice = dualOmega(od, dd);
    REQUIRE(twice.ok());
    CHECK(twice.get().rho.rho == o.rho.rho);
    CHECK(twice.get().p.p == o.p.p);
    CHECK(twice.get().U == o.U);
    CHECK(twice.get().omega == o.omega);
}

TEST_CASE("duality identity coefficientwise") {
    // Z_{Omega*}(dual ch) = (-1)^n conj(Z_Omega(ch)) for real classes
    OmegaData o = interiorOmegaP3();
    DualizingData dd = dualizingP3();
    OmegaData od = dualOmega(o, dd).get();
    testgen::Rng rng(71);
    for (int t = 0; t < 100; ++t) {
        NumClass ch = randomRealClass(rng, o.model);
        CPoly lhs = centralCharge(od, dualClass(dd, ch));
        CPoly rhs = -conjCoeffs(centralCharge(o, ch));  // (-1)^3 = -1
        CHECK(lhs == rhs);
    }
}

TEST_CASE("large-volume data on a CY threefold is self-dual at charge level") {
    // With the dualizing complex O_X[2] of the wall-crossing family, the
    // dual stability data keeps rho and U; only the perversity moves to its
    // tilt partner.  With boundary weights like rho_0 = -1 the dual
    // perversity is not associated to rho* inside the semi-closed half
    // plane, so validation reports exactly the association clause.
    ModelPtr cy = GradedRingModel::degreeOnly(3);
    NumClass w = NumClass::basisElement(cy, 1, 0);
    OmegaData lv = largeVolumeOmega(cy, NumClass(cy), AmpleClass{w}).get();
    DualizingData dd{2, NumClass::unit(cy)};

    std::vector<GaussianRational> rhoStar;
    for (int d = 0; d <= 3; ++d) {
        GaussianRational c = lv.rho.rho[d].conj();
        rhoStar.push_back(d % 2 == 0 ? c : -c);
    }
    CHECK(rhoStar == lv.rho.rho);  // self-dual weights

    auto dual = dualOmega(lv, dd);
    CHECK(!dual.ok());
    for (const auto& r : dual.rejections) CHECK(r.clause == OmegaClause::Association);

    // the duality identity holds for the charge data regardless
    PerversityFunction pStar = lv.p.dual();
    for (auto& x : pStar.p) x += dd.D - 3;
    OmegaData manual{cy, lv.omega, StabilityVector{rhoStar}, pStar, lv.U};
    testgen::Rng rng(81);
    for (int t = 0; t < 50; ++t) {
        NumClass ch = randomRealClass(rng, cy);
        CHECK(centralCharge(manual, dualClass(dd, ch)) == -conjCoeffs(centralCharge(lv, ch)));
    }
}

TEST_CASE("largeVolumeOmega worked examples") {
    // leading coefficient of Z(O_X) is rho_n \int omega^n rk
    ModelPtr p2 = GradedRingModel::projectiveSpace(2);
    NumClass h2 = NumClass::basisElement(p2, 1, 0);
    OmegaData lv2 = largeVolumeOmega(p2, NumClass(p2), AmpleClass{h2}).get();
    CPoly zO = centralCharge(lv2, NumClass::unit(p2));
    CHECK(zO.degree() == 2);
    CHECK(zO.leading() == lv2.rho.rho[2]);

    // P^1, beta = 0, E = O_x: Z = -1
    ModelPtr p1 = GradedRingModel::projectiveSpace(1);
    NumClass h1 = NumClass::basisElement(p1, 1, 0);
    OmegaData lv1 = largeVolumeOmega(p1, NumClass(p1), AmpleClass{h1}).get();
    CHECK(centralCharge(lv1, NumClass::basisElement(p1, 1, 0)) == CPoly::constant(gr(-1)));

    // validation passes for n = 1..5
    for (int n = 1; n <= 5; ++n) {
        ModelPtr m = GradedRingModel::degreeOnly(n);
        NumClass w = NumClass::basisElement(m, 1, 0);
        CHECK(largeVolumeOmega(m, NumClass(m), AmpleClass{w}).ok());
    }
    // missing td configuration is an error
    ModelPtr bare = std::make_shared<GradedRingModel>(
        1, std::vector<std::vector<std::string>>{{"1"}, {"x"}},
        std::vector<GradedRingModel::BasisProduct>{{"1", "1", {{"1", Rational(1)}}},
                                                   {"1", "x", {{"x", Rational(1)}}},
                                                   {"x", "x", {}}},
        std::vector<std::pair<std::string, Rational>>{{"x", Rational(1)}},
        std::vector<std::vector<std::vector<Rational>>>{{{Rational(1)}}, {{Rational(1)}}});
    NumClass wx = NumClass::basisElement(bare, 1, 0);
    CHECK_THROWS_AS(largeVolumeOmega(bare, NumClass(bare), AmpleClass{wx}), DomainError);
}
