// Acceptance runner: executes every exit criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "polystab/enclosure.hpp"
#include "polystab/json_io.hpp"
#include "support/float_oracle.hpp"
#include "support/gen.hpp"

using namespace polystab;
using testgen::Rng;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- criterion 1
Outcome phaseOrderLaws() {
    auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    long violations = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        PhaseGerm a = rng.germ(), b = rng.germ(), c = rng.germ();
        Ordering ab = cmpPhase(a, b), ba = cmpPhase(b, a);
        if (ba != reverseOrdering(ab)) ++violations;                       // antisymmetry
        Ordering bc = cmpPhase(b, c), ac = cmpPhase(a, c);
        if (ab == Ordering::LT && bc == Ordering::LT && ac != Ordering::LT) ++violations;
        if (ab == Ordering::GT && bc == Ordering::GT && ac != Ordering::GT) ++violations;
        if (cmpPhase(shiftPhase(a, 1), shiftPhase(b, 1)) != ab) ++violations;
        if (cmpPhase(shiftPhase(a, 1), a) != Ordering::GT) ++violations;
        PhaseGerm scaled(rng.positiveRational() * a.poly, a.branch);
        if (cmpPhase(scaled, b) != ab) ++violations;
        if (cmpPhase(a, a) != Ordering::EQ) ++violations;                  // totality/reflexivity
    }
    double dt = seconds(start);
    std::ostringstream os;
    os << trials << " triples, " << violations << " violations, " << dt << "s";
    return {violations == 0 && dt < 30.0, os.str()};
}

// ---------------------------------------------------------------- criterion 2
Outcome symbolicVsNumeric() {
    Rng rng(1002);
    long violations = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        PhaseGerm a = rng.germ(), b = rng.germ();
        Rational m = stabilizationBound(a, b);
        int expected = orderingSign(cmpPhase(a, b));
        if (testgen::floatComparePhases(a, b, m) != expected) ++violations;
        if (testgen::floatComparePhases(a, b, 2 * m) != expected) ++violations;
        if (testgen::floatComparePhases(a, b, 10 * m) != expected) ++violations;
    }
    std::ostringstream os;
    os << trials << " pairs at m in {M, 2M, 10M}, " << violations << " violations";
    return {violations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 3
Outcome ringAxioms() {
    Rng rng(1003);
    std::vector<ModelPtr> presets = {GradedRingModel::projectiveSpace(1),
                                     GradedRingModel::projectiveSpace(2),
                                     GradedRingModel::projectiveSpace(3)};
    long violations = 0;
    auto randomClass = [&](const ModelPtr& m) {
        NumClass c(m);
        for (int d = 0; d <= m->dimension(); ++d)
            for (int i = 0; i < m->basisSize(d); ++i) c.setCoord(d, i, rng.gaussian());
        return c;
    };
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const ModelPtr& m = presets[t % presets.size()];
        NumClass a = randomClass(m), b = randomClass(m), c = randomClass(m);
        if (!(cup(a, b) == cup(b, a))) ++violations;
        if (!(cup(cup(a, b), c) == cup(a, cup(b, c)))) ++violations;
        if (!(parity(cup(a, b)) == cup(parity(a), parity(b)))) ++violations;
        NumClass u = a;
        u.setCoord(0, 0, gaussianOne());
        NumClass root = sqrtUnipotent(u);
        if (!(cup(root, root) == u)) ++violations;
        NumClass v = b;
        if (v.coord(0, 0).isZero()) v.setCoord(0, 0, gaussianOne());
        if (!(cup(invUnipotent(v), v) == NumClass::unit(m))) ++violations;
    }
    std::ostringstream os;
    os << trials << " random classes over P1/P2/P3, " << violations << " violations";
    return {violations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 4
Outcome dualityIdentity() {
    Rng rng(1004);
    long violations = 0;

    struct Setup {
        OmegaData omega;
        DualizingData dd;
    };
    std::vector<Setup> setups;
    {
        ModelPtr p3 = GradedRingModel::projectiveSpace(3);
        NumClass h = NumClass::basisElement(p3, 1, 0);
        StabilityVector rho{{gr(0, 2), gr(1, 1), gr(1, -1), gr(0, -2)}};
        PerversityFunction p{{0, 0, -1, -1}};
        OmegaData o = validateOmega(p3, h, rho, p, NumClass::unit(p3)).get();
        DualizingData dd{3, -expNil(NumClass::basisElement(p3, 1, 0, gr(-4)))};
        setups.push_back({o, dd});
    }
    {
        ModelPtr cy = GradedRingModel::degreeOnly(3);
        NumClass w = NumClass::basisElement(cy, 1, 0);
        StabilityVector rho{{gr(0, 2), gr(1, 1), gr(1, -1), gr(0, -2)}};
        PerversityFunction p{{0, 0, -1, -1}};
        OmegaData o = validateOmega(cy, w, rho, p, NumClass::unit(cy)).get();
        DualizingData dd{3, -NumClass::unit(cy)};
        setups.push_back({o, dd});
    }

    for (const auto& s : setups) {
        OmegaValidation dual = dualOmega(s.omega, s.dd);
        if (!dual.ok()) return {false, "dual data failed validation"};
        const OmegaData& od = dual.get();
        OmegaValidation twice = dualOmega(od, s.dd);
        if (!twice.ok() || !(twice.get().rho.rho == s.omega.rho.rho) ||
            !(twice.get().p.p == s.omega.p.p) || !(twice.get().U == s.omega.U) ||
            !(twice.get().omega == s.omega.omega))
            return {false, "dualOmega is not an involution"};
        for (int t = 0; t < 500; ++t) {
            NumClass ch(s.omega.model);
            for (int d = 0; d <= 3; ++d)
                for (int i = 0; i < s.omega.model->basisSize(d); ++i)
                    ch.setCoord(d, i, GaussianRational(rng.rational()));
            CPoly lhs = centralCharge(od, dualClass(s.dd, ch));
            CPoly rhs = -centralCharge(s.omega, ch).conjCoeffs();  // (-1)^3 conj
            if (!(lhs == rhs)) ++violations;
        }
    }
    std::ostringstream os;
    os << "1000 random classes over P3 and a CY-type degree-only model, " << violations
       << " violations";
    return {violations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 5
Outcome largeVolumePhases() {
    for (int n = 1; n <= 3; ++n) {
        ModelPtr m = GradedRingModel::projectiveSpace(n);
        NumClass h = NumClass::basisElement(m, 1, 0);
        OmegaData lv = largeVolumeOmega(m, NumClass(m), AmpleClass{h}).get();
        // point class: phi(infinity) = 1
        CPoly zp = centralCharge(lv, NumClass::basisElement(m, n, 0));
        auto vp = argOverPiExactValue(phaseAtInfinity(PhaseGerm(zp, 0)));
        if (!vp || *vp != Rational(1)) return {false, "point phase != 1 on P" + std::to_string(n)};
        // rank-r locally free class: phi(infinity) = 1 - n/2
        for (int r = 1; r <= 5; ++r) {
            CPoly ze = centralCharge(lv, Rational(r) * NumClass::unit(m));
            auto ve = argOverPiExactValue(phaseAtInfinity(PhaseGerm(ze, 0)));
            Rational expected = Rational(1) - Rational(n, 2);
            if (!ve || *ve != expected)
                return {false, "rank-" + std::to_string(r) + " phase != 1 - n/2 on P" +
                                   std::to_string(n)};
        }
    }
    return {true, "phi(point) = 1 and phi(rank-r) = 1 - n/2 exact for n = 1, 2, 3"};
}

// ---------------------------------------------------------------- criterion 6
Outcome dtptClassification() {
    DTPTVerdict v1 = classifyDTPT(StabilityVector{{gr(0, 1), gr(2, 1), gr(1, -1), gr(1, -2)}});
    DTPTVerdict v2 = classifyDTPT(StabilityVector{{gr(0, 1), gr(2, 1), gr(1, -1), gr(-1, -2)}});
    DTPTVerdict v3 = classifyDTPT(StabilityVector{{gr(-1), gr(0, 1), gr(1), gr(1, -1)}});
    if (v1.tag != DTPTTag::DT || v2.tag != DTPTTag::PT || v3.tag != DTPTTag::PT)
        return {false, "worked verdicts mismatch"};

    std::array<GaussianRational, 3> rho012 = {gr(-1), gr(0, 1), gr(1)};
    WallScanResult scan =
        scanWallFamily(rho012, gr(0, -1), gr(1), Rational(-2), Rational(2), 40);
    for (const auto& s : scan.samples) {
        if (s.t > 0 && s.verdict.tag != DTPTTag::PT) return {false, "family not PT for a > 0"};
        if (s.t < 0 && s.verdict.tag != DTPTTag::PTDual)
            return {false, "family not PT-DUAL for a < 0"};
    }
    if (scan.walls.size() != 1 || scan.walls[0] != Rational(0))
        return {false, "wall not located exactly at a = 0"};

    ModelPtr m = GradedRingModel::degreeOnly(3);
    NumClass w = NumClass::basisElement(m, 1, 0);
    ThreefoldClass ideal{Rational(-1), Rational(0), Rational(1), Rational(1)};
    ThreefoldClass sub{Rational(0), Rational(0), Rational(1), Rational(1)};
    for (int num = 1; num <= 8; ++num) {
        Rational a(num, 2);
        for (int sign : {1, -1}) {
            StabilityVector rho{{gr(-1), gr(0, 1), gr(1), {sign * a, Rational(-1)}}};
            OmegaData o = validateOmega(m, w, rho, PerversityFunction{{0, 0, -1, -1}},
                                        NumClass::unit(m))
                              .get();
            bool destab = destabilizerCheck(o, ideal, sub).tag == DestabTag::Destabilizes;
            if (destab != (sign < 0)) return {false, "destabilizer did not flip at the wall"};
        }
    }
    return {true, "verdicts DT/PT/PT, wall at a = 0 exact, destabilizer flips across it"};
}

// ------------------------------------------------------------- criteria 7 + 8
struct CorpusResult {
    long reps = 0;
    long filtrations = 0;
    long hnViolations = 0;
    long seesawViolations = 0;
    long sesCount = 0;
    double elapsed = 0;
};

CorpusResult sweepCorpus() {
    auto start = std::chrono::steady_clock::now();
    CorpusResult out;

    auto sweep = [&](const QuiverModel& model) {
        std::size_t nv = model.vertices.size();
        std::vector<int> dims(nv, 0);
        for (;;) {
            // all matrix assignments for these dimensions
            std::vector<std::pair<int, int>> shapes;
            long long cells = 0;
            for (const auto& a : model.arrows) {
                shapes.emplace_back(dims[a.to], dims[a.from]);
                cells += static_cast<long long>(dims[a.to]) * dims[a.from];
            }
            std::vector<int> bits(static_cast<std::size_t>(cells), 0);
            for (;;) {
                std::vector<FMat> mats;
                std::size_t k = 0;
                for (const auto& [rows, cols] : shapes) {
                    FMat mat(rows, std::vector<int>(cols));
                    for (int i = 0; i < rows; ++i)
                        for (int j = 0; j < cols; ++j) mat[i][j] = bits[k++];
                    mats.push_back(std::move(mat));
                }
                QuiverRep rep = makeRep(model, dims, std::move(mats));
                ++out.reps;
                if (!rep.isZero()) {
                    HNFiltration f = hnFilter(model, rep);
                    ++out.filtrations;
                    bool ok = bruteForceValidate(model, rep, f);
                    for (std::size_t i = 0; i + 1 < f.steps.size(); ++i)
                        ok = ok && cmpPhase(f.steps[i].phase, f.steps[i + 1].phase) == Ordering::GT;
                    std::vector<int> total(nv, 0);
                    for (const auto& s : f.steps)
                        for (std::size_t v = 0; v < nv; ++v) total[v] += s.dims[v];
                    ok = ok && total == rep.dims;
                    if (!ok) ++out.hnViolations;

                    PhaseGerm phiE = phaseOf(model, rep);
                    for (const auto& sub : enumerateSubreps(model, rep)) {
                        int td = sub.totalDim();
                        if (td == 0 || td == rep.totalDim()) continue;
                        std::vector<int> bdims(nv);
                        for (std::size_t v = 0; v < nv; ++v) bdims[v] = rep.dims[v] - sub.dims()[v];
                        ++out.sesCount;
                        if (cmpPhase(phaseOf(model, sub.dims()), phiE) !=
                            cmpPhase(phiE, phaseOf(model, bdims)))
                            ++out.seesawViolations;
                    }
                }
                std::size_t pos = 0;
                while (pos < bits.size() && bits[pos] == model.fieldSize - 1) bits[pos++] = 0;
                if (pos == bits.size()) break;
                ++bits[pos];
            }
            std::size_t v = 0;
            while (v < nv && dims[v] == 2) dims[v++] = 0;
            if (v == nv) break;
            ++dims[v];
        }
    };

    QuiverModel a2;
    a2.vertices = {"1", "2"};
    a2.arrows = {{0, 1}};
    a2.charges = {CPoly({gr(1), gr(0, 1)}), CPoly({gr(-1), gr(0, 1)})};
    a2.validate();
    sweep(a2);

    QuiverModel a3;
    a3.vertices = {"1", "2", "3"};
    a3.arrows = {{0, 1}, {1, 2}};
    a3.charges = {CPoly({gr(1), gr(0, 1)}), CPoly({gr(0), gr(0, 1)}), CPoly({gr(-1), gr(0, 1)})};
    a3.validate();
    sweep(a3);

    // a second pass with charges of mixed degree
    QuiverModel a3deg;
    a3deg.vertices = {"1", "2", "3"};
    a3deg.arrows = {{0, 1}, {1, 2}};
    a3deg.charges = {CPoly({gr(1), gr(0), gr(0, 1)}), CPoly({gr(0), gr(0, 1)}),
                     CPoly({gr(-2), gr(0, 3)})};
    a3deg.validate();
    sweep(a3deg);

    out.elapsed = seconds(start);
    return out;
}

Outcome hnOracle(const CorpusResult& corpus) {
    std::ostringstream os;
    os << corpus.filtrations << " filtrations over " << corpus.reps << " reps, "
       << corpus.hnViolations << " violations, " << corpus.elapsed << "s";
    return {corpus.hnViolations == 0 && corpus.elapsed < 300.0, os.str()};
}

Outcome seesaw(const CorpusResult& corpus) {
    std::ostringstream os;
    os << corpus.sesCount << " short exact sequences, " << corpus.seesawViolations
       << " violations";
    return {corpus.seesawViolations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 9
Outcome surfaceSuite() {
    Rng rng(1009);
    long violations = 0;
    for (int t = 0; t < 1000; ++t) {
        SurfaceClass b;
        b.rk = rng.positiveRational(6, 2);
        b.c1w = rng.rational();
        b.c1b = rng.rational();
        b.c1sq = rng.rational();
        b.w2 = rng.positiveRational();
        b.bw = rng.rational();
        b.b2 = rng.rational();
        b.ch2 = b.c1sq / (2 * b.rk) - absVal(rng.rational());  // Bogomolov-satisfying
        if (!bogomolovBound(b).satisfiesBound) ++violations;
    }

    SurfaceClass ambient{Rational(0), Rational(0), Rational(0), Rational(0),
                         Rational(0), Rational(2), Rational(1), Rational(0)};
    SurfaceInput torsion;
    torsion.h0 = ambient;
    torsion.h0Decl = {true, true, false};
    SurfaceInput above;
    SurfaceClass e = ambient;
    e.rk = 2;
    e.c1w = 3;
    above.h0 = e;
    above.h0Decl = {true, false, true};
    SurfaceInput pair;
    SurfaceClass hm = ambient;
    hm.rk = 1;
    hm.bw = 0;
    SurfaceClass h0 = ambient;
    h0.bw = 0;
    pair.hMinus1 = hm;
    pair.hMinus1Decl = {true, false, true};
    pair.h0 = h0;
    auto va = surfaceClassify(torsion), vb = surfaceClassify(above), vc = surfaceClassify(pair);
    bool cases = va.caseTag == SurfaceCase::TorsionSheaf &&
                 vb.caseTag == SurfaceCase::TorsionFreeAboveSlope &&
                 vc.caseTag == SurfaceCase::ShiftedPair;
    if (!cases) return {false, "canonical inputs not mapped to cases a/b/c"};

    long orderViolations = 0;
    for (int t = 0; t < 500; ++t) {
        SurfaceClass x{rng.positiveRational(4, 1), rng.rational(), rng.rational(),
                       rng.rational(),             rng.rational(), rng.positiveRational(4, 1),
                       rng.rational(),             rng.rational()};
        SurfaceClass y = x;
        y.rk = rng.positiveRational(4, 1);
        y.c1w = rng.rational();
        y.ch2 = rng.rational();
        y.c1b = rng.rational();
        if (surfaceCharge(x).isZero() || surfaceCharge(y).isZero()) continue;
        OrderBoundResult r = surfaceOrderBound(x, y);
        PhaseGerm gx(surfaceCharge(x), 0), gy(surfaceCharge(y), 0);
        int expected = orderingSign(r.order);
        if (testgen::floatComparePhases(gx, gy, r.M) != expected) ++orderViolations;
        if (testgen::floatComparePhases(gx, gy, 10 * r.M) != expected) ++orderViolations;
    }
    std::ostringstream os;
    os << "1000 Bogomolov inputs (" << violations << " violations), cases a/b/c, "
       << orderViolations << " order-bound mismatches";
    return {violations == 0 && orderViolations == 0, os.str()};
}

// --------------------------------------------------------------- criterion 10
Outcome stabspaceData() {
    Rng rng(1010);
    auto randomPresentation = [&](int objects) {
        FiniteStabilityPresentation p;
        for (int i = 0; i < objects; ++i) {
            PhaseGerm a = rng.germ(3), b = rng.germ(3);
            if (cmpPhase(a, b) == Ordering::GT) std::swap(a, b);
            p.objects.push_back(
                TestObject{"o" + std::to_string(i), rng.poly(3), b, a, rng.intIn(0, 1) == 1});
        }
        return p;
    };
    long violations = 0;
    for (int t = 0; t < 1000; ++t) {
        FiniteStabilityPresentation p = randomPresentation(3), q = randomPresentation(3),
                                    r = randomPresentation(3);
        if (dMetric(p, p).value.signum() != 0) ++violations;
        if (dMetric(p, q).value.compare(dMetric(q, p).value) != Ordering::EQ) ++violations;
        PhaseReal viaQ = dMetric(p, q).value + dMetric(q, r).value;
        if (dMetric(p, r).value.compare(viaQ) == Ordering::GT) ++violations;
    }

    long trichotomyViolations = 0;
    FiniteStabilityPresentation sigma = randomPresentation(1);
    sigma.objects[0].semistable = true;
    for (int t = 0; t < 300; ++t) {
        CPoly u = rng.poly(3);
        CentralChargeMap m;
        m.charges["o0"] = u;
        NormValue n = semiNorm(m, sigma);
        const CPoly& z = sigma.objects[0].Z;
        double r3 = std::abs(u.evalDouble(1e3)) / std::abs(z.evalDouble(1e3));
        double r6 = std::abs(u.evalDouble(1e6)) / std::abs(z.evalDouble(1e6));
        if (n.infinite) {
            if (!(r6 > 100 * r3)) ++trichotomyViolations;
        } else if (n.squared == 0) {
            if (!(r6 < r3 + 1e-6)) ++trichotomyViolations;
        } else {
            double want = std::sqrt(toDouble(n.squared));
            if (std::abs(r6 - want) > 1e-2 * want) ++trichotomyViolations;
        }
    }

    // ballTest truth table on the worked examples
    FiniteStabilityPresentation base;
    {
        PhaseGerm g(CPoly({gr(-1), gr(0, 1)}), 0);
        base.objects.push_back(TestObject{"a", CPoly({gr(-1), gr(0, 1)}), g, g, true});
        PhaseGerm h(CPoly({gr(0), gr(0, 2)}), 0);
        base.objects.push_back(TestObject{"b", CPoly({gr(0), gr(0, 2)}), h, h, true});
    }
    FiniteStabilityPresentation doubled = base;
    for (auto& obj : doubled.objects) obj.Z = Rational(2) * obj.Z;
    FiniteStabilityPresentation shifted = base;
    for (auto& obj : shifted.objects) {
        obj.Z = -obj.Z;
        obj.phiPlus = shiftPhase(obj.phiPlus, 1);
        obj.phiMinus = shiftPhase(obj.phiMinus, 1);
    }
    bool table = ballTest(base, base, Rational(1, 8)) &&
                 !ballTest(base, doubled, Rational(1, 8)) &&
                 !ballTest(base, shifted, Rational(1, 8));

    std::ostringstream os;
    os << "1000 metric triples (" << violations << " violations), trichotomy ("
       << trichotomyViolations << " mismatches), ball-test table " << (table ? "ok" : "wrong");
    return {violations == 0 && trichotomyViolations == 0 && table, os.str()};
}

}  // namespace

int main() {
    CorpusResult corpus = sweepCorpus();

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"phase-order laws", phaseOrderLaws},
        {"symbolic-vs-numeric agreement", symbolicVsNumeric},
        {"ring/calculus axioms", ringAxioms},
        {"duality identity", dualityIdentity},
        {"large-volume phases", largeVolumePhases},
        {"PT/DT classification and wall", dtptClassification},
        {"HN oracle equivalence", [&] { return hnOracle(corpus); }},
        {"see-saw", [&] { return seesaw(corpus); }},
        {"Bogomolov/surface suite", surfaceSuite},
        {"stability-space data", stabspaceData},
    };

    bool allPass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o = criteria[i].second();
        allPass = allPass && o.pass;
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " - "
                  << criteria[i].first << " (" << o.detail << ")" << std::endl;
    }
    return allPass ? 0 : 1;
}
