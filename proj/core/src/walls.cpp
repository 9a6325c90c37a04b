#include "polystab/walls.hpp"

#include <algorithm>
#include <array>

namespace polystab {

const char* tagName(DTPTTag t) {
    switch (t) {
        case DTPTTag::DT: return "DT";
        case DTPTTag::PT: return "PT";
        case DTPTTag::Wall: return "WALL";
        case DTPTTag::PTDual: return "PT-DUAL";
        case DTPTTag::Invalid: return "INVALID";
    }
    return "?";
}

const char* tagName(DestabTag t) {
    switch (t) {
        case DestabTag::Destabilizes: return "destabilizes";
        case DestabTag::Neutral: return "neutral";
        case DestabTag::StabilizesSide: return "stabilizes-side";
    }
    return "?";
}

const char* caseName(SurfaceCase c) {
    switch (c) {
        case SurfaceCase::TorsionSheaf: return "a: torsion";
        case SurfaceCase::TorsionFreeAboveSlope: return "b: torsion-free-above-slope";
        case SurfaceCase::ShiftedPair: return "c: shifted-pair";
    }
    return "?";
}

NumClass toNumClass(const ThreefoldClass& c, const ModelPtr& model) {
    if (model->dimension() != 3 || model->basisSize(1) != 1 || model->basisSize(2) != 1 ||
        model->basisSize(3) != 1)
        throw DomainError("degree-only threefold model required");
    // \int w^3 scales the omega-degree coordinates back to the basis
    NumClass unitTop = NumClass::basisElement(model, 3, 0);
    GaussianRational w3 = integrate(unitTop);
    if (!w3.isReal() || signum(w3.re) <= 0) throw DomainError("top integral must be positive");
    Rational scale = w3.re;
    NumClass out(model);
    out.setCoord(0, 0, GaussianRational(c.ch0));
    out.setCoord(1, 0, GaussianRational(c.ch1w / scale));
    out.setCoord(2, 0, GaussianRational(c.ch2w / scale));
    out.setCoord(3, 0, GaussianRational(c.ch3 / scale));
    return out;
}

namespace {

bool inMinusH(const GaussianRational& z) { return inUpperHalfPlane(-z); }

}  // namespace

DTPTVerdict classifyDTPT(const StabilityVector& rho) {
    DTPTVerdict v;
    if (rho.rho.size() != 4) {
        v.invalidClause = "rho must have length 4";
        return v;
    }
    for (int d = 0; d < 4; ++d)
        if (rho.rho[d].isZero()) {
            v.invalidClause = "rho_" + std::to_string(d) + " is zero";
            return v;
        }
    for (int d = 0; d < 3; ++d)
        if (signum(crossIm(rho.rho[d], rho.rho[d + 1])) <= 0) {
            v.invalidClause = "rho_" + std::to_string(d) + "/rho_" + std::to_string(d + 1) +
                              " not in the open upper half plane";
            return v;
        }
    for (int d = 0; d < 2; ++d)
        if (!inUpperHalfPlane(rho.rho[d])) {
            v.invalidClause = "rho_" + std::to_string(d) + " outside H";
            return v;
        }
    for (int d = 2; d < 4; ++d)
        if (!inMinusH(rho.rho[d])) {
            v.invalidClause = "rho_" + std::to_string(d) + " outside -H";
            return v;
        }
    v.minusRho3 = -rho.rho[3];
    v.rho0 = rho.rho[0];
    Ordering against0 = cmpArg(v.minusRho3, v.rho0);
    if (against0 == Ordering::GT) {
        v.tag = DTPTTag::DT;
    } else if (against0 == Ordering::EQ) {
        v.tag = DTPTTag::Wall;
    } else {
        Ordering against1 = cmpArg(v.minusRho3, rho.rho[1]);
        v.tag = against1 == Ordering::GT ? DTPTTag::PT : DTPTTag::PTDual;
    }
    return v;
}

WallScanResult scanWallFamily(const std::array<GaussianRational, 3>& rho012,
                              const GaussianRational& c, const GaussianRational& v,
                              const Rational& lo, const Rational& hi, int steps) {
    if (steps < 1 || lo > hi) throw DomainError("scanWallFamily: empty range");
    WallScanResult out;
    auto verdictAt = [&](const Rational& t) {
        StabilityVector rho;
        rho.rho = {rho012[0], rho012[1], rho012[2], c + Rational(t) * v};
        return classifyDTPT(rho);
    };
    for (int j = 0; j <= steps; ++j) {
        Rational t = lo + (hi - lo) * Rational(j, steps);
        out.samples.push_back({t, verdictAt(t)});
    }

    // Wall candidates: alignment of -rho_3(t) with rho_0 or rho_1 (phase
    // equalities), and the exit of rho_3(t) from -H (validity boundary).
    // Each is the root of a linear form in t.
    std::vector<Rational> candidates;
    auto alignmentRoot = [&](const GaussianRational& w) {
        // Im((c + t v) conj(w)) = 0
        Rational a = crossIm(c, w);
        Rational bcoef = crossIm(v, w);
        if (bcoef == 0) return;  // never aligned or degenerately aligned for all t
        Rational t = -a / bcoef;
        if (t < lo || t > hi) return;
        candidates.push_back(t);
    };
    alignmentRoot(rho012[0]);
    alignmentRoot(rho012[1]);
    if (v.im != 0) {
        Rational t = -c.im / v.im;  // Im rho_3(t) = 0
        if (t >= lo && t <= hi) candidates.push_back(t);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // keep candidates where the verdict actually changes
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        Rational gap = hi - lo;
        if (i > 0) gap = std::min(gap, Rational(candidates[i] - candidates[i - 1]));
        if (i + 1 < candidates.size()) gap = std::min(gap, Rational(candidates[i + 1] - candidates[i]));
        Rational delta = gap / 4;
        if (delta == 0) continue;
        Rational left = std::max(lo, Rational(candidates[i] - delta));
        Rational right = std::min(hi, Rational(candidates[i] + delta));
        if (verdictAt(left).tag != verdictAt(right).tag) out.walls.push_back(candidates[i]);
    }
    return out;
}

DestabResult destabilizerCheck(const OmegaData& omega, const ThreefoldClass& total,
                               const ThreefoldClass& sub) {
    NumClass totalClass = toNumClass(total, omega.model);
    NumClass subClass = toNumClass(sub, omega.model);
    if (totalClass.isZero() || subClass.isZero())
        throw DomainError("destabilizerCheck: classes must be nonzero");
    auto phTotal = heartPhase(omega, totalClass);
    auto phSub = heartPhase(omega, subClass);
    if (std::holds_alternative<HeartPhaseError>(phTotal) ||
        std::holds_alternative<HeartPhaseError>(phSub))
        throw DomainError("destabilizerCheck: zero-charge or non-heart class");
    Ordering o = cmpPhase(std::get<PhaseGerm>(phSub), std::get<PhaseGerm>(phTotal));
    DestabTag tag = o == Ordering::GT
                        ? DestabTag::Destabilizes
                        : (o == Ordering::EQ ? DestabTag::Neutral : DestabTag::StabilizesSide);
    DestabResult result{tag, o, ""};
    // beta = 0 distinguished regime for rank -1 classes: the only semistable
    // object is the shifted structure sheaf, reported as an annotation only
    if (total.ch0 == -1 && total.ch2w == 0)
        result.annotation = "beta=0: only the shifted structure-sheaf class is semistable";
    return result;
}

namespace {

std::string ratStr(const Rational& r) { return formatRational(r); }

}  // namespace

SurfaceVerdict surfaceClassify(const SurfaceInput& input) {
    SurfaceVerdict v;
    auto fail = [&](std::string clause) { v.failedClauses.push_back(std::move(clause)); };

    if (!input.hMinus1 && !input.h0) {
        fail("empty-input");
        return v;
    }

    if (input.hMinus1) {
        const SurfaceClass& hm = *input.hMinus1;
        if (hm.w2 <= 0) fail("hminus1-ambient(w2<=0)");
        if (hm.rk <= 0) fail("hminus1-rank(rk<=0)");
        if (!input.hMinus1Decl.torsionFree) fail("hminus1-not-declared-torsion-free");
        if (!input.hMinus1Decl.muSemistable) fail("hminus1-not-declared-mu-semistable");
        if (hm.rk > 0) {
            Rational mu = hm.c1w / hm.rk;
            v.checks.push_back("mu(H^-1) = " + ratStr(mu) + " <= beta.omega = " + ratStr(hm.bw));
            if (mu > hm.bw) fail("hminus1-slope(mu>beta.omega)");
        }
        if (input.h0) {
            const SurfaceClass& h0 = *input.h0;
            v.checks.push_back("H^0 zero-dimensional: rk = " + ratStr(h0.rk) +
                               ", omega.c1 = " + ratStr(h0.c1w));
            if (h0.rk != 0 || h0.c1w != 0) fail("h0-not-zero-dimensional");
        }
        if (v.failedClauses.empty()) v.caseTag = SurfaceCase::ShiftedPair;
        return v;
    }

    const SurfaceClass& e = *input.h0;
    if (e.w2 <= 0) fail("ambient(w2<=0)");
    if (e.rk < 0) {
        fail("negative-rank");
        return v;
    }
    if (e.rk == 0) {
        if (!input.h0Decl.torsion) fail("not-declared-torsion");
        if (!input.h0Decl.muSemistable) fail("not-declared-mu-semistable");
        if (v.failedClauses.empty()) v.caseTag = SurfaceCase::TorsionSheaf;
        return v;
    }
    if (input.h0Decl.torsion) fail("torsion-with-positive-rank");
    if (!input.h0Decl.torsionFree) fail("not-declared-torsion-free");
    if (!input.h0Decl.muSemistable) fail("not-declared-mu-semistable");
    Rational mu = e.c1w / e.rk;
    v.checks.push_back("mu(E) = " + ratStr(mu) + " > beta.omega = " + ratStr(e.bw));
    if (!(mu > e.bw)) fail("mu-not-above-beta-omega");
    if (v.failedClauses.empty()) v.caseTag = SurfaceCase::TorsionFreeAboveSlope;
    return v;
}

BogomolovResult bogomolovBound(const SurfaceClass& b) {
    if (b.rk <= 0) throw DomainError("bogomolovBound: rank must be positive");
    if (b.w2 <= 0) throw DomainError("bogomolovBound: omega^2 must be positive");
    BogomolovResult r;
    r.bound = (b.c1sq - 2 * b.c1b * b.rk + b.b2 * b.rk * b.rk) / (2 * b.rk * b.rk);
    Rational c = b.ch2 - b.c1b + b.rk * b.b2 / 2;
    r.value = c / b.rk;
    r.satisfiesBound = r.value <= r.bound;
    Rational slopeGap = b.c1w / b.rk - b.bw;
    r.hodgeWeightedBound = slopeGap * slopeGap / (2 * b.w2);
    r.hodgeConsistent = r.bound <= r.hodgeWeightedBound;
    return r;
}

CPoly surfaceCharge(const SurfaceClass& c) {
    if (c.w2 <= 0) throw DomainError("surfaceCharge: omega^2 must be positive");
    std::vector<GaussianRational> coeffs(3);
    coeffs[2] = GaussianRational(c.rk * c.w2 / 2);
    coeffs[1] = GaussianRational{Rational(0), c.c1w - c.rk * c.bw};
    coeffs[0] = GaussianRational(c.ch2 - c.c1b + c.rk * c.b2 / 2);
    return CPoly(std::move(coeffs));
}

OrderBoundResult surfaceOrderBound(const SurfaceClass& e, const SurfaceClass& b) {
    if (e.w2 != b.w2 || e.bw != b.bw || e.b2 != b.b2)
        throw DomainError("surfaceOrderBound: ambient pairings differ");
    CPoly ze = surfaceCharge(e);
    CPoly zb = surfaceCharge(b);
    if (ze.isZero() || zb.isZero()) throw DomainError("surfaceOrderBound: zero charge");
    PhaseGerm ge(ze, 0), gb(zb, 0);
    return {stabilizationBound(ge, gb), cmpPhase(ge, gb)};
}

}  // namespace polystab
