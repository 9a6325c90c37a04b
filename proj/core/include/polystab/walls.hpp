#pragma once

#include <array>

#include "polystab/stability.hpp"

namespace polystab {

// omega-degree coordinates of a class on a degree-only threefold model:
// ch0, \int omega^2 ch_1, \int omega ch_2, \int ch_3.
struct ThreefoldClass {
    Rational ch0;
    Rational ch1w;
    Rational ch2w;
    Rational ch3;
};

NumClass toNumClass(const ThreefoldClass& c, const ModelPtr& model);

enum class DTPTTag { DT, PT, Wall, PTDual, Invalid };
const char* tagName(DTPTTag t);

// Compared phases are those of -rho_3 and rho_0 (both in the semi-closed
// upper half plane), exact.
struct DTPTVerdict {
    DTPTTag tag = DTPTTag::Invalid;
    GaussianRational minusRho3;
    GaussianRational rho0;
    std::string invalidClause;  // set when tag == Invalid
};

// DT when phi(-rho_3) > phi(rho_0), PT when phi(rho_0) > phi(-rho_3) >
// phi(rho_1), Wall at equality, PT-DUAL when phi(-rho_3) <= phi(rho_1).
// Requires rho_0, rho_1 in H and rho_2, rho_3 in -H with consecutive ratios
// in the open upper half plane.
DTPTVerdict classifyDTPT(const StabilityVector& rho);

struct WallScanPoint {
    Rational t;
    DTPTVerdict verdict;
};
struct WallScanResult {
    std::vector<WallScanPoint> samples;
    std::vector<Rational> walls;  // exact parameters where the verdict changes
};

// Verdicts along rho_3(t) = c + t v for t in [lo, hi]; wall parameters are
// the exact roots of the relevant Im((c + t v) conj(w)) linear forms,
// filtered so verdicts on either side differ.
WallScanResult scanWallFamily(const std::array<GaussianRational, 3>& rho012,
                              const GaussianRational& c, const GaussianRational& v,
                              const Rational& lo, const Rational& hi, int steps);

enum class DestabTag { Destabilizes, Neutral, StabilizesSide };
const char* tagName(DestabTag t);

struct DestabResult {
    DestabTag tag;
    Ordering phaseOrder;    // cmpPhase(heartPhase(sub), heartPhase(total))
    std::string annotation;  // set for the distinguished beta = 0 regime
};

// Exact comparison of heart phases; "destabilizes" means the subobject's
// germ is strictly greater.  Throws DomainError on zero charge.
DestabResult destabilizerCheck(const OmegaData& omega, const ThreefoldClass& total,
                               const ThreefoldClass& sub);

enum class SurfaceCase { TorsionSheaf, TorsionFreeAboveSlope, ShiftedPair };
const char* caseName(SurfaceCase c);

struct SurfaceVerdict {
    std::optional<SurfaceCase> caseTag;
    std::vector<std::string> failedClauses;  // nonempty exactly when no case applies
    std::vector<std::string> checks;         // evaluated inequalities, for reporting
};

// Caller-declared sheaf properties; mu_omega-semistability is input, not
// computed.
struct SheafDeclarations {
    bool muSemistable = false;
    bool torsion = false;
    bool torsionFree = false;
};

struct SurfaceInput {
    std::optional<SurfaceClass> hMinus1;
    std::optional<SurfaceClass> h0;
    SheafDeclarations hMinus1Decl;
    SheafDeclarations h0Decl;
};

SurfaceVerdict surfaceClassify(const SurfaceInput& input);

// Upper bound (1/2)(ch_1/rk - beta)^2 for c(B)/rk, with
// c(B) = ch_2 - beta.ch_1 + rk beta^2/2, all exact.  The Hodge-index-style
// bound through the omega-pairing is reported alongside, not assumed.
struct BogomolovResult {
    Rational bound;
    Rational value;
    bool satisfiesBound;
    Rational hodgeWeightedBound;  // (1/2)(c1w/rk - bw)^2 / w2
    bool hodgeConsistent;         // bound <= hodgeWeightedBound
};
BogomolovResult bogomolovBound(const SurfaceClass& b);

// Z(E)(m) = rk w2 m^2/2 + i (c1w - rk bw) m + c(E).
CPoly surfaceCharge(const SurfaceClass& c);

// Stabilization bound and exact phase order for two surface charges built
// from the large-volume form; both ambient pairings must agree.
struct OrderBoundResult {
    Rational M;
    Ordering order;
};
OrderBoundResult surfaceOrderBound(const SurfaceClass& e, const SurfaceClass& b);

}  // namespace polystab
