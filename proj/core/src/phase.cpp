#include "polystab/phase.hpp"

#include <cmath>
#include <numbers>

namespace polystab {

const char* orderingName(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, Ordering o) { return os << orderingName(o); }

int argSector(const GaussianRational& z) {
    if (z.isZero()) throw DomainError("argSector: zero value has no argument");
    int si = signum(z.im);
    int sr = signum(z.re);
    if (si < 0) return sr < 0 ? 0 : (sr == 0 ? 1 : 2);
    if (si == 0) return sr > 0 ? 3 : 7;
    return sr > 0 ? 4 : (sr == 0 ? 5 : 6);
}

Ordering cmpArg(const GaussianRational& a, const GaussianRational& b) {
    int sa = argSector(a), sb = argSector(b);
    if (sa != sb) return sa < sb ? Ordering::LT : Ordering::GT;
    if (sa % 2 == 1) return Ordering::EQ;  // both on the same half-axis
    int s = signum(crossIm(a, b));
    return s == 0 ? Ordering::EQ : (s > 0 ? Ordering::GT : Ordering::LT);
}

bool inUpperHalfPlane(const GaussianRational& z) {
    int si = signum(z.im);
    return si > 0 || (si == 0 && signum(z.re) < 0);
}

PhaseGerm::PhaseGerm(CPoly p, long k) : poly(std::move(p)), branch(k) {
    if (poly.isZero()) throw DomainError("PhaseGerm: polynomial must be nonzero");
}

Ordering cmpPhase(const PhaseGerm& a, const PhaseGerm& b) {
    // A branch step dominates: the principal-argument gap lies strictly
    // inside (-2, 2) in units of pi.
    if (a.branch != b.branch) return a.branch < b.branch ? Ordering::LT : Ordering::GT;
    Ordering lead = cmpArg(a.poly.leading(), b.poly.leading());
    if (lead != Ordering::EQ) return lead;
    // Same value at infinity; the cross polynomial P(m) = Im(a(m) conj(b(m)))
    // carries the sign of sin(pi (phi_a - phi_b)) for large m.
    std::vector<Rational> p = phaseCrossPoly(a.poly, b.poly);
    if (p.empty()) return Ordering::EQ;
    return signum(p.back()) > 0 ? Ordering::GT : Ordering::LT;
}

PhaseGerm shiftPhase(const PhaseGerm& a, long n) {
    if (n % 2 == 0) return PhaseGerm(a.poly, a.branch + n / 2);
    // Odd shift: poly flips sign; PrincipalArg(-lead) = PrincipalArg(lead) -+ pi,
    // minus when the argument is positive.  The branch absorbs the difference.
    long s = argSector(a.poly.leading()) >= 4 ? -1 : 1;
    return PhaseGerm(-a.poly, a.branch + (n - s) / 2);
}

PhaseAtInfinity phaseAtInfinity(const PhaseGerm& a) { return {a.poly.leading(), a.branch}; }

Ordering cmpAtInfinity(const PhaseAtInfinity& a, const PhaseAtInfinity& b) {
    if (a.branch != b.branch) return a.branch < b.branch ? Ordering::LT : Ordering::GT;
    return cmpArg(a.direction, b.direction);
}

std::vector<Rational> phaseCrossPoly(const CPoly& a, const CPoly& b) {
    return imagPart(a * b.conjCoeffs());
}

namespace {

// 1-norm of a Gaussian rational bounds its modulus from above; the max of
// |re| and |im| bounds it from below.  Both keep the bound rational.
Rational upperAbs(const GaussianRational& z) { return absVal(z.re) + absVal(z.im); }
Rational lowerAbs(const GaussianRational& z) { return std::max(absVal(z.re), absVal(z.im)); }

Rational cauchyBoundComplex(const CPoly& p) {
    if (p.degree() <= 0) return Rational(0);
    Rational lead = lowerAbs(p.leading());
    Rational maxRatio(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = upperAbs(p.coeff(static_cast<std::size_t>(i))) / lead;
        if (r > maxRatio) maxRatio = r;
    }
    return 1 + maxRatio;
}

Rational cauchyBoundReal(const std::vector<Rational>& p) {
    if (p.size() <= 1) return Rational(0);
    Rational lead = absVal(p.back());
    Rational maxRatio(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational r = absVal(p[i]) / lead;
        if (r > maxRatio) maxRatio = r;
    }
    return 1 + maxRatio;
}

}  // namespace

Rational stabilizationBound(const PhaseGerm& a, const PhaseGerm& b) {
    Rational m = cauchyBoundComplex(a.poly);
    m = std::max(m, cauchyBoundComplex(b.poly));
    m = std::max(m, cauchyBoundReal(phaseCrossPoly(a.poly, b.poly)));
    return 1 + m;
}

GaussianRational evalPoly(const CPoly& p, const Rational& m) { return p.eval(m); }

double phiAtInfinityDouble(const PhaseAtInfinity& v) {
    std::complex<double> z = v.direction.toComplexDouble();
    return std::atan2(z.imag(), z.real()) / std::numbers::pi + 2.0 * static_cast<double>(v.branch);
}

}  // namespace polystab
