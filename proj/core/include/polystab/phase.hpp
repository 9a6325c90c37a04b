#pragma once

#include <stdexcept>
#include <string>

#include "polystab/cpoly.hpp"

namespace polystab {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Ordering { LT, EQ, GT };

constexpr Ordering reverseOrdering(Ordering o) {
    return o == Ordering::LT ? Ordering::GT : (o == Ordering::GT ? Ordering::LT : Ordering::EQ);
}
constexpr int orderingSign(Ordering o) {
    return o == Ordering::LT ? -1 : (o == Ordering::GT ? 1 : 0);
}
const char* orderingName(Ordering o);
std::ostream& operator<<(std::ostream& os, Ordering o);

// Sector of the principal argument, in units of pi on (-1, 1]:
//   0: (-1,-1/2)   1: -1/2   2: (-1/2,0)   3: 0
//   4: (0,1/2)     5: 1/2    6: (1/2,1)    7: 1
// Odd sectors are the boundary half-axes; even ones the open quadrants.
// Sector indices are monotone in the argument, which is what every exact
// comparison below reduces to.
int argSector(const GaussianRational& z);

// Compares principal arguments of two nonzero values, exactly.
Ordering cmpArg(const GaussianRational& a, const GaussianRational& b);

// Membership in the semi-closed upper half plane (Im > 0, or Im = 0 and
// Re < 0), i.e. phase in (0, 1].
bool inUpperHalfPlane(const GaussianRational& z);

// A polynomial phase function: the continuous argument of poly(m)/pi for
// m >> 0, with the even shift fixed so that the value at infinity is
// PrincipalArg(lead)/pi + 2*branch.
struct PhaseGerm {
    CPoly poly;
    long branch = 0;

    PhaseGerm() = default;
    PhaseGerm(CPoly p, long k);
};

// Exact value PrincipalArg(direction)/pi + 2*branch; no floating point.
struct PhaseAtInfinity {
    GaussianRational direction;
    long branch = 0;
};

// Total order on germs by eventual comparison.  Branch decides first, then
// the principal arguments of the leading coefficients (sector plus the
// Im(a*conj(b)) tie-break), then the sign of the leading coefficient of
// P(m) = Im(poly_a(m) * conj(poly_b)(m)).  EQ means the germs are identical
// functions for m >> 0.
Ordering cmpPhase(const PhaseGerm& a, const PhaseGerm& b);

// phi -> phi + n; the polynomial flips sign when n is odd and the branch
// absorbs the rest, so shiftPhase(shiftPhase(a, n), -n) == a.
PhaseGerm shiftPhase(const PhaseGerm& a, long n);

PhaseAtInfinity phaseAtInfinity(const PhaseGerm& a);

Ordering cmpAtInfinity(const PhaseAtInfinity& a, const PhaseAtInfinity& b);

// P(m) = Im(a(m) * conj(b)(m)) as a real polynomial, lowest degree first.
std::vector<Rational> phaseCrossPoly(const CPoly& a, const CPoly& b);

// Effective "for m >> 0": for every rational m >= M both polynomials are
// nonzero at m and sign(phi_a(m) - phi_b(m)) equals cmpPhase(a, b).
// M = 1 + the largest Cauchy root bound over both polynomials and P(m);
// conservative on purpose.
Rational stabilizationBound(const PhaseGerm& a, const PhaseGerm& b);

// Exact Horner evaluation.
GaussianRational evalPoly(const CPoly& p, const Rational& m);

// Diagnostic only.
double phiAtInfinityDouble(const PhaseAtInfinity& v);

}  // namespace polystab
