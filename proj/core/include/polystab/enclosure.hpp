#pragma once

#include <optional>

#include "polystab/phase.hpp"

namespace polystab {

struct UndecidedAtPrecision : DomainError {
    using DomainError::DomainError;
};

// Closed interval with rational endpoints, lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    static Interval point(Rational x) { return {x, x}; }
};

inline Rational defaultEnclosureWidth() { return Rational(1, 1000000000); }

// Certified bracket of pi from the Machin formula, exact rational endpoints.
Interval piEnclosure(const Rational& width);

// atan(t) for any rational t; alternating-series brackets after the usual
// reductions to |u| <= 1/2.
Interval atanEnclosure(const Rational& t, const Rational& width);

// sin(pi x) for rational x in [0, 1/2].
Interval sinPiEnclosure(const Rational& x, const Rational& width);

// PrincipalArg(z)/pi when it is rational, i.e. z on an axis or a diagonal
// (the only Gaussian-rational directions with rational argument/pi).
std::optional<Rational> argOverPiExact(const GaussianRational& z);

// PrincipalArg(z)/pi for nonzero z, exact when possible.
Interval argOverPiEnclosure(const GaussianRational& z, const Rational& width);

// Exact rational value of a phase at infinity, when the direction is on an
// axis or a diagonal.
std::optional<Rational> argOverPiExactValue(const PhaseAtInfinity& v);
Interval phaseAtInfinityEnclosure(const PhaseAtInfinity& v, const Rational& width);

// The exact real number rat + PrincipalArg(dir)/pi.  Canonical form folds
// rational arguments into rat, so dir (when present) has irrational
// argument/pi; every comparison below is then exact, via winding-tracked
// integer powers of dir.
class PhaseReal {
  public:
    PhaseReal() = default;
    explicit PhaseReal(Rational r) : rat_(std::move(r)) {}
    PhaseReal(Rational r, const GaussianRational& direction);

    static PhaseReal fromAtInfinity(const PhaseAtInfinity& v);

    bool isExactRational() const { return !dir_.has_value(); }
    const Rational& rationalPart() const { return rat_; }
    const std::optional<GaussianRational>& direction() const { return dir_; }

    int signum() const;
    PhaseReal operator-() const;
    friend PhaseReal operator+(const PhaseReal& a, const PhaseReal& b);
    friend PhaseReal operator-(const PhaseReal& a, const PhaseReal& b);
    PhaseReal absolute() const;

    Ordering compare(const PhaseReal& other) const;
    Ordering compare(const Rational& other) const;

    Interval enclosure(const Rational& width) const;
    double toDouble() const;

  private:
    Rational rat_;
    std::optional<GaussianRational> dir_;
};

// z^q together with the winding count W such that
// q * PrincipalArg(z) = PrincipalArg(z^q) + 2 pi W, all exact.  The result
// direction is renormalized by positive rational scaling.
struct PoweredDirection {
    GaussianRational value;
    long winding;
};
PoweredDirection powWithWinding(const GaussianRational& z, unsigned long q);

}  // namespace polystab
