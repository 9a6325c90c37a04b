#pragma once

#include <map>

#include "polystab/enclosure.hpp"

namespace polystab {

// One test object of a finite presentation: its central charge and the
// extremal HN phase germs, plus whether it is semistable.
struct TestObject {
    std::string label;
    CPoly Z;
    PhaseGerm phiPlus;
    PhaseGerm phiMinus;
    bool semistable = false;
};

// Finite restriction of a slicing: the semi-metric and semi-norm below are
// computed over exactly these objects.
struct FiniteStabilityPresentation {
    std::vector<TestObject> objects;

    // phiMinus <= phiPlus for every object
    void validate() const;
    const TestObject& byLabel(const std::string& label) const;
};

struct CentralChargeMap {
    std::map<std::string, CPoly> charges;
};

// sup over objects of |phi^{+/-} differences| of the values at infinity.
// Exact when every difference has rational argument/pi; otherwise the exact
// value is carried symbolically and reported through a certified enclosure.
struct MetricValue {
    PhaseReal value;                           // the exact supremum (>= 0)
    bool exact = true;                         // value.isExactRational()
    Interval enclosure;                        // width <= requested
    std::vector<std::string> collapsedLabels;  // distinct germs with equal value at infinity
};

MetricValue dMetric(const FiniteStabilityPresentation& p, const FiniteStabilityPresentation& q,
                    const Rational& enclosureWidth = defaultEnclosureWidth());

// sup over semistable objects of limsup |U(E)(m)|/|Z(E)(m)|: 0 when
// deg U < deg Z, the leading-coefficient modulus ratio at equal degree,
// infinity when deg U > deg Z.  Finite values are reported as the exact
// squared ratio (the norm is its square root).
struct NormValue {
    bool infinite = false;
    Rational squared;  // norm = sqrt(squared)
};

NormValue semiNorm(const CentralChargeMap& u, const FiniteStabilityPresentation& sigma);

// ||W - Z||_sigma < sin(pi epsilon) and d_S(P, Q) < epsilon, for
// epsilon in (0, 1/4).  W is tau's charge assignment on the shared labels.
// The sin comparison is certified; an equality that survives refinement to
// the hard floor raises UndecidedAtPrecision.
bool ballTest(const FiniteStabilityPresentation& sigma, const FiniteStabilityPresentation& tau,
              const Rational& epsilon);

}  // namespace polystab
