#include "polystab/stabspace.hpp"

#include <algorithm>

namespace polystab {

void FiniteStabilityPresentation::validate() const {
    for (const auto& obj : objects) {
        if (cmpPhase(obj.phiMinus, obj.phiPlus) == Ordering::GT)
            throw DomainError("presentation: phiMinus above phiPlus at " + obj.label);
    }
}

const TestObject& FiniteStabilityPresentation::byLabel(const std::string& label) const {
    for (const auto& obj : objects)
        if (obj.label == label) return obj;
    throw DomainError("presentation: no object labeled " + label);
}

namespace {

void requireSameLabels(const FiniteStabilityPresentation& p, const FiniteStabilityPresentation& q) {
    if (p.objects.size() != q.objects.size()) throw DomainError("presentations: label sets differ");
    for (const auto& obj : p.objects) q.byLabel(obj.label);
}

PhaseReal absDiffAtInfinity(const PhaseGerm& a, const PhaseGerm& b) {
    PhaseReal va = PhaseReal::fromAtInfinity(phaseAtInfinity(a));
    PhaseReal vb = PhaseReal::fromAtInfinity(phaseAtInfinity(b));
    return (va - vb).absolute();
}

}  // namespace

MetricValue dMetric(const FiniteStabilityPresentation& p, const FiniteStabilityPresentation& q,
                    const Rational& enclosureWidth) {
    requireSameLabels(p, q);
    MetricValue out;
    out.value = PhaseReal(Rational(0));
    for (const auto& obj : p.objects) {
        const TestObject& other = q.byLabel(obj.label);
        PhaseReal dPlus = absDiffAtInfinity(obj.phiPlus, other.phiPlus);
        PhaseReal dMinus = absDiffAtInfinity(obj.phiMinus, other.phiMinus);
        if (dPlus.compare(out.value) == Ordering::GT) out.value = dPlus;
        if (dMinus.compare(out.value) == Ordering::GT) out.value = dMinus;
        // the projection to values at infinity collapses distinct germs
        bool plusCollapsed = dPlus.signum() == 0 && cmpPhase(obj.phiPlus, other.phiPlus) != Ordering::EQ;
        bool minusCollapsed =
            dMinus.signum() == 0 && cmpPhase(obj.phiMinus, other.phiMinus) != Ordering::EQ;
        if (plusCollapsed || minusCollapsed) out.collapsedLabels.push_back(obj.label);
    }
    out.exact = out.value.isExactRational();
    out.enclosure = out.value.enclosure(enclosureWidth);
    return out;
}

NormValue semiNorm(const CentralChargeMap& u, const FiniteStabilityPresentation& sigma) {
    NormValue out;
    out.squared = 0;
    for (const auto& obj : sigma.objects) {
        if (!obj.semistable) continue;
        auto it = u.charges.find(obj.label);
        if (it == u.charges.end()) throw DomainError("semiNorm: missing charge for " + obj.label);
        if (obj.Z.isZero()) throw DomainError("semiNorm: zero charge on semistable object " + obj.label);
        const CPoly& numer = it->second;
        if (numer.isZero()) continue;
        if (numer.degree() > obj.Z.degree()) {
            out.infinite = true;
            return out;
        }
        if (numer.degree() < obj.Z.degree()) continue;  // limsup 0
        Rational ratio = numer.leading().normSq() / obj.Z.leading().normSq();
        if (ratio > out.squared) out.squared = ratio;
    }
    return out;
}

namespace {

// squaredNorm < sin^2(pi epsilon), certified.  sin(pi/6) = 1/2 is the only
// rational value reachable for epsilon in (0, 1/4); everything else is
// settled by enclosure refinement.
bool lessThanSinPi(const Rational& squared, const Rational& epsilon) {
    if (squared == 0) return true;
    if (epsilon == Rational(1, 6)) return squared < Rational(1, 4);
    Rational width(1, 1 << 20);
    for (int round = 0; round < 12; ++round) {
        Interval s = sinPiEnclosure(epsilon, width);
        Rational lo2 = s.lo * s.lo;
        Rational hi2 = s.hi * s.hi;
        if (squared < lo2) return true;
        if (squared >= hi2) return false;
        width /= Rational(1 << 10);
    }
    throw UndecidedAtPrecision("ballTest: ||W - Z|| vs sin(pi epsilon) undecided at precision floor");
}

}  // namespace

bool ballTest(const FiniteStabilityPresentation& sigma, const FiniteStabilityPresentation& tau,
              const Rational& epsilon) {
    if (!(epsilon > 0 && epsilon < Rational(1, 4)))
        throw DomainError("ballTest: epsilon must lie in (0, 1/4)");
    requireSameLabels(sigma, tau);

    CentralChargeMap diff;
    for (const auto& obj : sigma.objects) diff.charges[obj.label] = tau.byLabel(obj.label).Z - obj.Z;
    NormValue n = semiNorm(diff, sigma);
    if (n.infinite) return false;
    if (!lessThanSinPi(n.squared, epsilon)) return false;

    MetricValue d = dMetric(sigma, tau);
    return d.value.compare(epsilon) == Ordering::LT;
}

}  // namespace polystab
