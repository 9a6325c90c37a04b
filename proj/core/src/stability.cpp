#include "polystab/stability.hpp"

namespace polystab {

PerversityFunction PerversityFunction::dual() const {
    PerversityFunction q;
    q.p.reserve(p.size());
    for (std::size_t d = 0; d < p.size(); ++d) q.p.push_back(-static_cast<long>(d) - p[d]);
    return q;
}

bool PerversityFunction::satisfiesInvariants() const {
    for (std::size_t d = 0; d + 1 < p.size(); ++d)
        if (!(p[d] >= p[d + 1] && p[d + 1] >= p[d] - 1)) return false;
    return true;
}

const char* clauseName(OmegaClause c) {
    switch (c) {
        case OmegaClause::Shape: return "shape";
        case OmegaClause::RhoHalfplane: return "rho-halfplane";
        case OmegaClause::PerversityMonotone: return "perversity-monotone";
        case OmegaClause::Association: return "association";
        case OmegaClause::Ample: return "ample";
        case OmegaClause::Unipotent: return "unipotent";
    }
    return "?";
}

const OmegaData& OmegaValidation::get() const {
    if (!data) throw DomainError("OmegaValidation: data rejected");
    return *data;
}

OmegaValidation validateOmega(const ModelPtr& model, const NumClass& omega,
                              const StabilityVector& rho, const PerversityFunction& p,
                              const NumClass& U) {
    OmegaValidation v;
    int n = model->dimension();
    if (omega.model() != model || U.model() != model) {
        v.rejections.push_back({OmegaClause::Shape, -1, "class attached to a different model"});
        return v;
    }
    if (static_cast<int>(rho.rho.size()) != n + 1) {
        v.rejections.push_back({OmegaClause::Shape, -1, "rho needs n+1 entries"});
        return v;
    }
    if (static_cast<int>(p.p.size()) != n + 1) {
        v.rejections.push_back({OmegaClause::Shape, -1, "p needs n+1 entries"});
        return v;
    }

    for (int d = 0; d <= n; ++d)
        if (rho.rho[d].isZero())
            v.rejections.push_back({OmegaClause::RhoHalfplane, d, "rho entry is zero"});
    if (!v.rejections.empty()) return v;

    for (int d = 0; d < n; ++d)
        if (signum(crossIm(rho.rho[d], rho.rho[d + 1])) <= 0)
            v.rejections.push_back(
                {OmegaClause::RhoHalfplane, d, "rho_d/rho_{d+1} not in the open upper half plane"});

    for (int d = 0; d < n; ++d)
        if (!(p.p[d] >= p.p[d + 1] && p.p[d + 1] >= p.p[d] - 1))
            v.rejections.push_back({OmegaClause::PerversityMonotone, d,
                                    "requires p(d) >= p(d+1) >= p(d) - 1"});

    for (int d = 0; d <= n; ++d) {
        GaussianRational adjusted = (p.p[d] % 2 == 0) ? rho.rho[d] : -rho.rho[d];
        if (!inUpperHalfPlane(adjusted))
            v.rejections.push_back(
                {OmegaClause::Association, d, "(-1)^{p(d)} rho_d outside the semi-closed upper half plane"});
    }

    auto ample = validateAmple(omega);
    if (std::holds_alternative<AmpleFailure>(ample)) {
        const auto& f = std::get<AmpleFailure>(ample);
        v.rejections.push_back({OmegaClause::Ample, f.degree,
                                "nonpositive pairing with effective generator " +
                                    std::to_string(f.generatorIndex)});
    }

    if (U.coord(0, 0) != gaussianOne())
        v.rejections.push_back({OmegaClause::Unipotent, -1, "U must be 1 + (positive degrees)"});

    if (v.rejections.empty()) v.data = OmegaData{model, omega, rho, p, U, true};
    return v;
}

CPoly centralCharge(const OmegaData& omega, const NumClass& ch) {
    if (ch.model() != omega.model) throw DomainError("centralCharge: class on a different model");
    int n = omega.model->dimension();
    NumClass chU = cup(ch, omega.U);
    std::vector<GaussianRational> coeffs(n + 1);
    NumClass power = NumClass::unit(omega.model);
    for (int d = 0; d <= n; ++d) {
        coeffs[d] = omega.rho.rho[d] * integrate(cup(power, chU));
        if (d < n) power = cup(power, omega.omega);
    }
    return CPoly(std::move(coeffs));
}

std::variant<PhaseGerm, HeartPhaseError> heartPhase(const OmegaData& omega, const NumClass& ch) {
    CPoly z = centralCharge(omega, ch);
    if (z.isZero()) return HeartPhaseError::ZeroCharge;
    int d = z.degree();
    // leading coefficient must be a positive real multiple of (-1)^{p(d)} rho_d
    GaussianRational ratio = divide(z.leading(), omega.rho.rho[d]);
    if (omega.p.p[d] % 2 != 0) ratio = -ratio;
    if (!ratio.isReal() || signum(ratio.re) <= 0) return HeartPhaseError::NotHeartDirection;
    return PhaseGerm(z, 0);
}

CPoly simpsonCharge(const std::vector<GaussianRational>& rho, const std::vector<Rational>& hilbert) {
    if (rho.empty()) throw DomainError("rho-order: empty stability weights");
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (signum(rho[i].im) <= 0)
            throw DomainError("rho-order: rho_" + std::to_string(i) + " not in the open upper half plane");
    for (std::size_t i = 0; i + 1 < rho.size(); ++i)
        if (cmpArg(rho[i], rho[i + 1]) != Ordering::GT)
            throw DomainError("rho-order: arguments must strictly decrease at index " + std::to_string(i));
    if (hilbert.size() > rho.size()) throw DomainError("rho-order: more coefficients than weights");
    std::vector<GaussianRational> coeffs(hilbert.size());
    for (std::size_t i = 0; i < hilbert.size(); ++i) coeffs[i] = hilbert[i] * rho[i];
    return CPoly(std::move(coeffs));
}

PerversityFunction pTilt(const PerversityFunction& p, long k) {
    bool inRange = false;
    for (long v : p.p) inRange = inRange || (v == -k);
    if (!inRange) throw DomainError("k-not-in-range: k must equal -p(d) for some d");
    PerversityFunction q;
    q.p.reserve(p.p.size());
    for (long v : p.p) q.p.push_back(v >= -k ? v : v + 1);
    if (!q.satisfiesInvariants()) throw DomainError("pTilt produced a non-perversity");
    return q;
}

NumClass dualClass(const DualizingData& dd, const NumClass& ch) {
    return cup(parity(ch), dd.chOmegaX);
}

OmegaValidation dualOmega(const OmegaData& omega, const DualizingData& dd) {
    int n = omega.model->dimension();
    StabilityVector rhoDual;
    rhoDual.rho.reserve(n + 1);
    for (int d = 0; d <= n; ++d) {
        GaussianRational c = omega.rho.rho[d].conj();
        rhoDual.rho.push_back(((dd.D + d) % 2 == 0) ? c : -c);
    }
    PerversityFunction pDual = omega.p.dual();
    for (auto& v : pDual.p) v += dd.D - n;
    NumClass uDual = cup(invUnipotent(dd.chOmegaX), parity(omega.U.conjCoords()));
    if (dd.D % 2 != 0) uDual = -uDual;
    return validateOmega(omega.model, omega.omega, rhoDual, pDual, uDual);
}

std::vector<GaussianRational> largeVolumeRho(int n) {
    // rho_d = -(-i)^d / d!
    std::vector<GaussianRational> rho;
    rho.reserve(n + 1);
    GaussianRational minusIPow = gaussianOne();
    Rational factorial(1);
    for (int d = 0; d <= n; ++d) {
        if (d > 0) {
            minusIPow = minusIPow * GaussianRational{Rational(0), Rational(-1)};
            factorial *= d;
        }
        rho.push_back(-(Rational(1) / factorial) * minusIPow);
    }
    return rho;
}

PerversityFunction largeVolumePerversity(int n) {
    PerversityFunction p;
    p.p.reserve(n + 1);
    for (int d = 0; d <= n; ++d) p.p.push_back(-(d / 2));
    return p;
}

OmegaValidation largeVolumeOmega(const ModelPtr& model, const NumClass& beta,
                                 const AmpleClass& omega) {
    int n = model->dimension();
    if (beta.model() != model) throw DomainError("largeVolumeOmega: beta on a different model");
    for (int e = 0; e <= n; ++e)
        for (int i = 0; i < model->basisSize(e); ++i)
            if (e != 1 && !beta.coord(e, i).isZero())
                throw DomainError("largeVolumeOmega: beta must be a degree-1 class");
    if (!beta.isReal()) throw DomainError("largeVolumeOmega: beta must be real");
    NumClass u = cup(expNil(-beta), sqrtUnipotent(toddClass(model)));
    return validateOmega(model, omega.omega, StabilityVector{largeVolumeRho(n)},
                         largeVolumePerversity(n), u);
}

}  // namespace polystab
