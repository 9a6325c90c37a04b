#pragma once

#include "polystab/ring_model.hpp"

namespace polystab {

// rho_0..rho_n, nonzero, with rho_d / rho_{d+1} in the open upper half
// plane; tested exactly as Im(rho_d * conj(rho_{d+1})) > 0.
struct StabilityVector {
    std::vector<GaussianRational> rho;
};

// Monotone decreasing with monotone decreasing dual -d - p(d); equivalently
// p(d) >= p(d+1) >= p(d) - 1.
struct PerversityFunction {
    std::vector<long> p;

    PerversityFunction dual() const;  // d -> -d - p(d)
    bool satisfiesInvariants() const;
};

enum class OmegaClause { Shape, RhoHalfplane, PerversityMonotone, Association, Ample, Unipotent };
const char* clauseName(OmegaClause c);

struct OmegaRejection {
    OmegaClause clause;
    int index;  // degree d where applicable, else -1
    std::string detail;
};

// The tuple (omega, rho, p, U); validateOmega is the only producer that
// sets the flag.
struct OmegaData {
    ModelPtr model;
    NumClass omega;
    StabilityVector rho;
    PerversityFunction p;
    NumClass U;
    bool validated = false;
};

struct OmegaValidation {
    std::optional<OmegaData> data;
    std::vector<OmegaRejection> rejections;

    bool ok() const { return rejections.empty(); }
    const OmegaData& get() const;
};

// Full clause-level validation: rho-halfplane(d), perversity-monotone(d),
// association(d) ((-1)^{p(d)} rho_d in the semi-closed upper half plane),
// ample, unipotent.
OmegaValidation validateOmega(const ModelPtr& model, const NumClass& omega,
                              const StabilityVector& rho, const PerversityFunction& p,
                              const NumClass& U);

// Coefficient of m^d is rho_d * \int omega^d . (ch . U); additive in ch.
CPoly centralCharge(const OmegaData& omega, const NumClass& ch);

enum class HeartPhaseError { ZeroCharge, NotHeartDirection };

// Phase germ of a class consistent with the heart: the leading coefficient
// must be a positive real multiple of (-1)^{p(d)} rho_d, and the branch is
// pinned so the value at infinity lies in (0, 1].
std::variant<PhaseGerm, HeartPhaseError> heartPhase(const OmegaData& omega, const NumClass& ch);

// Z(m) = sum rho_i a_i m^i for rho_i in the open upper half plane with
// strictly decreasing arguments.  Throws DomainError("rho-order...") when the
// weight vector is not admissible.
CPoly simpsonCharge(const std::vector<GaussianRational>& rho, const std::vector<Rational>& hilbert);

// p^k(d) = p(d) if p(d) >= -k, else p(d) + 1; k must equal -p(d) for some d.
PerversityFunction pTilt(const PerversityFunction& p, long k);

// Shift D of the dualizing line bundle together with the Chern character of
// the dualizing complex (degree-0 part (-1)^D).
struct DualizingData {
    long D = 0;
    NumClass chOmegaX;
};

// ch of the derived dual: parity(ch) . ch(omega_X).
NumClass dualClass(const DualizingData& dd, const NumClass& ch);

// Omega* = (omega, rho*, p̄ + D - n, U*) with rho*_d = (-1)^{D+d} conj(rho_d)
// and U* = (-1)^D ch(omega_X)^{-1} . P(conj U); validation failures
// propagate.
OmegaValidation dualOmega(const OmegaData& omega, const DualizingData& dd);

// rho_d = -(-i)^d/d!, p(d) = -floor(d/2), U = e^{-beta} sqrt(td); requires a
// model with configured td.
OmegaValidation largeVolumeOmega(const ModelPtr& model, const NumClass& beta,
                                 const AmpleClass& omega);

// The large-volume stability weights by themselves.
std::vector<GaussianRational> largeVolumeRho(int n);
PerversityFunction largeVolumePerversity(int n);

}  // namespace polystab
