#pragma once

#include "polystab/phase.hpp"

namespace polystab {

// Dense matrix over the prime field F_q, entries in 0..q-1, row major.
using FMat = std::vector<std::vector<int>>;

// Reduced row echelon form with zero rows dropped; rows of the result are
// the canonical basis of the row space.
FMat rref(FMat m, int q);

// Canonical RREF bases of every subspace of F_q^n, dimension 0 (empty
// matrix) through n, in a deterministic order.
std::vector<FMat> allSubspaces(int n, int q);

bool inRowSpace(const FMat& basis, std::vector<int> v, int q);
bool subspaceContains(const FMat& big, const FMat& small, int q);

// Finite abelian-category model: quiver with one exact phase germ per
// vertex.  Charges must be nonzero with leading direction in the
// semi-closed upper half plane, so every nonzero object gets a germ with
// value in (0, 1] at infinity.
struct QuiverModel {
    std::vector<std::string> vertices;
    struct Arrow {
        int from;
        int to;
    };
    std::vector<Arrow> arrows;
    int fieldSize = 2;
    std::vector<CPoly> charges;
    int dimCap = 6;

    void validate() const;  // throws DomainError
};

struct QuiverRep {
    std::vector<int> dims;
    std::vector<FMat> mats;  // per arrow, dims[to] x dims[from]

    int totalDim() const;
    bool isZero() const { return totalDim() == 0; }
};

QuiverRep makeRep(const QuiverModel& model, std::vector<int> dims, std::vector<FMat> mats);
QuiverRep directSum(const QuiverModel& model, const QuiverRep& a, const QuiverRep& b);

// Arrow-closed subspace tuple, canonical RREF basis per vertex.
struct SubRep {
    std::vector<FMat> bases;

    std::vector<int> dims() const;
    int totalDim() const;
};

// All arrow-closed subspace tuples, each exactly once, including 0 and E.
// Throws when totalDim(E) exceeds the model cap.
std::vector<SubRep> enumerateSubreps(const QuiverModel& model, const QuiverRep& rep);

// Germ of sum dim_v Z_v, branch 0 (value at infinity lies in (0, 1]).
PhaseGerm phaseOf(const QuiverModel& model, const std::vector<int>& dims);
PhaseGerm phaseOf(const QuiverModel& model, const QuiverRep& rep);

struct SemistabilityResult {
    bool semistable;
    std::optional<SubRep> witness;  // a maximal-phase destabilizing subrep
};
SemistabilityResult isSemistable(const QuiverModel& model, const QuiverRep& rep);

// Maximal destabilizing quotient: minimal phase among all nonzero quotients,
// realized by the smallest kernel, with the factorization property verified
// (every equal-phase quotient kernel contains the chosen one).
struct MdqResult {
    std::vector<int> quotientDims;
    SubRep kernel;
};
MdqResult mdq(const QuiverModel& model, const QuiverRep& rep);

struct HNStep {
    std::vector<int> dims;
    PhaseGerm phase;
};

// 0 = chain[0] < chain[1] < ... < chain[r] = E with semistable subquotients
// of strictly decreasing phase; steps[i] describes chain[i+1]/chain[i].
struct HNFiltration {
    std::vector<HNStep> steps;
    std::vector<SubRep> chain;
};

// Iterated maximal destabilizing quotients.
HNFiltration hnFilter(const QuiverModel& model, const QuiverRep& rep);

// Checks every defining property of an HN filtration directly (exact chain,
// semistable subquotients, strictly decreasing phases); by uniqueness this
// certifies that a passing filtration is THE filtration.  Independent of the
// mdq machinery above.
bool bruteForceValidate(const QuiverModel& model, const QuiverRep& rep, const HNFiltration& f);

// Restriction of the representation to an arrow-closed subrep, in the
// subrep's basis coordinates.
QuiverRep restrictToSub(const QuiverModel& model, const QuiverRep& rep, const SubRep& sub);

// Quotient representation by an arrow-closed subrep.
QuiverRep quotientBySub(const QuiverModel& model, const QuiverRep& rep, const SubRep& sub);

}  // namespace polystab
