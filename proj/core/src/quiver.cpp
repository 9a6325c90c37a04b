#include "polystab/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace polystab {

namespace {

int modq(long long x, int q) {
    int r = static_cast<int>(x % q);
    return r < 0 ? r + q : r;
}

int invq(int x, int q) {
    // q is a small prime
    for (int y = 1; y < q; ++y)
        if ((x * y) % q == 1) return y;
    throw DomainError("invq: not invertible");
}

std::vector<int> applyMat(const FMat& m, const std::vector<int>& v, int q) {
    std::vector<int> out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        long long acc = 0;
        for (std::size_t c = 0; c < v.size(); ++c) acc += static_cast<long long>(m[r][c]) * v[c];
        out[r] = modq(acc, q);
    }
    return out;
}

// pivot columns of an RREF basis
std::vector<int> pivotColumns(const FMat& basis) {
    std::vector<int> piv;
    for (const auto& row : basis) {
        int c = 0;
        while (c < static_cast<int>(row.size()) && row[c] == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

// Reduce v modulo the row space of an RREF basis.
std::vector<int> reduceMod(const FMat& basis, std::vector<int> v, int q) {
    std::vector<int> piv = pivotColumns(basis);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        int c = piv[r];
        if (v[c] == 0) continue;
        int f = v[c];  // pivots are 1 in RREF
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = modq(v[j] - static_cast<long long>(f) * basis[r][j], q);
    }
    return v;
}

// Coordinates of v in the RREF basis; nullopt when v is outside the span.
std::optional<std::vector<int>> coordinatesIn(const FMat& basis, const std::vector<int>& v, int q) {
    std::vector<int> piv = pivotColumns(basis);
    std::vector<int> coords(basis.size(), 0);
    std::vector<int> rest = v;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        int f = rest[piv[r]];
        coords[r] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < rest.size(); ++j)
            rest[j] = modq(rest[j] - static_cast<long long>(f) * basis[r][j], q);
    }
    for (int x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

FMat identityBasis(int n) {
    FMat m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

FMat rref(FMat m, int q) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        int inv = invq(m[r][c], q);
        for (int j = 0; j < cols; ++j) m[r][j] = modq(static_cast<long long>(m[r][j]) * inv, q);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            int f = m[i][c];
            for (int j = 0; j < cols; ++j)
                m[i][j] = modq(m[i][j] - static_cast<long long>(f) * m[r][j], q);
        }
        ++r;
    }
    m.resize(r);
    return m;
}

std::vector<FMat> allSubspaces(int n, int q) {
    std::vector<FMat> out;
    out.push_back(FMat{});  // dimension 0
    for (int k = 1; k <= n; ++k) {
        // choose pivot columns as increasing sequences
        std::vector<int> piv(k);
        std::iota(piv.begin(), piv.end(), 0);
        while (true) {
            // free positions: row r, column c > piv[r], c not a pivot
            std::vector<std::pair<int, int>> free;
            for (int r = 0; r < k; ++r)
                for (int c = piv[r] + 1; c < n; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
            std::vector<int> fill(free.size(), 0);
            while (true) {
                FMat basis(k, std::vector<int>(n, 0));
                for (int r = 0; r < k; ++r) basis[r][piv[r]] = 1;
                for (std::size_t t = 0; t < free.size(); ++t) basis[free[t].first][free[t].second] = fill[t];
                out.push_back(std::move(basis));
                // odometer
                std::size_t pos = 0;
                while (pos < fill.size() && fill[pos] == q - 1) fill[pos++] = 0;
                if (pos == fill.size()) break;
                ++fill[pos];
            }
            // next pivot combination
            int i = k - 1;
            while (i >= 0 && piv[i] == n - k + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

bool inRowSpace(const FMat& basis, std::vector<int> v, int q) {
    std::vector<int> r = reduceMod(basis, std::move(v), q);
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

bool subspaceContains(const FMat& big, const FMat& small, int q) {
    for (const auto& row : small)
        if (!inRowSpace(big, row, q)) return false;
    return true;
}

void QuiverModel::validate() const {
    if (vertices.empty()) throw DomainError("quiver needs at least one vertex");
    static const int primes[] = {2, 3, 5, 7, 11, 13};
    if (std::find(std::begin(primes), std::end(primes), fieldSize) == std::end(primes))
        throw DomainError("field size must be a small prime");
    if (charges.size() != vertices.size()) throw DomainError("one central charge per vertex required");
    for (std::size_t v = 0; v < charges.size(); ++v) {
        if (charges[v].isZero()) throw DomainError("central charge must be nonzero at " + vertices[v]);
        if (!inUpperHalfPlane(charges[v].leading()))
            throw DomainError("central charge leading direction outside the upper half plane at " +
                              vertices[v]);
    }
    for (const auto& a : arrows)
        if (a.from < 0 || a.to < 0 || a.from >= static_cast<int>(vertices.size()) ||
            a.to >= static_cast<int>(vertices.size()))
            throw DomainError("arrow endpoint out of range");
}

int QuiverRep::totalDim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

QuiverRep makeRep(const QuiverModel& model, std::vector<int> dims, std::vector<FMat> mats) {
    if (dims.size() != model.vertices.size()) throw DomainError("rep dims must match vertex count");
    if (mats.size() != model.arrows.size()) throw DomainError("rep needs one matrix per arrow");
    for (int d : dims)
        if (d < 0) throw DomainError("negative dimension");
    for (std::size_t a = 0; a < mats.size(); ++a) {
        int rows = dims[model.arrows[a].to], cols = dims[model.arrows[a].from];
        if (static_cast<int>(mats[a].size()) != rows)
            throw DomainError("arrow matrix row count mismatch");
        for (auto& row : mats[a]) {
            if (static_cast<int>(row.size()) != cols) throw DomainError("arrow matrix column count mismatch");
            for (auto& x : row) x = modq(x, model.fieldSize);
        }
    }
    return QuiverRep{std::move(dims), std::move(mats)};
}

QuiverRep directSum(const QuiverModel& model, const QuiverRep& a, const QuiverRep& b) {
    std::vector<int> dims(a.dims.size());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims[v] + b.dims[v];
    std::vector<FMat> mats(model.arrows.size());
    for (std::size_t k = 0; k < model.arrows.size(); ++k) {
        int rt = dims[model.arrows[k].to], ct = dims[model.arrows[k].from];
        FMat m(rt, std::vector<int>(ct, 0));
        int ra = a.dims[model.arrows[k].to], ca = a.dims[model.arrows[k].from];
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < ca; ++j) m[i][j] = a.mats[k][i][j];
        for (int i = 0; i < b.dims[model.arrows[k].to]; ++i)
            for (int j = 0; j < b.dims[model.arrows[k].from]; ++j) m[ra + i][ca + j] = b.mats[k][i][j];
        mats[k] = std::move(m);
    }
    return QuiverRep{std::move(dims), std::move(mats)};
}

std::vector<int> SubRep::dims() const {
    std::vector<int> d;
    d.reserve(bases.size());
    for (const auto& b : bases) d.push_back(static_cast<int>(b.size()));
    return d;
}

int SubRep::totalDim() const {
    int t = 0;
    for (const auto& b : bases) t += static_cast<int>(b.size());
    return t;
}

std::vector<SubRep> enumerateSubreps(const QuiverModel& model, const QuiverRep& rep) {
    if (rep.totalDim() > model.dimCap)
        throw DomainError("subobject enumeration cap exceeded (total dimension " +
                          std::to_string(rep.totalDim()) + " > " + std::to_string(model.dimCap) + ")");
    int q = model.fieldSize;
    std::size_t nv = model.vertices.size();
    std::vector<std::vector<FMat>> perVertex(nv);
    for (std::size_t v = 0; v < nv; ++v) perVertex[v] = allSubspaces(rep.dims[v], q);

    std::vector<SubRep> out;
    std::vector<std::size_t> idx(nv, 0);
    while (true) {
        SubRep s;
        s.bases.reserve(nv);
        for (std::size_t v = 0; v < nv; ++v) s.bases.push_back(perVertex[v][idx[v]]);
        bool closed = true;
        for (std::size_t a = 0; a < model.arrows.size() && closed; ++a) {
            const auto& arrow = model.arrows[a];
            for (const auto& row : s.bases[arrow.from]) {
                if (!inRowSpace(s.bases[arrow.to], applyMat(rep.mats[a], row, q), q)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) out.push_back(std::move(s));
        std::size_t v = 0;
        while (v < nv && idx[v] + 1 == perVertex[v].size()) idx[v++] = 0;
        if (v == nv) break;
        ++idx[v];
    }
    return out;
}

PhaseGerm phaseOf(const QuiverModel& model, const std::vector<int>& dims) {
    CPoly z;
    for (std::size_t v = 0; v < dims.size(); ++v)
        if (dims[v] != 0) z = z + Rational(dims[v]) * model.charges[v];
    if (z.isZero()) throw DomainError("phaseOf: zero object has no phase");
    return PhaseGerm(std::move(z), 0);
}

PhaseGerm phaseOf(const QuiverModel& model, const QuiverRep& rep) { return phaseOf(model, rep.dims); }

SemistabilityResult isSemistable(const QuiverModel& model, const QuiverRep& rep) {
    if (rep.isZero()) throw DomainError("isSemistable: zero object");
    PhaseGerm whole = phaseOf(model, rep);
    std::optional<SubRep> witness;
    std::optional<PhaseGerm> witnessPhase;
    for (auto& s : enumerateSubreps(model, rep)) {
        int t = s.totalDim();
        if (t == 0 || t == rep.totalDim()) continue;
        PhaseGerm ph = phaseOf(model, s.dims());
        if (cmpPhase(ph, whole) == Ordering::GT) {
            if (!witnessPhase || cmpPhase(ph, *witnessPhase) == Ordering::GT) {
                witness = std::move(s);
                witnessPhase = std::move(ph);
            }
        }
    }
    if (witness) return {false, std::move(witness)};
    return {true, std::nullopt};
}

namespace {

std::vector<int> subtractDims(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

}  // namespace

MdqResult mdq(const QuiverModel& model, const QuiverRep& rep) {
    if (rep.isZero()) throw DomainError("mdq: zero object");
    std::vector<SubRep> subs = enumerateSubreps(model, rep);
    int q = model.fieldSize;

    std::vector<std::size_t> candidates;  // kernels of nonzero quotients
    std::optional<PhaseGerm> minPhase;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].totalDim() == rep.totalDim()) continue;  // zero quotient
        PhaseGerm ph = phaseOf(model, subtractDims(rep.dims, subs[i].dims()));
        if (!minPhase) {
            minPhase = ph;
            candidates = {i};
            continue;
        }
        Ordering o = cmpPhase(ph, *minPhase);
        if (o == Ordering::LT) {
            minPhase = ph;
            candidates = {i};
        } else if (o == Ordering::EQ) {
            candidates.push_back(i);
        }
    }
    // smallest kernel among minimal-phase quotients
    std::size_t best = candidates[0];
    for (std::size_t i : candidates)
        if (subs[i].totalDim() < subs[best].totalDim()) best = i;
    // universal property: every minimal-phase quotient factors through ours
    for (std::size_t i : candidates) {
        bool contains = true;
        for (std::size_t v = 0; v < subs[i].bases.size() && contains; ++v)
            contains = subspaceContains(subs[i].bases[v], subs[best].bases[v], q);
        if (!contains)
            throw DomainError("no-unique-mdq: minimal-phase quotients do not factor through a single one");
    }
    return MdqResult{subtractDims(rep.dims, subs[best].dims()), subs[best]};
}

QuiverRep restrictToSub(const QuiverModel& model, const QuiverRep& rep, const SubRep& sub) {
    int q = model.fieldSize;
    std::vector<int> dims = sub.dims();
    std::vector<FMat> mats(model.arrows.size());
    for (std::size_t a = 0; a < model.arrows.size(); ++a) {
        const auto& arrow = model.arrows[a];
        FMat m(dims[arrow.to], std::vector<int>(dims[arrow.from], 0));
        for (int j = 0; j < dims[arrow.from]; ++j) {
            auto image = applyMat(rep.mats[a], sub.bases[arrow.from][j], q);
            auto coords = coordinatesIn(sub.bases[arrow.to], image, q);
            if (!coords) throw DomainError("restrictToSub: subrep is not arrow-closed");
            for (int i = 0; i < dims[arrow.to]; ++i) m[i][j] = (*coords)[i];
        }
        mats[a] = std::move(m);
    }
    return QuiverRep{std::move(dims), std::move(mats)};
}

QuiverRep quotientBySub(const QuiverModel& model, const QuiverRep& rep, const SubRep& sub) {
    int q = model.fieldSize;
    std::size_t nv = model.vertices.size();
    // quotient coordinates = non-pivot coordinates after reduction mod sub
    std::vector<std::vector<int>> freeCols(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<int> piv = pivotColumns(sub.bases[v]);
        for (int c = 0; c < rep.dims[v]; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) freeCols[v].push_back(c);
    }
    std::vector<int> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) dims[v] = static_cast<int>(freeCols[v].size());
    std::vector<FMat> mats(model.arrows.size());
    for (std::size_t a = 0; a < model.arrows.size(); ++a) {
        const auto& arrow = model.arrows[a];
        FMat m(dims[arrow.to], std::vector<int>(dims[arrow.from], 0));
        for (int j = 0; j < dims[arrow.from]; ++j) {
            std::vector<int> lift(rep.dims[arrow.from], 0);
            lift[freeCols[arrow.from][j]] = 1;
            auto image = reduceMod(sub.bases[arrow.to], applyMat(rep.mats[a], lift, q), q);
            for (int i = 0; i < dims[arrow.to]; ++i) m[i][j] = image[freeCols[arrow.to][i]];
        }
        mats[a] = std::move(m);
    }
    return QuiverRep{std::move(dims), std::move(mats)};
}

namespace {

// Rows of inner (coordinates w.r.t. the given ambient basis rows) expressed
// in ambient coordinates.  Row order follows inner; no canonicalization, so
// the result stays aligned with restrictToSub coordinates.
std::vector<FMat> ambientRows(const std::vector<FMat>& outerBases, const SubRep& inner,
                              const std::vector<int>& ambientDims, int q) {
    std::vector<FMat> out(inner.bases.size());
    for (std::size_t v = 0; v < inner.bases.size(); ++v) {
        for (const auto& coords : inner.bases[v]) {
            std::vector<int> amb(ambientDims[v], 0);
            for (std::size_t r = 0; r < outerBases[v].size(); ++r)
                for (std::size_t c = 0; c < amb.size(); ++c)
                    amb[c] = modq(amb[c] + static_cast<long long>(coords[r]) * outerBases[v][r][c], q);
            out[v].push_back(std::move(amb));
        }
    }
    return out;
}

}  // namespace

HNFiltration hnFilter(const QuiverModel& model, const QuiverRep& rep) {
    if (rep.totalDim() > model.dimCap) throw DomainError("hnFilter: cap exceeded");
    int q = model.fieldSize;
    std::size_t nv = model.vertices.size();

    HNFiltration f;
    std::vector<HNStep> stepsUp;     // increasing phase order as produced
    std::vector<SubRep> kernelsUp;   // kernels inside the original rep

    QuiverRep cur = rep;
    std::vector<FMat> embed(nv);  // basis of cur inside rep
    for (std::size_t v = 0; v < nv; ++v) embed[v] = identityBasis(rep.dims[v]);

    int guard = rep.totalDim() + 1;
    while (!cur.isZero()) {
        if (--guard < 0) throw DomainError("hnFilter: mdq iteration failed to terminate");
        MdqResult m = mdq(model, cur);
        stepsUp.push_back({m.quotientDims, phaseOf(model, m.quotientDims)});
        std::vector<FMat> ambient = ambientRows(embed, m.kernel, rep.dims, q);
        SubRep kernelInRep;
        kernelInRep.bases.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) kernelInRep.bases[v] = rref(ambient[v], q);
        kernelsUp.push_back(kernelInRep);
        if (m.kernel.totalDim() == 0) break;
        cur = restrictToSub(model, cur, m.kernel);
        embed = std::move(ambient);
    }

    for (auto it = stepsUp.rbegin(); it != stepsUp.rend(); ++it) f.steps.push_back(*it);
    // chain: 0 = last kernel (possibly the zero subrep) up to the full rep
    SubRep zero;
    zero.bases.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) zero.bases[v] = FMat{};
    f.chain.push_back(zero);
    for (auto it = kernelsUp.rbegin(); it != kernelsUp.rend(); ++it) {
        if (it == kernelsUp.rbegin() && it->totalDim() == 0) continue;  // already have 0
        f.chain.push_back(*it);
    }
    SubRep full;
    full.bases.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) full.bases[v] = identityBasis(rep.dims[v]);
    f.chain.push_back(full);
    if (rep.isZero()) f.chain.resize(1);
    return f;
}

bool bruteForceValidate(const QuiverModel& model, const QuiverRep& rep, const HNFiltration& f) {
    int q = model.fieldSize;
    std::size_t nv = model.vertices.size();
    if (f.chain.size() != f.steps.size() + 1) {
        if (!(rep.isZero() && f.chain.size() == 1 && f.steps.empty())) return false;
    }
    if (rep.isZero()) return f.steps.empty() && f.chain.size() == 1 && f.chain[0].totalDim() == 0;

    // chain shape: starts at 0, ends at E, strictly increasing, arrow-closed
    if (f.chain.front().totalDim() != 0) return false;
    if (f.chain.back().dims() != rep.dims) return false;
    for (const auto& link : f.chain) {
        if (link.bases.size() != nv) return false;
        for (std::size_t v = 0; v < nv; ++v)
            for (const auto& row : link.bases[v])
                if (static_cast<int>(row.size()) != rep.dims[v]) return false;
        for (std::size_t a = 0; a < model.arrows.size(); ++a) {
            const auto& arrow = model.arrows[a];
            for (const auto& row : link.bases[arrow.from])
                if (!inRowSpace(link.bases[arrow.to], applyMat(rep.mats[a], row, q), q)) return false;
        }
    }
    for (std::size_t i = 0; i + 1 < f.chain.size(); ++i) {
        if (f.chain[i].totalDim() >= f.chain[i + 1].totalDim()) return false;
        for (std::size_t v = 0; v < nv; ++v)
            if (!subspaceContains(f.chain[i + 1].bases[v], f.chain[i].bases[v], q)) return false;
    }

    std::vector<int> total(nv, 0);
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        std::vector<int> expect = subtractDims(f.chain[i + 1].dims(), f.chain[i].dims());
        if (f.steps[i].dims != expect) return false;
        for (std::size_t v = 0; v < nv; ++v) total[v] += f.steps[i].dims[v];
        // stored phase must be the germ of the dimension vector
        PhaseGerm ph = phaseOf(model, f.steps[i].dims);
        if (cmpPhase(ph, f.steps[i].phase) != Ordering::EQ) return false;
    }
    if (total != rep.dims) return false;

    for (std::size_t i = 0; i + 1 < f.steps.size(); ++i)
        if (cmpPhase(f.steps[i].phase, f.steps[i + 1].phase) != Ordering::GT) return false;

    // each subquotient semistable
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        QuiverRep mid = restrictToSub(model, rep, f.chain[i + 1]);
        // express chain[i] in chain[i+1] coordinates
        SubRep inner;
        inner.bases.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            FMat rows;
            for (const auto& row : f.chain[i].bases[v]) {
                auto coords = coordinatesIn(f.chain[i + 1].bases[v], row, q);
                if (!coords) return false;
                rows.push_back(*coords);
            }
            inner.bases[v] = rref(std::move(rows), q);
        }
        QuiverRep sq = quotientBySub(model, mid, inner);
        if (sq.isZero()) return false;
        if (!isSemistable(model, sq).semistable) return false;
    }
    return true;
}

}  // namespace polystab
