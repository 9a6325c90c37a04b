#include "polystab/ring_model.hpp"

#include <map>
#include <mutex>

namespace polystab {

namespace {

// Coefficients of the Todd series x/(1 - e^{-x}) up to degree n: invert
// (1 - e^{-x})/x = sum (-1)^k x^k/(k+1)! as a power series.
std::vector<Rational> toddSeries(int n) {
    std::vector<Rational> g(n + 1);  // (1 - e^{-x})/x
    Rational factorial(1);
    for (int k = 0; k <= n; ++k) {
        factorial *= (k + 1);
        g[k] = Rational((k % 2 == 0) ? 1 : -1) / factorial;
    }
    std::vector<Rational> inv(n + 1);
    inv[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j) s += g[j] * inv[k - j];
        inv[k] = -s;
    }
    return inv;
}

std::vector<Rational> multiplyTruncated(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b, int n) {
    std::vector<Rational> c(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= n; ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

GradedRingModel::GradedRingModel(int dimension, std::vector<std::vector<std::string>> bases,
                                 const std::vector<BasisProduct>& products,
                                 std::vector<std::pair<std::string, Rational>> integrate,
                                 std::vector<std::vector<std::vector<Rational>>> effective,
                                 std::optional<std::vector<std::vector<Rational>>> td)
    : dim_(dimension), bases_(std::move(bases)), effective_(std::move(effective)), td_(std::move(td)) {
    if (dim_ < 0) throw DomainError("model dimension must be >= 0");
    if (static_cast<int>(bases_.size()) != dim_ + 1)
        throw DomainError("model needs a basis list for every degree 0..n");
    for (const auto& b : bases_)
        if (b.empty()) throw DomainError("every degree needs at least one basis label");

    std::map<std::string, std::pair<int, int>> where;
    for (int d = 0; d <= dim_; ++d)
        for (int i = 0; i < basisSize(d); ++i) {
            if (!where.emplace(bases_[d][i], std::make_pair(d, i)).second)
                throw DomainError("duplicate basis label: " + bases_[d][i]);
        }

    prod_.assign(dim_ + 1, {});
    for (int d = 0; d <= dim_; ++d) {
        prod_[d].assign(dim_ + 1, {});
        for (int e = 0; d + e <= dim_; ++e) {
            prod_[d][e].assign(basisSize(d), std::vector<std::vector<Rational>>(
                                                 basisSize(e), std::vector<Rational>()));
        }
    }
    for (const auto& p : products) {
        auto l = where.find(p.left);
        auto r = where.find(p.right);
        if (l == where.end() || r == where.end())
            throw DomainError("product references unknown label " + p.left + "*" + p.right);
        auto [d, i] = l->second;
        auto [e, j] = r->second;
        if (d + e > dim_) {
            if (!p.result.empty()) throw DomainError("product beyond top degree must be zero");
            continue;
        }
        std::vector<Rational> coeffs(basisSize(d + e));
        for (const auto& [label, c] : p.result) {
            auto t = where.find(label);
            if (t == where.end() || t->second.first != d + e)
                throw DomainError("product result label not in degree " + std::to_string(d + e));
            coeffs[t->second.second] = c;
        }
        prod_[d][e][i][j] = std::move(coeffs);
    }
    // mirror products given in one order only, then fill the rest with zeros
    for (int d = 0; d <= dim_; ++d)
        for (int e = 0; d + e <= dim_; ++e)
            for (int i = 0; i < basisSize(d); ++i)
                for (int j = 0; j < basisSize(e); ++j) {
                    if (prod_[d][e][i][j].empty() && !prod_[e][d][j][i].empty())
                        prod_[d][e][i][j] = prod_[e][d][j][i];
                    if (prod_[d][e][i][j].empty()) prod_[d][e][i][j].assign(basisSize(d + e), Rational(0));
                }

    integrate_.assign(basisSize(dim_), Rational(0));
    for (const auto& [label, c] : integrate) {
        auto t = where.find(label);
        if (t == where.end() || t->second.first != dim_)
            throw DomainError("integration functional must live in degree n");
        integrate_[t->second.second] = c;
    }

    if (static_cast<int>(effective_.size()) > dim_ + 1)
        throw DomainError("effective generators indexed by dimension 0..n");
    effective_.resize(dim_ + 1);
    for (int d = 0; d <= dim_; ++d)
        for (const auto& gen : effective_[d])
            if (static_cast<int>(gen.size()) != basisSize(dim_ - d))
                throw DomainError("effective generator coordinate length mismatch");

    if (td_) {
        if (static_cast<int>(td_->size()) != dim_ + 1)
            throw DomainError("td class needs coordinates for every degree");
        for (int d = 0; d <= dim_; ++d)
            if (static_cast<int>((*td_)[d].size()) != basisSize(d))
                throw DomainError("td coordinate length mismatch");
    }

    verifyRingAxioms();
}

const std::vector<Rational>& GradedRingModel::productCoeffs(int d, int i, int e, int j) const {
    return prod_[d][e][i][j];
}

std::optional<std::pair<int, int>> GradedRingModel::findLabel(const std::string& label) const {
    for (int d = 0; d <= dim_; ++d)
        for (int i = 0; i < basisSize(d); ++i)
            if (bases_[d][i] == label) return std::make_pair(d, i);
    return std::nullopt;
}

void GradedRingModel::verifyRingAxioms() const {
    if (basisSize(0) != 1) throw DomainError("degree-0 basis must consist of the unit alone");
    // unit: 1 * b = b for every basis element
    for (int e = 0; e <= dim_; ++e)
        for (int j = 0; j < basisSize(e); ++j) {
            const auto& c = prod_[0][e][0][j];
            for (int t = 0; t < basisSize(e); ++t)
                if (c[t] != Rational(t == j ? 1 : 0))
                    throw DomainError("degree-0 basis element is not a unit");
        }
    // commutativity
    for (int d = 0; d <= dim_; ++d)
        for (int e = 0; d + e <= dim_; ++e)
            for (int i = 0; i < basisSize(d); ++i)
                for (int j = 0; j < basisSize(e); ++j)
                    if (prod_[d][e][i][j] != prod_[e][d][j][i])
                        throw DomainError("structure constants are not commutative");
    // associativity over all basis triples
    for (int d = 0; d <= dim_; ++d)
        for (int e = 0; d + e <= dim_; ++e)
            for (int f = 0; d + e + f <= dim_; ++f)
                for (int i = 0; i < basisSize(d); ++i)
                    for (int j = 0; j < basisSize(e); ++j)
                        for (int k = 0; k < basisSize(f); ++k) {
                            std::vector<Rational> left(basisSize(d + e + f), Rational(0));
                            const auto& ij = prod_[d][e][i][j];
                            for (int t = 0; t < basisSize(d + e); ++t) {
                                if (ij[t] == 0) continue;
                                const auto& tk = prod_[d + e][f][t][k];
                                for (int u = 0; u < basisSize(d + e + f); ++u) left[u] += ij[t] * tk[u];
                            }
                            std::vector<Rational> right(basisSize(d + e + f), Rational(0));
                            const auto& jk = prod_[e][f][j][k];
                            for (int t = 0; t < basisSize(e + f); ++t) {
                                if (jk[t] == 0) continue;
                                const auto& it = prod_[d][e + f][i][t];
                                for (int u = 0; u < basisSize(d + e + f); ++u) right[u] += jk[t] * it[u];
                            }
                            if (left != right) throw DomainError("structure constants are not associative");
                        }
}

std::shared_ptr<const GradedRingModel> GradedRingModel::projectiveSpace(int n) {
    if (n < 1) throw DomainError("projectiveSpace: n >= 1");
    // presets are immutable; share one instance per dimension so classes
    // built independently still agree on their owning model
    static std::mutex cacheMutex;
    static std::map<int, std::shared_ptr<const GradedRingModel>> cache;
    {
        std::lock_guard<std::mutex> lock(cacheMutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::vector<std::string>> bases;
    for (int d = 0; d <= n; ++d)
        bases.push_back({d == 0 ? "1" : (d == 1 ? "H" : "H" + std::to_string(d))});
    std::vector<BasisProduct> products;
    for (int d = 0; d <= n; ++d)
        for (int e = 0; e <= n; ++e) {
            BasisProduct p{bases[d][0], bases[e][0], {}};
            if (d + e <= n) p.result = {{bases[d + e][0], Rational(1)}};
            products.push_back(std::move(p));
        }
    std::vector<std::vector<std::vector<Rational>>> effective(n + 1);
    for (int dim = 0; dim <= n; ++dim) effective[dim] = {{Rational(1)}};  // H^{n-dim}
    // td(P^n) = (x/(1-e^{-x}))^{n+1} with x = H
    std::vector<Rational> series = toddSeries(n);
    std::vector<Rational> td(n + 1);
    td[0] = 1;
    for (int k = 0; k < n + 1; ++k) td = multiplyTruncated(td, series, n);
    std::vector<std::vector<Rational>> tdCoords;
    for (int d = 0; d <= n; ++d) tdCoords.push_back({td[d]});
    auto model = std::make_shared<GradedRingModel>(
        n, bases, products, std::vector<std::pair<std::string, Rational>>{{bases[n][0], Rational(1)}},
        effective, tdCoords);
    std::lock_guard<std::mutex> lock(cacheMutex);
    return cache.emplace(n, std::move(model)).first->second;
}

std::shared_ptr<const GradedRingModel> GradedRingModel::degreeOnly(
    int n, Rational topDegree, std::optional<std::vector<Rational>> tdCoeffs) {
    if (n < 1) throw DomainError("degreeOnly: n >= 1");
    if (topDegree <= 0) throw DomainError("degreeOnly: \\int w^n must be positive");
    std::vector<std::vector<std::string>> bases;
    for (int d = 0; d <= n; ++d) bases.push_back({"w" + std::to_string(d)});
    std::vector<BasisProduct> products;
    for (int d = 0; d <= n; ++d)
        for (int e = 0; e <= n; ++e) {
            BasisProduct p{bases[d][0], bases[e][0], {}};
            if (d + e <= n) p.result = {{bases[d + e][0], Rational(1)}};
            products.push_back(std::move(p));
        }
    std::vector<std::vector<std::vector<Rational>>> effective(n + 1);
    for (int dim = 0; dim <= n; ++dim) effective[dim] = {{Rational(1)}};
    std::optional<std::vector<std::vector<Rational>>> td;
    if (tdCoeffs) {
        if (static_cast<int>(tdCoeffs->size()) != n + 1)
            throw DomainError("degreeOnly: td needs n+1 coefficients");
        std::vector<std::vector<Rational>> coords;
        for (const auto& c : *tdCoeffs) coords.push_back({c});
        td = std::move(coords);
    } else {
        std::vector<std::vector<Rational>> coords(n + 1, std::vector<Rational>{Rational(0)});
        coords[0][0] = 1;
        td = std::move(coords);
    }
    return std::make_shared<GradedRingModel>(
        n, bases, products, std::vector<std::pair<std::string, Rational>>{{bases[n][0], topDegree}},
        effective, td);
}

NumClass::NumClass(ModelPtr model) : model_(std::move(model)) {
    if (!model_) throw DomainError("NumClass: null model");
    coords_.resize(model_->dimension() + 1);
    for (int d = 0; d <= model_->dimension(); ++d) coords_[d].resize(model_->basisSize(d));
}

NumClass::NumClass(ModelPtr model, std::vector<std::vector<GaussianRational>> coords)
    : model_(std::move(model)), coords_(std::move(coords)) {
    if (!model_) throw DomainError("NumClass: null model");
    if (static_cast<int>(coords_.size()) != model_->dimension() + 1)
        throw DomainError("NumClass: coordinate vector count must match model dimension");
    for (int d = 0; d <= model_->dimension(); ++d)
        if (static_cast<int>(coords_[d].size()) != model_->basisSize(d))
            throw DomainError("NumClass: coordinate length mismatch in degree " + std::to_string(d));
}

NumClass NumClass::unit(const ModelPtr& model) {
    NumClass c(model);
    c.coords_[0][0] = gaussianOne();
    return c;
}

NumClass NumClass::basisElement(const ModelPtr& model, int degree, int index, GaussianRational coeff) {
    NumClass c(model);
    c.coords_.at(degree).at(index) = std::move(coeff);
    return c;
}

void NumClass::setCoord(int degree, int index, GaussianRational v) {
    coords_.at(degree).at(index) = std::move(v);
}

bool NumClass::isZero() const {
    for (const auto& deg : coords_)
        for (const auto& c : deg)
            if (!c.isZero()) return false;
    return true;
}

bool NumClass::isReal() const {
    for (const auto& deg : coords_)
        for (const auto& c : deg)
            if (!c.isReal()) return false;
    return true;
}

NumClass NumClass::conjCoords() const {
    NumClass r = *this;
    for (auto& deg : r.coords_)
        for (auto& c : deg) c = c.conj();
    return r;
}

namespace {
void requireSameModel(const NumClass& a, const NumClass& b) {
    if (a.model() != b.model()) throw DomainError("classes belong to different models");
}
}  // namespace

bool operator==(const NumClass& a, const NumClass& b) {
    return a.model_ == b.model_ && a.coords_ == b.coords_;
}

NumClass operator+(const NumClass& a, const NumClass& b) {
    requireSameModel(a, b);
    NumClass r = a;
    for (std::size_t d = 0; d < r.coords_.size(); ++d)
        for (std::size_t i = 0; i < r.coords_[d].size(); ++i) r.coords_[d][i] += b.coords_[d][i];
    return r;
}

NumClass operator-(const NumClass& a, const NumClass& b) { return a + (-b); }

NumClass operator-(const NumClass& a) {
    NumClass r = a;
    for (auto& deg : r.coords_)
        for (auto& c : deg) c = -c;
    return r;
}

NumClass operator*(const GaussianRational& s, const NumClass& a) {
    NumClass r = a;
    for (auto& deg : r.coords_)
        for (auto& c : deg) c = s * c;
    return r;
}

NumClass operator*(const Rational& s, const NumClass& a) { return GaussianRational(s) * a; }

NumClass cup(const NumClass& a, const NumClass& b) {
    requireSameModel(a, b);
    const auto& model = *a.model();
    NumClass r(a.model());
    int n = model.dimension();
    for (int d = 0; d <= n; ++d)
        for (int e = 0; d + e <= n; ++e)
            for (int i = 0; i < model.basisSize(d); ++i) {
                if (a.coord(d, i).isZero()) continue;
                for (int j = 0; j < model.basisSize(e); ++j) {
                    if (b.coord(e, j).isZero()) continue;
                    GaussianRational prod = a.coord(d, i) * b.coord(e, j);
                    const auto& coeffs = model.productCoeffs(d, i, e, j);
                    for (int t = 0; t < model.basisSize(d + e); ++t)
                        if (coeffs[t] != 0)
                            r.setCoord(d + e, t, r.coord(d + e, t) + coeffs[t] * prod);
                }
            }
    return r;
}

GaussianRational integrate(const NumClass& a) {
    const auto& model = *a.model();
    int n = model.dimension();
    GaussianRational s;
    for (int i = 0; i < model.basisSize(n); ++i) s += model.integrationCoeff(i) * a.coord(n, i);
    return s;
}

NumClass expNil(const NumClass& nclass) {
    if (!nclass.coord(0, 0).isZero())
        throw DomainError("expNil: degree-0 component must vanish");
    NumClass result = NumClass::unit(nclass.model());
    NumClass term = NumClass::unit(nclass.model());
    int n = nclass.model()->dimension();
    for (int k = 1; k <= n; ++k) {
        term = cup(term, nclass);
        term = Rational(1, k) * term;
        result = result + term;
    }
    return result;
}

NumClass sqrtUnipotent(const NumClass& u) {
    if (u.coord(0, 0) != gaussianOne())
        throw DomainError("sqrtUnipotent: degree-0 component must be 1");
    NumClass nil = u - NumClass::unit(u.model());
    NumClass result = NumClass::unit(u.model());
    NumClass power = NumClass::unit(u.model());
    Rational binom(1);  // binom(1/2, k)
    int n = u.model()->dimension();
    for (int k = 1; k <= n; ++k) {
        binom *= (Rational(1, 2) - (k - 1)) / k;
        power = cup(power, nil);
        result = result + binom * power;
    }
    return result;
}

NumClass invUnipotent(const NumClass& u) {
    GaussianRational c = u.coord(0, 0);
    if (c.isZero()) throw DomainError("invUnipotent: degree-0 component must be nonzero");
    GaussianRational cinv = divide(gaussianOne(), c);
    NumClass nil = cinv * u - NumClass::unit(u.model());  // nilpotent part of u/c
    NumClass result = NumClass::unit(u.model());
    NumClass power = NumClass::unit(u.model());
    int n = u.model()->dimension();
    for (int k = 1; k <= n; ++k) {
        power = cup(power, -nil);
        result = result + power;
    }
    return cinv * result;
}

NumClass parity(const NumClass& a) {
    NumClass r = a;
    for (int e = 0; e <= a.model()->dimension(); ++e)
        if (e % 2 == 1)
            for (int i = 0; i < a.model()->basisSize(e); ++i) r.setCoord(e, i, -r.coord(e, i));
    return r;
}

std::optional<int> supportDim(const NumClass& a) {
    int n = a.model()->dimension();
    for (int e = 0; e <= n; ++e)
        for (int i = 0; i < a.model()->basisSize(e); ++i)
            if (!a.coord(e, i).isZero()) return n - e;
    return std::nullopt;
}

std::variant<AmpleClass, AmpleFailure> validateAmple(const NumClass& w) {
    const auto& model = *w.model();
    int n = model.dimension();
    for (int e = 0; e <= n; ++e)
        for (int i = 0; i < model.basisSize(e); ++i)
            if (e != 1 && !w.coord(e, i).isZero())
                throw DomainError("validateAmple: class must be concentrated in degree 1");
    for (int i = 0; i < model.basisSize(1); ++i)
        if (!w.coord(1, i).isReal()) throw DomainError("validateAmple: class must have real coordinates");

    // omega^d against every effective generator of dimension d
    std::vector<NumClass> powers(n + 1, NumClass::unit(w.model()));
    for (int d = 1; d <= n; ++d) powers[d] = cup(powers[d - 1], w);
    const auto& effective = model.effectiveGenerators();
    for (int dim = 0; dim <= n; ++dim) {
        int codim = n - dim;
        for (std::size_t g = 0; g < effective[dim].size(); ++g) {
            NumClass alpha(w.model());
            for (int i = 0; i < model.basisSize(codim); ++i)
                alpha.setCoord(codim, i, GaussianRational(effective[dim][g][i]));
            GaussianRational pairing = integrate(cup(powers[dim], alpha));
            if (!pairing.isReal() || signum(pairing.re) <= 0)
                return AmpleFailure{dim, static_cast<int>(g), pairing};
        }
    }
    return AmpleClass{w};
}

NumClass toddClass(const ModelPtr& model) {
    if (!model->hasTodd()) throw DomainError("model carries no td configuration");
    NumClass td(model);
    for (int d = 0; d <= model->dimension(); ++d)
        for (int i = 0; i < model->basisSize(d); ++i)
            td.setCoord(d, i, GaussianRational((*model->tdData())[d][i]));
    return td;
}

}  // namespace polystab
