#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polystab/phase.hpp"

namespace polystab {

// Numerical model of the intersection theory of an n-dimensional projective
// variety: graded bases, structure constants, the degree-n integration
// functional, and configured effective-cone generators.  Grading is by
// codimension; degree 0 holds the unit, degree n the point classes.
class GradedRingModel : public std::enable_shared_from_this<GradedRingModel> {
  public:
    struct BasisProduct {
        std::string left;
        std::string right;
        // coefficients over the basis of degree deg(left) + deg(right)
        std::vector<std::pair<std::string, Rational>> result;
    };

    GradedRingModel(int dimension,
                    std::vector<std::vector<std::string>> bases,
                    const std::vector<BasisProduct>& products,
                    std::vector<std::pair<std::string, Rational>> integrate,
                    std::vector<std::vector<std::vector<Rational>>> effective,
                    std::optional<std::vector<std::vector<Rational>>> td = std::nullopt);

    // P^n with hyperplane class H, \int H^n = 1, effective generators H^d,
    // and td(P^n) from the Todd series of (1+H)^{n+1}.
    static std::shared_ptr<const GradedRingModel> projectiveSpace(int n);

    // Polarized model where only powers of a single class w are tracked:
    // w^a * w^b = w^{a+b}, \int w^n = topDegree.  td defaults to 1 (CY-like)
    // unless coordinates are supplied.
    static std::shared_ptr<const GradedRingModel> degreeOnly(
        int n, Rational topDegree = Rational(1),
        std::optional<std::vector<Rational>> tdCoeffs = std::nullopt);

    int dimension() const { return dim_; }
    int basisSize(int degree) const { return static_cast<int>(bases_[degree].size()); }
    const std::vector<std::vector<std::string>>& bases() const { return bases_; }
    const std::vector<std::vector<std::vector<Rational>>>& effectiveGenerators() const {
        return effective_;
    }
    bool hasTodd() const { return td_.has_value(); }
    const std::optional<std::vector<std::vector<Rational>>>& tdData() const { return td_; }

    // structure constants: coefficients of b_{d,i} * b_{e,j} over the basis
    // in degree d+e (empty when d+e > n)
    const std::vector<Rational>& productCoeffs(int d, int i, int e, int j) const;
    const Rational& integrationCoeff(int i) const { return integrate_[i]; }

    std::optional<std::pair<int, int>> findLabel(const std::string& label) const;

  private:
    void verifyRingAxioms() const;

    int dim_;
    std::vector<std::vector<std::string>> bases_;
    // prod_[d][e][i][j] -> coefficient vector in degree d+e
    std::vector<std::vector<std::vector<std::vector<std::vector<Rational>>>>> prod_;
    std::vector<Rational> integrate_;
    std::vector<std::vector<std::vector<Rational>>> effective_;
    std::optional<std::vector<std::vector<Rational>>> td_;
};

using ModelPtr = std::shared_ptr<const GradedRingModel>;

// Chern-character-style class: per-degree coordinate vectors over Q(i).
class NumClass {
  public:
    NumClass() = default;
    explicit NumClass(ModelPtr model);  // zero class
    NumClass(ModelPtr model, std::vector<std::vector<GaussianRational>> coords);

    static NumClass unit(const ModelPtr& model);
    // coefficient * (single basis element)
    static NumClass basisElement(const ModelPtr& model, int degree, int index,
                                 GaussianRational coeff = gaussianOne());

    const ModelPtr& model() const { return model_; }
    const std::vector<std::vector<GaussianRational>>& coords() const { return coords_; }
    const GaussianRational& coord(int degree, int index) const { return coords_[degree][index]; }
    void setCoord(int degree, int index, GaussianRational v);

    bool isZero() const;
    bool isReal() const;
    NumClass conjCoords() const;

    friend bool operator==(const NumClass& a, const NumClass& b);
    friend NumClass operator+(const NumClass& a, const NumClass& b);
    friend NumClass operator-(const NumClass& a, const NumClass& b);
    friend NumClass operator-(const NumClass& a);
    friend NumClass operator*(const GaussianRational& s, const NumClass& a);
    friend NumClass operator*(const Rational& s, const NumClass& a);

  private:
    ModelPtr model_;
    std::vector<std::vector<GaussianRational>> coords_;
};

// Bilinear commutative associative degree-additive product.
NumClass cup(const NumClass& a, const NumClass& b);

// Applies the functional to the degree-n component, ignoring lower degrees.
GaussianRational integrate(const NumClass& a);

// exp of a class with zero degree-0 part, as a finite sum.
NumClass expNil(const NumClass& n);

// Square root of 1 + N via the binomial series; result squares back exactly.
NumClass sqrtUnipotent(const NumClass& u);

// Inverse of a class with invertible degree-0 part via the geometric series.
NumClass invUnipotent(const NumClass& u);

// Degree-e (codimension) component scaled by (-1)^e; a ring involution.
NumClass parity(const NumClass& a);

// Largest dimension d = n - e with a nonzero codimension-e component;
// nullopt for the zero class.
std::optional<int> supportDim(const NumClass& a);

struct AmpleClass {
    NumClass omega;
};
struct AmpleFailure {
    int degree;          // dimension of the failing effective generator
    int generatorIndex;  // position within that degree's generator list
    GaussianRational pairing;
};

// Checks \int omega^d . alpha > 0 against every configured effective
// generator alpha of dimension d; reports the first failure.
std::variant<AmpleClass, AmpleFailure> validateAmple(const NumClass& w);

// Configured Todd class of the model (throws when absent).
NumClass toddClass(const ModelPtr& model);

// Numerical data of a class on a polarized surface: rk, pairings of ch_1
// with omega and beta, ch_1^2, ch_2, and the ambient constants omega^2,
// beta.omega, beta^2 (omega^2 > 0).
struct SurfaceClass {
    Rational rk;
    Rational c1w;
    Rational c1b;
    Rational c1sq;
    Rational ch2;
    Rational w2;
    Rational bw;
    Rational b2;
};

}  // namespace polystab
