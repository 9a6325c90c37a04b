#pragma once

#include <vector>

#include "polystab/gaussian.hpp"

namespace polystab {

// Polynomial over Q(i) in one variable m, coefficients lowest degree first.
// Normal form: empty list is the zero polynomial, otherwise the last entry
// is nonzero.
class CPoly {
  public:
    CPoly() = default;
    explicit CPoly(std::vector<GaussianRational> coeffs);

    static CPoly zero() { return CPoly(); }
    static CPoly constant(GaussianRational c);
    // Builds c * m^k.
    static CPoly monomial(GaussianRational c, std::size_t k);
    static CPoly fromReal(const std::vector<Rational>& coeffs);

    bool isZero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const GaussianRational& leading() const;
    GaussianRational coeff(std::size_t k) const;
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    CPoly conjCoeffs() const;

    // Exact Horner evaluation at a rational point.
    GaussianRational eval(const Rational& m) const;
    std::complex<double> evalDouble(double m) const;

    friend bool operator==(const CPoly& a, const CPoly& b) = default;
    friend CPoly operator+(const CPoly& a, const CPoly& b);
    friend CPoly operator-(const CPoly& a, const CPoly& b);
    friend CPoly operator-(const CPoly& a);
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend CPoly operator*(const GaussianRational& s, const CPoly& a);
    friend CPoly operator*(const Rational& s, const CPoly& a);

  private:
    void normalize();
    std::vector<GaussianRational> coeffs_;
};

// Real and imaginary coefficient sequences, trimmed to normal form.
std::vector<Rational> realPart(const CPoly& p);
std::vector<Rational> imagPart(const CPoly& p);

std::ostream& operator<<(std::ostream& os, const CPoly& p);

}  // namespace polystab
