#pragma once

#include <complex>

#include "polystab/rational.hpp"

namespace polystab {

// Element of Q(i); componentwise equality.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    explicit GaussianRational(long r) : re(r), im(0) {}

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // re^2 + im^2, the exact squared modulus.
    Rational normSq() const { return re * re + im * im; }

    std::complex<double> toComplexDouble() const { return {toDouble(re), toDouble(im)}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
        return {s * a.re, s * a.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const Rational& s) { return s * a; }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
};

// a / b for b != 0, exact.
GaussianRational divide(const GaussianRational& a, const GaussianRational& b);

// "p/q" or "p/q+r/si" style rendering, mirroring the CLI literal syntax.
std::string formatGaussian(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Im(a * conj(b)) = im_a re_b - re_a im_b; the sign decides which principal
// argument is bigger when both lie in a common open quadrant.
inline Rational crossIm(const GaussianRational& a, const GaussianRational& b) {
    return a.im * b.re - a.re * b.im;
}

inline GaussianRational gaussianOne() { return GaussianRational(Rational(1)); }
inline GaussianRational gaussianI() { return {Rational(0), Rational(1)}; }

}  // namespace polystab
