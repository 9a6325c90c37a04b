#include "polystab/cpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polystab {

std::string formatGaussian(const GaussianRational& z) {
    if (z.im == 0) return formatRational(z.re);
    std::string imPart = formatRational(z.im) + "i";
    if (z.re == 0) return imPart;
    return formatRational(z.re) + (z.im > 0 ? "+" : "") + imPart;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << formatGaussian(z); }

std::ostream& operator<<(std::ostream& os, const CPoly& p) {
    if (p.isZero()) return os << "0";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) os << " + ";
        os << "(" << p.coeff(static_cast<std::size_t>(k)) << ")";
        if (k == 1) os << "*m";
        if (k > 1) os << "*m^" << k;
    }
    return os;
}

std::string formatRational(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

std::optional<Rational> parseRational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto validInt = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!validInt(s)) return std::nullopt;
            std::string digits(s);
            return Rational(BigInt(digits));
        }
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!validInt(num) || !validInt(den)) return std::nullopt;
        std::string numStr(num), denStr(den);
        BigInt d(denStr);
        if (d == 0) return std::nullopt;
        return Rational(BigInt(numStr), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

GaussianRational divide(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.normSq();
    if (n == 0) throw std::invalid_argument("division by zero Gaussian rational");
    GaussianRational t = a * b.conj();
    return {t.re / n, t.im / n};
}

CPoly::CPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void CPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

CPoly CPoly::constant(GaussianRational c) {
    CPoly p;
    if (!c.isZero()) p.coeffs_.push_back(std::move(c));
    return p;
}

CPoly CPoly::monomial(GaussianRational c, std::size_t k) {
    CPoly p;
    if (!c.isZero()) {
        p.coeffs_.assign(k, GaussianRational{});
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

CPoly CPoly::fromReal(const std::vector<Rational>& coeffs) {
    std::vector<GaussianRational> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(r);
    return CPoly(std::move(c));
}

const GaussianRational& CPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

GaussianRational CPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussianRational{};
}

CPoly CPoly::conjCoeffs() const {
    CPoly p;
    p.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) p.coeffs_.push_back(c.conj());
    return p;  // conjugation never zeroes a nonzero leading coefficient
}

GaussianRational CPoly::eval(const Rational& m) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * GaussianRational(m) + *it;
    return acc;
}

std::complex<double> CPoly::evalDouble(double m) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + it->toComplexDouble();
    return acc;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return CPoly(std::move(c));
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }

CPoly operator-(const CPoly& a) {
    std::vector<GaussianRational> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(-x);
    return CPoly(std::move(c));
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.isZero() || b.isZero()) return CPoly();
    std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return CPoly(std::move(c));
}

CPoly operator*(const GaussianRational& s, const CPoly& a) {
    std::vector<GaussianRational> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(s * x);
    return CPoly(std::move(c));
}

CPoly operator*(const Rational& s, const CPoly& a) { return GaussianRational(s) * a; }

std::vector<Rational> realPart(const CPoly& p) {
    std::vector<Rational> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(c.re);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Rational> imagPart(const CPoly& p) {
    std::vector<Rational> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(c.im);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace polystab
