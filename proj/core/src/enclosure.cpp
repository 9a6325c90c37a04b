#include "polystab/enclosure.hpp"

#include <cmath>
#include <numbers>

namespace polystab {

namespace {

// Alternating Taylor bracket of atan(t) for 0 <= t <= 1: partial sums with
// an odd/even number of terms straddle the limit because the terms decrease.
// Needs terms >= 2.
Interval atanSeries(const Rational& t, int terms) {
    Rational tsq = t * t;
    Rational power = t;
    Rational sum(0);
    Rational lo(0), hi = t;
    for (int k = 0; k < terms; ++k) {
        Rational term = power / (2 * k + 1);
        sum += (k % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            hi = sum;
        else
            lo = sum;
        power *= tsq;
    }
    return {lo, hi};
}

Interval negate(const Interval& i) { return {-i.hi, -i.lo}; }

Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval scale(const Rational& s, const Interval& a) {
    if (s >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

// a / b with b strictly positive.
Interval divide(const Interval& a, const Interval& b) {
    Rational lo = a.lo < 0 ? a.lo / b.lo : a.lo / b.hi;
    Rational hi = a.hi > 0 ? a.hi / b.lo : a.hi / b.hi;
    return {lo, hi};
}

Interval piBracket(int terms) {
    Interval a5 = atanSeries(Rational(1, 5), terms);
    Interval a239 = atanSeries(Rational(1, 239), terms);
    return sub(scale(Rational(16), a5), scale(Rational(4), a239));
}

// atan with argument reduction; |reduced argument| <= 1/3 except for small
// direct inputs, so the series converges fast.
Interval atanBracket(const Rational& t, int terms) {
    if (t < 0) return negate(atanBracket(-t, terms));
    if (t == 0) return Interval::point(Rational(0));
    if (t > 1) return sub(scale(Rational(1, 2), piBracket(terms)), atanBracket(Rational(1) / t, terms));
    if (t > Rational(1, 2)) {
        // atan(t) = pi/4 - atan((1-t)/(1+t)), reduced argument in [0, 1/3)
        Rational u = (1 - t) / (1 + t);
        return sub(scale(Rational(1, 4), piBracket(terms)), atanSeries(u, terms));
    }
    return atanSeries(t, terms);
}

Interval sinSeries(const Rational& a, int terms) {
    // sin(a) for 0 <= a < 2: alternating with decreasing terms.
    Rational asq = a * a;
    Rational power = a;
    Rational factorial(1);
    Rational sum(0);
    Rational lo(0), hi = a;
    for (int k = 0; k < terms; ++k) {
        Rational term = power / factorial;
        sum += (k % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            hi = sum;
        else
            lo = sum;
        power *= asq;
        factorial *= (2 * k + 2) * (2 * k + 3);
    }
    return {lo, hi};
}

}  // namespace

Interval piEnclosure(const Rational& width) {
    for (int terms = 4;; terms *= 2) {
        Interval p = piBracket(terms);
        if (p.width() <= width) return p;
        if (terms > (1 << 20)) throw UndecidedAtPrecision("piEnclosure: width not reached");
    }
}

Interval atanEnclosure(const Rational& t, const Rational& width) {
    for (int terms = 4;; terms *= 2) {
        Interval a = atanBracket(t, terms);
        if (a.width() <= width) return a;
        if (terms > (1 << 20)) throw UndecidedAtPrecision("atanEnclosure: width not reached");
    }
}

Interval sinPiEnclosure(const Rational& x, const Rational& width) {
    if (x < 0 || x > Rational(1, 2)) throw DomainError("sinPiEnclosure: x must lie in [0, 1/2]");
    if (x == 0) return Interval::point(Rational(0));
    for (int terms = 4;; terms *= 2) {
        Interval pi = piBracket(terms);
        Interval theta = scale(x, pi);
        // sin is increasing on [0, pi/2]
        Interval s = {sinSeries(theta.lo, terms).lo, sinSeries(theta.hi, terms).hi};
        if (s.hi > 1) s.hi = Rational(1);
        if (s.width() <= width) return s;
        if (terms > (1 << 20)) throw UndecidedAtPrecision("sinPiEnclosure: width not reached");
    }
}

std::optional<Rational> argOverPiExact(const GaussianRational& z) {
    switch (argSector(z)) {
        case 1: return Rational(-1, 2);
        case 3: return Rational(0);
        case 5: return Rational(1, 2);
        case 7: return Rational(1);
        default: break;
    }
    Rational ar = absVal(z.re), ai = absVal(z.im);
    if (ar != ai) return std::nullopt;
    // diagonals
    if (signum(z.re) > 0) return signum(z.im) > 0 ? Rational(1, 4) : Rational(-1, 4);
    return signum(z.im) > 0 ? Rational(3, 4) : Rational(-3, 4);
}

Interval argOverPiEnclosure(const GaussianRational& z, const Rational& width) {
    if (auto exact = argOverPiExact(z)) return Interval::point(*exact);
    for (int terms = 8;; terms *= 2) {
        Interval pi = piBracket(terms);
        Interval theta;  // PrincipalArg(z)
        Rational ratio = z.im / z.re;
        if (signum(z.re) > 0) {
            theta = atanBracket(ratio, terms);
        } else if (signum(z.im) > 0) {
            theta = add(piBracket(terms), atanBracket(ratio, terms));
        } else {
            theta = add(negate(piBracket(terms)), atanBracket(ratio, terms));
        }
        Interval res = divide(theta, pi);
        if (res.width() <= width) return res;
        if (terms > (1 << 20)) throw UndecidedAtPrecision("argOverPiEnclosure: width not reached");
    }
}

std::optional<Rational> argOverPiExactValue(const PhaseAtInfinity& v) {
    auto a = argOverPiExact(v.direction);
    if (!a) return std::nullopt;
    return *a + 2 * v.branch;
}

Interval phaseAtInfinityEnclosure(const PhaseAtInfinity& v, const Rational& width) {
    Interval a = argOverPiEnclosure(v.direction, width);
    Rational shift(2 * v.branch);
    return {a.lo + shift, a.hi + shift};
}

namespace {

// Winding of PrincipalArg(a) + PrincipalArg(b) into (-pi, pi]:
// returns w in {-1, 0, 1} with the sum equal to PrincipalArg(a b) + 2 pi w.
long sumWinding(const GaussianRational& a, const GaussianRational& b) {
    int sb = argSector(b);
    if (sb > 3) {
        // Arg(b) > 0: sum exceeds pi iff Arg(a) > pi - Arg(b) = Arg(-conj(b))
        GaussianRational target = -(b.conj());
        return cmpArg(a, target) == Ordering::GT ? 1 : 0;
    }
    if (sb < 3) {
        // Arg(b) < 0: sum is <= -pi iff Arg(a) <= -pi - Arg(b) = Arg(-conj(b))
        GaussianRational target = -(b.conj());
        return cmpArg(a, target) != Ordering::GT ? -1 : 0;
    }
    return 0;  // b positive real
}

// Winding of PrincipalArg(a) - PrincipalArg(b): the difference equals
// PrincipalArg(a conj(b)) + 2 pi w.
long diffWinding(const GaussianRational& a, const GaussianRational& b) {
    int sb = argSector(b);
    if (sb < 3) {
        // Arg(b) < 0: difference exceeds pi iff Arg(a) > pi + Arg(b) = Arg(-b)
        return cmpArg(a, -b) == Ordering::GT ? 1 : 0;
    }
    if (sb > 3) {
        // Arg(b) > 0: difference <= -pi iff Arg(a) <= Arg(b) - pi = Arg(-b)
        return cmpArg(a, -b) != Ordering::GT ? -1 : 0;
    }
    return 0;
}

GaussianRational renormalize(const GaussianRational& z) {
    Rational s = std::max(absVal(z.re), absVal(z.im));
    return {z.re / s, z.im / s};
}

}  // namespace

PoweredDirection powWithWinding(const GaussianRational& z, unsigned long q) {
    if (z.isZero()) throw DomainError("powWithWinding: zero direction");
    PoweredDirection acc{renormalize(z), 0};
    GaussianRational base = renormalize(z);
    for (unsigned long i = 1; i < q; ++i) {
        acc.winding += sumWinding(acc.value, base);
        acc.value = renormalize(acc.value * base);
    }
    return acc;
}

PhaseReal::PhaseReal(Rational r, const GaussianRational& direction) : rat_(std::move(r)) {
    if (direction.isZero()) throw DomainError("PhaseReal: zero direction");
    if (auto exact = argOverPiExact(direction)) {
        rat_ += *exact;
    } else {
        dir_ = direction;
    }
}

PhaseReal PhaseReal::fromAtInfinity(const PhaseAtInfinity& v) {
    return PhaseReal(Rational(2 * v.branch), v.direction);
}

int PhaseReal::signum() const {
    if (!dir_) return polystab::signum(rat_);
    BigInt q = denominator(rat_);
    if (q > 65536) {
        // rat + Arg(dir)/pi is never zero here (rational plus irrational),
        // so a tight enough enclosure eventually decides; for huge
        // denominators this is far cheaper than the q-fold power below.
        Rational width(1, BigInt(1) << 64);
        for (int round = 0; round < 4; ++round) {
            Interval enc = enclosure(width);
            if (enc.lo > 0) return 1;
            if (enc.hi < 0) return -1;
            width = width * width;
        }
    }
    // exact path: sign of p/q + Arg(z)/pi = sign of (p + 2W) + Arg(z^q)/pi,
    // where the latter argument is irrational and strictly inside (-1, 1)
    BigInt p = numerator(rat_);
    unsigned long qe = q.convert_to<unsigned long>();
    PoweredDirection pw = powWithWinding(*dir_, qe);
    BigInt c = p + 2 * pw.winding;
    if (c >= 1) return 1;
    if (c <= -1) return -1;
    return polystab::signum(pw.value.im);
}

PhaseReal PhaseReal::operator-() const {
    PhaseReal r;
    r.rat_ = -rat_;
    if (dir_) r.dir_ = dir_->conj();  // canonical dir is never on the real axis
    return r;
}

PhaseReal operator+(const PhaseReal& a, const PhaseReal& b) {
    if (!a.dir_ && !b.dir_) return PhaseReal(a.rat_ + b.rat_);
    if (!a.dir_) {
        PhaseReal r = b;
        r.rat_ += a.rat_;
        return r;
    }
    if (!b.dir_) {
        PhaseReal r = a;
        r.rat_ += b.rat_;
        return r;
    }
    long w = sumWinding(*a.dir_, *b.dir_);
    return PhaseReal(a.rat_ + b.rat_ + 2 * w, *a.dir_ * *b.dir_);
}

PhaseReal operator-(const PhaseReal& a, const PhaseReal& b) {
    if (!b.dir_) {
        PhaseReal r = a;
        r.rat_ -= b.rat_;
        return r;
    }
    if (!a.dir_) return a + (-b);
    long w = diffWinding(*a.dir_, *b.dir_);
    return PhaseReal(a.rat_ - b.rat_ + 2 * w, *a.dir_ * b.dir_->conj());
}

PhaseReal PhaseReal::absolute() const { return signum() < 0 ? -*this : *this; }

Ordering PhaseReal::compare(const PhaseReal& other) const {
    int s = (*this - other).signum();
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

Ordering PhaseReal::compare(const Rational& other) const { return compare(PhaseReal(other)); }

Interval PhaseReal::enclosure(const Rational& width) const {
    if (!dir_) return Interval::point(rat_);
    Interval a = argOverPiEnclosure(*dir_, width);
    return {rat_ + a.lo, rat_ + a.hi};
}

double PhaseReal::toDouble() const {
    double v = polystab::toDouble(rat_);
    if (dir_) {
        std::complex<double> z = dir_->toComplexDouble();
        v += std::atan2(z.imag(), z.real()) / std::numbers::pi;
    }
    return v;
}

}  // namespace polystab
