#pragma once

// The field Q(m) ordered by eventual dominance: f < g iff f(m) < g(m) for m >> 0.

#include <compare>
#include <string>
#include <utility>

#include "kempf/poly.hpp"

namespace kempf {

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {} // NOLINT
    RationalFunction(int c) : RationalFunction(Rational(c)) {} // NOLINT
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {} // NOLINT

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorCode::invalid_argument, "rational function with zero denominator");
        normalize();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    /// Always monic.
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// Sign for m >> 0; the denominator is monic so only the numerator matters.
    int eventual_sign() const { return num_.eventual_sign(); }

    /// Evaluation at a point where the denominator does not vanish.
    Rational operator()(const Rational& m) const {
        const Rational d = den_(m);
        if (d == 0) throw Error(ErrorCode::bad_m, "denominator vanishes at m = " + m.get_str());
        return num_(m) / d;
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    // Sums and products follow the usual gcd-splitting recipes so that the full
    // normalization only runs when the denominators share a factor.
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b, 1); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, b, -1); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.degree() == 0 && b.den_.degree() == 0) return reduced(a.num_ * b.num_, Polynomial(1));
        const Polynomial g1 = common(a.num_, b.den_), g2 = common(b.num_, a.den_);
        return reduced(quo(a.num_, g1) * quo(b.num_, g2), quo(a.den_, g2) * quo(b.den_, g1));
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "division by the zero rational function");
        return a * b.inverse();
    }

    RationalFunction inverse() const {
        if (is_zero()) throw Error(ErrorCode::invalid_argument, "division by the zero rational function");
        return reduced(den_, num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    // Normalized representation makes equality structural.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
        return poly_compare_eventual(a.num_ * b.den_, b.num_ * a.den_);
    }

private:
    static Polynomial common(const Polynomial& a, const Polynomial& b) {
        return a.degree() > 0 && b.degree() > 0 ? gcd(a, b) : Polynomial(1);
    }

    static Polynomial quo(const Polynomial& a, const Polynomial& g) {
        if (g.degree() > 0) return divmod(a, g).first;
        return g.leading() == 1 ? a : a * (1 / g.leading());
    }

    /// num/den already coprime; only makes den monic.
    static RationalFunction reduced(Polynomial num, Polynomial den) {
        RationalFunction r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.monic_den();
        return r;
    }

    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, int s) {
        const Polynomial bn = s > 0 ? b.num_ : -b.num_;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + bn, a.den_);
        // A polynomial summand keeps the other denominator coprime.
        if (b.den_.degree() == 0) return reduced(a.num_ + bn * a.den_, a.den_);
        if (a.den_.degree() == 0) return reduced(a.num_ * b.den_ + bn, b.den_);
        const Polynomial g = common(a.den_, b.den_);
        if (g.degree() == 0) return reduced(a.num_ * b.den_ + bn * a.den_, a.den_ * b.den_);
        const Polynomial da = quo(a.den_, g), db = quo(b.den_, g);
        const Polynomial num = a.num_ * db + bn * da;
        if (num.is_zero()) return {};
        // Only factors of g can be shared with the new numerator.
        const Polynomial h = gcd(num, g);
        return reduced(quo(num, h), da * quo(b.den_, h));
    }

    void monic_den() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            const Rational inv = 1 / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            Polynomial g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            const Rational inv = 1 / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

inline std::string to_string(const RationalFunction& f) {
    if (f.den() == Polynomial(1)) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

} // namespace kempf
