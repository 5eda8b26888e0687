#pragma once

// Exact polynomials in one formal variable m with the "for m >> 0" ordering.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kempf/rational.hpp"

namespace kempf {

/// Largest degree accepted for Hilbert polynomials read from instance data.
inline constexpr int max_input_degree = 16;

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { // NOLINT: constants convert implicitly
        if (c != 0) coeffs_.push_back(c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {} // NOLINT

    /// Coefficients lowest degree first; trailing zeros are dropped.
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const Rational& c, std::size_t degree) {
        if (c == 0) return {};
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// The formal variable m.
    static Polynomial variable() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Sign of p(m) for all sufficiently large m.
    int eventual_sign() const { return coeffs_.empty() ? 0 : sgn(coeffs_.back()); }

    /// Horner evaluation.
    Rational operator()(const Rational& m) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division over Q; divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
        Polynomial rem = a;
        if (a.degree() < b.degree()) return {Polynomial{}, rem};
        std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        const Rational lead = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const Rational factor = rem.leading() / lead;
            quot[shift] = factor;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem.coeffs_[j + shift] -= factor * b.coeffs_[j];
            rem.coeffs_.pop_back(); // leading term cancels exactly
            rem.trim();
        }
        return {Polynomial(std::move(quot)), rem};
    }

    /// Divides by the leading coefficient (zero stays zero).
    Polynomial monic() const {
        if (is_zero()) return {};
        Polynomial r = *this;
        const Rational lead = leading();
        for (auto& c : r.coeffs_) c /= lead;
        return r;
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Cauchy bound: every real root of a nonzero polynomial lies in (-B, B).
    Rational root_bound() const {
        if (coeffs_.size() <= 1) return 1;
        Rational best = 0;
        for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
            Rational ratio = abs(coeffs_[i] / coeffs_.back());
            if (ratio > best) best = ratio;
        }
        return best + 1;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::strong_ordering to_ordering(int s) {
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

/// Eventual ordering: P <= Q iff P(m) <= Q(m) for m >> 0, i.e. the sign of the
/// top nonzero coefficient of P - Q.
inline std::strong_ordering poly_compare_eventual(const Polynomial& p, const Polynomial& q) {
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    for (std::size_t k = n; k-- > 0;) {
        const int s = sgn(Rational(p.coeff(k) - q.coeff(k)));
        if (s != 0) return to_ordering(s);
    }
    return std::strong_ordering::equal;
}

/// Eventual ordering of p/rp against q/rq (rp, rq > 0), cross-multiplied.
inline std::strong_ordering reduced_compare(const Polynomial& p, const Rational& rp, const Polynomial& q,
                                            const Rational& rq) {
    if (rp <= 0 || rq <= 0) throw Error(ErrorCode::invalid_argument, "reduced_compare needs positive ranks");
    return poly_compare_eventual(p * rq, q * rp);
}

inline std::string to_string(const Polynomial& p, char var = 'm') {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (c < 0) {
            os << '-';
            c = -c;
        } else if (!first) {
            os << "+";
        }
        if (k == 0)
            os << c.get_str();
        else if (c.get_den() != 1)
            os << '(' << c.get_str() << ')';
        else if (c != 1)
            os << c.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

} // namespace kempf
