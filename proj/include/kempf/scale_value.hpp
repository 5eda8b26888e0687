#pragma once

// Kempf-function values stored as a sign plus an exact squared magnitude, so
// that (Gamma, v) / ||Gamma|| can be compared without square roots.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "kempf/rational_function.hpp"

namespace kempf {

/// numeric(m): values computed at a fixed integer m (m = 0 marks plain cone
/// data with no m attached). asymptotic: values are rational functions of m.
struct ValueMode {
    enum class Kind { numeric, asymptotic };

    Kind kind = Kind::numeric;
    std::int64_t m = 0;

    static ValueMode numeric(std::int64_t m) { return {Kind::numeric, m}; }
    static ValueMode asymptotic() { return {Kind::asymptotic, 0}; }

    bool is_asymptotic() const { return kind == Kind::asymptotic; }

    friend bool operator==(const ValueMode&, const ValueMode&) = default;
};

inline std::string to_string(const ValueMode& mode) {
    return mode.is_asymptotic() ? std::string("asymptotic") : "numeric(" + std::to_string(mode.m) + ")";
}

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(int s) { return s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero; }

inline const char* to_string(Sign s) {
    return s == Sign::positive ? "+" : s == Sign::negative ? "-" : "0";
}

class ScaleValue {
public:
    ScaleValue() : mag2_den_(1) {}

    ScaleValue(Sign sign, Polynomial mag2_num, Polynomial mag2_den, ValueMode mode)
        : sign_(sign), mag2_num_(std::move(mag2_num)), mag2_den_(std::move(mag2_den)), mode_(mode) {
        if (mag2_den_.eventual_sign() <= 0)
            throw Error(ErrorCode::invalid_argument, "squared-magnitude denominator must be eventually positive");
        if (mag2_num_.eventual_sign() < 0)
            throw Error(ErrorCode::invalid_argument, "squared magnitude must be non-negative");
        if (mode.kind == ValueMode::Kind::numeric && (mag2_num_.degree() > 0 || mag2_den_.degree() > 0))
            throw Error(ErrorCode::invalid_argument, "numeric-mode values are constants");
        if (mag2_num_.is_zero()) sign_ = Sign::zero;
        if (sign_ == Sign::zero) {
            mag2_num_ = Polynomial{};
            mag2_den_ = Polynomial(1);
        }
    }

    static ScaleValue zero(ValueMode mode) { return ScaleValue(Sign::zero, {}, Polynomial(1), mode); }

    static ScaleValue from_square(Sign sign, const Rational& mag2, ValueMode mode) {
        return ScaleValue(sign, Polynomial(Rational(mag2.get_num())), Polynomial(Rational(mag2.get_den())), mode);
    }

    static ScaleValue from_square(Sign sign, const RationalFunction& mag2, ValueMode mode) {
        return ScaleValue(sign, mag2.num(), mag2.den(), mode);
    }

    Sign sign() const { return sign_; }
    const Polynomial& mag2_num() const { return mag2_num_; }
    const Polynomial& mag2_den() const { return mag2_den_; }
    const ValueMode& mode() const { return mode_; }

    /// mu^2 as a rational function (a constant in numeric mode).
    RationalFunction mag2() const { return RationalFunction(mag2_num_, mag2_den_); }

    /// Structural equality; equal values in different modes are different.
    friend bool operator==(const ScaleValue& a, const ScaleValue& b) {
        return a.mode_ == b.mode_ && a.sign_ == b.sign_ && a.mag2() == b.mag2();
    }

private:
    Sign sign_ = Sign::zero;
    Polynomial mag2_num_;
    Polynomial mag2_den_;
    ValueMode mode_;
};

/// Signs first, then cross-multiplied magnitudes with the sign's direction.
inline std::strong_ordering scale_compare(const ScaleValue& a, const ScaleValue& b) {
    if (!(a.mode() == b.mode()))
        throw Error(ErrorCode::mode_mismatch, "cannot compare " + to_string(a.mode()) + " with " + to_string(b.mode()));
    if (a.sign() != b.sign()) return to_ordering(static_cast<int>(a.sign()) - static_cast<int>(b.sign()));
    if (a.sign() == Sign::zero) return std::strong_ordering::equal;
    const auto mags = poly_compare_eventual(a.mag2_num() * b.mag2_den(), b.mag2_num() * a.mag2_den());
    if (a.sign() == Sign::positive) return mags;
    return 0 <=> mags;
}

inline std::string to_string(const ScaleValue& v) {
    return std::string(to_string(v.sign())) + " " + to_string(v.mag2()) + " [" + to_string(v.mode()) + "]";
}

/// What the cone and Kempf code needs from its scalar field.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static int sign(const Rational& x) { return sgn(x); }
    static ScaleValue square_value(Sign s, const Rational& mag2, ValueMode mode) {
        return ScaleValue::from_square(s, mag2, mode);
    }
    static ValueMode default_mode() { return ValueMode::numeric(0); }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct FieldTraits<RationalFunction> {
    static int sign(const RationalFunction& x) { return x.eventual_sign(); }
    static ScaleValue square_value(Sign s, const RationalFunction& mag2, ValueMode mode) {
        return ScaleValue::from_square(s, mag2, mode);
    }
    static ValueMode default_mode() { return ValueMode::asymptotic(); }
    static std::string str(const RationalFunction& x) { return to_string(x); }
};

template <class F>
concept OrderedField = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { FieldTraits<F>::sign(a) } -> std::convertible_to<int>;
    F(0);
};

} // namespace kempf
