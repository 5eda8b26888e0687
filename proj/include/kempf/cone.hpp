#pragma once

// Maximization of mu_v(Gamma) = (Gamma, v) / ||Gamma|| over the closed monotone
// cone {Gamma_1 <= ... <= Gamma_{t+1}}, for the diagonal inner product with
// weights b^i, by the graph/envelope construction.
//
// The graph has vertices (b_i, w_i) with b_i = b^1 + ... + b^i and
// w_i = -(b^1 v_1 + ... + b^i v_i). Its least concave majorant w~ (pinned at
// both ends, where w = 0) has slopes -Gamma_i, and that Gamma is the maximizer.
// All code is generic over an ordered field so the same construction runs on
// exact rationals (fixed m) and on Q(m) with the eventual ordering.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "kempf/scale_value.hpp"

namespace kempf {

template <OrderedField F>
struct ConeInstance {
    std::vector<F> b; // inner-product diagonal, all > 0
    std::vector<F> v; // objective, sum_i b^i v_i = 0, v != 0
};

template <OrderedField F>
struct GraphData {
    std::vector<F> b;        // cumulative widths b_0 = 0, ..., b_{t+1}
    std::vector<F> w;        // heights w_0 = 0, ..., w_{t+1} = 0
    std::vector<F> envelope; // w~_0, ..., w~_{t+1}
    std::vector<F> gamma;    // Gamma_1, ..., Gamma_{t+1}
};

template <OrderedField F>
struct Maximizer {
    std::vector<F> gamma;
    ScaleValue value;
};

/// mu_v <= 0 on the whole closed cone.
struct Nonpositive {};

template <OrderedField F>
using Direction = std::variant<Maximizer<F>, Nonpositive>;

namespace detail {

template <OrderedField F>
int sign(const F& x) {
    return FieldTraits<F>::sign(x);
}

template <OrderedField F>
F inner(const std::vector<F>& b, const std::vector<F>& x, const std::vector<F>& y) {
    F acc(0);
    for (std::size_t i = 0; i < b.size(); ++i) acc += b[i] * x[i] * y[i];
    return acc;
}

template <OrderedField F>
void require_in_cone(const std::vector<F>& gamma) {
    for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
        if (sign(F(gamma[i + 1] - gamma[i])) < 0)
            throw Error(ErrorCode::not_in_cone, "Gamma has a strict descent at position " + std::to_string(i + 1));
}

} // namespace detail

/// Throws InvalidInstance unless lengths agree, b > 0, v != 0 and sum b^i v_i = 0.
template <OrderedField F>
void validate_instance(const ConeInstance<F>& inst) {
    if (inst.b.empty() || inst.b.size() != inst.v.size())
        throw Error(ErrorCode::invalid_instance, "b and v must be non-empty and of equal length");
    F total(0);
    bool nonzero = false;
    for (std::size_t i = 0; i < inst.b.size(); ++i) {
        if (detail::sign(inst.b[i]) <= 0)
            throw Error(ErrorCode::invalid_instance, "b^" + std::to_string(i + 1) + " is not positive");
        total += inst.b[i] * inst.v[i];
        nonzero = nonzero || detail::sign(inst.v[i]) != 0;
    }
    if (!nonzero) throw Error(ErrorCode::invalid_instance, "v is the zero vector");
    if (detail::sign(total) != 0) throw Error(ErrorCode::invalid_instance, "sum of b^i v_i is not zero");
}

/// Cumulative graph points (b_i, w_i), i = 0..t+1. Envelope and gamma are left empty.
template <OrderedField F>
GraphData<F> graph_points(const ConeInstance<F>& inst) {
    validate_instance(inst);
    GraphData<F> g;
    g.b.reserve(inst.b.size() + 1);
    g.w.reserve(inst.b.size() + 1);
    g.b.emplace_back(0);
    g.w.emplace_back(0);
    for (std::size_t i = 0; i < inst.b.size(); ++i) {
        g.b.push_back(g.b.back() + inst.b[i]);
        g.w.push_back(g.w.back() - inst.b[i] * inst.v[i]);
    }
    return g;
}

/// Fills envelope and gamma from the points: upper hull by a monotone stack,
/// collinear vertices dropped, then linear interpolation at every b_i.
template <OrderedField F>
void concave_envelope(GraphData<F>& g) {
    const std::size_t n = g.b.size();
    std::vector<std::size_t> hull;
    hull.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        while (hull.size() >= 2) {
            const std::size_t i = hull[hull.size() - 2];
            const std::size_t j = hull.back();
            // j is kept only if it lies strictly above the chord from i to k.
            const F cross = (g.b[j] - g.b[i]) * (g.w[k] - g.w[i]) - (g.w[j] - g.w[i]) * (g.b[k] - g.b[i]);
            if (detail::sign(cross) >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    g.envelope.assign(n, F(0));
    g.gamma.assign(n - 1, F(0));
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const std::size_t i = hull[h];
        const std::size_t k = hull[h + 1];
        const F slope = (g.w[k] - g.w[i]) / (g.b[k] - g.b[i]);
        const F gamma = -slope;
        g.envelope[i] = g.w[i];
        for (std::size_t j = i + 1; j < k; ++j) g.envelope[j] = g.w[i] + slope * (g.b[j] - g.b[i]);
        for (std::size_t j = i; j < k; ++j) g.gamma[j] = gamma;
    }
    g.envelope[hull.back()] = g.w[hull.back()];
}

template <OrderedField F>
GraphData<F> envelope_graph(const ConeInstance<F>& inst) {
    GraphData<F> g = graph_points(inst);
    concave_envelope(g);
    return g;
}

/// sign and square of (Gamma, v)_b / ||Gamma||_b.
template <OrderedField F>
ScaleValue mu_value(const ConeInstance<F>& inst, const std::vector<F>& gamma,
                    ValueMode mode = FieldTraits<F>::default_mode()) {
    if (gamma.size() != inst.b.size()) throw Error(ErrorCode::length_mismatch, "Gamma has the wrong length");
    detail::require_in_cone(gamma);
    const F norm2 = detail::inner(inst.b, gamma, gamma);
    if (detail::sign(norm2) == 0) throw Error(ErrorCode::zero_gamma, "Gamma is the zero vector");
    const F ip = detail::inner(inst.b, gamma, inst.v);
    const F mag2 = ip * ip / norm2;
    return FieldTraits<F>::square_value(sign_of(detail::sign(ip)), mag2, mode);
}

template <OrderedField F>
Direction<F> kempf_direction(const ConeInstance<F>& inst, ValueMode mode = FieldTraits<F>::default_mode()) {
    GraphData<F> g = envelope_graph(inst);
    bool flat = true;
    for (const F& x : g.envelope) flat = flat && detail::sign(x) == 0;
    if (flat) return Nonpositive{};
    // Gamma is the projection of v, so (Gamma, v) = ||Gamma||^2 = mu^2 > 0.
    // Gamma is constant on hull segments; sum block width times value squared.
    F norm2(0);
    for (std::size_t i = 0; i < g.gamma.size();) {
        std::size_t k = i + 1;
        while (k < g.gamma.size() && g.gamma[k] == g.gamma[i]) ++k;
        norm2 += (g.b[k] - g.b[i]) * g.gamma[i] * g.gamma[i];
        i = k;
    }
    ScaleValue value = FieldTraits<F>::square_value(Sign::positive, norm2, mode);
    return Maximizer<F>{std::move(g.gamma), std::move(value)};
}

/// Optimality certificate for the projection Gamma of v onto the closed cone:
/// (v - Gamma, Gamma) = 0 and (v - Gamma, g) <= 0 for the generators g of the
/// cone (step vectors and +-(1, ..., 1)).
template <OrderedField F>
bool separation_certificate(const ConeInstance<F>& inst, const std::vector<F>& gamma) {
    validate_instance(inst);
    if (gamma.size() != inst.b.size()) throw Error(ErrorCode::length_mismatch, "Gamma has the wrong length");
    detail::require_in_cone(gamma);
    const std::size_t n = gamma.size();
    std::vector<F> weighted(n); // b^i (v_i - Gamma_i)
    F complementary(0);
    for (std::size_t i = 0; i < n; ++i) {
        weighted[i] = inst.b[i] * (inst.v[i] - gamma[i]);
        complementary += weighted[i] * gamma[i];
    }
    if (detail::sign(complementary) != 0) return false;
    // Suffix sums give (v - Gamma, g^(k)); the full sum is the all-ones test.
    F suffix(0);
    for (std::size_t k = n; k-- > 1;) {
        suffix += weighted[k];
        if (detail::sign(suffix) > 0) return false;
    }
    suffix += weighted[0];
    return detail::sign(suffix) == 0;
}

} // namespace kempf
