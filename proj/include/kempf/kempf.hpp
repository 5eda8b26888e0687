#pragma once

// The GIT side: the cone vector of a chain, the Kempf function and
// Hilbert-Mumford weights, and the maximization over all chains of a lattice.
//
// chain_vector returns v_i = [r^i P - r P^i + a (eps^i P - P^i)] / (P^i P) and
// b^i = P^i, with a = r delta / (P - delta) for pairs and a = 0 otherwise.
// The factors m^(n+1) on v and m^(-n) on b are positive scalars at fixed m;
// they are left out unless power_scaling is requested. Without them the cone
// value (Gamma, v)_b / ||Gamma||_b is exactly the Kempf function of the
// weighted filtration whose Gamma is Gamma.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "kempf/cone.hpp"
#include "kempf/hn.hpp"

namespace kempf {

// ---------------------------------------------------------------------------
// Field plumbing: numeric mode evaluates at the integer m, asymptotic mode
// keeps m formal.

template <OrderedField F>
struct ModeField;

template <>
struct ModeField<Rational> {
    static void check(const ValueMode& mode) {
        if (mode.is_asymptotic() || mode.m < 1)
            throw Error(ErrorCode::invalid_argument, "numeric evaluation needs a mode numeric(m) with m >= 1");
    }
    static Rational lift(const Polynomial& p, const ValueMode& mode) { return p(Rational(mode.m)); }
    static Rational variable(const ValueMode& mode) { return Rational(mode.m); }
};

template <>
struct ModeField<RationalFunction> {
    static void check(const ValueMode& mode) {
        if (!mode.is_asymptotic()) throw Error(ErrorCode::invalid_argument, "rational-function evaluation is asymptotic");
    }
    static RationalFunction lift(const Polynomial& p, const ValueMode&) { return RationalFunction(p); }
    static RationalFunction variable(const ValueMode&) { return RationalFunction::variable(); }
};

template <OrderedField F>
F power(const F& x, int k) {
    F acc(1);
    for (int i = 0; i < k; ++i) acc *= x;
    return acc;
}

struct ChainVectorOptions {
    bool power_scaling = false; // multiply v by m^(n+1) and b by m^(-n)
};

namespace detail {

inline void require_positive(int sign, const ValueMode& mode, const std::string& what) {
    if (sign > 0) return;
    if (mode.is_asymptotic()) throw Error(ErrorCode::invalid_instance, what + " is not eventually positive");
    throw Error(ErrorCode::bad_m, what + " is not positive at m = " + std::to_string(mode.m));
}

} // namespace detail

/// Cone data (b, v) of a chain, indexed by node positions (bottom excluded).
template <OrderedField F>
ConeInstance<F> chain_vector_idx(const std::vector<std::size_t>& chain, const SubobjectLattice& lat,
                                 const StabilityParams& params, const ValueMode& mode, ChainVectorOptions opt = {}) {
    ModeField<F>::check(mode);
    lat.require_well_formed();
    if (chain.empty() || chain.back() != lat.top())
        throw Error(ErrorCode::invalid_argument, "chain must end at the ambient node");
    const ObjectData& E = lat.data(lat.top());
    const F P = ModeField<F>::lift(E.hilbert, mode);
    detail::require_positive(FieldTraits<F>::sign(P), mode, "P");
    const F r(E.rank);
    F a(0);
    const bool pair = params.mode == StabilityMode::pair;
    if (pair) {
        const F delta = ModeField<F>::lift(params.delta, mode);
        const F gap = P - delta;
        detail::require_positive(FieldTraits<F>::sign(gap), mode, "P - delta");
        a = r * delta / gap;
    }
    ConeInstance<F> inst;
    std::size_t prev = lat.bottom();
    for (std::size_t cur : chain) {
        if (!lat.less(prev, cur)) throw Error(ErrorCode::invalid_argument, "chain is not strictly increasing");
        const ObjectData& lo = lat.data(prev);
        const ObjectData& hi = lat.data(cur);
        const F Pi = ModeField<F>::lift(hi.hilbert - lo.hilbert, mode);
        detail::require_positive(FieldTraits<F>::sign(Pi), mode, "P^i for node " + std::to_string(lat.id(cur)));
        const F ri(hi.rank - lo.rank);
        F num = ri * P - r * Pi;
        if (pair) num += a * (F(hi.eps - lo.eps) * P - Pi);
        inst.v.push_back(num / (Pi * P));
        inst.b.push_back(Pi);
        prev = cur;
    }
    if (opt.power_scaling) {
        const int n = params.dim_x;
        const F m = ModeField<F>::variable(mode);
        const F up = power(m, n + 1);
        const F down = F(1) / power(m, n);
        for (auto& x : inst.v) x *= up;
        for (auto& x : inst.b) x *= down;
    }
    F total(0);
    for (std::size_t i = 0; i < inst.b.size(); ++i) total += inst.b[i] * inst.v[i];
    if (FieldTraits<F>::sign(total) != 0) throw Error(ErrorCode::invalid_instance, "chain vector does not sum to zero");
    return inst;
}

template <OrderedField F>
ConeInstance<F> chain_vector(const Filtration& chain, const SubobjectLattice& lat, const StabilityParams& params,
                             const ValueMode& mode, ChainVectorOptions opt = {}) {
    return chain_vector_idx<F>(detail::to_indices(lat, chain), lat, params, mode, opt);
}

/// p = dim V: P(m) in numeric mode, P itself in asymptotic mode.
template <OrderedField F>
F dim_v(const SubobjectLattice& lat, const ValueMode& mode) {
    return ModeField<F>::lift(lat.data(lat.top()).hilbert, mode);
}

/// Gamma_1 = 0, Gamma_{i+1} = Gamma_i + p n_i, then shifted so that
/// sum Gamma_i dim V^i = 0.
template <OrderedField F>
std::vector<F> gamma_from_weights(const std::vector<F>& weights, const std::vector<F>& b, const F& p) {
    if (weights.size() + 1 != b.size()) throw Error(ErrorCode::length_mismatch, "need one weight per proper filter");
    std::vector<F> gamma{F(0)};
    for (const F& n : weights) {
        if (FieldTraits<F>::sign(n) <= 0) throw Error(ErrorCode::non_positive_weight, "weights must be positive");
        gamma.push_back(gamma.back() + p * n);
    }
    F mass(0), total(0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        mass += b[i] * gamma[i];
        total += b[i];
    }
    const F shift = mass / total;
    for (auto& g : gamma) g -= shift;
    return gamma;
}

/// mu(V., n.) as sign and square, with the global m-power factor dropped.
template <OrderedField F>
ScaleValue kempf_function(const Filtration& chain, const std::vector<F>& weights, const SubobjectLattice& lat,
                          const StabilityParams& params, const ValueMode& mode) {
    const ConeInstance<F> inst = chain_vector<F>(chain, lat, params, mode);
    const std::vector<F> gamma = gamma_from_weights(weights, inst.b, dim_v<F>(lat, mode));
    return mu_value(inst, gamma, mode);
}

// ---------------------------------------------------------------------------
// Hilbert-Mumford weights, closed form and Gamma form.

namespace detail {

inline void check_weights(const std::vector<Rational>& weights) {
    for (const auto& n : weights)
        if (n <= 0) throw Error(ErrorCode::non_positive_weight, "weights must be positive");
}

inline std::vector<Rational> gamma_steps(const std::vector<Rational>& weights, const Rational& p) {
    std::vector<Rational> gamma{Rational(0)};
    for (const auto& n : weights) gamma.push_back(gamma.back() + p * n);
    return gamma;
}

} // namespace detail

/// sum_i n_i (r dim V_i - r_i dim V) over the proper filters i = 1..t.
inline Rational git_weight_closed(const std::vector<Rational>& dims, const std::vector<int>& ranks,
                                  const std::vector<Rational>& weights, const Rational& p, int r) {
    if (dims.size() != ranks.size() || dims.size() != weights.size())
        throw Error(ErrorCode::length_mismatch, "dims, ranks and weights differ in length");
    Rational acc = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) acc += weights[i] * (r * dims[i] - ranks[i] * p);
    return acc;
}

/// sum_i (Gamma_i / dim V)(r^i dim V - r dim V^i) over i = 1..t+1, with V_{t+1} = V.
inline Rational git_weight_gamma_form(const std::vector<Rational>& dims, const std::vector<int>& ranks,
                                      const std::vector<Rational>& weights, const Rational& p, int r) {
    if (dims.size() != ranks.size() || dims.size() != weights.size())
        throw Error(ErrorCode::length_mismatch, "dims, ranks and weights differ in length");
    const auto gamma = detail::gamma_steps(weights, p);
    Rational acc = 0, prev_dim = 0;
    int prev_rank = 0;
    for (std::size_t i = 0; i <= dims.size(); ++i) {
        const Rational dim = i < dims.size() ? dims[i] : p;
        const int rank = i < dims.size() ? ranks[i] : r;
        acc += gamma[i] / p * ((rank - prev_rank) * p - r * (dim - prev_dim));
        prev_dim = dim;
        prev_rank = rank;
    }
    return acc;
}

inline Rational git_weight(const std::vector<Rational>& dims, const std::vector<int>& ranks,
                           const std::vector<Rational>& weights, const Rational& p, int r) {
    detail::check_weights(weights);
    Rational closed = git_weight_closed(dims, ranks, weights, p, r);
    if (closed != git_weight_gamma_form(dims, ranks, weights, p, r))
        throw std::logic_error("Hilbert-Mumford weight: closed and Gamma forms disagree");
    return closed;
}

namespace detail {

inline void check_eps(const std::vector<int>& eps) {
    int prev = 0;
    for (int e : eps) {
        if ((e != 0 && e != 1) || e < prev) throw Error(ErrorCode::non_monotone_eps, "eps flags must be non-decreasing 0/1");
        prev = e;
    }
}

} // namespace detail

/// sum_i n_i (dim V_i - eps_i dim V).
inline Rational git_weight_pair_closed(const std::vector<Rational>& dims, const std::vector<int>& eps,
                                       const std::vector<Rational>& weights, const Rational& p) {
    if (dims.size() != eps.size() || dims.size() != weights.size())
        throw Error(ErrorCode::length_mismatch, "dims, eps and weights differ in length");
    Rational acc = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) acc += weights[i] * (dims[i] - eps[i] * p);
    return acc;
}

/// sum_i (Gamma_i / dim V)(eps^i dim V - dim V^i), with eps_{t+1} = 1 (phi != 0).
inline Rational git_weight_pair_gamma_form(const std::vector<Rational>& dims, const std::vector<int>& eps,
                                           const std::vector<Rational>& weights, const Rational& p) {
    if (dims.size() != eps.size() || dims.size() != weights.size())
        throw Error(ErrorCode::length_mismatch, "dims, eps and weights differ in length");
    const auto gamma = detail::gamma_steps(weights, p);
    Rational acc = 0, prev_dim = 0;
    int prev_eps = 0;
    for (std::size_t i = 0; i <= dims.size(); ++i) {
        const Rational dim = i < dims.size() ? dims[i] : p;
        const int e = i < dims.size() ? eps[i] : 1;
        acc += gamma[i] / p * ((e - prev_eps) * p - (dim - prev_dim));
        prev_dim = dim;
        prev_eps = e;
    }
    return acc;
}

inline Rational git_weight_pair(const std::vector<Rational>& dims, const std::vector<int>& eps,
                                const std::vector<Rational>& weights, const Rational& p) {
    detail::check_eps(eps);
    detail::check_weights(weights);
    Rational closed = git_weight_pair_closed(dims, eps, weights, p);
    if (closed != git_weight_pair_gamma_form(dims, eps, weights, p))
        throw std::logic_error("pair Hilbert-Mumford weight: closed and Gamma forms disagree");
    return closed;
}

// ---------------------------------------------------------------------------
// Maximization over the chains of a lattice.

template <OrderedField F>
struct WeightedFiltration {
    Filtration chain;
    std::vector<F> gamma;       // strictly increasing, sum Gamma_i dim V^i = 0
    std::vector<F> weights;     // n_i = (Gamma_{i+1} - Gamma_i) / p
    std::vector<F> gamma_small; // (r / P) Gamma_i
};

enum class Verdict { unstable, semistable };

inline const char* to_string(Verdict v) { return v == Verdict::unstable ? "unstable" : "semistable"; }

template <OrderedField F>
struct KempfResult {
    WeightedFiltration<F> filtration;
    ScaleValue value;
    Verdict verdict = Verdict::semistable;
    std::size_t chains_examined = 0;
};

struct KempfOptions {
    bool parallel = false;
    ChainVectorOptions vector;
    std::size_t chain_cap = max_enumerated_chains;
};

namespace detail {

template <OrderedField F>
struct ChainOutcome {
    bool positive = false;
    std::vector<std::size_t> chain; // collapsed
    std::vector<F> gamma;           // collapsed
    ScaleValue value;
};

/// Drops the filters where Gamma does not jump (zero weight).
template <OrderedField F>
ChainOutcome<F> collapse(const std::vector<std::size_t>& chain, std::vector<F> gamma, ScaleValue value) {
    ChainOutcome<F> out;
    out.positive = true;
    out.value = std::move(value);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const bool last = i + 1 == chain.size();
        if (last || FieldTraits<F>::sign(F(gamma[i + 1] - gamma[i])) != 0) {
            out.chain.push_back(chain[i]);
            out.gamma.push_back(gamma[i]);
        }
    }
    return out;
}

template <OrderedField F>
ChainOutcome<F> evaluate_chain(const std::vector<std::size_t>& chain, const SubobjectLattice& lat,
                               const StabilityParams& params, const ValueMode& mode, const ChainVectorOptions& opt) {
    ConeInstance<F> inst = chain_vector_idx<F>(chain, lat, params, mode, opt);
    bool zero = true;
    for (const F& x : inst.v) zero = zero && FieldTraits<F>::sign(x) == 0;
    if (zero) return {};
    auto dir = kempf_direction(inst, mode);
    if (std::holds_alternative<Nonpositive>(dir)) return {};
    auto& mx = std::get<Maximizer<F>>(dir);
    return collapse(chain, std::move(mx.gamma), std::move(mx.value));
}

} // namespace detail

/// Maximum of the Kempf function over all maximal chains and positive weights.
template <OrderedField F>
KempfResult<F> kempf_filtration(const SubobjectLattice& lat, const StabilityParams& params, const ValueMode& mode,
                                const KempfOptions& opt = {}) {
    ModeField<F>::check(mode);
    lat.require_well_formed();
    std::vector<std::vector<std::size_t>> chains;
    for_each_chain(lat, true, [&](const std::vector<std::size_t>& c) { chains.push_back(c); }, opt.chain_cap);

    std::vector<detail::ChainOutcome<F>> outcomes(chains.size());
    std::vector<std::exception_ptr> errors(chains.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            try {
                outcomes[k] = detail::evaluate_chain<F>(chains[k], lat, params, mode, opt.vector);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        opt.parallel ? std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, chains.size()) : 1;
    if (threads <= 1) {
        work(0, chains.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t block = (chains.size() + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = t * block;
            const std::size_t end = std::min(chains.size(), begin + block);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    // Sequential reduction in enumeration order keeps the result schedule-independent.
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    const detail::ChainOutcome<F>* best = nullptr;
    std::vector<const detail::ChainOutcome<F>*> tied;
    for (const auto& oc : outcomes) {
        if (!oc.positive) continue;
        if (!best) {
            best = &oc;
            tied = {&oc};
            continue;
        }
        const auto c = scale_compare(oc.value, best->value);
        if (c == std::strong_ordering::greater) {
            best = &oc;
            tied = {&oc};
        } else if (c == std::strong_ordering::equal) {
            tied.push_back(&oc);
        }
    }

    KempfResult<F> res;
    res.chains_examined = chains.size();
    const F p = dim_v<F>(lat, mode);
    const F r(lat.data(lat.top()).rank);
    if (!best) {
        res.verdict = Verdict::semistable;
        res.value = ScaleValue::zero(mode);
        res.filtration.chain.chain = {lat.id(lat.top())};
        res.filtration.gamma = {F(0)};
        res.filtration.gamma_small = {F(0)};
        return res;
    }
    for (const auto* oc : tied) {
        if (oc->chain != best->chain) {
            std::string a, b;
            for (auto i : best->chain) a += " " + std::to_string(lat.id(i));
            for (auto i : oc->chain) b += " " + std::to_string(lat.id(i));
            throw Error(ErrorCode::uniqueness_violated,
                        "distinct filtrations [" + a + " ] and [" + b + " ] attain the maximal Kempf value");
        }
    }
    res.verdict = Verdict::unstable;
    res.value = best->value;
    res.filtration.chain = detail::to_filtration(lat, best->chain);
    res.filtration.gamma = best->gamma;
    for (std::size_t i = 0; i + 1 < best->gamma.size(); ++i)
        res.filtration.weights.push_back((best->gamma[i + 1] - best->gamma[i]) / p);
    for (const F& g : best->gamma) res.filtration.gamma_small.push_back(r / p * g);
    return res;
}

// ---------------------------------------------------------------------------
// Invariants of the maximizer.

struct CheckResult {
    bool ok = true;
    std::string detail;

    void fail(std::string why) {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

/// v of the maximizing chain is strictly increasing.
template <OrderedField F>
CheckResult convexity_check(const KempfResult<F>& res, const SubobjectLattice& lat, const StabilityParams& params,
                            const ValueMode& mode) {
    CheckResult out;
    if (res.verdict == Verdict::semistable) return out;
    const auto inst = chain_vector<F>(res.filtration.chain, lat, params, mode);
    for (std::size_t i = 0; i + 1 < inst.v.size(); ++i)
        if (FieldTraits<F>::sign(F(inst.v[i + 1] - inst.v[i])) <= 0)
            out.fail("v is not strictly increasing at step " + std::to_string(i + 1));
    if (out.ok && inst.v != res.filtration.gamma) out.fail("Gamma differs from v on the collapsed chain");
    return out;
}

/// Inserting any node between consecutive filters: the new piece has
/// v'_{i+1} >= v_{i+1}, and the refined chain's Kempf value is at most the maximum.
template <OrderedField F>
CheckResult refinement_check(const KempfResult<F>& res, const SubobjectLattice& lat, const StabilityParams& params,
                             const ValueMode& mode) {
    CheckResult out;
    if (res.verdict == Verdict::semistable) return out;
    const auto chain = detail::to_indices(lat, res.filtration.chain);
    const auto inst = chain_vector_idx<F>(chain, lat, params, mode);
    std::size_t lo = lat.bottom();
    for (std::size_t step = 0; step < chain.size(); ++step) {
        const std::size_t hi = chain[step];
        for (std::size_t g = 0; g < lat.size(); ++g) {
            if (!lat.less(lo, g) || !lat.less(g, hi)) continue;
            std::vector<std::size_t> refined(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(step));
            refined.push_back(g);
            refined.insert(refined.end(), chain.begin() + static_cast<std::ptrdiff_t>(step), chain.end());
            const auto rinst = chain_vector_idx<F>(refined, lat, params, mode);
            if (FieldTraits<F>::sign(F(rinst.v[step] - inst.v[step])) < 0)
                out.fail("inserting node " + std::to_string(lat.id(g)) + " lowers v at step " + std::to_string(step + 1));
            bool zero = true;
            for (const F& x : rinst.v) zero = zero && FieldTraits<F>::sign(x) == 0;
            if (zero) continue;
            auto dir = kempf_direction(rinst, mode);
            if (auto* mx = std::get_if<Maximizer<F>>(&dir))
                if (scale_compare(mx->value, res.value) == std::strong_ordering::greater)
                    out.fail("refinement through node " + std::to_string(lat.id(g)) + " beats the maximum");
        }
        lo = hi;
    }
    return out;
}

/// Every step of the maximizer has positive rank; for pairs, eps jumps exactly once.
inline CheckResult step_check(const Filtration& f, const SubobjectLattice& lat, const StabilityParams& params) {
    CheckResult out;
    for (const auto& q : chain_quotients(lat, f))
        if (q.rank < 1) out.fail("a step of the filtration has rank 0");
    // Raw flag differences; chain_quotients applies the quotient-pair convention.
    if (params.mode == StabilityMode::pair) {
        int jumps = 0;
        int prev = 0;
        for (int id : f.chain) {
            const int e = lat.data(lat.index(id)).eps;
            jumps += e - prev;
            prev = e;
        }
        if (jumps != 1) out.fail("eps jumps " + std::to_string(jumps) + " times along the filtration");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stabilization in m and the main comparison.

inline constexpr std::int64_t stabilization_cap = std::int64_t{1} << 20;

inline Filtration asymptotic_kempf_chain(const SubobjectLattice& lat, const StabilityParams& params,
                                         const KempfOptions& opt = {}) {
    return kempf_filtration<RationalFunction>(lat, params, ValueMode::asymptotic(), opt).filtration.chain;
}

/// Least m >= m_start at which the numeric filtrations at m, 2m and 4m agree
/// with each other and with the asymptotic one. Errors at some m (for example
/// BadM, or ties) count as disagreement there.
inline std::int64_t stabilization_check(const SubobjectLattice& lat, const StabilityParams& params,
                                        std::int64_t m_start, const KempfOptions& opt = {},
                                        std::int64_t cap = stabilization_cap) {
    if (m_start < 1) throw Error(ErrorCode::invalid_argument, "m_start must be at least 1");
    const Filtration target = asymptotic_kempf_chain(lat, params, opt);
    std::map<std::int64_t, std::optional<Filtration>> memo;
    auto at = [&](std::int64_t m) -> const std::optional<Filtration>& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        std::optional<Filtration> f;
        try {
            f = kempf_filtration<Rational>(lat, params, ValueMode::numeric(m), opt).filtration.chain;
        } catch (const Error&) {
            f.reset();
        }
        return memo.emplace(m, std::move(f)).first->second;
    };
    for (std::int64_t m = m_start; m <= cap; ++m) {
        bool ok = true;
        for (std::int64_t k : {m, 2 * m, 4 * m}) {
            const auto& f = at(k);
            if (!f || !(*f == target)) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
        memo.erase(memo.begin(), memo.lower_bound(m + 1)); // m is never revisited
    }
    throw Error(ErrorCode::no_stabilization, "filtration did not stabilize below m = " + std::to_string(cap));
}

struct EqualityReport {
    bool equal = false;
    std::optional<Filtration> hn;
    std::optional<Filtration> kempf;
    std::string hn_error;
    std::string kempf_error;
    Verdict verdict = Verdict::semistable;
    std::optional<ScaleValue> value;
    // Checks on the Kempf output.
    bool descending = false;
    bool blocks_semistable = false;
    bool convex = false;
    bool refinement = false;
    bool steps = false;

    bool all_properties() const { return descending && blocks_semistable && convex && refinement && steps; }
};

/// HN filtration against the asymptotic Kempf filtration, plus the property checks.
inline EqualityReport verify_equality(const SubobjectLattice& lat, const StabilityParams& params,
                                      const KempfOptions& opt = {}) {
    EqualityReport rep;
    try {
        rep.hn = hn_filtration(lat, params);
    } catch (const Error& e) {
        rep.hn_error = e.what();
    }
    const ValueMode mode = ValueMode::asymptotic();
    try {
        const auto res = kempf_filtration<RationalFunction>(lat, params, mode, opt);
        rep.kempf = res.filtration.chain;
        rep.verdict = res.verdict;
        rep.value = res.value;
        rep.descending = strictly_descending(lat, params, *rep.kempf);
        rep.blocks_semistable = true;
        std::size_t prev = lat.bottom();
        for (int id : rep.kempf->chain) {
            const std::size_t cur = lat.index(id);
            rep.blocks_semistable = rep.blocks_semistable && block_semistable(lat, params, prev, cur);
            prev = cur;
        }
        rep.convex = convexity_check(res, lat, params, mode).ok;
        rep.refinement = refinement_check(res, lat, params, mode).ok;
        rep.steps = step_check(*rep.kempf, lat, params).ok;
    } catch (const Error& e) {
        rep.kempf_error = e.what();
    }
    rep.equal = rep.hn && rep.kempf && *rep.hn == *rep.kempf;
    return rep;
}

} // namespace kempf
