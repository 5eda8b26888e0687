#pragma once

// Harder-Narasimhan filtrations by the greedy maximal-destabilizer algorithm,
// for plain objects and for holomorphic pairs (corrected polynomials).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kempf/model.hpp"

namespace kempf {

inline constexpr std::size_t max_enumerated_chains = 1'000'000;

/// E_1 < E_2 < ... < E_{t+1} = E as node ids; the zero object is omitted.
struct Filtration {
    std::vector<int> chain;

    friend bool operator==(const Filtration&, const Filtration&) = default;
};

namespace detail {

inline std::vector<std::size_t> to_indices(const SubobjectLattice& lat, const Filtration& f) {
    std::vector<std::size_t> out;
    out.reserve(f.chain.size());
    for (int id : f.chain) out.push_back(lat.index(id));
    return out;
}

inline Filtration to_filtration(const SubobjectLattice& lat, const std::vector<std::size_t>& idx) {
    Filtration f;
    for (std::size_t i : idx) f.chain.push_back(lat.id(i));
    return f;
}

/// Among nodes G > sub with positive relative rank, the maximizers of the
/// reduced (corrected) polynomial of G/sub; empty if there are no candidates.
inline std::vector<std::size_t> reduced_maximizers(const SubobjectLattice& lat, const StabilityParams& params,
                                                   std::size_t sub) {
    std::vector<std::size_t> best;
    std::optional<ObjectData> best_q;
    const ObjectData& base = lat.data(sub);
    for (std::size_t g = 0; g < lat.size(); ++g) {
        if (!lat.less(sub, g)) continue;
        ObjectData q = subquotient(base, lat.data(g));
        if (q.rank < 1) continue;
        if (!best_q) {
            best = {g};
            best_q = std::move(q);
            continue;
        }
        const auto c = reduced_order(q, *best_q, params);
        if (c == std::strong_ordering::greater) {
            best = {g};
            best_q = std::move(q);
        } else if (c == std::strong_ordering::equal) {
            best.push_back(g);
        }
    }
    return best;
}

inline std::size_t destabilizer_above(const SubobjectLattice& lat, const StabilityParams& params, std::size_t sub) {
    const auto best = reduced_maximizers(lat, params, sub);
    if (best.empty())
        throw Error(ErrorCode::invalid_instance,
                    "no node of positive relative rank above node " + std::to_string(lat.id(sub)));
    for (std::size_t cand : best) {
        bool contains_all = true;
        for (std::size_t other : best) contains_all = contains_all && lat.leq(other, cand);
        if (contains_all) return cand;
    }
    std::string ids;
    for (std::size_t b : best) ids += (ids.empty() ? "" : ", ") + std::to_string(lat.id(b));
    throw Error(ErrorCode::not_unique, "maximal reduced polynomial attained by incomparable nodes {" + ids + "}");
}

} // namespace detail

/// Maximal destabilizing subobject: the largest node with maximal reduced
/// (corrected) polynomial. Returns the top node when E is semistable.
inline int maximal_destabilizer(const SubobjectLattice& lat, const StabilityParams& params) {
    lat.require_well_formed();
    return lat.id(detail::destabilizer_above(lat, params, lat.bottom()));
}

/// Iterates the maximal destabilizer on successive quotients E / E_i.
inline Filtration hn_filtration(const SubobjectLattice& lat, const StabilityParams& params) {
    lat.require_well_formed();
    std::vector<std::size_t> chain;
    std::size_t current = lat.bottom();
    while (current != lat.top()) {
        current = detail::destabilizer_above(lat, params, current);
        chain.push_back(current);
    }
    return detail::to_filtration(lat, chain);
}

/// Subquotients E_i / E_{i-1} of a chain (E_0 = 0).
inline std::vector<ObjectData> chain_quotients(const SubobjectLattice& lat, const Filtration& f) {
    std::vector<ObjectData> out;
    const ObjectData* prev = &lat.data(lat.bottom());
    for (int id : f.chain) {
        const ObjectData& cur = lat.data(lat.index(id));
        out.push_back(subquotient(*prev, cur));
        prev = &cur;
    }
    return out;
}

/// Is the chain a strictly increasing sequence of nodes above zero ending at the top?
inline bool is_chain(const SubobjectLattice& lat, const Filtration& f) {
    if (f.chain.empty()) return false;
    std::size_t prev = lat.bottom();
    for (int id : f.chain) {
        auto i = lat.index_of(id);
        if (!i || !lat.less(prev, *i)) return false;
        prev = *i;
    }
    return prev == lat.top();
}

/// Quotient E_i/E_{i-1} is semistable against every G with E_{i-1} < G <= E_i.
inline bool block_semistable(const SubobjectLattice& lat, const StabilityParams& params, std::size_t lo,
                             std::size_t hi) {
    const ObjectData& base = lat.data(lo);
    const ObjectData block = subquotient(base, lat.data(hi));
    if (block.rank < 1) return false;
    for (std::size_t g = 0; g < lat.size(); ++g) {
        if (g == hi || !lat.less(lo, g) || !lat.less(g, hi)) continue;
        const ObjectData q = subquotient(base, lat.data(g));
        if (q.rank < 1) continue;
        if (reduced_order(q, block, params) == std::strong_ordering::greater) return false;
    }
    return true;
}

/// Strictly decreasing reduced quotient polynomials.
inline bool strictly_descending(const SubobjectLattice& lat, const StabilityParams& params, const Filtration& f) {
    const auto quotients = chain_quotients(lat, f);
    for (const auto& q : quotients)
        if (q.rank < 1) return false;
    for (std::size_t i = 0; i + 1 < quotients.size(); ++i)
        if (reduced_order(quotients[i], quotients[i + 1], params) != std::strong_ordering::greater) return false;
    return true;
}

/// Both defining properties of the HN filtration, checked within the lattice.
inline bool check_hn_properties(const SubobjectLattice& lat, const StabilityParams& params, const Filtration& f) {
    if (!lat.well_formed() || !is_chain(lat, f)) return false;
    if (!strictly_descending(lat, params, f)) return false;
    std::size_t prev = lat.bottom();
    for (int id : f.chain) {
        const std::size_t cur = lat.index(id);
        if (!block_semistable(lat, params, prev, cur)) return false;
        prev = cur;
    }
    return true;
}

/// Visits every chain 0 < E_1 < ... < E_k = top (all chains when maximal_only
/// is false, saturated Hasse paths otherwise). Throws TooLarge past the cap.
inline void for_each_chain(const SubobjectLattice& lat, bool maximal_only,
                           const std::function<void(const std::vector<std::size_t>&)>& visit,
                           std::size_t cap = max_enumerated_chains) {
    lat.require_well_formed();
    std::vector<std::size_t> path;
    std::size_t count = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t at) {
        if (at == lat.top()) {
            if (++count > cap) throw Error(ErrorCode::too_large, "more than " + std::to_string(cap) + " chains");
            visit(path);
            return;
        }
        auto step = [&](std::size_t next) {
            path.push_back(next);
            walk(next);
            path.pop_back();
        };
        if (maximal_only) {
            for (std::size_t next : lat.covers(at)) step(next);
        } else {
            for (std::size_t next = 0; next < lat.size(); ++next)
                if (lat.less(at, next)) step(next);
        }
    };
    walk(lat.bottom());
}

inline std::vector<Filtration> enumerate_chains(const SubobjectLattice& lat, bool maximal_only,
                                                std::size_t cap = max_enumerated_chains) {
    std::vector<Filtration> out;
    for_each_chain(
        lat, maximal_only, [&](const std::vector<std::size_t>& p) { out.push_back(detail::to_filtration(lat, p)); },
        cap);
    return out;
}

} // namespace kempf
