#pragma once

// Finite models of an object E (a torsion-free sheaf, or a holomorphic pair
// (E, phi)) together with a finite lattice of its subobjects.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kempf/poly.hpp"

namespace kempf {

inline constexpr std::size_t max_lattice_nodes = 4096;

enum class StabilityMode { gieseker, slope, pair };

inline const char* to_string(StabilityMode mode) {
    switch (mode) {
    case StabilityMode::gieseker: return "gieseker";
    case StabilityMode::slope: return "slope";
    case StabilityMode::pair: return "pair";
    }
    return "?";
}

inline StabilityMode parse_stability_mode(const std::string& s) {
    if (s == "gieseker") return StabilityMode::gieseker;
    if (s == "slope") return StabilityMode::slope;
    if (s == "pair") return StabilityMode::pair;
    throw Error(ErrorCode::parse_error, "unknown stability mode '" + s + "'");
}

struct ObjectData {
    int rank = 0;
    Polynomial hilbert;
    int eps = 0; // 1 iff phi restricted to this subobject is nonzero (pairs only)

    friend bool operator==(const ObjectData&, const ObjectData&) = default;
};

struct StabilityParams {
    StabilityMode mode = StabilityMode::gieseker;
    int dim_x = 1;
    Polynomial delta;  // pair mode only
    Rational g = 1;    // degree of the polarization
};

struct LatticeNode {
    int id = 0;
    ObjectData data;

    friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

/// Finite poset of subobjects. Nodes are kept sorted by id; algorithms work on
/// positions in that order. The order relation is given by containment pairs
/// (child, parent) and closed reflexively and transitively here.
class SubobjectLattice {
public:
    SubobjectLattice() = default;

    SubobjectLattice(ObjectData ambient, std::vector<LatticeNode> nodes, std::vector<std::pair<int, int>> order,
                     std::vector<std::array<int, 3>> meets = {}, std::vector<std::array<int, 3>> joins = {})
        : ambient_(std::move(ambient)), nodes_(std::move(nodes)), order_(std::move(order)), meets_(std::move(meets)),
          joins_(std::move(joins)) {
        std::stable_sort(nodes_.begin(), nodes_.end(),
                         [](const LatticeNode& a, const LatticeNode& b) { return a.id < b.id; });
        build();
    }

    const ObjectData& ambient() const { return ambient_; }
    std::size_t size() const { return nodes_.size(); }
    const LatticeNode& node(std::size_t i) const { return nodes_[i]; }
    const ObjectData& data(std::size_t i) const { return nodes_[i].data; }
    int id(std::size_t i) const { return nodes_[i].id; }
    const std::vector<LatticeNode>& nodes() const { return nodes_; }
    const std::vector<std::pair<int, int>>& order_pairs() const { return order_; }
    const std::vector<std::array<int, 3>>& meets() const { return meets_; }
    const std::vector<std::array<int, 3>>& joins() const { return joins_; }

    std::optional<std::size_t> index_of(int id) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                                   [](const LatticeNode& n, int key) { return n.id < key; });
        if (it == nodes_.end() || it->id != id) return std::nullopt;
        return static_cast<std::size_t>(it - nodes_.begin());
    }

    std::size_t index(int id) const {
        auto i = index_of(id);
        if (!i) throw Error(ErrorCode::invalid_instance, "unknown node id " + std::to_string(id));
        return *i;
    }

    /// Reflexive-transitive containment.
    bool leq(std::size_t a, std::size_t b) const { return a == b || test(reach_[a], b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && test(reach_[a], b); }

    /// Unique maximal / minimal node; only meaningful when well_formed().
    std::size_t top() const { return top_; }
    std::size_t bottom() const { return bottom_; }

    /// Nodes covering i in the containment order (Hasse diagram edges).
    const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }

    /// Structural problems found while building (unknown ids, cycles, no
    /// unique top/bottom); validate_lattice reports them with the rest.
    const std::vector<std::string>& structural_issues() const { return issues_; }
    bool well_formed() const { return issues_.empty(); }

    void require_well_formed() const {
        if (!well_formed()) throw Error(ErrorCode::invalid_instance, "malformed lattice: " + issues_.front());
    }

private:
    using Bits = std::vector<std::uint64_t>;

    static bool test(const Bits& bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1U; }
    static void set(Bits& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

    void build() {
        const std::size_t n = nodes_.size();
        const std::size_t words = (n + 63) / 64;
        reach_.assign(n, Bits(words, 0));
        covers_.assign(n, {});
        issues_.clear();
        if (n == 0) {
            issues_.push_back("lattice has no nodes");
            return;
        }
        for (std::size_t i = 1; i < n; ++i)
            if (nodes_[i].id == nodes_[i - 1].id) issues_.push_back("duplicate node id " + std::to_string(nodes_[i].id));

        std::vector<std::vector<std::size_t>> up(n);
        std::vector<std::size_t> indegree(n, 0);
        for (const auto& [child, parent] : order_) {
            auto c = index_of(child);
            auto p = index_of(parent);
            if (!c || !p) {
                issues_.push_back("order pair references unknown id (" + std::to_string(child) + ", " +
                                  std::to_string(parent) + ")");
                continue;
            }
            if (*c == *p) continue;
            up[*c].push_back(*p);
            ++indegree[*p];
        }
        // Kahn order from the bottom; anything left over sits on a cycle.
        std::vector<std::size_t> topo;
        topo.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            if (indegree[i] == 0) topo.push_back(i);
        for (std::size_t k = 0; k < topo.size(); ++k)
            for (std::size_t p : up[topo[k]])
                if (--indegree[p] == 0) topo.push_back(p);
        if (topo.size() != n) {
            issues_.push_back("containment relation has a cycle");
            return;
        }
        for (std::size_t k = n; k-- > 0;) {
            const std::size_t i = topo[k];
            for (std::size_t p : up[i]) {
                set(reach_[i], p);
                for (std::size_t w = 0; w < words; ++w) reach_[i][w] |= reach_[p][w];
            }
        }
        std::vector<std::size_t> tops, bottoms;
        for (std::size_t i = 0; i < n; ++i) {
            bool is_top = true, is_bottom = true;
            for (std::size_t j = 0; j < n && (is_top || is_bottom); ++j) {
                if (i == j) continue;
                if (!test(reach_[j], i)) is_top = false;
                if (!test(reach_[i], j)) is_bottom = false;
            }
            if (is_top) tops.push_back(i);
            if (is_bottom) bottoms.push_back(i);
        }
        if (n == 1) {
            issues_.push_back("lattice needs distinct zero and ambient nodes");
            return;
        }
        if (tops.size() != 1) issues_.push_back("no unique top node");
        if (bottoms.size() != 1) issues_.push_back("no unique bottom node");
        if (!tops.empty()) top_ = tops.front();
        if (!bottoms.empty()) bottom_ = bottoms.front();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!less(i, j)) continue;
                bool direct = true;
                for (std::size_t k = 0; k < n && direct; ++k) direct = !(less(i, k) && less(k, j));
                if (direct) covers_[i].push_back(j);
            }
    }

    ObjectData ambient_;
    std::vector<LatticeNode> nodes_;
    std::vector<std::pair<int, int>> order_;
    std::vector<std::array<int, 3>> meets_;
    std::vector<std::array<int, 3>> joins_;

    std::vector<Bits> reach_; // reach_[i] bit j set iff i < j
    std::vector<std::vector<std::size_t>> covers_;
    std::vector<std::string> issues_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
    structure,
    too_many_nodes,
    ambient_mismatch,
    bottom_not_zero,
    zero_rank_node,
    leading_coefficient,
    degree_bound,
    slope_form,
    rank_order,
    poly_order,
    monotone_eps,
    meet_join_order,
    additivity,
    eps_submodular,
    params,
    zero_morphism,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::structure: return "Structure";
    case ViolationKind::too_many_nodes: return "TooManyNodes";
    case ViolationKind::ambient_mismatch: return "AmbientMismatch";
    case ViolationKind::bottom_not_zero: return "BottomNotZero";
    case ViolationKind::zero_rank_node: return "ZeroRankNode";
    case ViolationKind::leading_coefficient: return "LeadingCoefficient";
    case ViolationKind::degree_bound: return "DegreeBound";
    case ViolationKind::slope_form: return "SlopeForm";
    case ViolationKind::rank_order: return "RankOrder";
    case ViolationKind::poly_order: return "PolyOrder";
    case ViolationKind::monotone_eps: return "MonotoneEps";
    case ViolationKind::meet_join_order: return "MeetJoinOrder";
    case ViolationKind::additivity: return "Additivity";
    case ViolationKind::eps_submodular: return "EpsSubmodular";
    case ViolationKind::params: return "Params";
    case ViolationKind::zero_morphism: return "ZeroMorphism";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::vector<int> node_ids;
    std::string message;
};

/// Every invariant violation, with node ids; empty means valid.
inline std::vector<Violation> validate_lattice(const SubobjectLattice& lat, const StabilityParams& params) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind k, std::vector<int> ids, std::string msg) {
        out.push_back({k, std::move(ids), std::move(msg)});
    };

    if (params.dim_x < 0) report(ViolationKind::params, {}, "dimX must be non-negative");
    if (params.g <= 0) report(ViolationKind::params, {}, "polarization degree g must be positive");
    if (params.mode == StabilityMode::pair) {
        if (params.delta.eventual_sign() <= 0) report(ViolationKind::params, {}, "delta needs a positive leading coefficient");
        if (params.delta.degree() > params.dim_x - 1) report(ViolationKind::params, {}, "delta must have degree at most dimX - 1");
    }
    if (lat.size() > max_lattice_nodes)
        report(ViolationKind::too_many_nodes, {}, "more than " + std::to_string(max_lattice_nodes) + " nodes");
    for (const auto& issue : lat.structural_issues()) report(ViolationKind::structure, {}, issue);
    if (!lat.well_formed()) return out;

    const std::size_t top = lat.top();
    const std::size_t bottom = lat.bottom();
    if (!(lat.data(top) == lat.ambient()))
        report(ViolationKind::ambient_mismatch, {lat.id(top)}, "top node data differs from the ambient object");
    if (lat.ambient().rank < 1) report(ViolationKind::zero_rank_node, {lat.id(top)}, "ambient object has rank 0");
    {
        const ObjectData& z = lat.data(bottom);
        if (z.rank != 0 || !z.hilbert.is_zero() || z.eps != 0)
            report(ViolationKind::bottom_not_zero, {lat.id(bottom)}, "bottom node must be the zero object");
    }
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const ObjectData& d = lat.data(i);
        const int id = lat.id(i);
        if (d.hilbert.degree() > max_input_degree)
            report(ViolationKind::degree_bound, {id}, "Hilbert polynomial degree exceeds " + std::to_string(max_input_degree));
        if (d.eps != 0 && d.eps != 1) report(ViolationKind::monotone_eps, {id}, "eps must be 0 or 1");
        if (i == bottom) continue;
        if (d.rank < 1) report(ViolationKind::zero_rank_node, {id}, "proper nonzero nodes must have positive rank");
        if (d.hilbert.eventual_sign() <= 0)
            report(ViolationKind::leading_coefficient, {id}, "Hilbert polynomial needs a positive leading coefficient");
        if (params.mode == StabilityMode::slope &&
            (d.hilbert.degree() != 1 || d.hilbert.leading() != params.g * d.rank))
            report(ViolationKind::slope_form, {id}, "slope mode expects g*r*m + d");
    }
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = 0; j < lat.size(); ++j) {
            if (!lat.less(i, j)) continue;
            const ObjectData& a = lat.data(i);
            const ObjectData& b = lat.data(j);
            if (a.rank > b.rank) report(ViolationKind::rank_order, {lat.id(i), lat.id(j)}, "rank decreases along containment");
            if ((b.hilbert - a.hilbert).eventual_sign() <= 0)
                report(ViolationKind::poly_order, {lat.id(i), lat.id(j)},
                       "strict containment needs an eventually larger Hilbert polynomial");
            if (a.eps > b.eps) report(ViolationKind::monotone_eps, {lat.id(i), lat.id(j)}, "eps decreases along containment");
        }
    if (params.mode == StabilityMode::pair && lat.ambient().eps != 1)
        report(ViolationKind::zero_morphism, {lat.id(top)}, "pair mode needs phi != 0 on the ambient object");

    auto check_table = [&](const std::vector<std::array<int, 3>>& table, bool is_meet) {
        for (const auto& [fa, fb, fc] : table) {
            auto a = lat.index_of(fa), b = lat.index_of(fb), c = lat.index_of(fc);
            if (!a || !b || !c) {
                report(ViolationKind::structure, {fa, fb, fc}, "meet/join entry references unknown id");
                continue;
            }
            const bool ordered = is_meet ? (lat.leq(*c, *a) && lat.leq(*c, *b)) : (lat.leq(*a, *c) && lat.leq(*b, *c));
            if (!ordered)
                report(ViolationKind::meet_join_order, {fa, fb, fc},
                       is_meet ? "meet is not below both arguments" : "join is not above both arguments");
        }
    };
    check_table(lat.meets(), true);
    check_table(lat.joins(), false);

    // Additivity needs both F cap G and F + G.
    std::map<std::pair<int, int>, int> joins;
    for (const auto& [a, b, c] : lat.joins()) {
        joins[{a, b}] = c;
        joins[{b, a}] = c;
    }
    for (const auto& [fa, fb, fc] : lat.meets()) {
        auto it = joins.find({fa, fb});
        if (it == joins.end()) continue;
        auto a = lat.index_of(fa), b = lat.index_of(fb), c = lat.index_of(fc), d = lat.index_of(it->second);
        if (!a || !b || !c || !d) continue;
        const ObjectData &F = lat.data(*a), &G = lat.data(*b), &M = lat.data(*c), &J = lat.data(*d);
        if (M.rank + J.rank != F.rank + G.rank || !(M.hilbert + J.hilbert == F.hilbert + G.hilbert))
            report(ViolationKind::additivity, {fa, fb, fc, it->second}, "rank or Hilbert polynomial not additive on meet/join");
        if (M.eps + J.eps > F.eps + G.eps)
            report(ViolationKind::eps_submodular, {fa, fb, fc, it->second}, "eps(F cap G) + eps(F + G) > eps(F) + eps(G)");
    }
    return out;
}

/// P - delta * eps.
inline Polynomial corrected_polynomial(const ObjectData& node, const StabilityParams& params) {
    if (params.mode != StabilityMode::pair) throw Error(ErrorCode::wrong_mode, "corrected polynomials exist in pair mode only");
    return node.eps ? node.hilbert - params.delta : node.hilbert;
}

/// The polynomial whose per-rank value decides stability: P, or P - delta*eps for pairs.
inline Polynomial stability_polynomial(const ObjectData& node, const StabilityParams& params) {
    return params.mode == StabilityMode::pair ? corrected_polynomial(node, params) : node.hilbert;
}

/// Rank, polynomial and eps of the subquotient G/F, with the quotient-pair
/// convention: if phi|F != 0 the induced morphism on G/F is zero.
inline ObjectData subquotient(const ObjectData& sub, const ObjectData& G) {
    return ObjectData{G.rank - sub.rank, G.hilbert - sub.hilbert, sub.eps == 1 ? 0 : G.eps};
}

/// Eventual ordering of P^/rk between two objects of positive rank.
inline std::strong_ordering reduced_order(const ObjectData& a, const ObjectData& b, const StabilityParams& params) {
    return reduced_compare(stability_polynomial(a, params), a.rank, stability_polynomial(b, params), b.rank);
}

struct Semistable {};
struct DestabilizedBy {
    int node_id;
};
using StabilityVerdict = std::variant<Semistable, DestabilizedBy>;

/// First proper nonzero node (in id order) with larger reduced polynomial than E.
inline StabilityVerdict is_semistable(const SubobjectLattice& lat, const StabilityParams& params) {
    lat.require_well_formed();
    const ObjectData& E = lat.data(lat.top());
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (i == lat.top() || i == lat.bottom() || lat.data(i).rank < 1) continue;
        if (reduced_order(lat.data(i), E, params) == std::strong_ordering::greater) return DestabilizedBy{lat.id(i)};
    }
    return Semistable{};
}

// ---------------------------------------------------------------------------
// Generators

/// Hilbert polynomial of a rank-r, degree-d bundle on the projective line
/// (gieseker/pair: r*m + d + r) or its slope-mode encoding g*r*m + d.
inline Polynomial split_polynomial(int rank, const Rational& degree, const StabilityParams& params) {
    if (params.mode == StabilityMode::slope) return Polynomial({Rational(degree), params.g * rank});
    return Polynomial({Rational(degree + rank), Rational(rank)});
}

/// Direct-sum lattice: the node for a set S of summands (id = bitmask of S)
/// has rank |S|, the summed data, and meet/join = intersection/union.
struct Summand {
    int rank = 1;
    Polynomial hilbert;
    bool carries_phi = false;
};

inline SubobjectLattice direct_sum_lattice(const std::vector<Summand>& summands) {
    const std::size_t k = summands.size();
    if (k < 1 || k > 10) throw Error(ErrorCode::too_large, "direct sums need 1 to 10 summands");
    const int count = 1 << k;
    std::vector<LatticeNode> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
        ObjectData d;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(s >> i & 1)) continue;
            d.rank += summands[i].rank;
            d.hilbert += summands[i].hilbert;
            if (summands[i].carries_phi) d.eps = 1;
        }
        nodes.push_back({s, std::move(d)});
    }
    std::vector<std::pair<int, int>> order;
    for (int s = 0; s < count; ++s)
        for (std::size_t i = 0; i < k; ++i)
            if (!(s >> i & 1)) order.emplace_back(s, s | (1 << i));
    std::vector<std::array<int, 3>> meets, joins;
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) {
            if ((a & b) == a || (a & b) == b) continue; // comparable pairs are trivial
            meets.push_back({a, b, a & b});
            joins.push_back({a, b, a | b});
        }
    ObjectData ambient = nodes.back().data;
    return SubobjectLattice(std::move(ambient), std::move(nodes), std::move(order), std::move(meets), std::move(joins));
}

/// Split bundle O(d_1) + ... + O(d_k) on the projective line. In pair mode the
/// summand phi_summand carries the nonzero component of phi.
inline SubobjectLattice gen_split_bundle(const std::vector<int>& degrees, const StabilityParams& params,
                                         std::optional<std::size_t> phi_summand = std::nullopt) {
    if (degrees.empty() || degrees.size() > 10) throw Error(ErrorCode::too_large, "split bundles take 1 to 10 degrees");
    if (params.mode != StabilityMode::slope && params.dim_x != 1)
        throw Error(ErrorCode::invalid_argument, "split bundles live on the projective line (dimX = 1)");
    if (params.mode == StabilityMode::pair && (!phi_summand || *phi_summand >= degrees.size()))
        throw Error(ErrorCode::invalid_argument, "pair mode needs the index of the summand carrying phi");
    std::vector<Summand> summands;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        summands.push_back({1, split_polynomial(1, degrees[i], params),
                            params.mode == StabilityMode::pair && phi_summand == i});
    return direct_sum_lattice(summands);
}

struct RandomLatticeBounds {
    int max_summands = 4;
    int max_rank = 2;
    int max_coeff = 4; // lower coefficients drawn from [-max_coeff, max_coeff]
};

/// Deterministic from the seed: a direct sum of random summands (random ranks
/// and lower-order Hilbert coefficients, leading coefficient rank*g/n!), so
/// additivity over meets and joins holds by construction.
inline SubobjectLattice gen_random_lattice(std::uint64_t seed, const RandomLatticeBounds& bounds,
                                           const StabilityParams& params) {
    if (bounds.max_summands < 1 || bounds.max_summands > 10 || bounds.max_rank < 1 || bounds.max_coeff < 0)
        throw Error(ErrorCode::invalid_argument, "random lattice bounds out of range");
    std::mt19937_64 rng(seed);
    // Plain modular reduction keeps the stream identical across standard libraries.
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const int n = std::max(params.dim_x, 0);
    Rational fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    const int k = draw(1, bounds.max_summands);
    std::vector<Summand> summands(static_cast<std::size_t>(k));
    for (auto& s : summands) {
        s.rank = draw(1, bounds.max_rank);
        std::vector<Rational> c(static_cast<std::size_t>(n + 1));
        for (int d = 0; d < n; ++d) c[static_cast<std::size_t>(d)] = draw(-bounds.max_coeff, bounds.max_coeff);
        c[static_cast<std::size_t>(n)] = params.g * s.rank / fact;
        if (params.mode == StabilityMode::slope) {
            c.assign({Rational(draw(-bounds.max_coeff, bounds.max_coeff)), params.g * s.rank});
        }
        s.hilbert = Polynomial(std::move(c));
    }
    if (params.mode == StabilityMode::pair) {
        bool any = false;
        for (auto& s : summands) any = (s.carries_phi = draw(0, 1) == 1) || any;
        if (!any) summands[static_cast<std::size_t>(draw(0, k - 1))].carries_phi = true;
    }
    return direct_sum_lattice(summands);
}

/// Same lattice with node ids relabelled by id -> relabel(id).
template <class Relabel>
SubobjectLattice relabel_ids(const SubobjectLattice& lat, Relabel relabel) {
    std::vector<LatticeNode> nodes;
    for (const auto& n : lat.nodes()) nodes.push_back({relabel(n.id), n.data});
    std::vector<std::pair<int, int>> order;
    for (const auto& [c, p] : lat.order_pairs()) order.emplace_back(relabel(c), relabel(p));
    auto map3 = [&](const std::vector<std::array<int, 3>>& t) {
        std::vector<std::array<int, 3>> r;
        for (const auto& [a, b, c] : t) r.push_back({relabel(a), relabel(b), relabel(c)});
        return r;
    };
    return SubobjectLattice(lat.ambient(), std::move(nodes), std::move(order), map3(lat.meets()), map3(lat.joins()));
}

} // namespace kempf
