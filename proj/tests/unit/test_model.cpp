#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kempf/model.hpp"

using namespace kempf;

namespace {

StabilityParams params(StabilityMode mode, Polynomial delta = {}) {
    StabilityParams p;
    p.mode = mode;
    p.dim_x = 1;
    p.delta = std::move(delta);
    return p;
}

int node_for(const SubobjectLattice&, std::initializer_list<int> summands) {
    int id = 0;
    for (int s : summands) id |= 1 << s;
    return id;
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == k; });
}

} // namespace

TEST(SplitBundle, Shape) {
    const auto p = params(StabilityMode::gieseker);
    const auto lat = gen_split_bundle({2, 0, -1}, p);
    EXPECT_EQ(lat.size(), 8U);
    EXPECT_EQ(lat.ambient().hilbert, Polynomial(std::vector<Rational>{4, 3}));
    EXPECT_EQ(lat.ambient().rank, 3);
    EXPECT_TRUE(validate_lattice(lat, p).empty());
    EXPECT_EQ(lat.id(lat.top()), 7);
    EXPECT_EQ(lat.id(lat.bottom()), 0);
    EXPECT_EQ(lat.covers(lat.bottom()).size(), 3U);

    EXPECT_EQ(gen_split_bundle({0}, p).size(), 2U);
    EXPECT_THROW(gen_split_bundle(std::vector<int>(11, 0), p), Error);
    EXPECT_THROW(gen_split_bundle({}, p), Error);
}

TEST(SplitBundle, SlopeEncoding) {
    auto p = params(StabilityMode::slope);
    p.g = 2;
    const auto lat = gen_split_bundle({1, -1}, p);
    EXPECT_EQ(lat.ambient().hilbert, Polynomial(std::vector<Rational>{0, 4}));
    EXPECT_TRUE(validate_lattice(lat, p).empty());
}

TEST(Semistability, Examples) {
    const auto p = params(StabilityMode::slope);
    EXPECT_TRUE(std::holds_alternative<Semistable>(is_semistable(gen_split_bundle({1, 1}, p), p)));
    EXPECT_TRUE(std::holds_alternative<Semistable>(is_semistable(gen_split_bundle({-2, -2, -2}, p), p)));
    const auto lat = gen_split_bundle({2, 0, -1}, p);
    const auto v = is_semistable(lat, p);
    ASSERT_TRUE(std::holds_alternative<DestabilizedBy>(v));
    EXPECT_EQ(std::get<DestabilizedBy>(v).node_id, node_for(lat, {0}));
}

TEST(Semistability, PairExample) {
    const auto p = params(StabilityMode::pair, Polynomial(1));
    const auto lat = gen_split_bundle({0, -2}, p, 0);
    EXPECT_TRUE(validate_lattice(lat, p).empty());
    const auto v = is_semistable(lat, p);
    ASSERT_TRUE(std::holds_alternative<DestabilizedBy>(v));
    EXPECT_EQ(std::get<DestabilizedBy>(v).node_id, 1);
    EXPECT_EQ(lat.data(lat.index(1)).eps, 1);
}

TEST(Semistability, SplitBundlesIffEqualDegrees) {
    for (auto mode : {StabilityMode::slope, StabilityMode::gieseker}) {
        const auto p = params(mode);
        for (int len = 1; len <= 4; ++len) {
            std::vector<int> d(static_cast<std::size_t>(len), -3);
            for (;;) {
                const bool equal = std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
                const auto verdict = is_semistable(gen_split_bundle(d, p), p);
                EXPECT_EQ(std::holds_alternative<Semistable>(verdict), equal);
                std::size_t k = 0;
                while (k < d.size() && d[k] == 3) d[k++] = -3;
                if (k == d.size()) break;
                ++d[k];
            }
        }
    }
}

TEST(CorrectedPolynomial, Examples) {
    const auto p1 = params(StabilityMode::pair, Polynomial(1));
    EXPECT_EQ(corrected_polynomial({1, Polynomial(std::vector<Rational>{1, 1}), 1}, p1), Polynomial::variable());
    const ObjectData no_phi{1, Polynomial(std::vector<Rational>{1, 1}), 0};
    EXPECT_EQ(corrected_polynomial(no_phi, p1), no_phi.hilbert);
    const auto p4 = params(StabilityMode::pair, Polynomial(4));
    EXPECT_EQ(corrected_polynomial({2, Polynomial(std::vector<Rational>{0, 2}), 1}, p4),
              Polynomial(std::vector<Rational>{-4, 2}));
    EXPECT_THROW(corrected_polynomial(no_phi, params(StabilityMode::gieseker)), Error);
}

TEST(CorrectedPolynomial, AdditiveOnSubquotients) {
    for (Rational d : {Rational(1, 2), Rational(1), Rational(4)}) {
        const auto p = params(StabilityMode::pair, Polynomial(d));
        for (std::size_t phi = 0; phi < 3; ++phi) {
            const auto lat = gen_split_bundle({1, 0, -2}, p, phi);
            const ObjectData& E = lat.ambient();
            for (const auto& n : lat.nodes()) {
                const ObjectData q = subquotient(n.data, E);
                EXPECT_EQ(corrected_polynomial(n.data, p) + corrected_polynomial(q, p), corrected_polynomial(E, p));
            }
        }
    }
}

TEST(Validation, DetectsViolations) {
    const auto p = params(StabilityMode::pair, Polynomial(1));
    const auto good = gen_split_bundle({1, 0}, p, 1);
    ASSERT_TRUE(validate_lattice(good, p).empty());

    // eps decreasing along 2 -> 3 when node 2 carries phi but 3 does not.
    auto nodes = good.nodes();
    for (auto& n : nodes)
        if (n.id == 3) n.data.eps = 0;
    ObjectData amb = good.ambient();
    amb.eps = 0;
    for (auto& n : nodes)
        if (n.id == 3) n.data = amb;
    const SubobjectLattice bad_eps(amb, nodes, good.order_pairs(), good.meets(), good.joins());
    const auto v = validate_lattice(bad_eps, p);
    EXPECT_TRUE(has_kind(v, ViolationKind::monotone_eps));

    // Join table breaking additivity.
    auto joins = good.joins();
    ASSERT_EQ(joins.size(), 1U);
    nodes = good.nodes();
    nodes.push_back({4, {2, Polynomial(std::vector<Rational>{5, 2}), 1}});
    auto order = good.order_pairs();
    order.emplace_back(1, 4);
    order.emplace_back(2, 4);
    order.emplace_back(4, 3);
    joins[0][2] = 4;
    const SubobjectLattice bad_join(good.ambient(), nodes, order, good.meets(), joins);
    const auto w = validate_lattice(bad_join, p);
    EXPECT_EQ(std::count_if(w.begin(), w.end(), [](const Violation& x) { return x.kind == ViolationKind::additivity; }), 1);
}

TEST(Validation, StructuralProblems) {
    const auto p = params(StabilityMode::gieseker);
    ObjectData E{1, Polynomial(std::vector<Rational>{1, 1}), 0};
    const SubobjectLattice cyc(E, {{0, {}}, {1, E}}, {{0, 1}, {1, 0}});
    EXPECT_TRUE(has_kind(validate_lattice(cyc, p), ViolationKind::structure));
    const SubobjectLattice two_tops(E, {{0, {}}, {1, E}, {2, E}}, {{0, 1}, {0, 2}});
    EXPECT_TRUE(has_kind(validate_lattice(two_tops, p), ViolationKind::structure));
    const SubobjectLattice zero_rank(E, {{0, {}}, {1, {0, Polynomial(1), 0}}, {2, E}}, {{0, 1}, {1, 2}});
    EXPECT_TRUE(has_kind(validate_lattice(zero_rank, p), ViolationKind::zero_rank_node));
}

TEST(Validation, PairParameters) {
    auto p = params(StabilityMode::pair, Polynomial::variable());
    const auto lat = gen_split_bundle({0, 0}, params(StabilityMode::pair, Polynomial(1)), 0);
    EXPECT_TRUE(has_kind(validate_lattice(lat, p), ViolationKind::params));
    p.delta = Polynomial(-1);
    EXPECT_TRUE(has_kind(validate_lattice(lat, p), ViolationKind::params));
    const auto plain = gen_split_bundle({0, 0}, params(StabilityMode::gieseker));
    EXPECT_TRUE(has_kind(validate_lattice(plain, params(StabilityMode::pair, Polynomial(1))), ViolationKind::zero_morphism));
}

TEST(RandomLattice, DeterministicAndValid) {
    for (auto mode : {StabilityMode::gieseker, StabilityMode::slope, StabilityMode::pair}) {
        for (int dim : {1, 2, 3}) {
            auto p = params(mode, Polynomial(Rational(1, 2)));
            p.dim_x = dim;
            if (mode == StabilityMode::slope && dim != 1) continue;
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const RandomLatticeBounds b{4, 4, 4};
                const auto a = gen_random_lattice(seed, b, p);
                const auto c = gen_random_lattice(seed, b, p);
                EXPECT_EQ(a.nodes(), c.nodes());
                const auto v = validate_lattice(a, p);
                EXPECT_TRUE(v.empty()) << "seed " << seed << ": " << (v.empty() ? "" : v.front().message);
            }
        }
    }
    const auto p = params(StabilityMode::gieseker);
    EXPECT_NE(gen_random_lattice(1, {}, p).nodes(), gen_random_lattice(2, {}, p).nodes());
}
