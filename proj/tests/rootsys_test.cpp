#include "frobscan/error.hpp"
#include "frobscan/rootsys.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace frobscan;

namespace {

const std::vector<RootSystemSpec> kSystems = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::A, 6},
    {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
    {Family::D, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4},
};

std::size_t standard_root_count(const RootSystemSpec& s) {
    const std::size_t n = static_cast<std::size_t>(s.rank);
    switch (s.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::G: return 6;
        case Family::F: return 24;
    }
    return 0;
}

int standard_coxeter(const RootSystemSpec& s) {
    switch (s.family) {
        case Family::A: return s.rank + 1;
        case Family::B:
        case Family::C: return 2 * s.rank;
        case Family::D: return 2 * s.rank - 2;
        case Family::G: return 6;
        case Family::F: return 12;
    }
    return 0;
}

std::vector<std::int64_t> fund(const Weight& w) { return {w.fund().begin(), w.fund().end()}; }

}  // namespace

TEST(RootSystemSpec, RankLimits) {
    EXPECT_NO_THROW(validate({Family::A, 1}));
    EXPECT_NO_THROW(validate({Family::D, 3}));
    for (RootSystemSpec bad : {RootSystemSpec{Family::A, 0}, RootSystemSpec{Family::B, 1}, RootSystemSpec{Family::C, 1},
                               RootSystemSpec{Family::D, 2}, RootSystemSpec{Family::G, 3},
                               RootSystemSpec{Family::F, 5}}) {
        try {
            RootSystem::build(bad);
            ADD_FAILURE() << bad.name();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidRank);
        }
    }
}

TEST(RootSystemSpec, ParsesFamilyLetters) {
    EXPECT_EQ(parse_family("C"), Family::C);
    EXPECT_EQ(parse_family("g"), Family::G);
    EXPECT_THROW(parse_family("E"), Error);
    EXPECT_EQ((RootSystemSpec{Family::F, 4}).name(), "F4");
}

TEST(RootSystem, A2Tables) {
    const auto rs = RootSystem::build({Family::A, 2});
    EXPECT_EQ(rs.num_positive_roots(), 3u);
    EXPECT_EQ(rs.coxeter_number(), 3);
    EXPECT_EQ(fund(rs.highest_root()), (std::vector<std::int64_t>{1, 1}));
    EXPECT_EQ(rs.cartan()(0, 1), -1);
    EXPECT_EQ(rs.cartan_det(), 3);
}

TEST(RootSystem, C2HighestRootIsTwiceOmega1) {
    const auto rs = RootSystem::build({Family::C, 2});
    EXPECT_EQ(rs.num_positive_roots(), 4u);
    EXPECT_EQ(rs.coxeter_number(), 4);
    EXPECT_EQ(rs.highest_root(), rs.fundamental_weight(0) * 2);
    EXPECT_FALSE(rs.is_long(rs.simple_root_index(0)));
    EXPECT_TRUE(rs.is_long(rs.simple_root_index(1)));
    EXPECT_EQ(rs.highest_short_root(), rs.fundamental_weight(1));
}

TEST(RootSystem, A3Omega2RootCoordinates) {
    const auto rs = RootSystem::build({Family::A, 3});
    const auto c = rs.fundamental_weight(1).root_coords();
    EXPECT_EQ(c[0], mpq_class(1, 2));
    EXPECT_EQ(c[1], mpq_class(1));
    EXPECT_EQ(c[2], mpq_class(1, 2));
}

TEST(RootSystem, Pairings) {
    const auto a2 = RootSystem::build({Family::A, 2});
    EXPECT_EQ(a2.pairing(a2.rho(), a2.highest_root_index()), 2);

    const auto c2 = RootSystem::build({Family::C, 2});
    EXPECT_EQ(c2.pairing(c2.fundamental_weight(0), c2.highest_root_index()), 1);

    const auto a3 = RootSystem::build({Family::A, 3});
    EXPECT_EQ(a3.pairing(a3.rho() * 2, a3.simple_root_index(1)), 2);
}

TEST(RootSystem, DualWeight) {
    const auto a3 = RootSystem::build({Family::A, 3});
    EXPECT_EQ(a3.dual_weight(a3.fundamental_weight(0)), a3.fundamental_weight(2));

    const auto c2 = RootSystem::build({Family::C, 2});
    for (std::int64_t a = 0; a < 4; ++a)
        for (std::int64_t b = -2; b < 4; ++b) {
            const auto w = c2.weight_from_fund({a, b});
            EXPECT_EQ(c2.dual_weight(w), w);
        }

    const auto a2 = RootSystem::build({Family::A, 2});
    EXPECT_EQ(a2.dual_weight(a2.zero()), a2.zero());
}

TEST(RootSystem, CoefficientStatistics) {
    const auto a3 = RootSystem::build({Family::A, 3});
    const auto s = a3.coeff_stats(a3.rho() * 2);
    EXPECT_EQ(s.coefficients, (std::vector<mpq_class>{3, 4, 3}));
    EXPECT_EQ(s.max, 4);
    EXPECT_EQ(s.argmax, 2u);

    const auto w2 = a3.coeff_stats(a3.fundamental_weight(1));
    EXPECT_EQ(w2.argmax, 2u);
    EXPECT_EQ(w2.max, 1);

    const auto a2 = RootSystem::build({Family::A, 2});
    const auto z = a2.coeff_stats(a2.zero());
    EXPECT_EQ(z.coefficients, (std::vector<mpq_class>{0, 0}));
    EXPECT_EQ(z.max, 0);
    EXPECT_EQ(z.argmax, 2u);
}

TEST(RootSystem, CoefficientStatisticsOfFundamentalWeights) {
    // M(omega_j) = j(n+1-j)/(n+1) and m(omega_j) = j in type A_n.
    for (int n = 2; n <= 6; ++n) {
        const auto rs = RootSystem::build({Family::A, n});
        for (int j = 1; j <= n; ++j) {
            const auto s = rs.coeff_stats(rs.fundamental_weight(static_cast<std::size_t>(j - 1)));
            EXPECT_EQ(s.argmax, static_cast<std::size_t>(j));
            mpq_class expected(j * (n + 1 - j), n + 1);
            expected.canonicalize();
            EXPECT_EQ(s.max, expected);
        }
    }
}

TEST(RootSystem, DominanceHeightLattice) {
    const auto a2 = RootSystem::build({Family::A, 2});
    const auto a1 = a2.simple_roots()[0];
    EXPECT_FALSE(a2.is_dominant(a1));
    EXPECT_EQ(a2.height(a1), 1);
    EXPECT_TRUE(a2.in_root_lattice(a1));

    const auto a3 = RootSystem::build({Family::A, 3});
    const auto three_w2 = a3.fundamental_weight(1) * 3;
    EXPECT_TRUE(a3.is_dominant(three_w2));
    EXPECT_FALSE(a3.in_root_lattice(three_w2));
    EXPECT_EQ(three_w2.root_coords(), (std::vector<mpq_class>{mpq_class(3, 2), 3, mpq_class(3, 2)}));

    const auto c2 = RootSystem::build({Family::C, 2});
    EXPECT_TRUE(c2.is_dominant(c2.fundamental_weight(0)));
}

TEST(RootSystem, WeightFromRootRejectsNonLatticePoints) {
    const auto a2 = RootSystem::build({Family::A, 2});
    const std::vector<mpq_class> half{mpq_class(1, 2), 0};
    try {
        a2.weight_from_root(half);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInWeightLattice);
    }
    const std::vector<mpq_class> w1{mpq_class(2, 3), mpq_class(1, 3)};
    EXPECT_EQ(a2.weight_from_root(w1), a2.fundamental_weight(0));
}

class AllSystems : public ::testing::TestWithParam<RootSystemSpec> {};

TEST_P(AllSystems, StandardCounts) {
    const auto rs = RootSystem::build(GetParam());
    EXPECT_EQ(rs.num_positive_roots(), standard_root_count(GetParam()));
    EXPECT_EQ(rs.coxeter_number(), standard_coxeter(GetParam()));
    EXPECT_EQ(rs.root_height(rs.highest_root_index()) + 1, rs.coxeter_number());
    EXPECT_EQ(rs.pairing(rs.rho(), rs.highest_short_root_index()) + 1, rs.coxeter_number());
}

TEST_P(AllSystems, RhoIsAllOnesAndHalfSumOfPositiveRoots) {
    const auto rs = RootSystem::build(GetParam());
    EXPECT_EQ(fund(rs.rho()), std::vector<std::int64_t>(rs.rank(), 1));
    Weight sum = rs.zero();
    for (const auto& beta : rs.positive_roots()) sum = sum + beta;
    EXPECT_EQ(sum, rs.rho() * 2);
    std::vector<mpq_class> root(rs.rank(), 0);
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
        for (std::size_t j = 0; j < rs.rank(); ++j) root[j] += rs.root_vector(k)[j];
    EXPECT_EQ(root, (rs.rho() * 2).root_coords());
}

TEST_P(AllSystems, PositiveRootOrder) {
    const auto rs = RootSystem::build(GetParam());
    for (std::size_t k = 1; k < rs.num_positive_roots(); ++k) {
        const auto a = rs.root_vector(k - 1), b = rs.root_vector(k);
        const auto ha = rs.root_height(k - 1), hb = rs.root_height(k);
        EXPECT_TRUE(ha < hb || (ha == hb && std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())));
    }
    EXPECT_EQ(rs.highest_root_index(), rs.num_positive_roots() - 1);
    for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.root_height(rs.simple_root_index(i)), 1);
}

TEST_P(AllSystems, HighestCorootPairings) {
    const auto rs = RootSystem::build(GetParam());
    const auto h = rs.highest_root_index();
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        const auto v = rs.pairing(rs.positive_roots()[k], h);
        if (k == h) {
            EXPECT_EQ(v, 2);
        } else if (GetParam().family == Family::G) {
            EXPECT_LT(v, 2);
            EXPECT_GE(v, 0);
        } else {
            EXPECT_TRUE(v == 0 || v == 1) << rs.name() << " root " << k;
        }
    }
}

TEST_P(AllSystems, CartanConsistency) {
    const auto rs = RootSystem::build(GetParam());
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        EXPECT_EQ(rs.cartan()(i, i), 2);
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            EXPECT_EQ(rs.pairing(rs.simple_roots()[j], rs.simple_root_index(i)), rs.cartan()(i, j));
            EXPECT_EQ(rs.simple_roots()[j].fund(i), rs.cartan()(i, j));
        }
    }
    // Every root coordinate of a weight has denominator dividing det(C).
    for (const auto& w : rs.fundamental_weights())
        for (const auto& q : w.root_coords()) EXPECT_EQ(rs.cartan_det() % q.get_den().get_si(), 0);
}

TEST_P(AllSystems, CoordinateRoundTrip) {
    const auto rs = RootSystem::build(GetParam());
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> coord(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> f(rs.rank());
        for (auto& x : f) x = coord(rng);
        const auto w = rs.weight_from_fund(f);
        const auto back = rs.weight_from_root(w.root_coords());
        EXPECT_EQ(fund(back), f);
    }
}

TEST_P(AllSystems, DualIsAnInvolutionFixingRho) {
    const auto rs = RootSystem::build(GetParam());
    EXPECT_EQ(rs.dual_weight(rs.rho()), rs.rho());
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> coord(0, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::int64_t> f(rs.rank());
        for (auto& x : f) x = coord(rng);
        const auto w = rs.weight_from_fund(f);
        EXPECT_EQ(rs.dual_weight(rs.dual_weight(w)), w);
        EXPECT_TRUE(rs.is_dominant(rs.dual_weight(w)));
    }
}

TEST_P(AllSystems, ReflectionsAreInvolutions) {
    const auto rs = RootSystem::build(GetParam());
    const auto w = rs.rho() * 3 - rs.fundamental_weight(0);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        EXPECT_EQ(rs.reflect(rs.reflect(w, i), i), w);
        EXPECT_EQ(rs.reflect(rs.simple_roots()[i], i), -rs.simple_roots()[i]);
    }
}

INSTANTIATE_TEST_SUITE_P(Systems, AllSystems, ::testing::ValuesIn(kSystems),
                         [](const auto& info) { return info.param.name(); });

TEST(CheckedArithmetic, Overflow) {
    EXPECT_THROW(detail::checked_mul(INT64_MAX, 2), Error);
    EXPECT_THROW(detail::checked_add(INT64_MAX, 1), Error);
    EXPECT_EQ(detail::checked_add(2, 3), 5);
}
