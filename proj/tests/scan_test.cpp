#include "frobscan/error.hpp"
#include "frobscan/scan.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <ostream>
#include <set>

using namespace frobscan;

namespace {

using Fund = std::vector<std::int64_t>;

Fund fund_of(const Weight& w) { return {w.fund().begin(), w.fund().end()}; }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::InvalidArgument;
}

std::int64_t fund_sum(const Weight& w) {
    std::int64_t s = 0;
    for (auto x : w.fund()) s += x;
    return s;
}

// All dominant mu with fundamental coordinates in [0, bound]^rank.
std::vector<Weight> dominant_box(const RootSystem& rs, std::int64_t bound) {
    std::vector<Weight> out;
    Fund v(rs.rank(), 0);
    while (true) {
        out.push_back(rs.weight_from_fund(v));
        std::size_t k = 0;
        while (k < v.size() && v[k] == bound) v[k++] = 0;
        if (k == v.size()) break;
        ++v[k];
    }
    return out;
}

// Alternating sum recomputed with the test oracle in place of the engine's table.
std::int64_t oracle_dimension(const RootSystem& rs, const WeylGroup& g, const ScanHit& hit) {
    const std::int64_t parts = (hit.degree - hit.decomposition.length) / 2;
    std::int64_t sum = 0;
    for (const auto& u : g.elements()) {
        const auto arg = dot_action(rs, u, hit.lambda) - hit.decomposition.mu;
        if (!arg.root_integral()) continue;
        const auto coords = arg.root_integers();
        bool negative = false;
        for (auto c : coords) negative |= c < 0;
        if (negative) continue;
        sum += u.sign * oracle::partition(rs, coords, parts);
    }
    return sum;
}

std::string dump(const ScanReport& r) {
    std::string s = std::to_string(r.candidates) + "/" + std::to_string(r.pairs_checked) + "/" +
                    std::to_string(r.last_degree_scanned) + "/" + to_string(r.verdict) + ";";
    for (const auto& h : r.nonzero)
        s += h.lambda.to_string() + "@" + std::to_string(h.degree) + "=" + h.dimension.get_str() + ";";
    for (const auto& w : r.witnesses) {
        s += "W" + w.lambda.to_string() + ":";
        for (const auto& t : w.terms) s += std::to_string(t.u) + "," + t.value.get_str() + ";";
    }
    return s;
}

}  // namespace

TEST(Candidates, Examples) {
    Workspace a2({Family::A, 2});
    const auto only_zero = enumerate_candidates(a2.rs, a2.group, 5, 0);
    ASSERT_EQ(only_zero.size(), 1u);
    EXPECT_TRUE(only_zero[0].lambda.is_zero());

    Workspace c2({Family::C, 2});
    bool found = false;
    for (const auto& c : enumerate_candidates(c2.rs, c2.group, 5, 3))
        if (c.lambda == c2.rs.fundamental_weight(0)) {
            found = true;
            EXPECT_EQ(c.decomposition.mu, c2.rs.fundamental_weight(0));
            EXPECT_EQ(c.decomposition.length, 3);
        }
    EXPECT_TRUE(found);
}

// In A_n and C_n the highest coroot pairs with mu as the sum of its fundamental coordinates.
class CandidateSets : public ::testing::TestWithParam<std::pair<RootSystemSpec, std::int64_t>> {};

TEST_P(CandidateSets, MatchIndependentEnumeration) {
    const auto [spec, p] = GetParam();
    Workspace ws(spec);
    const std::int64_t i_max = 2 * p;
    std::set<Fund> expected;
    for (const auto& mu : dominant_box(ws.rs, 3)) {
        if ((p - 1) * fund_sum(mu) - 1 > i_max) continue;
        for (const auto& w : ws.group.elements()) {
            const auto lambda = mu * p + dot_action(ws.rs, w, ws.rs.zero());
            if (ws.rs.is_dominant(lambda)) expected.insert(fund_of(lambda));
        }
    }
    std::set<Fund> got;
    const auto cands = enumerate_candidates(ws.rs, ws.group, p, i_max);
    for (const auto& c : cands) got.insert(fund_of(c.lambda));
    EXPECT_EQ(got.size(), cands.size());
    EXPECT_EQ(got, expected);
    for (std::size_t k = 1; k < cands.size(); ++k)
        EXPECT_LE(ws.rs.height(cands[k - 1].lambda), ws.rs.height(cands[k].lambda));
}

TEST_P(CandidateSets, ExcludedPairsVanish) {
    const auto [spec, p] = GetParam();
    Workspace ws(spec);
    const std::int64_t i_max = 2 * p - 2;
    std::size_t checked = 0;
    for (const auto& mu : dominant_box(ws.rs, 3)) {
        if ((p - 1) * fund_sum(mu) - 1 <= i_max) continue;
        for (const auto& w : ws.group.elements()) {
            const auto lambda = mu * p + dot_action(ws.rs, w, ws.rs.zero());
            if (!ws.rs.is_dominant(lambda)) continue;
            const Decomposition dec{mu, w.index, w.length, p};
            for (std::int64_t i = 1; i <= i_max; ++i)
                ASSERT_EQ(dim_for_decomposition(ws.rs, ws.group, *ws.table, lambda, dec, i, false).dimension, 0)
                    << lambda.to_string() << " i=" << i;
            ++checked;
        }
    }
    EXPECT_GT(checked, 0u);
}

INSTANTIATE_TEST_SUITE_P(Systems, CandidateSets,
                         ::testing::Values(std::pair{RootSystemSpec{Family::A, 2}, std::int64_t{5}},
                                           std::pair{RootSystemSpec{Family::A, 2}, std::int64_t{7}},
                                           std::pair{RootSystemSpec{Family::C, 2}, std::int64_t{5}},
                                           std::pair{RootSystemSpec{Family::A, 3}, std::int64_t{5}}),
                         [](const auto& info) {
                             return info.param.first.name() + "_p" + std::to_string(info.param.second);
                         });

TEST(Scan, C2AtFive) {
    Workspace ws({Family::C, 2});
    const auto r = vanishing_scan(ws.rs, ws.group, *ws.table, 5, 5);
    ASSERT_TRUE(r.least_degree);
    EXPECT_EQ(*r.least_degree, 3);
    EXPECT_EQ(r.least_degree_dimension, 1);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(fund_of(r.witnesses[0].lambda), (Fund{1, 0}));
    EXPECT_EQ(r.verdict, Verdict::Match);
    EXPECT_EQ(r.last_degree_scanned, 5);
    EXPECT_EQ(r.pairs_checked, 5 * r.candidates);
    for (const auto& h : r.nonzero) EXPECT_EQ(h.dimension, oracle_dimension(ws.rs, ws.group, h)) << h.lambda.to_string();
}

TEST(Scan, A2AtFive) {
    Workspace ws({Family::A, 2});
    const auto r = vanishing_scan(ws.rs, ws.group, *ws.table, 5, 8);
    ASSERT_TRUE(r.least_degree);
    EXPECT_EQ(*r.least_degree, 7);
    EXPECT_EQ(r.least_degree_dimension, 1);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(fund_of(r.witnesses[0].lambda), (Fund{3, 3}));
    EXPECT_EQ(r.verdict, Verdict::Match);
    for (const auto& h : r.nonzero) EXPECT_EQ(h.dimension, oracle_dimension(ws.rs, ws.group, h)) << h.lambda.to_string();
}

TEST(Scan, MismatchIsAnOutcome) {
    Workspace ws({Family::A, 2});
    const auto r = vanishing_scan(ws.rs, ws.group, *ws.table, 5, 4);
    EXPECT_FALSE(r.least_degree);
    EXPECT_EQ(r.verdict, Verdict::Mismatch);
}

TEST(Scan, EarlyExitKeepsTheWholeDegree) {
    Workspace ws({Family::A, 3});
    const auto r = vanishing_scan(ws.rs, ws.group, *ws.table, 5, 8, {.jobs = 1, .early_exit = true});
    ASSERT_TRUE(r.least_degree);
    EXPECT_EQ(*r.least_degree, 3);
    EXPECT_EQ(r.last_degree_scanned, 3);
    EXPECT_EQ(r.witnesses.size(), 2u);
    EXPECT_EQ(r.least_degree_dimension, 2);
    EXPECT_EQ(r.verdict, Verdict::Match);
}

TEST(Scan, Preconditions) {
    Workspace ws({Family::A, 2});
    EXPECT_EQ(code_of([&] { vanishing_scan(ws.rs, ws.group, *ws.table, 5, 0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { vanishing_scan(ws.rs, ws.group, *ws.table, 3, 4); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { vanishing_scan(ws.rs, ws.group, *ws.table, 6, 4); }), ErrorCode::InvalidArgument);
}

TEST(VerifyTheorem, Examples) {
    const auto c3 = verify_theorem(Family::C, 3, 7);
    EXPECT_EQ(c3.verdict, Verdict::Match);
    EXPECT_EQ(*c3.least_degree, 5);
    EXPECT_EQ(c3.least_degree_dimension, 1);
    ASSERT_EQ(c3.witnesses.size(), 1u);
    EXPECT_EQ(fund_of(c3.witnesses[0].lambda), (Fund{1, 0, 0}));
    EXPECT_EQ(c3.i_max, 7);

    const auto a2 = verify_theorem(Family::A, 2, 7);
    EXPECT_EQ(a2.verdict, Verdict::Match);
    EXPECT_EQ(*a2.least_degree, 8);
    EXPECT_EQ(a2.least_degree_dimension, 2);

    const auto a3 = verify_theorem(Family::A, 3, 7);
    EXPECT_EQ(a3.verdict, Verdict::Match);
    EXPECT_EQ(*a3.least_degree, 8);
    ASSERT_EQ(a3.witnesses.size(), 1u);
    EXPECT_EQ(fund_of(a3.witnesses[0].lambda), (Fund{0, 3, 0}));
}

TEST(VerifyTheorem, Refusals) {
    EXPECT_EQ(code_of([] { verify_theorem(Family::B, 2, 5); }), ErrorCode::NotCovered);
    EXPECT_EQ(code_of([] { verify_theorem(Family::G, 2, 7); }), ErrorCode::NotCovered);
    EXPECT_EQ(code_of([] { verify_theorem(Family::A, 2, 7, 2); }), ErrorCode::NotCovered);
    EXPECT_EQ(code_of([] { verify_theorem(Family::A, 2, 9); }), ErrorCode::NotCovered);

    Workspace ws({Family::A, 2});
    EXPECT_EQ(code_of([&] { verify_theorem(ws, 37); }), ErrorCode::CapExceeded);
    EXPECT_EQ(code_of([&] { verify_theorem(ws, 7, 1, {}, {.max_rank_a = 1}); }), ErrorCode::CapExceeded);
    EXPECT_EQ(code_of([] { check_desk_caps({Family::A, 7}, 11); }), ErrorCode::CapExceeded);
    EXPECT_EQ(code_of([] { check_desk_caps({Family::C, 5}, 13); }), ErrorCode::CapExceeded);
    EXPECT_NO_THROW(check_desk_caps({Family::F, 4}, 13));
}

TEST(Verdicts, Names) {
    EXPECT_EQ(to_string(Verdict::Match), "MATCH");
    EXPECT_EQ(to_string(Verdict::Mismatch), "MISMATCH");
    EXPECT_EQ(to_string(Verdict::NotCovered), "NOT_COVERED");
}

TEST(Determinism, WorkersAndMemoModes) {
    std::string reference;
    for (unsigned jobs : {1u, 2u, 4u, 7u})
        for (auto memo : {MemoMode::Shared, MemoMode::PerWorker}) {
            Workspace ws({Family::C, 3});
            const auto r = vanishing_scan(ws.rs, ws.group, *ws.table, 7, 8, {.jobs = jobs, .memo = memo});
            const auto d = dump(r);
            if (reference.empty())
                reference = d;
            else
                EXPECT_EQ(d, reference) << "jobs=" << jobs;
        }
}

TEST(Determinism, WarmTableGivesTheSameReport) {
    Workspace ws({Family::A, 3});
    const auto cold = dump(vanishing_scan(ws.rs, ws.group, *ws.table, 7, 10));
    const auto warm = dump(vanishing_scan(ws.rs, ws.group, *ws.table, 7, 10, {.jobs = 3}));
    EXPECT_EQ(cold, warm);
}

struct ScanCase {
    RootSystemSpec spec;
    std::int64_t p;
};

std::ostream& operator<<(std::ostream& os, const ScanCase& c) { return os << c.spec << " p=" << c.p; }

class ScanProperties : public ::testing::TestWithParam<ScanCase> {};

TEST_P(ScanProperties, Hold) {
    const auto [spec, p] = GetParam();
    Workspace ws(spec);
    const auto r = vanishing_scan(ws.rs, ws.group, *ws.table, p, default_i_max(p), {.jobs = 2});
    const auto h = ws.rs.highest_root_index();

    std::map<std::pair<Fund, std::int64_t>, mpz_class> dims;
    for (const auto& hit : r.nonzero) dims[{fund_of(hit.lambda), hit.degree}] = hit.dimension;

    for (const auto& hit : r.nonzero) {
        EXPECT_GT(hit.dimension, 0);
        EXPECT_GE(hit.degree, p - 2) << hit.lambda.to_string();
        EXPECT_EQ((hit.degree - hit.decomposition.length) % 2, 0);
        const auto b = ext_degree_bound(ws.rs, ws.group, hit.decomposition, hit.decomposition, h, p);
        EXPECT_GE(hit.degree, b.bound()) << hit.lambda.to_string();
        EXPECT_GE(hit.degree, (p - 1) * highest_coroot_pairing(ws.rs, hit.decomposition.mu) - 1);

        const auto dual = dims.find({fund_of(ws.rs.dual_weight(hit.lambda)), hit.degree});
        ASSERT_NE(dual, dims.end()) << hit.lambda.to_string();
        EXPECT_EQ(dual->second, hit.dimension);

        if (spec.family == Family::A) {
            const auto& mu = hit.decomposition.mu;
            for (std::size_t j = 0; j < ws.rs.rank(); ++j)
                if (mu == ws.rs.fundamental_weight(j))
                    EXPECT_GE(mpq_class(hit.degree), fundamental_degree_bound(spec.rank, p, static_cast<int>(j) + 1).bound);
        }
    }

    for (const auto& c : enumerate_candidates(ws.rs, ws.group, p, 4))
        for (std::int64_t i = 1; i <= 4; ++i)
            if ((i - c.decomposition.length) % 2 != 0)
                EXPECT_EQ(dim_for_decomposition(ws.rs, ws.group, *ws.table, c.lambda, c.decomposition, i).dimension, 0);

    if (spec.family == Family::C && r.least_degree) {
        ASSERT_EQ(r.witnesses.size(), 1u);
        EXPECT_EQ(r.witnesses[0].lambda, ws.rs.fundamental_weight(0) * (p - 2 * spec.rank));
        EXPECT_EQ(*r.least_degree, p - 2);
    }
}

INSTANTIATE_TEST_SUITE_P(Systems, ScanProperties,
                         ::testing::Values(ScanCase{{Family::A, 2}, 5}, ScanCase{{Family::A, 2}, 7},
                                           ScanCase{{Family::A, 3}, 5}, ScanCase{{Family::A, 3}, 7},
                                           ScanCase{{Family::C, 2}, 5}, ScanCase{{Family::C, 2}, 7},
                                           ScanCase{{Family::C, 3}, 7}, ScanCase{{Family::B, 2}, 5},
                                           ScanCase{{Family::B, 2}, 7}, ScanCase{{Family::G, 2}, 7},
                                           ScanCase{{Family::B, 3}, 7}, ScanCase{{Family::A, 1}, 5}),
                         [](const auto& info) {
                             return info.param.spec.name() + "_p" + std::to_string(info.param.p);
                         });

TEST(Omega2Sums, A3) {
    Workspace ws({Family::A, 3});
    for (std::int64_t p : {7, 11, 13}) {
        const auto s = check_a3_omega2_sum(ws.rs, ws.group, *ws.table, p);
        EXPECT_EQ(s.sum, 1) << p;
        EXPECT_TRUE(s.pass);
        mpz_class total = 0;
        for (const auto& t : s.terms) total += t.sign * t.value;
        EXPECT_EQ(total, s.sum);
    }
    EXPECT_EQ(code_of([&] { check_a3_omega2_sum(ws.rs, ws.group, *ws.table, 9); }), ErrorCode::InvalidArgument);
    Workspace a2({Family::A, 2});
    EXPECT_EQ(code_of([&] { check_a3_omega2_sum(a2.rs, a2.group, *a2.table, 7); }), ErrorCode::InvalidArgument);
}

TEST(Omega2Sums, A4) {
    Workspace ws({Family::A, 4});
    const auto s = check_a4_omega2_sums(ws.rs, ws.group, *ws.table);
    EXPECT_EQ(s.sum_a, 0);
    EXPECT_EQ(s.sum_b, 0);
    EXPECT_EQ(s.stabilizer_size, 12u);
    EXPECT_TRUE(s.pass);
}
