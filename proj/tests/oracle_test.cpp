#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "scoreseq/checker.hpp"
#include "scoreseq/oracle.hpp"
#include "test_support.hpp"

namespace scoreseq {
namespace {

using testing::for_each_sorted_sequence;
using Vec = std::vector<Score>;

bool has(const VerificationReport& r, ViolationKind kind) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

TEST(VerifyTable, WorkedTablesPass) {
    const TournamentParams params{6, 2, 10};
    const auto s = testing::six_player_scores();
    EXPECT_TRUE(verify_table(params, testing::six_player_results(), s).passed());
    EXPECT_TRUE(verify_table(params, testing::six_player_reconstruction(), s).passed());
}

TEST(VerifyTable, SingleTamperIsARowSumViolation) {
    auto t = testing::six_player_results();
    t(0, 1) = 9;
    const auto report = verify_table({6, 2, 10}, t, testing::six_player_scores());
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].kind, ViolationKind::row_sum);
    EXPECT_EQ(report.violations[0].row, 0u);
    EXPECT_EQ(report.violations[0].observed, 17);
}

TEST(VerifyTable, ItemizesEveryKind) {
    const TournamentParams params{3, 2, 4};
    auto t = testing::table_from_rows({{1, 0, 5}, {0, 0, 2}, {-1, 1, 0}});
    const auto report = verify_table(params, t, Vec{6, 2, 1});
    EXPECT_FALSE(report.passed());
    EXPECT_TRUE(has(report, ViolationKind::diagonal));
    EXPECT_TRUE(has(report, ViolationKind::pair_sum_low));
    EXPECT_FALSE(has(report, ViolationKind::pair_sum_high));
    EXPECT_TRUE(has(report, ViolationKind::negative_entry));
    EXPECT_TRUE(has(report, ViolationKind::row_sum));

    t(0, 2) = 9;
    EXPECT_TRUE(has(verify_table(params, t, Vec{10, 2, 0}), ViolationKind::pair_sum_high));
}

TEST(VerifyTable, DimensionMismatch) {
    EXPECT_THROW(verify_table({3, 1, 1}, PointTable(2), Vec{0, 1}), ContractViolation);
    EXPECT_THROW(verify_table({2, 1, 1}, PointTable(2), Vec{0, 1, 2}), ContractViolation);
}

TEST(ScoresOf, Examples) {
    EXPECT_EQ(scores_of(testing::six_player_results()), (Vec{9, 9, 19, 20, 32, 34}));
    EXPECT_EQ(scores_of(PointTable(3)), (Vec{0, 0, 0}));
    EXPECT_EQ(scores_of(testing::three_player_witness()), (Vec{3, 4, 5}));
}

TEST(EnumerateScoreSequences, Examples) {
    EXPECT_EQ(enumerate_score_sequences({2, 1, 1}), (std::set<ScoreSequence>{{0, 1}}));
    EXPECT_EQ(enumerate_score_sequences({3, 1, 1}),
              (std::set<ScoreSequence>{{0, 1, 2}, {1, 1, 1}}));
    EXPECT_EQ(enumerate_score_sequences({2, 1, 2}),
              (std::set<ScoreSequence>{{0, 1}, {0, 2}, {1, 1}}));
}

TEST(EnumerateScoreSequences, SetSizesMatchIndependentEnumeration) {
    // frozen from tests/oracle/freeze_constants.py (plain itertools product)
    struct Expected {
        std::int64_t n, a, b;
        std::size_t size;
    };
    const std::vector<Expected> table{
        {2, 0, 1, 2},   {2, 1, 1, 1},   {2, 0, 2, 4},   {2, 1, 2, 3},  {2, 2, 2, 2},
        {2, 0, 3, 6},   {2, 1, 3, 5},   {2, 2, 3, 4},   {2, 3, 3, 2},  {3, 0, 1, 6},
        {3, 1, 1, 2},   {3, 0, 2, 20},  {3, 1, 2, 14},  {3, 2, 2, 5},  {3, 0, 3, 46},
        {3, 1, 3, 38},  {3, 2, 3, 27},  {3, 3, 3, 8},   {4, 0, 1, 19}, {4, 1, 1, 4},
        {4, 0, 2, 111}, {4, 1, 2, 76},  {4, 2, 2, 16},  {4, 0, 3, 368}, {4, 1, 3, 305},
        {4, 2, 3, 208}, {4, 3, 3, 37},
    };
    for (const auto& e : table) {
        EXPECT_EQ(enumerate_score_sequences({e.n, e.a, e.b}).size(), e.size)
            << "n=" << e.n << " a=" << e.a << " b=" << e.b;
    }
}

TEST(EnumerateScoreSequences, RefusesOverBudget) {
    EXPECT_EQ(outcome_space_size({4, 0, 3}), 1'000'000u);
    EXPECT_THROW(enumerate_score_sequences({4, 0, 3}, 999'999), BudgetExceeded);
    EXPECT_THROW(enumerate_score_sequences({12, 0, 10}), BudgetExceeded);
    EXPECT_THROW(count_reconstructions({12, 0, 10}, Vec(12, 5)), BudgetExceeded);
    EXPECT_THROW(brute_force_realizable({12, 0, 10}, Vec(12, 5)), BudgetExceeded);
}

TEST(BruteForceRealizable, Examples) {
    EXPECT_FALSE(brute_force_realizable({3, 2, 10}, ScoreSequence{1, 1, 21}));
    EXPECT_TRUE(brute_force_realizable({3, 1, 1}, ScoreSequence{1, 1, 1}));
    EXPECT_TRUE(brute_force_realizable({3, 2, 2}, ScoreSequence{1, 1, 4}));
}

TEST(CountReconstructions, Examples) {
    // 75 frozen from the unpruned Python enumeration; 120 is the naive upper bound
    EXPECT_EQ(count_reconstructions({3, 2, 10}, ScoreSequence{3, 4, 5}), 75u);
    EXPECT_EQ(count_reconstructions({3, 1, 1}, ScoreSequence{0, 1, 2}), 1u);
    EXPECT_EQ(count_reconstructions({3, 1, 1}, ScoreSequence{1, 1, 1}), 2u);
    EXPECT_EQ(count_reconstructions({3, 2, 2}, ScoreSequence{1, 1, 4}), 1u);
}

TEST(Oracles, AreMutuallyCoherent) {
    for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            for (std::int64_t a = 0; a <= b; ++a) {
                const TournamentParams params{n, a, b};
                const auto all = enumerate_score_sequences(params);
                for_each_sorted_sequence(
                    static_cast<std::size_t>(n), (n - 1) * b, [&](const ScoreSequence& s) {
                        const bool realizable = brute_force_realizable(params, s);
                        ASSERT_EQ(realizable, all.contains(s));
                        ASSERT_EQ(count_reconstructions(params, s) >= 1, realizable);
                    });
            }
        }
    }
}

TEST(Oracles, ReversalDualityWhenEveryMatchIsFull) {
    for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t a = 1; a <= 3; ++a) {
            const TournamentParams params{n, a, a};
            const auto all = enumerate_score_sequences(params);
            for_each_sorted_sequence(static_cast<std::size_t>(n), a * (n - 1),
                                     [&](const ScoreSequence& s) {
                                         Vec mirrored;
                                         for (const auto v : s) {
                                             mirrored.push_back(a * (n - 1) - v);
                                         }
                                         const auto flipped =
                                             ScoreSequence::from_unsorted(mirrored);
                                         ASSERT_EQ(brute_force_realizable(params, s),
                                                   brute_force_realizable(params, flipped));
                                         ASSERT_EQ(all.contains(s), all.contains(flipped));
                                     });
        }
    }
}

TEST(RandomTournament, IsValidAndDeterministic) {
    const RandomSpec spec{{10, 2, 7}, 99};
    const auto t = random_tournament(spec);
    EXPECT_EQ(t, random_tournament(spec));
    EXPECT_NE(t, random_tournament({{10, 2, 7}, 100}));
    EXPECT_TRUE(verify_table(spec.params, t, scores_of(t)).passed());
}

TEST(RandomTournament, ScoresRoundTripThroughTheChecker) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto n = static_cast<std::int64_t>(1 + seed % 30);
        const auto b = static_cast<std::int64_t>(1 + (seed / 30) % 8);
        const auto a = static_cast<std::int64_t>(seed % static_cast<std::uint64_t>(b + 1));
        const TournamentParams params{n, a, b};
        const auto t = random_tournament({params, seed});
        const auto scores = scores_of(t);
        ASSERT_TRUE(verify_table(params, t, scores).passed());
        const auto s = ScoreSequence::from_unsorted(scores);
        ASSERT_TRUE(score_check(params, s).accepted()) << "seed " << seed;
        const auto total = std::accumulate(scores.begin(), scores.end(), Score{0});
        ASSERT_GE(total, a * (n * (n - 1) / 2));
        ASSERT_LE(total, b * (n * (n - 1) / 2));
    }
}

}  // namespace
}  // namespace scoreseq
