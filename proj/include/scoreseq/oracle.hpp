#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scoreseq/types.hpp"

namespace scoreseq {

// Brute-force ground truth. Nothing here uses the bound tables or the
// slicing code; these routines look at point tables directly.

enum class ViolationKind { diagonal, pair_sum_low, pair_sum_high, row_sum, negative_entry };

inline std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::diagonal:
            return "diagonal";
        case ViolationKind::pair_sum_low:
            return "pair_sum_low";
        case ViolationKind::pair_sum_high:
            return "pair_sum_high";
        case ViolationKind::row_sum:
            return "row_sum";
        case ViolationKind::negative_entry:
            return "negative_entry";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    /// 0-based row and column; for row_sum the column equals the row.
    std::size_t row;
    std::size_t col;
    Score observed;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }
};

/// Checks a table against a score vector given in the table's own row order.
inline VerificationReport verify_table(const TournamentParams& params, const PointTable& t,
                                       std::span<const Score> scores) {
    const std::size_t n = t.size();
    if (static_cast<std::int64_t>(n) != params.n() || scores.size() != n) {
        throw ContractViolation("verify_table: table is " + std::to_string(n) + "x" +
                                std::to_string(n) + ", n = " + std::to_string(params.n()) +
                                ", " + std::to_string(scores.size()) + " scores");
    }
    VerificationReport report;
    for (std::size_t i = 0; i < n; ++i) {
        Score row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Score v = t(i, j);
            row += v;
            if (v < 0) {
                report.violations.push_back({ViolationKind::negative_entry, i, j, v});
            }
            if (i == j) {
                if (v != 0) {
                    report.violations.push_back({ViolationKind::diagonal, i, j, v});
                }
                continue;
            }
            if (i < j) {
                const Score pair = v + t(j, i);
                if (pair < params.a()) {
                    report.violations.push_back({ViolationKind::pair_sum_low, i, j, pair});
                } else if (pair > params.b()) {
                    report.violations.push_back({ViolationKind::pair_sum_high, i, j, pair});
                }
            }
        }
        if (row != scores[i]) {
            report.violations.push_back({ViolationKind::row_sum, i, i, row});
        }
    }
    return report;
}

inline VerificationReport verify_table(const TournamentParams& params, const PointTable& t,
                                       const ScoreSequence& s) {
    return verify_table(params, t, s.values());
}

/// Row sums, in row order.
inline std::vector<Score> scores_of(const PointTable& t) {
    std::vector<Score> out(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (const Score v : t.row(i)) {
            out[i] += v;
        }
    }
    return out;
}

inline constexpr std::uint64_t default_oracle_budget = 100'000'000;

/// Number of complete outcome assignments: the product over all pairs of
/// the number of (r_ij, r_ji) splits with a <= r_ij + r_ji <= b. Saturates.
inline std::uint64_t outcome_space_size(const TournamentParams& params) {
    std::uint64_t per_pair = 0;
    for (std::int64_t t = params.a(); t <= params.b(); ++t) {
        per_pair += static_cast<std::uint64_t>(t + 1);
    }
    const auto n = static_cast<std::uint64_t>(params.n());
    const std::uint64_t pairs = n * (n - 1) / 2;
    std::uint64_t total = 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t i = 0; i < pairs; ++i) {
        if (per_pair != 0 && total > cap / per_pair) {
            return cap;
        }
        total *= per_pair;
    }
    return total;
}

namespace detail {

inline void require_budget(const TournamentParams& params, std::uint64_t budget) {
    const auto size = outcome_space_size(params);
    if (size > budget) {
        throw BudgetExceeded("outcome space of " + std::to_string(size) +
                             " tables exceeds the budget of " + std::to_string(budget));
    }
}

inline std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

/// Depth-first walk over pair outcomes with row-sum pruning: partial rows
/// never exceed their target and the matches left can still cover the gap.
class RealizationSearch {
public:
    RealizationSearch(const TournamentParams& params, std::span<const Score> target)
        : a_(params.a()),
          b_(params.b()),
          target_(target.begin(), target.end()),
          pairs_(all_pairs(target.size())),
          rows_(target.size(), 0),
          matches_left_(target.size(), target.empty() ? 0 : static_cast<Score>(target.size() - 1)),
          table_(target.size()) {}

    /// Counts tables, stopping once `limit` have been found.
    std::uint64_t count(std::uint64_t limit) {
        found_ = 0;
        limit_ = limit;
        walk(0);
        return found_;
    }

    const PointTable& witness() const { return witness_; }

private:
    void walk(std::size_t idx) {
        if (found_ >= limit_) {
            return;
        }
        if (idx == pairs_.size()) {
            if (rows_ == target_) {
                if (found_ == 0) {
                    witness_ = table_;
                }
                ++found_;
            }
            return;
        }
        const auto [i, j] = pairs_[idx];
        --matches_left_[i];
        --matches_left_[j];
        for (Score total = a_; total <= b_; ++total) {
            for (Score x = 0; x <= total; ++x) {
                const Score y = total - x;
                const Score ri = rows_[i] + x;
                const Score rj = rows_[j] + y;
                if (ri > target_[i] || rj > target_[j]) {
                    continue;
                }
                if (ri + b_ * matches_left_[i] < target_[i] ||
                    rj + b_ * matches_left_[j] < target_[j]) {
                    continue;
                }
                rows_[i] = ri;
                rows_[j] = rj;
                table_(i, j) = x;
                table_(j, i) = y;
                walk(idx + 1);
                rows_[i] -= x;
                rows_[j] -= y;
                if (found_ >= limit_) {
                    break;
                }
            }
        }
        table_(i, j) = 0;
        table_(j, i) = 0;
        ++matches_left_[i];
        ++matches_left_[j];
    }

    Score a_;
    Score b_;
    std::vector<Score> target_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<Score> rows_;
    std::vector<Score> matches_left_;
    PointTable table_;
    PointTable witness_;
    std::uint64_t found_ = 0;
    std::uint64_t limit_ = 0;
};

}  // namespace detail

/// Every sorted score sequence some point table under `params` produces.
/// Refuses (BudgetExceeded) rather than returning a partial set.
inline std::set<ScoreSequence> enumerate_score_sequences(
    const TournamentParams& params, std::uint64_t budget = default_oracle_budget) {
    detail::require_budget(params, budget);
    const auto n = static_cast<std::size_t>(params.n());
    const auto pairs = detail::all_pairs(n);
    std::set<ScoreSequence> found;
    std::vector<Score> rows(n, 0);

    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (idx == pairs.size()) {
            found.insert(ScoreSequence::from_unsorted(rows));
            return;
        }
        const auto [i, j] = pairs[idx];
        for (Score total = params.a(); total <= params.b(); ++total) {
            for (Score x = 0; x <= total; ++x) {
                rows[i] += x;
                rows[j] += total - x;
                self(self, idx + 1);
                rows[i] -= x;
                rows[j] -= total - x;
            }
        }
    };
    walk(walk, 0);
    return found;
}

inline bool brute_force_realizable(const TournamentParams& params, std::span<const Score> scores,
                                   std::uint64_t budget = default_oracle_budget) {
    if (static_cast<std::int64_t>(scores.size()) != params.n()) {
        throw ContractViolation("brute_force_realizable: length does not match n");
    }
    detail::require_budget(params, budget);
    return detail::RealizationSearch(params, scores).count(1) > 0;
}

inline bool brute_force_realizable(const TournamentParams& params, const ScoreSequence& s,
                                   std::uint64_t budget = default_oracle_budget) {
    return brute_force_realizable(params, s.values(), budget);
}

/// Number of distinct labelled point tables whose rows sum to the scores.
inline std::uint64_t count_reconstructions(const TournamentParams& params,
                                           std::span<const Score> scores,
                                           std::uint64_t budget = default_oracle_budget) {
    if (static_cast<std::int64_t>(scores.size()) != params.n()) {
        throw ContractViolation("count_reconstructions: length does not match n");
    }
    detail::require_budget(params, budget);
    return detail::RealizationSearch(params, scores).count(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t count_reconstructions(const TournamentParams& params, const ScoreSequence& s,
                                           std::uint64_t budget = default_oracle_budget) {
    return count_reconstructions(params, s.values(), budget);
}

struct RandomSpec {
    TournamentParams params;
    std::uint64_t seed = 0;
};

namespace detail {

/// Uniform draw from [lo, hi]. Written out instead of using
/// std::uniform_int_distribution so a seed gives the same table everywhere.
inline std::int64_t draw_uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(rng());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v = rng();
    while (v >= limit) {
        v = rng();
    }
    return lo + static_cast<std::int64_t>(v % span);
}

}  // namespace detail

/// For each pair: total uniform in [a, b], then the split uniform in [0, total].
inline PointTable random_tournament(const RandomSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.params.n());
    std::mt19937_64 rng(spec.seed);
    PointTable table(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto total = detail::draw_uniform(rng, spec.params.a(), spec.params.b());
            const auto x = detail::draw_uniform(rng, 0, total);
            table(i, j) = x;
            table(j, i) = total - x;
        }
    }
    return table;
}

}  // namespace scoreseq
