#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "scoreseq/bounds.hpp"
#include "scoreseq/checked.hpp"
#include "scoreseq/types.hpp"

namespace scoreseq {

enum class Verdict { accepted, score_too_small, score_too_large };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::accepted:
            return "accepted";
        case Verdict::score_too_small:
            return "score_too_small";
        case Verdict::score_too_large:
            return "score_too_large";
    }
    return "unknown";
}

struct CheckReport {
    Verdict verdict = Verdict::accepted;
    /// 1-based index of the first violated inequality; empty when accepted.
    std::optional<std::size_t> failing_index;
    BoundTables tables;

    bool accepted() const noexcept { return verdict == Verdict::accepted; }

    /// The fixed message strings, including the uniform "-th" suffix.
    std::string message() const {
        switch (verdict) {
            case Verdict::score_too_small:
                return std::to_string(*failing_index) + "-th score is too small";
            case Verdict::score_too_large:
                return std::to_string(*failing_index) + "-th score is too large";
            case Verdict::accepted:
                break;
        }
        return "the sequence satisfies both necessary conditions";
    }
};

/// a * B_k, the fewest points the k weakest players can hold.
inline Score lower_bound_at(const TournamentParams& params, const BoundTables& tables,
                            std::size_t k) {
    return detail::checked_mul(params.a(), tables.binomials[k]);
}

/// b * B_n - L_k - (n - k) * s_k, the most points the k weakest players can hold.
inline Score upper_bound_at(const TournamentParams& params, const BoundTables& tables,
                            std::size_t k) {
    const std::size_t n = tables.binomials.size() - 1;
    const Score s_k = tables.prefix_sums[k] - tables.prefix_sums[k - 1];
    Score bound = detail::checked_mul(params.b(), tables.binomials[n]);
    bound = detail::checked_sub(bound, tables.losses[k]);
    return detail::checked_sub(bound, detail::checked_mul(static_cast<Score>(n - k), s_k));
}

/// Decides realizability in one pass over k = 1..n. The first violated
/// inequality wins; at equal k the lower bound is tested first. The bound
/// tables are always filled for the whole sequence.
inline CheckReport score_check(const TournamentParams& params, const ScoreSequence& s) {
    if (static_cast<std::int64_t>(s.size()) != params.n()) {
        throw ContractViolation("score_check: sequence has " + std::to_string(s.size()) +
                                " entries but n = " + std::to_string(params.n()));
    }
    CheckReport report;
    report.tables = compute_bound_tables(params, s);
    for (std::size_t k = 1; k <= s.size(); ++k) {
        const Score sum = report.tables.prefix_sums[k];
        if (sum < lower_bound_at(params, report.tables, k)) {
            report.verdict = Verdict::score_too_small;
            report.failing_index = k;
            return report;
        }
        if (sum > upper_bound_at(params, report.tables, k)) {
            report.verdict = Verdict::score_too_large;
            report.failing_index = k;
            return report;
        }
    }
    return report;
}

inline bool is_score_sequence(const TournamentParams& params, const ScoreSequence& s) {
    return score_check(params, s).accepted();
}

// Classical special cases, written straight from their own statements so they
// share nothing with score_check.

/// Landau: S_k >= k(k-1)/2 for all k, with equality at k = n.
inline bool landau_check(std::size_t n, const ScoreSequence& s) {
    if (s.size() != n) {
        return false;
    }
    long long sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        sum += s.at(k);
        const long long matches = static_cast<long long>(k) * static_cast<long long>(k - 1) / 2;
        if (sum < matches) {
            return false;
        }
        if (k == n && sum != matches) {
            return false;
        }
    }
    return true;
}

/// Moon: S_k >= a * k(k-1)/2 for all k, with equality at k = n.
inline bool moon_check(std::int64_t a, const ScoreSequence& s) {
    const std::size_t n = s.size();
    long long sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        sum += s.at(k);
        const long long points = a * (static_cast<long long>(k) * static_cast<long long>(k - 1) / 2);
        if (sum < points) {
            return false;
        }
        if (k == n && sum != points) {
            return false;
        }
    }
    return true;
}

}  // namespace scoreseq
