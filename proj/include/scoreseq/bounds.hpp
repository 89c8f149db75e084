#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "scoreseq/checked.hpp"
#include "scoreseq/types.hpp"

namespace scoreseq {

/// B_0..B_n, S_0..S_n and L_0..L_n. Every vector has length n + 1 and index 0
/// holds the zero sentinel.
struct BoundTables {
    std::vector<Score> binomials;
    std::vector<Score> prefix_sums;
    std::vector<Score> losses;

    friend bool operator==(const BoundTables&, const BoundTables&) = default;
};

/// k choose 2.
inline Score binomial2(std::int64_t k) {
    if (k < 0) {
        throw ContractViolation("binomial2 requires k >= 0");
    }
    // one of k, k-1 is even, so halve it before multiplying
    if (k % 2 == 0) {
        return detail::checked_mul(k / 2, k - 1);
    }
    return detail::checked_mul(k, (k - 1) / 2);
}

inline std::vector<Score> binomial_table(std::size_t n) {
    std::vector<Score> out(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        out[k] = detail::checked_add(out[k - 1], static_cast<Score>(k) - 1);
    }
    return out;
}

inline std::vector<Score> prefix_sums(std::span<const Score> scores) {
    std::vector<Score> out(scores.size() + 1, 0);
    for (std::size_t k = 1; k <= scores.size(); ++k) {
        out[k] = detail::checked_add(out[k - 1], scores[k - 1]);
    }
    return out;
}

inline std::vector<Score> prefix_sums(const ScoreSequence& s) { return prefix_sums(s.values()); }

/// L_0 = 0, L_k = max(L_{k-1}, b * B_k - S_k): a lower bound on the points
/// the k weakest players must have left unplayed among themselves.
inline std::vector<Score> loss_sequence(const TournamentParams& params, const ScoreSequence& s) {
    if (static_cast<std::int64_t>(s.size()) != params.n()) {
        throw ContractViolation("score sequence length does not match n");
    }
    const auto binomials = binomial_table(s.size());
    const auto sums = prefix_sums(s);
    std::vector<Score> out(s.size() + 1, 0);
    for (std::size_t k = 1; k <= s.size(); ++k) {
        const Score deficit =
            detail::checked_sub(detail::checked_mul(params.b(), binomials[k]), sums[k]);
        out[k] = std::max(out[k - 1], deficit);
    }
    return out;
}

inline BoundTables compute_bound_tables(const TournamentParams& params, const ScoreSequence& s) {
    return BoundTables{binomial_table(s.size()), prefix_sums(s), loss_sequence(params, s)};
}

}  // namespace scoreseq
