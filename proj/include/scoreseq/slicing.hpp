#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scoreseq/bounds.hpp"
#include "scoreseq/checked.hpp"
#include "scoreseq/checker.hpp"
#include "scoreseq/types.hpp"

namespace scoreseq {

/// One round of reconstruction for player k (the current strongest).
struct SliceResult {
    /// Scores still to be placed for players 1..k-1.
    std::vector<Score> p_reduced;
    /// q[g] = points player g won against player k.
    std::vector<Score> q;
    /// r_row[g] = points player k won against player g.
    std::vector<Score> r_row;

    friend bool operator==(const SliceResult&, const SliceResult&) = default;
};

/// Working parameters of one slicing step. Player indices are 1-based.
struct SliceStep {
    std::size_t k = 0;
    std::size_t x = 0;
    Score a_pool = 0;
    Score missing = 0;
    std::size_t f = 0;
    Score d = 0;
    Score m = 0;
    /// Points sliced from player x in this step.
    Score y = 0;
};

/// Everything a reconstruction did, for plotting or debugging.
struct ReconstructionTrace {
    std::vector<SliceStep> steps;
    /// Provisional score vectors p_n, p_{n-1}, ..., down to the final pair.
    std::vector<std::vector<Score>> rounds;
};

namespace detail {

inline Score ceil_div(Score num, Score den) { return num <= 0 ? 0 : (num + den - 1) / den; }

inline void check_slice_postconditions(const TournamentParams& params,
                                       std::span<const Score> p,
                                       const SliceResult& out) {
    const std::size_t k = p.size();
    const auto fail = [k](const std::string& what) {
        throw AlgorithmInvariantError("slicing round k=" + std::to_string(k) + ": " + what);
    };
    Score row_total = 0;
    for (std::size_t g = 0; g + 1 < k; ++g) {
        const Score pair = out.q[g] + out.r_row[g];
        if (out.q[g] < 0 || out.r_row[g] < 0) {
            fail("negative entry");
        }
        if (pair < params.a() || pair > params.b()) {
            fail("pair total out of [a, b] for player " + std::to_string(g + 1));
        }
        if (out.p_reduced[g] != p[g] - out.q[g] || out.p_reduced[g] < 0) {
            fail("reduced score inconsistent for player " + std::to_string(g + 1));
        }
        row_total += out.r_row[g];
    }
    if (row_total != p[k - 1]) {
        fail("row total " + std::to_string(row_total) + " differs from score " +
             std::to_string(p[k - 1]));
    }
    if (!std::is_sorted(out.p_reduced.begin(), out.p_reduced.end())) {
        fail("reduced scores are not nondecreasing");
    }
    const ScoreSequence reduced(out.p_reduced);
    if (!score_check(params.with_n(static_cast<std::int64_t>(k - 1)), reduced).accepted()) {
        fail("reduced scores are not realizable");
    }
}

}  // namespace detail

/// Fixes the results of player k against players 1..k-1 so that the
/// remaining scores stay sorted and realizable for k-1 players.
///
/// Player k starts out winning b from everyone. Its shortfall M is handed
/// to the opponents as wins, always from the highest unsaturated score and
/// levelling tied blocks so the sequence stays sorted. Every prefix must
/// keep a * B_i points, which caps how much can move. Whatever shortfall
/// remains is dropped as unplayed points, spread evenly from the top, never
/// pushing a pair below a points in total.
///
/// Because unplayed points are limited to b - a per pair, part of the
/// shortfall may be obligatory wins for the opponents. That part is sliced
/// first with a per-opponent cap of a, so it is not spent on a few pairs
/// that then cannot drop anything.
inline SliceResult score_slicing(const TournamentParams& params, std::span<const Score> p,
                                 std::vector<SliceStep>* steps = nullptr) {
    const std::size_t k = p.size();
    if (k < 3) {
        throw ContractViolation("score_slicing needs at least 3 players");
    }
    const ScoreSequence current(std::vector<Score>(p.begin(), p.end()));
    const auto check = score_check(params.with_n(static_cast<std::int64_t>(k)), current);
    if (!check.accepted()) {
        throw InfeasibleInput("slicing round k=" + std::to_string(k) + ": " + check.message());
    }

    const Score a = params.a();
    const Score b = params.b();
    const std::size_t rest = k - 1;
    const auto binomials = binomial_table(rest);

    std::vector<Score> remaining(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(rest));
    std::vector<Score> q(rest, 0);
    // slack[i]: points the first i+1 players hold above their floor a * B_{i+1}
    std::vector<Score> slack(rest);
    {
        Score running = 0;
        for (std::size_t i = 0; i < rest; ++i) {
            running = detail::checked_add(running, remaining[i]);
            slack[i] = running - detail::checked_mul(a, binomials[i + 1]);
        }
    }
    Score missing = detail::checked_sub(detail::checked_mul(static_cast<Score>(rest), b), p[k - 1]);

    std::vector<Score> suffix_min(rest);
    std::vector<Score> sliced(rest);
    const Score max_steps = detail::checked_mul(b, static_cast<Score>(k * k));
    Score step_count = 0;

    // Hands up to `budget` of the shortfall to opponents whose win against
    // k is still below `cap`.
    const auto slice = [&](Score cap, Score budget) {
        while (budget > 0) {
            std::size_t x = rest;
            while (x > 0 && q[x - 1] >= cap) {
                --x;
            }
            if (x == 0) {
                return;
            }
            --x;  // 0-based highest unsaturated opponent

            std::size_t low = x;
            while (low > 0 && remaining[low - 1] == remaining[x]) {
                --low;
            }
            const auto f = static_cast<Score>(x - low + 1);
            const Score below = low > 0 ? remaining[low - 1] : 0;
            const Score d = remaining[x] - below;

            suffix_min[rest - 1] = slack[rest - 1];
            for (std::size_t i = rest - 1; i-- > low;) {
                suffix_min[i] = std::min(slack[i], suffix_min[i + 1]);
            }
            const Score pool = suffix_min[low];
            if (d == 0 || pool == 0) {
                return;
            }
            if (++step_count > max_steps) {
                throw AlgorithmInvariantError("slicing round k=" + std::to_string(k) +
                                              " exceeded its iteration bound");
            }

            const Score m =
                std::min({cap, d, detail::ceil_div(pool, f), detail::ceil_div(budget, f)});
            const Score missing_before = missing;
            Score taken = 0;
            Score previous = m;
            std::fill(sliced.begin() + static_cast<std::ptrdiff_t>(low),
                      sliced.begin() + static_cast<std::ptrdiff_t>(x) + 1, 0);
            // lowest member of the tied block first; no member may get more
            // than the one below it, or the block would fall out of order
            for (std::size_t j = low; j <= x; ++j) {
                const Score y = std::min({cap - q[j], previous, budget, suffix_min[j] - taken,
                                          remaining[j]});
                if (y <= 0) {
                    break;
                }
                q[j] += y;
                remaining[j] -= y;
                missing -= y;
                budget -= y;
                taken += y;
                sliced[j] = y;
                previous = y;
            }
            if (taken == 0) {
                throw AlgorithmInvariantError("slicing round k=" + std::to_string(k) +
                                              " made no progress");
            }
            Score cumulative = 0;
            for (std::size_t i = low; i < rest; ++i) {
                if (i <= x) {
                    cumulative += sliced[i];
                }
                slack[i] -= cumulative;
            }
            if (steps != nullptr) {
                steps->push_back(SliceStep{k, x + 1, pool, missing_before,
                                           static_cast<std::size_t>(f), d, m, sliced[x]});
            }
        }
    };

    // Each pair must still total at least a, so at most (k-1)(b-a) of the
    // shortfall can go unplayed; the rest has to be won by opponents, and
    // only the first a of any single opponent's wins helps with that.
    const Score obligatory = missing - static_cast<Score>(rest) * (b - a);
    if (obligatory > 0) {
        slice(a, obligatory);
    }
    slice(b, missing);

    std::vector<Score> r_row(rest);
    std::vector<Score> floor(rest);
    for (std::size_t g = 0; g < rest; ++g) {
        r_row[g] = b - q[g];
        floor[g] = std::max<Score>(a - q[g], 0);
    }
    // drop the leftover shortfall as unplayed points, levelling from the top
    while (missing > 0) {
        Score eligible = 0;
        Score min_excess = 0;
        for (std::size_t g = 0; g < rest; ++g) {
            const Score excess = r_row[g] - floor[g];
            if (excess > 0) {
                min_excess = eligible == 0 ? excess : std::min(min_excess, excess);
                ++eligible;
            }
        }
        if (eligible == 0) {
            throw AlgorithmInvariantError("slicing round k=" + std::to_string(k) + ": " +
                                          std::to_string(missing) + " points could not be placed");
        }
        if (missing >= eligible * min_excess) {
            for (std::size_t g = 0; g < rest; ++g) {
                if (r_row[g] > floor[g]) {
                    r_row[g] -= min_excess;
                }
            }
            missing -= eligible * min_excess;
            continue;
        }
        const Score full = missing / eligible;
        Score extra = missing % eligible;
        for (std::size_t g = rest; g-- > 0;) {
            if (r_row[g] > floor[g]) {
                r_row[g] -= full;
                if (extra > 0) {
                    --r_row[g];
                    --extra;
                }
            }
        }
        missing = 0;
    }

    SliceResult out{std::move(remaining), std::move(q), std::move(r_row)};
    detail::check_slice_postconditions(params, p, out);
    return out;
}

/// Two players left: each keeps exactly its own remaining score.
inline std::pair<Score, Score> reconstruct_pair(const TournamentParams& params, Score p1, Score p2) {
    if (p1 < 0 || p2 < 0) {
        throw InfeasibleInput("negative score in final pair");
    }
    const Score total = detail::checked_add(p1, p2);
    if (total < params.a() || total > params.b()) {
        throw InfeasibleInput("final pair total " + std::to_string(total) + " is outside [" +
                              std::to_string(params.a()) + ", " + std::to_string(params.b()) +
                              "]");
    }
    return {p1, p2};
}

/// Builds a point table whose row sums are the given scores. Deterministic.
inline PointTable reconstruct(const TournamentParams& params, const ScoreSequence& s,
                              ReconstructionTrace* trace = nullptr) {
    const auto check = score_check(params, s);
    if (!check.accepted()) {
        throw InfeasibleInput(check.message());
    }
    const std::size_t n = s.size();
    PointTable table(n);
    std::vector<Score> p = s.vector();
    if (trace != nullptr) {
        trace->rounds.push_back(p);
    }
    for (std::size_t k = n; k >= 3; --k) {
        auto slice = score_slicing(params, p, trace != nullptr ? &trace->steps : nullptr);
        for (std::size_t g = 0; g + 1 < k; ++g) {
            table(g, k - 1) = slice.q[g];
            table(k - 1, g) = slice.r_row[g];
        }
        p = std::move(slice.p_reduced);
        if (trace != nullptr) {
            trace->rounds.push_back(p);
        }
    }
    if (n >= 2) {
        const auto [r12, r21] = reconstruct_pair(params, p[0], p[1]);
        table(0, 1) = r12;
        table(1, 0) = r21;
    } else if (n == 1 && p[0] != 0) {
        throw AlgorithmInvariantError("single player with nonzero score slipped past the check");
    }

    for (std::size_t i = 0; i < n; ++i) {
        Score row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                const Score pair = table(i, j) + table(j, i);
                if (table(i, j) < 0 || pair < params.a() || pair > params.b()) {
                    throw AlgorithmInvariantError("reconstructed pair (" + std::to_string(i + 1) +
                                                  ", " + std::to_string(j + 1) +
                                                  ") breaks the point bounds");
                }
            }
            row += table(i, j);
        }
        if (row != s.at(i + 1)) {
            throw AlgorithmInvariantError("reconstructed row " + std::to_string(i + 1) +
                                          " does not sum to its score");
        }
    }
    return table;
}

}  // namespace scoreseq
