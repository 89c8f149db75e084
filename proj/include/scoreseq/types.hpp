#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "scoreseq/errors.hpp"

namespace scoreseq {

using Score = std::int64_t;

/// The triple (n, a, b): n players, every pair splits between a and b points.
class TournamentParams {
public:
    TournamentParams(std::int64_t n, std::int64_t a, std::int64_t b) : n_(n), a_(a), b_(b) {
        if (n < 1) {
            throw ContractViolation("player count n must be at least 1, got " + std::to_string(n));
        }
        if (b < 1) {
            throw ContractViolation("b must be at least 1, got " + std::to_string(b));
        }
        if (a < 0 || a > b) {
            throw ContractViolation("a must satisfy 0 <= a <= b, got a=" + std::to_string(a) +
                                    " b=" + std::to_string(b));
        }
    }

    std::int64_t n() const noexcept { return n_; }
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }

    /// Same a and b, different player count.
    TournamentParams with_n(std::int64_t n) const { return {n, a_, b_}; }

    friend bool operator==(const TournamentParams&, const TournamentParams&) = default;

private:
    std::int64_t n_;
    std::int64_t a_;
    std::int64_t b_;
};

/// Nonnegative, nondecreasing scores s_1 <= ... <= s_n.
class ScoreSequence {
public:
    ScoreSequence() = default;

    explicit ScoreSequence(std::vector<Score> scores) : scores_(std::move(scores)) {
        for (std::size_t i = 0; i < scores_.size(); ++i) {
            if (scores_[i] < 0) {
                throw ContractViolation("score " + std::to_string(i + 1) + " is negative");
            }
            if (i > 0 && scores_[i] < scores_[i - 1]) {
                throw ContractViolation("scores must be nondecreasing (position " +
                                        std::to_string(i + 1) + ")");
            }
        }
    }

    ScoreSequence(std::initializer_list<Score> scores) : ScoreSequence(std::vector<Score>(scores)) {}

    /// Sorts an arbitrary score vector; still rejects negative entries.
    static ScoreSequence from_unsorted(std::vector<Score> scores) {
        std::sort(scores.begin(), scores.end());
        return ScoreSequence(std::move(scores));
    }

    std::size_t size() const noexcept { return scores_.size(); }
    bool empty() const noexcept { return scores_.empty(); }

    /// 1-based access, matching the s_1..s_n convention.
    Score at(std::size_t k) const { return scores_.at(k - 1); }

    std::span<const Score> values() const noexcept { return scores_; }
    const std::vector<Score>& vector() const noexcept { return scores_; }

    auto begin() const noexcept { return scores_.begin(); }
    auto end() const noexcept { return scores_.end(); }

    friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;
    friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;

private:
    std::vector<Score> scores_;
};

/// n x n matrix of points; entry (i, j) is what player i won against player j.
/// Indices are 0-based. The invariants (zero diagonal, pair sums in [a, b])
/// are checked by verify_table, not enforced on every write.
class PointTable {
public:
    PointTable() = default;
    explicit PointTable(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }

    Score& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    Score operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

    std::span<const Score> row(std::size_t i) const {
        return std::span<const Score>(cells_).subspan(i * n_, n_);
    }

    friend bool operator==(const PointTable&, const PointTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Score> cells_;
};

}  // namespace scoreseq
