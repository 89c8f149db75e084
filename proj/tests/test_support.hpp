#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "scoreseq/types.hpp"

namespace scoreseq::testing {

inline PointTable table_from_rows(std::initializer_list<std::initializer_list<Score>> rows) {
    PointTable t(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto v : row) {
            t(i, j++) = v;
        }
        ++i;
    }
    return t;
}

// The six-player (2,10) tournament used throughout as the worked example.
inline PointTable six_player_results() {
    return table_from_rows({{0, 1, 5, 1, 1, 1},
                            {1, 0, 4, 2, 0, 2},
                            {3, 3, 0, 5, 4, 4},
                            {8, 2, 5, 0, 2, 3},
                            {9, 9, 5, 7, 0, 2},
                            {8, 7, 5, 6, 8, 0}});
}

// The reconstruction of the same scores produced by slicing.
inline PointTable six_player_reconstruction() {
    return table_from_rows({{0, 1, 1, 6, 1, 0},
                            {1, 0, 1, 6, 1, 0},
                            {1, 1, 0, 6, 8, 3},
                            {3, 3, 3, 0, 8, 3},
                            {9, 9, 2, 2, 0, 10},
                            {10, 10, 7, 7, 0, 0}});
}

inline PointTable three_player_witness() {
    return table_from_rows({{0, 1, 2}, {1, 0, 3}, {5, 0, 0}});
}

inline ScoreSequence six_player_scores() { return {9, 9, 19, 20, 32, 34}; }

/// Calls fn on every nondecreasing sequence of length n with entries in [0, max_entry].
inline void for_each_sorted_sequence(std::size_t n, Score max_entry,
                                     const std::function<void(const ScoreSequence&)>& fn) {
    std::vector<Score> current(n, 0);
    std::function<void(std::size_t, Score)> rec = [&](std::size_t idx, Score lo) {
        if (idx == n) {
            fn(ScoreSequence(current));
            return;
        }
        for (Score v = lo; v <= max_entry; ++v) {
            current[idx] = v;
            rec(idx + 1, v);
        }
    };
    rec(0, 0);
}

}  // namespace scoreseq::testing
