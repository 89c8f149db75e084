#!/usr/bin/env python3
"""Independent brute-force oracle used to freeze regression constants.

Enumerates every point table directly (no pruning, no shared code with the
C++ library) and prints the values the C++ tests assert.
"""
import itertools


def pair_outcomes(a, b):
    return [(x, t - x) for t in range(a, b + 1) for x in range(t + 1)]


def tables(n, a, b):
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product(pair_outcomes(a, b), repeat=len(pairs)):
        scores = [0] * n
        for (i, j), (x, y) in zip(pairs, choice):
            scores[i] += x
            scores[j] += y
        yield choice, scores


def score_sequences(n, a, b):
    return sorted({tuple(sorted(s)) for _, s in tables(n, a, b)})


def count_tables(n, a, b, target):
    return sum(1 for _, s in tables(n, a, b) if list(s) == list(target))


def count_tables_pruned(n, a, b, target):
    # player-row bound keeps (3,2,10) tractable: r_ij <= s_i
    pairs = list(itertools.combinations(range(n), 2))
    total = 0

    def rec(idx, scores):
        nonlocal total
        if idx == len(pairs):
            total += scores == list(target)
            return
        i, j = pairs[idx]
        for x, y in pair_outcomes(a, b):
            if scores[i] + x <= target[i] and scores[j] + y <= target[j]:
                scores[i] += x
                scores[j] += y
                rec(idx + 1, scores)
                scores[i] -= x
                scores[j] -= y

    rec(0, [0] * n)
    return total


if __name__ == "__main__":
    for n in range(1, 6):
        print("landau count n=%d:" % n, len(score_sequences(n, 1, 1)))
    print("enum (2,1,1):", score_sequences(2, 1, 1))
    print("enum (3,1,1):", score_sequences(3, 1, 1))
    print("enum (2,1,2):", score_sequences(2, 1, 2))
    print("count (3,2,10) (3,4,5):", count_tables_pruned(3, 2, 10, (3, 4, 5)))
    print("count (3,1,1) (0,1,2):", count_tables(3, 1, 1, (0, 1, 2)))
    print("count (3,1,1) (1,1,1):", count_tables(3, 1, 1, (1, 1, 1)))
    print("count (3,2,2) (1,1,4):", count_tables(3, 2, 2, (1, 1, 4)))
    print("moon a=2 (0,2,4):", (0, 2, 4) in score_sequences(3, 2, 2))
    print("moon a=2 (1,1,4):", (1, 1, 4) in score_sequences(3, 2, 2))
    print("landau (0,0,3):", (0, 0, 3) in score_sequences(3, 1, 1))
    # per-(n,a,b) sizes of the achievable set, n<=4, b<=3
    for n in range(2, 5):
        for b in range(1, 4):
            for a in range(0, b + 1):
                print("setsize n=%d a=%d b=%d:" % (n, a, b), len(score_sequences(n, a, b)))
