#pragma once

// Exhaustive classification of free codes. Free [n, k] codes over E
// correspond one-to-one with binary [n, k] subspaces through the residue, so
// the sweep enumerates every k-dimensional subspace of F_2^n exactly once as
// a unique RREF (pivot-column sets in lexicographic order, then free entries
// in counter order), tallies hull rank and minimum distance, and keeps the
// codes achieving the best distance per hull rank. Optimal codes are then
// deduplicated by column-permutation equivalence: candidates are visited in
// lexicographic RREF order and each new class marks its whole S_n orbit, so
// the result is exact and independent of the worker count.

#include <functional>
#include <map>

#include "ecode/code.hpp"
#include "ecode/equivalence.hpp"
#include "ecode/io.hpp"

namespace ecode {

// Every k-dimensional subspace of F_2^n exactly once, as its RREF basis.
// Deterministic order; n <= 12, 0 <= k <= n. The emitted count is the
// Gaussian binomial coefficient.
void enumerate_binary_subspaces(int n, int k, const std::function<void(const BitMatrix&)>& fn);

struct CellTally {
    long long examined = 0;            // subspaces with this hull rank
    std::map<int, long long> d_counts; // histogram of their minimum distances
};

// Tally of all [n, k] subspaces grouped by hull rank. 1 <= k <= n <= 8.
std::map<int, CellTally> census(int n, int k, int workers = 1);

struct ClassRecord {
    int n = 0;
    int k = 0;
    int hull_rank = 0;
    int optimal_d = 0;                     // 0 when no code has this hull rank
    std::vector<EMatrix> representatives;  // a-lifted generators, one per class
    CellTally tally;
};

// All hull-rank cells of the (n, k) sweep, with optimal-distance class
// representatives. 1 <= k <= n <= 8; workers >= 1 splits the sweep by
// pivot-column set.
std::map<int, ClassRecord> classify_all(int n, int k, int workers = 1);

// Single cell of classify_all; hull_rank in [0, k].
ClassRecord classify(int n, int k, int hull_rank, int workers = 1);

struct TableReport {
    struct Item {
        std::string status;  // "PASS", "FAIL" or "WARN"
        std::string what;
    };
    std::vector<Item> items;
    int fails = 0;
    int warns = 0;
};

// Checks fixture entries against recomputation: (a) each generator really
// has the claimed n, k, d and hull rank; (b) the claimed d is the sweep
// optimum for its (n, k, hull-rank) cell; (c) entries within one cell are
// pairwise inequivalent. With check_counts, a cell whose entry count differs
// from the computed number of classes is reported as WARN.
TableReport verify_tables(const std::vector<FixtureEntry>& entries, int workers = 1,
                          bool check_counts = true);

}  // namespace ecode
