#ifndef GRIDTOLL_DECOMPOSITION_HPP
#define GRIDTOLL_DECOMPOSITION_HPP

#include "gridtoll/grid.hpp"
#include "gridtoll/money.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gridtoll {

// One row interval of the laminar decomposition. The middle row is the split
// row of the block; it belongs to neither child.
struct Block {
    int level = 1;  // 1-based level
    int index = 1;  // 1-based position within the level, top to bottom
    int start = 0;  // first row, inclusive
    int end = 0;    // last row, inclusive
    int middle_row = 0;
    std::vector<std::size_t> children;  // positions within the next level

    int length() const { return end - start + 1; }
};

// levels[0] holds the single block covering the whole grid; each later level
// holds the children of the previous one, top to bottom. The last level is
// the deepest one whose blocks all have length >= width^5 / 2 (the split
// recursion stops before producing anything shorter).
using Levels = std::vector<std::vector<Block>>;

Levels build_levels(int m, int omega);

// How far a block's row interval is padded on each side before solving:
// width^5 / 4 rounded up.
int extension_radius(int omega);

// The padded interval [start - radius, end + radius] clipped to [0, m-1].
std::pair<int, int> extend_block(const Block& b, int m, int omega);

// per_block[j][i] = drivers whose smallest containing block is levels[j][i].
struct DriverAssignment {
    std::vector<std::vector<std::vector<Driver>>> per_block;
};

DriverAssignment assign_drivers(const Levels& levels, const std::vector<Driver>& drivers);

enum class Parity { odd = 1, even = 2 };

struct SolveOptions {
    std::uint64_t state_budget = 0;  // 0 = default_state_budget()
    int last_level_edge_guard = 7;   // brute-force cutoff for last-level blocks
    unsigned threads = 0;            // 0 = hardware concurrency
};

// One candidate pricing: solve every block of the given parity (1-based
// index within the level) on its padded interval with its own drivers and
// its own price ladder, copy those sub-pricings into place, and price every
// edge no solved interval covers at global b_max + 1 (missing edges stay
// INFINITY). Results never depend on the thread count.
Pricing solve_level(const GridInstance& g, const Levels& levels, const DriverAssignment& assign,
                    int level, Parity parity, const SolveOptions& opts = {});

struct CandidateRevenue {
    int level = 0;  // 0 for the uniform single-price baseline
    Parity parity = Parity::odd;
    bool baseline = false;
    Money revenue;
};

struct SolveResult {
    Pricing pricing;
    Money revenue;
    std::vector<CandidateRevenue> report;  // every candidate, in fixed order
};

// Full pipeline: every (level, parity) candidate plus the single-price
// baseline, each scored by the exact evaluator over all drivers; returns the
// first maximizer in report order. Deterministic for fixed instance bytes.
SolveResult solve(const GridInstance& g, const SolveOptions& opts = {});

}  // namespace gridtoll

#endif
