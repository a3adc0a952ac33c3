#include "gridtoll/decomposition.hpp"

#include "gridtoll/block_solver.hpp"
#include "gridtoll/error.hpp"
#include "gridtoll/evaluate.hpp"
#include "gridtoll/rooted_dp.hpp"
#include "gridtoll/rounding.hpp"
#include "gridtoll/single_price.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gridtoll {

namespace {

long long width_pow5(int omega) {
    long long w5 = 1;
    for (int i = 0; i < 5; ++i) w5 *= omega;
    return w5;
}

// Deterministic work distribution: every slot i gets exactly fn(i), slots are
// independent, and the caller consumes them in index order afterwards.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

Levels build_levels(int m, int omega) {
    if (m < 1) throw Error(Error::Kind::usage, "grid length must be at least 1");
    if (omega < 1) throw Error(Error::Kind::usage, "grid width must be at least 1");
    const long long w5 = width_pow5(omega);

    Levels levels;
    Block root;
    root.level = 1;
    root.index = 1;
    root.start = 0;
    root.end = m - 1;
    root.middle_row = (m - 1) / 2;
    levels.push_back({root});

    for (;;) {
        std::vector<Block>& cur = levels.back();
        std::vector<Block> next;
        std::vector<std::vector<std::size_t>> links(cur.size());
        bool all_long_enough = true;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const Block& b = cur[i];
            const auto add_child = [&](int s, int e) {
                if (s > e) return;
                Block c;
                c.level = b.level + 1;
                c.index = static_cast<int>(next.size()) + 1;
                c.start = s;
                c.end = e;
                c.middle_row = s + (e - s) / 2;
                if (2LL * c.length() < w5) all_long_enough = false;
                links[i].push_back(next.size());
                next.push_back(c);
            };
            add_child(b.start, b.middle_row - 1);
            add_child(b.middle_row + 1, b.end);
        }
        // The recursion stops before admitting any block shorter than half
        // of width^5; a too-short would-be child ends the process here.
        if (next.empty() || !all_long_enough) break;
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i].children = std::move(links[i]);
        levels.push_back(std::move(next));
    }
    return levels;
}

int extension_radius(int omega) {
    if (omega < 1) throw Error(Error::Kind::usage, "grid width must be at least 1");
    return static_cast<int>((width_pow5(omega) + 3) / 4);
}

std::pair<int, int> extend_block(const Block& b, int m, int omega) {
    const int r = extension_radius(omega);
    return {std::max(0, b.start - r), std::min(m - 1, b.end + r)};
}

DriverAssignment assign_drivers(const Levels& levels, const std::vector<Driver>& drivers) {
    if (levels.empty()) throw Error(Error::Kind::usage, "empty decomposition");
    DriverAssignment out;
    out.per_block.resize(levels.size());
    for (std::size_t j = 0; j < levels.size(); ++j) out.per_block[j].resize(levels[j].size());

    for (const Driver& d : drivers) {
        const int lo = std::min(d.u.row, d.v.row);
        const int hi = std::max(d.u.row, d.v.row);
        std::size_t j = 0, i = 0;
        if (lo < levels[0][0].start || hi > levels[0][0].end)
            throw Error(Error::Kind::usage, "driver endpoint outside the grid");
        for (;;) {
            bool descended = false;
            for (const std::size_t ci : levels[j][i].children) {
                const Block& c = levels[j + 1][ci];
                if (lo >= c.start && hi <= c.end) {
                    ++j;
                    i = ci;
                    descended = true;
                    break;
                }
            }
            if (!descended) break;
        }
        out.per_block[j][i].push_back(d);
    }
    return out;
}

Pricing solve_level(const GridInstance& g, const Levels& levels, const DriverAssignment& assign,
                    int level, Parity parity, const SolveOptions& opts) {
    if (level < 1 || static_cast<std::size_t>(level) > levels.size())
        throw Error(Error::Kind::usage, "no such decomposition level");
    if (assign.per_block.size() != levels.size() ||
        assign.per_block[level - 1].size() != levels[level - 1].size())
        throw Error(Error::Kind::usage, "driver assignment does not match the decomposition");
    const Money global_b_max = g.max_budget();
    if (global_b_max.infinite())
        throw Error(Error::Kind::usage, "driver budgets must be finite");

    const std::vector<Block>& blocks = levels[level - 1];
    const bool last = static_cast<std::size_t>(level) == levels.size();
    const int w = g.width();
    const int m = g.length();

    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if ((blocks[i].index % 2 == 1) == (parity == Parity::odd)) chosen.push_back(i);

    std::vector<Pricing> solved(chosen.size());
    parallel_for(chosen.size(), opts.threads, [&](std::size_t k) {
        const Block& b = blocks[chosen[k]];
        const auto [lo, hi] = extend_block(b, m, w);
        GridInstance sub = restrict_rows(g, lo, hi);
        std::vector<Driver> ds;
        for (Driver d : assign.per_block[level - 1][chosen[k]]) {
            d.u.row -= lo;
            d.v.row -= lo;
            ds.push_back(d);
        }
        if (ds.empty()) {
            // No demand, no revenue to collect: zeros keep this stretch from
            // interfering with anything.
            solved[k] = Pricing::zero(sub);
            return;
        }
        Money sub_b_max;
        for (const Driver& d : ds) sub_b_max = Money::max(sub_b_max, d.budget);
        const PriceSet ps =
            price_set(sub_b_max, hi - lo + 1, static_cast<long>(ds.size()));
        const RootedOptions ropts{opts.state_budget};
        if (last) {
            solved[k] = solve_last_level_block(sub, ds, ps, LastLevelMode::automatic,
                                               opts.last_level_edge_guard, ropts)
                            .pricing;
        } else {
            solved[k] =
                solve_block(make_block_subproblem(std::move(sub), b.middle_row - lo, ds), ps,
                            ropts)
                    .pricing;
        }
    });

    // Every edge outside the solved padded intervals is a wall priced just
    // beyond the largest budget; missing edges stay INFINITY.
    Pricing global = Pricing::uniform(g, global_b_max + Money::from_int(1));
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        const auto [lo, hi] = extend_block(blocks[chosen[k]], m, w);
        for (int r = lo; r <= hi; ++r)
            for (int c = 0; c + 1 < w; ++c)
                global.set(EdgeId::h(r, c), solved[k].at(EdgeId::h(r - lo, c)));
        for (int r = lo; r < hi; ++r)
            for (int c = 0; c < w; ++c)
                global.set(EdgeId::v(r, c), solved[k].at(EdgeId::v(r - lo, c)));
    }
    return global;
}

SolveResult solve(const GridInstance& g, const SolveOptions& opts) {
    const Money b_max = g.max_budget();
    if (b_max.infinite()) throw Error(Error::Kind::usage, "driver budgets must be finite");
    const Levels levels = build_levels(g.length(), g.width());
    const int level_count = static_cast<int>(levels.size());

    SolveResult out;
    if (b_max.zero()) {
        // Every budget is 0, so every pricing collects 0; report that
        // truthfully and return the all-zero pricing.
        for (int j = 1; j <= level_count; ++j)
            for (const Parity p : {Parity::odd, Parity::even})
                out.report.push_back({j, p, false, Money()});
        out.report.push_back({0, Parity::odd, true, Money()});
        out.pricing = Pricing::zero(g);
        out.revenue = Money();
        return out;
    }

    const DriverAssignment assign = assign_drivers(levels, g.drivers());

    struct Candidate {
        Pricing pricing;
        CandidateRevenue info;
    };
    std::vector<Candidate> cands;
    for (int j = 1; j <= level_count; ++j)
        for (const Parity p : {Parity::odd, Parity::even})
            cands.push_back({solve_level(g, levels, assign, j, p, opts), {j, p, false, Money()}});
    const SinglePriceResult base = best_single_price(g, g.drivers());
    cands.push_back({Pricing::uniform(g, base.price), {0, Parity::odd, true, Money()}});

    parallel_for(cands.size(), opts.threads, [&](std::size_t i) {
        cands[i].info.revenue = revenue(g, cands[i].pricing, g.drivers());
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].info.revenue > cands[best].info.revenue) best = i;

    out.report.reserve(cands.size());
    for (const Candidate& c : cands) out.report.push_back(c.info);
    out.revenue = cands[best].info.revenue;
    out.pricing = std::move(cands[best].pricing);
    return out;
}

}  // namespace gridtoll
