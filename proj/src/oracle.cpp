#include "gridtoll/oracle.hpp"

#include "gridtoll/error.hpp"
#include "gridtoll/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace gridtoll {

namespace {

constexpr std::int64_t kInfUnits = std::numeric_limits<std::int64_t>::max() / 4;

// The whole search runs in integer units of p_min: every ladder value is
// b_max / 2^t = 2^(T-t) * p_min, so path costs are exact int64 multiples.
struct UnitContext {
    std::vector<EdgeId> edges;            // present edges, EdgeId order
    std::vector<std::int64_t> values;     // ladder in units, ascending (0 first)
    int vertex_count = 0;
    std::vector<std::pair<int, int>> ends;  // per edge, vertex indices
    std::vector<int> sources;               // distinct trip sources
    // per driver: source slot, target vertex, budget threshold in units
    struct Trip {
        int source_slot;
        int target;
        std::int64_t cap;
    };
    std::vector<Trip> trips;
};

std::int64_t floor_units(const Money& x, const Money& p_min) {
    // floor(x / p_min) capped to the sentinel range.
    mpq_class q = x.rat() / p_min.rat();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (f > kInfUnits) return kInfUnits;
    return static_cast<std::int64_t>(f.get_si());
}

std::int64_t evaluate_units(const UnitContext& ctx, const std::vector<std::int64_t>& price,
                            std::vector<std::int64_t>& dist, std::vector<char>& done,
                            std::vector<std::int64_t>& source_dist) {
    const int n = ctx.vertex_count;
    source_dist.assign(ctx.sources.size() * static_cast<std::size_t>(n), kInfUnits);
    for (std::size_t s = 0; s < ctx.sources.size(); ++s) {
        dist.assign(n, kInfUnits);
        done.assign(n, 0);
        dist[ctx.sources[s]] = 0;
        for (int it = 0; it < n; ++it) {
            int best = -1;
            std::int64_t bd = kInfUnits;
            for (int v = 0; v < n; ++v)
                if (!done[v] && dist[v] < bd) { bd = dist[v]; best = v; }
            if (best < 0) break;
            done[best] = 1;
            for (std::size_t e = 0; e < ctx.edges.size(); ++e) {
                int a = ctx.ends[e].first, b = ctx.ends[e].second;
                std::int64_t w = price[e];
                if (a == best && dist[best] + w < dist[b]) dist[b] = dist[best] + w;
                else if (b == best && dist[best] + w < dist[a]) dist[a] = dist[best] + w;
            }
        }
        std::copy(dist.begin(), dist.end(), source_dist.begin() + s * static_cast<std::size_t>(n));
    }
    std::int64_t total = 0;
    for (const auto& t : ctx.trips) {
        std::int64_t c = source_dist[t.source_slot * static_cast<std::size_t>(ctx.vertex_count) +
                                     t.target];
        if (c <= t.cap) total += c;
    }
    return total;
}

struct SearchOutcome {
    std::int64_t best_value = -1;
    std::uint64_t best_index = 0;
    std::uint64_t enumerated = 0;
};

// Enumerates pricings as base-|values| counters; counter order equals the
// lexicographic order of pricings (first edge most significant, values
// ascending), so the smallest winning index is the lexicographically smallest
// maximizer.
SearchOutcome search_range(const UnitContext& ctx, std::uint64_t begin, std::uint64_t end) {
    const std::size_t m = ctx.edges.size();
    const std::uint64_t base = ctx.values.size();
    std::vector<std::size_t> digit(m, 0);
    {
        std::uint64_t x = begin;
        for (std::size_t i = m; i-- > 0;) {
            digit[i] = static_cast<std::size_t>(x % base);
            x /= base;
        }
    }
    std::vector<std::int64_t> price(m, 0);
    for (std::size_t i = 0; i < m; ++i) price[i] = ctx.values[digit[i]];

    std::vector<std::int64_t> dist, source_dist;
    std::vector<char> done;
    SearchOutcome out;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::int64_t value = evaluate_units(ctx, price, dist, done, source_dist);
        ++out.enumerated;
        if (value > out.best_value) {
            out.best_value = value;
            out.best_index = idx;
        }
        // increment
        std::size_t pos = m;
        while (pos-- > 0) {
            if (++digit[pos] < base) {
                price[pos] = ctx.values[digit[pos]];
                break;
            }
            digit[pos] = 0;
            price[pos] = ctx.values[0];
        }
    }
    return out;
}

OracleResult run_search(const GridInstance& g, const std::vector<Driver>& trips,
                        const PriceSet& ps, int edge_guard, unsigned threads) {
    std::vector<EdgeId> present = g.present_edges();
    if (static_cast<int>(present.size()) > edge_guard)
        throw Error(Error::Kind::guard,
                    "brute force refused: " + std::to_string(present.size()) +
                        " present edges exceed the guard of " + std::to_string(edge_guard));

    if (ps.degenerate()) {
        Pricing p = Pricing::zero(g);
        OracleResult r{p, revenue(g, p, trips), 1};
        return r;
    }

    UnitContext ctx;
    ctx.edges = present;
    ctx.vertex_count = g.vertex_count();
    for (EdgeId e : present)
        ctx.ends.push_back({g.vertex_index(e.a()), g.vertex_index(e.b())});
    // ladder in units, ascending: 0, 1, 2, ..., 2^T
    for (auto it = ps.values.rbegin(); it != ps.values.rend(); ++it) {
        if (it->zero()) ctx.values.push_back(0);
        else ctx.values.push_back(floor_units(*it, ps.p_min));
    }
    {
        std::vector<int> slot_of(ctx.vertex_count, -1);
        for (const Driver& d : trips) {
            int si = g.vertex_index(d.u);
            if (slot_of[si] < 0) {
                slot_of[si] = static_cast<int>(ctx.sources.size());
                ctx.sources.push_back(si);
            }
            ctx.trips.push_back({slot_of[si], g.vertex_index(d.v),
                                 d.budget.infinite() ? kInfUnits : floor_units(d.budget, ps.p_min)});
        }
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ctx.edges.size(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / ctx.values.size())
            throw Error(Error::Kind::guard, "brute force refused: search space overflows");
        total *= ctx.values.size();
    }

    unsigned n_threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (static_cast<std::uint64_t>(n_threads) > total) n_threads = static_cast<unsigned>(total);

    std::vector<SearchOutcome> parts(n_threads);
    if (n_threads <= 1) {
        parts[0] = search_range(ctx, 0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / n_threads, extra = total % n_threads, at = 0;
        for (unsigned t = 0; t < n_threads; ++t) {
            std::uint64_t len = chunk + (t < extra ? 1 : 0);
            pool.emplace_back([&, t, at, len] { parts[t] = search_range(ctx, at, at + len); });
            at += len;
        }
        for (auto& th : pool) th.join();
    }

    SearchOutcome best;
    std::uint64_t enumerated = 0;
    for (const SearchOutcome& p : parts) {
        enumerated += p.enumerated;
        if (p.best_value > best.best_value ||
            (p.best_value == best.best_value && p.best_index < best.best_index))
            best = {p.best_value, p.best_index, 0};
    }

    // Rebuild the winning pricing from its counter index.
    Pricing pricing = Pricing::uniform(g, Money::infinity());
    {
        std::uint64_t x = best.best_index;
        const std::uint64_t base = ctx.values.size();
        std::vector<std::size_t> digit(ctx.edges.size(), 0);
        for (std::size_t i = ctx.edges.size(); i-- > 0;) {
            digit[i] = static_cast<std::size_t>(x % base);
            x /= base;
        }
        for (std::size_t i = 0; i < ctx.edges.size(); ++i)
            pricing.set(ctx.edges[i], ps.values[ps.values.size() - 1 - digit[i]]);
    }

    Money rev = ps.p_min.times(static_cast<unsigned long>(best.best_value));
    // Cross-check the unit arithmetic against the exact evaluator once.
    Money recheck = revenue(g, pricing, trips);
    if (!(recheck == rev))
        throw std::logic_error("oracle unit arithmetic disagrees with exact evaluator");

    OracleResult r{std::move(pricing), std::move(rev), enumerated};
    return r;
}

} // namespace

OracleResult brute_force_opt(const GridInstance& g, const PriceSet& ps, int edge_guard,
                             unsigned threads) {
    return run_search(g, g.drivers(), ps, edge_guard, threads);
}

OracleResult brute_force_rooted(const GridInstance& g, VertexId root,
                                const std::vector<RootedDriver>& drivers, const PriceSet& ps,
                                int edge_guard, unsigned threads) {
    if (root.row != 0 || root.col < 0 || root.col >= g.width())
        throw Error(Error::Kind::usage, "root must lie on the top row");
    std::vector<Driver> trips;
    trips.reserve(drivers.size());
    for (const RootedDriver& d : drivers) trips.push_back({root, d.v, d.budget});
    return run_search(g, trips, ps, edge_guard, threads);
}

} // namespace gridtoll
