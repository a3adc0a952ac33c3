#ifndef GRIDTOLL_COMPRESSION_HPP
#define GRIDTOLL_COMPRESSION_HPP

#include "gridtoll/grid.hpp"
#include "gridtoll/money.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace gridtoll {

// Undirected graph with non-negative rational edge weights; INFINITY models
// an absent road. Parallel adds of the same edge keep the lighter weight.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    void add_edge(int a, int b, const Money& w);
    const std::vector<std::pair<int, Money>>& neighbors(int v) const;
    bool has_edge(int a, int b) const;
    const Money& edge_weight(int a, int b) const;  // throws when absent

private:
    std::vector<std::vector<std::pair<int, Money>>> adj_;
    std::map<std::pair<int, int>, Money> weights_;
};

// Deterministic single-source shortest paths: vertices are settled smallest
// index first among equal distances, and parents change only on strict
// improvement scanned in insertion order.
struct DijkstraResult {
    std::vector<Money> dist;
    std::vector<int> parent;  // -1 at the source and unreachable vertices
};
DijkstraResult dijkstra(const WeightedGraph& g, int src);

// The endpoints of every maximal path shared by p and q (an isolated shared
// vertex counts: it is a single-vertex shared path).
std::set<int> crossing_vertices(const std::vector<int>& p, const std::vector<int>& q);

// One minimum-weight path per mutually reachable terminal pair, rerouted so
// that few shared-segment endpoints fall outside the terminal set.
struct PathCollection {
    std::vector<int> terminals;              // processing order
    std::vector<std::pair<int, int>> pairs;  // (earlier, later) terminal of each path
    std::vector<std::vector<int>> paths;     // vertex sequences, pairs[k] endpoints
};

// Processes terminal pairs in index order; each new path is spliced onto any
// finished path it shares more than two segment endpoints with, which keeps
// the total count of such endpoints outside the terminal set at most
// k(k-1) for k stored paths (checked after every insertion). Every stored
// path stays a minimum-weight path. Unreachable pairs are omitted.
PathCollection reroute_shortest_paths(const WeightedGraph& g, const std::vector<int>& terminals);

// A width x length grid where every valid edge carries a weight; INFINITY
// models an absent road.
struct WeightedGrid {
    int width = 1;
    int length = 1;
    std::map<EdgeId, Money> weights;

    WeightedGrid() { weights.clear(); }
    WeightedGrid(int w, int len);  // every valid edge INFINITY

    bool valid_edge(EdgeId e) const;
    const Money& weight(EdgeId e) const;  // throws on invalid edges
    void set(EdgeId e, Money w);
    void validate() const;  // every valid edge present, nothing else
};

// The grid's edge weights viewed as a WeightedGrid (missing edges INFINITY).
WeightedGrid weighted_from_pricing(const GridInstance& g, const Pricing& p);

// Symmetric matrix of shortest-path distances between first-row vertices,
// indexed by column.
std::vector<std::vector<Money>> first_row_distances(const WeightedGrid& g);

// Row budget the compressed grid must fit in: width^5 / 4 rounded up.
int compression_depth_cap(int omega);

// Same width, at most compression_depth_cap(width) rows, and exactly the
// same first-row shortest-path distances (self-checked). Grids already
// within the cap are returned unchanged.
WeightedGrid compress_grid(const WeightedGrid& in);

}  // namespace gridtoll

#endif
