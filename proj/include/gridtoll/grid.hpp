#ifndef GRIDTOLL_GRID_HPP
#define GRIDTOLL_GRID_HPP

#include "gridtoll/money.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gridtoll {

// Row 0 is the top row; rows grow downward. Columns grow rightward.
struct VertexId {
    int row = 0;
    int col = 0;
    auto operator<=>(const VertexId&) const = default;
};

// HORIZONTAL (row,col)-(row,col+1) requires col in [0, width-1).
// VERTICAL   (row,col)-(row+1,col) requires row in [0, length-1).
// operator<=> orders edges lexicographically by (kind, row, col) with
// horizontal < vertical; this is the edge order used everywhere a
// deterministic edge enumeration is needed.
struct EdgeId {
    enum class Kind : std::uint8_t { horizontal = 0, vertical = 1 };
    Kind kind = Kind::horizontal;
    int row = 0;
    int col = 0;

    static EdgeId h(int row, int col) { return {Kind::horizontal, row, col}; }
    static EdgeId v(int row, int col) { return {Kind::vertical, row, col}; }

    VertexId a() const { return {row, col}; }
    VertexId b() const {
        return kind == Kind::horizontal ? VertexId{row, col + 1} : VertexId{row + 1, col};
    }

    std::string str() const;
    auto operator<=>(const EdgeId&) const = default;
};

struct Driver {
    VertexId u, v;
    Money budget;
};

// Rooted demand: all trips share the instance's root vertex.
struct RootedDriver {
    VertexId v;
    Money budget;
};

// A width x length grid with an explicit missing-edge set and a driver
// multiset. Missing edges exist as ids but carry no road.
class GridInstance {
public:
    GridInstance() = default;
    GridInstance(int width, int length);

    int width() const { return width_; }
    int length() const { return length_; }

    bool in_bounds(VertexId v) const {
        return v.row >= 0 && v.row < length_ && v.col >= 0 && v.col < width_;
    }
    bool valid_edge(EdgeId e) const;
    bool present(EdgeId e) const { return valid_edge(e) && !missing_.count(e); }

    const std::set<EdgeId>& missing() const { return missing_; }
    void add_missing(EdgeId e);

    const std::vector<Driver>& drivers() const { return drivers_; }
    std::vector<Driver>& drivers() { return drivers_; }
    void add_driver(VertexId u, VertexId v, Money budget);

    std::vector<EdgeId> all_edges() const;      // lexicographic EdgeId order
    std::vector<EdgeId> present_edges() const;  // lexicographic EdgeId order
    std::size_t complete_edge_count() const;    // m(w-1) + (m-1)w

    Money max_budget() const;                   // 0 when there are no drivers

    int vertex_index(VertexId v) const { return v.row * width_ + v.col; }
    int vertex_count() const { return width_ * length_; }

private:
    int width_ = 1;
    int length_ = 1;
    std::set<EdgeId> missing_;
    std::vector<Driver> drivers_;
};

// Total price assignment over an instance's edges. Invariant enforced by
// validate(): every valid edge is priced and every missing edge maps to
// INFINITY.
class Pricing {
public:
    Pricing() = default;

    static Pricing uniform(const GridInstance& g, const Money& value);
    static Pricing zero(const GridInstance& g) { return uniform(g, Money()); }

    const Money& at(EdgeId e) const;
    void set(EdgeId e, Money value) { prices_[e] = std::move(value); }
    bool has(EdgeId e) const { return prices_.count(e) != 0; }
    std::size_t size() const { return prices_.size(); }

    void validate(const GridInstance& g) const;  // throws Error on violation

    auto begin() const { return prices_.begin(); }
    auto end() const { return prices_.end(); }

private:
    std::map<EdgeId, Money> prices_;
};

// Subgrid on rows [row_lo, row_hi], re-indexed so row_lo becomes row 0.
// Horizontal edges of those rows and vertical edges strictly between them
// survive; the original's missing edges inside the range are inherited and
// extra_missing (given in the ORIGINAL row coordinates, all inside the
// range) is added. Drivers are not inherited.
GridInstance restrict_rows(const GridInstance& g, int row_lo, int row_hi,
                           const std::set<EdgeId>& extra_missing = {});

// Row-reversal relabeling for a grid of the given length. Involution.
struct FlipMap {
    int length = 1;
    VertexId operator()(VertexId v) const { return {length - 1 - v.row, v.col}; }
    EdgeId operator()(EdgeId e) const {
        if (e.kind == EdgeId::Kind::horizontal) return EdgeId::h(length - 1 - e.row, e.col);
        return EdgeId::v(length - 2 - e.row, e.col);
    }
};

// The same instance with rows reversed (missing edges and drivers mapped).
GridInstance flip_vertical(const GridInstance& g);

} // namespace gridtoll

#endif
