#include "gridtoll/grid.hpp"

#include "gridtoll/error.hpp"

namespace gridtoll {

std::string EdgeId::str() const {
    return std::string(kind == Kind::horizontal ? "H(" : "V(") + std::to_string(row) + "," +
           std::to_string(col) + ")";
}

GridInstance::GridInstance(int width, int length) : width_(width), length_(length) {
    if (width < 1 || length < 1)
        throw Error(Error::Kind::usage, "grid dimensions must be at least 1");
}

bool GridInstance::valid_edge(EdgeId e) const {
    if (e.kind == EdgeId::Kind::horizontal)
        return e.row >= 0 && e.row < length_ && e.col >= 0 && e.col < width_ - 1;
    return e.row >= 0 && e.row < length_ - 1 && e.col >= 0 && e.col < width_;
}

void GridInstance::add_missing(EdgeId e) {
    if (!valid_edge(e)) throw Error(Error::Kind::usage, "missing edge out of range: " + e.str());
    missing_.insert(e);
}

void GridInstance::add_driver(VertexId u, VertexId v, Money budget) {
    if (!in_bounds(u) || !in_bounds(v))
        throw Error(Error::Kind::usage, "driver endpoint out of range");
    if (budget.infinite()) throw Error(Error::Kind::usage, "driver budgets must be finite");
    drivers_.push_back({u, v, std::move(budget)});
}

std::vector<EdgeId> GridInstance::all_edges() const {
    std::vector<EdgeId> out;
    out.reserve(complete_edge_count());
    for (int r = 0; r < length_; ++r)
        for (int c = 0; c + 1 < width_; ++c) out.push_back(EdgeId::h(r, c));
    for (int r = 0; r + 1 < length_; ++r)
        for (int c = 0; c < width_; ++c) out.push_back(EdgeId::v(r, c));
    return out;
}

std::vector<EdgeId> GridInstance::present_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e : all_edges())
        if (!missing_.count(e)) out.push_back(e);
    return out;
}

std::size_t GridInstance::complete_edge_count() const {
    return static_cast<std::size_t>(length_) * (width_ - 1) +
           static_cast<std::size_t>(length_ - 1) * width_;
}

Money GridInstance::max_budget() const {
    Money best;
    for (const Driver& d : drivers_) best = Money::max(best, d.budget);
    return best;
}

Pricing Pricing::uniform(const GridInstance& g, const Money& value) {
    Pricing p;
    for (EdgeId e : g.all_edges()) p.prices_[e] = g.present(e) ? value : Money::infinity();
    return p;
}

const Money& Pricing::at(EdgeId e) const {
    auto it = prices_.find(e);
    if (it == prices_.end()) throw Error(Error::Kind::usage, "unpriced edge: " + e.str());
    return it->second;
}

void Pricing::validate(const GridInstance& g) const {
    for (EdgeId e : g.all_edges()) {
        auto it = prices_.find(e);
        if (it == prices_.end()) throw Error(Error::Kind::io, "pricing misses edge " + e.str());
        if (!g.present(e) && !it->second.infinite())
            throw Error(Error::Kind::io, "missing edge " + e.str() + " must be priced inf");
    }
    for (const auto& [e, v] : prices_)
        if (!g.valid_edge(e)) throw Error(Error::Kind::io, "pricing has foreign edge " + e.str());
}

GridInstance restrict_rows(const GridInstance& g, int row_lo, int row_hi,
                           const std::set<EdgeId>& extra_missing) {
    if (row_lo < 0 || row_hi >= g.length() || row_lo > row_hi)
        throw Error(Error::Kind::usage, "restrict: bad row range");
    GridInstance out(g.width(), row_hi - row_lo + 1);
    auto relabel = [&](EdgeId e) { return EdgeId{e.kind, e.row - row_lo, e.col}; };
    for (EdgeId e : g.missing()) {
        EdgeId r = relabel(e);
        if (out.valid_edge(r)) out.add_missing(r);
    }
    for (EdgeId e : extra_missing) {
        if (!g.valid_edge(e)) throw Error(Error::Kind::usage, "restrict: bad extra edge " + e.str());
        EdgeId r = relabel(e);
        if (!out.valid_edge(r))
            throw Error(Error::Kind::usage, "restrict: extra edge outside range " + e.str());
        out.add_missing(r);
    }
    return out;
}

GridInstance flip_vertical(const GridInstance& g) {
    GridInstance out(g.width(), g.length());
    FlipMap f{g.length()};
    for (EdgeId e : g.missing()) out.add_missing(f(e));
    for (const Driver& d : g.drivers()) out.add_driver(f(d.u), f(d.v), d.budget);
    return out;
}

} // namespace gridtoll
