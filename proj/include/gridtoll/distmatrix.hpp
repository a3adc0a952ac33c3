#ifndef GRIDTOLL_DISTMATRIX_HPP
#define GRIDTOLL_DISTMATRIX_HPP

#include "gridtoll/grid.hpp"
#include "gridtoll/rounding.hpp"

#include <map>
#include <vector>

namespace gridtoll {

// Symmetric pairwise-distance matrix over an explicit, strictly ascending
// vertex index set. Zero diagonal; INFINITY allowed off-diagonal. Ordered and
// compared by (index set, entries) so it can key DP tables deterministically.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::vector<VertexId> idx);  // 0 diagonal, INFINITY elsewhere

    static DistanceMatrix infinite(std::vector<VertexId> idx) { return DistanceMatrix(std::move(idx)); }

    int size() const { return static_cast<int>(idx_.size()); }
    const std::vector<VertexId>& index() const { return idx_; }
    int find(VertexId v) const;  // -1 when absent

    const Money& at(int i, int j) const { return d_[static_cast<std::size_t>(i) * idx_.size() + j]; }
    const Money& at(VertexId a, VertexId b) const;
    void set(int i, int j, Money v);  // writes both (i,j) and (j,i)

    bool operator==(const DistanceMatrix& o) const { return idx_ == o.idx_ && d_ == o.d_; }
    bool operator<(const DistanceMatrix& o) const;

    // Symmetry, zero diagonal, triangle inequality (INFINITY-aware).
    bool metric_ok() const;

private:
    std::vector<VertexId> idx_;
    std::vector<Money> d_;
};

// Min-plus glue: APSP of the union graph whose edges are all entries of A and
// B (parallel entries take the smaller), restricted to S. The index sets must
// overlap (the shared vertices separate the two sides). When quantize_at is
// non-null, distances above *quantize_at collapse to INFINITY.
DistanceMatrix product(const DistanceMatrix& A, const DistanceMatrix& B,
                       const std::vector<VertexId>& S, const Money* quantize_at = nullptr);

// One candidate pricing of a two-row slab together with the distance matrix
// it realizes within the slab.
struct RowTransition {
    std::map<EdgeId, Money> pricing;  // over the slab's edges; missing edges INFINITY
    DistanceMatrix matrix;
};

// All distance matrices over rows (row, row+1) realized by PriceSet-valued
// pricings of the slab's edges (row `row`'s horizontals plus the verticals
// down to row+1; missing edges pinned INFINITY). Deduplicated by matrix with
// one witness pricing each (the first in descending-value mixed-radix
// enumeration order), sorted by matrix. Quantized at ps.b_max.
std::vector<RowTransition> enumerate_row_transitions(int width, int row, const PriceSet& ps,
                                                     const std::set<EdgeId>& missing);

} // namespace gridtoll

#endif
