#include "gridtoll/distmatrix.hpp"

#include "gridtoll/error.hpp"

#include <algorithm>

namespace gridtoll {

DistanceMatrix::DistanceMatrix(std::vector<VertexId> idx) : idx_(std::move(idx)) {
    if (!std::is_sorted(idx_.begin(), idx_.end()) ||
        std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
        throw Error(Error::Kind::usage, "matrix index set must be strictly ascending");
    d_.assign(idx_.size() * idx_.size(), Money::infinity());
    for (std::size_t i = 0; i < idx_.size(); ++i) d_[i * idx_.size() + i] = Money();
}

int DistanceMatrix::find(VertexId v) const {
    auto it = std::lower_bound(idx_.begin(), idx_.end(), v);
    if (it == idx_.end() || *it != v) return -1;
    return static_cast<int>(it - idx_.begin());
}

const Money& DistanceMatrix::at(VertexId a, VertexId b) const {
    int i = find(a), j = find(b);
    if (i < 0 || j < 0) throw Error(Error::Kind::usage, "vertex not in matrix index set");
    return at(i, j);
}

void DistanceMatrix::set(int i, int j, Money v) {
    d_[static_cast<std::size_t>(i) * idx_.size() + j] = v;
    d_[static_cast<std::size_t>(j) * idx_.size() + i] = std::move(v);
}

bool DistanceMatrix::operator<(const DistanceMatrix& o) const {
    if (idx_ != o.idx_) return idx_ < o.idx_;
    return std::lexicographical_compare(d_.begin(), d_.end(), o.d_.begin(), o.d_.end());
}

bool DistanceMatrix::metric_ok() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (!at(i, i).zero()) return false;
        for (int j = 0; j < n; ++j) {
            if (!(at(i, j) == at(j, i))) return false;
            for (int k = 0; k < n; ++k)
                if (at(i, k) + at(k, j) < at(i, j)) return false;
        }
    }
    return true;
}

namespace {

// Floyd-Warshall on a small dense buffer.
void apsp_in_place(std::vector<Money>& d, int n) {
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const Money& dik = d[static_cast<std::size_t>(i) * n + k];
            if (dik.infinite()) continue;
            for (int j = 0; j < n; ++j) {
                const Money& dkj = d[static_cast<std::size_t>(k) * n + j];
                if (dkj.infinite()) continue;
                Money cand = dik + dkj;
                Money& dij = d[static_cast<std::size_t>(i) * n + j];
                if (cand < dij) dij = std::move(cand);
            }
        }
}

} // namespace

DistanceMatrix product(const DistanceMatrix& A, const DistanceMatrix& B,
                       const std::vector<VertexId>& S, const Money* quantize_at) {
    std::vector<VertexId> uni;
    uni.reserve(A.index().size() + B.index().size());
    std::set_union(A.index().begin(), A.index().end(), B.index().begin(), B.index().end(),
                   std::back_inserter(uni));
    if (uni.size() == A.index().size() + B.index().size() && !A.index().empty() &&
        !B.index().empty())
        throw Error(Error::Kind::usage, "product: operands share no separator vertices");

    const int n = static_cast<int>(uni.size());
    std::vector<Money> d(static_cast<std::size_t>(n) * n, Money::infinity());
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = Money();
    auto feed = [&](const DistanceMatrix& M) {
        std::vector<int> pos(M.size());
        for (int i = 0; i < M.size(); ++i) {
            pos[i] = static_cast<int>(
                std::lower_bound(uni.begin(), uni.end(), M.index()[i]) - uni.begin());
        }
        for (int i = 0; i < M.size(); ++i)
            for (int j = i + 1; j < M.size(); ++j) {
                const Money& w = M.at(i, j);
                Money& slot = d[static_cast<std::size_t>(pos[i]) * n + pos[j]];
                if (w < slot) {
                    slot = w;
                    d[static_cast<std::size_t>(pos[j]) * n + pos[i]] = w;
                }
            }
    };
    feed(A);
    feed(B);
    apsp_in_place(d, n);

    std::vector<VertexId> sidx = S;
    std::sort(sidx.begin(), sidx.end());
    DistanceMatrix out(sidx);
    for (std::size_t i = 0; i < sidx.size(); ++i) {
        auto pi = std::lower_bound(uni.begin(), uni.end(), sidx[i]);
        if (pi == uni.end() || *pi != sidx[i])
            throw Error(Error::Kind::usage, "product: restriction vertex not in union");
        for (std::size_t j = i + 1; j < sidx.size(); ++j) {
            auto pj = std::lower_bound(uni.begin(), uni.end(), sidx[j]);
            Money v = d[static_cast<std::size_t>(pi - uni.begin()) * n + (pj - uni.begin())];
            if (quantize_at) v = quantize_distance(v, *quantize_at);
            out.set(static_cast<int>(i), static_cast<int>(j), std::move(v));
        }
    }
    return out;
}

std::vector<RowTransition> enumerate_row_transitions(int width, int row, const PriceSet& ps,
                                                     const std::set<EdgeId>& missing) {
    if (width < 1 || row < 0) throw Error(Error::Kind::usage, "bad slab coordinates");

    // Slab edges in EdgeId order: row's horizontals, then verticals to row+1.
    std::vector<EdgeId> edges;
    for (int c = 0; c + 1 < width; ++c) edges.push_back(EdgeId::h(row, c));
    for (int c = 0; c < width; ++c) edges.push_back(EdgeId::v(row, c));

    std::vector<VertexId> idx;
    for (int c = 0; c < width; ++c) idx.push_back({row, c});
    for (int c = 0; c < width; ++c) idx.push_back({row + 1, c});
    std::sort(idx.begin(), idx.end());
    const int n = static_cast<int>(idx.size());
    auto vpos = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(idx.begin(), idx.end(), v) - idx.begin());
    };

    // Digit values per edge: the full ladder, or just INFINITY when missing.
    std::vector<std::vector<Money>> choices(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (missing.count(edges[i]))
            choices[i] = {Money::infinity()};
        else
            choices[i] = ps.values;
    }

    std::map<DistanceMatrix, std::size_t> seen;
    std::vector<RowTransition> out;
    std::vector<std::size_t> digit(edges.size(), 0);
    std::vector<Money> buf;
    for (;;) {
        buf.assign(static_cast<std::size_t>(n) * n, Money::infinity());
        for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i) * n + i] = Money();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Money& w = choices[i][digit[i]];
            if (w.infinite()) continue;
            int a = vpos(edges[i].a()), b = vpos(edges[i].b());
            Money& slot = buf[static_cast<std::size_t>(a) * n + b];
            if (w < slot) {
                slot = w;
                buf[static_cast<std::size_t>(b) * n + a] = w;
            }
        }
        apsp_in_place(buf, n);

        DistanceMatrix m(idx);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                m.set(i, j, quantize_distance(buf[static_cast<std::size_t>(i) * n + j], ps.b_max));

        if (!seen.count(m)) {
            seen.emplace(m, out.size());
            RowTransition rt;
            for (std::size_t i = 0; i < edges.size(); ++i) rt.pricing[edges[i]] = choices[i][digit[i]];
            rt.matrix = std::move(m);
            out.push_back(std::move(rt));
        }

        // Mixed-radix increment, last edge fastest.
        std::size_t pos = edges.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < choices[pos].size()) break;
            digit[pos] = 0;
            if (pos == 0) {
                pos = SIZE_MAX;
                break;
            }
        }
        if (pos == SIZE_MAX) break;
    }

    std::sort(out.begin(), out.end(),
              [](const RowTransition& a, const RowTransition& b) { return a.matrix < b.matrix; });
    return out;
}

} // namespace gridtoll
