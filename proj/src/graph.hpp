#ifndef PALEY_GRAPH_HPP
#define PALEY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bitset.hpp"
#include "numtheory.hpp"

namespace paley {

// Paley-type graph on Z_n: vertices 0..n-1, edge uv iff (u - v) mod n is a
// square unit. Circulant, so only the connection set R_n is stored; row x is
// row 0 rotated by x. All rows are materialized up front when n is at most
// row_cache_limit (adjacency-heavy counting dominates the runtime there).
class Graph {
public:
    static constexpr uint64_t kDefaultRowCacheLimit = 8192;

    explicit Graph(Modulus m, uint64_t row_cache_limit = kDefaultRowCacheLimit);

    const Modulus& modulus() const { return m_; }
    uint64_t order() const { return m_.n; }
    uint64_t degree() const { return degree_; }
    const Bitset& diff_set() const { return rn_; }
    bool rows_cached() const { return !rows_.empty(); }

    bool adjacent(uint64_t u, uint64_t v) const {
        assert(u < m_.n && v < m_.n);
        return rn_.test((v + m_.n - u) % m_.n);
    }

    // Bit y set iff y is adjacent to x.
    Bitset row(uint64_t x) const;

    // Cached row, or the row rotated into scratch. The reference stays valid
    // while the graph and scratch do; hot loops reuse one scratch buffer.
    const Bitset& row_ref(uint64_t x, Bitset& scratch) const {
        if (!rows_.empty()) return rows_[x];
        scratch = rn_.rotated(x);
        return scratch;
    }

private:
    Modulus m_;
    Bitset rn_;
    uint64_t degree_ = 0;
    std::vector<Bitset> rows_;
};

// View of H_n, the subgraph induced by the square units R_n. Only defined
// for odd n; the reduction counting runs here.
class InducedSubgraph {
public:
    explicit InducedSubgraph(const Graph& g);

    const Graph& parent() const { return *g_; }
    const Bitset& vertices() const { return g_->diff_set(); }
    uint64_t vertex_count() const { return g_->degree(); }

    // Neighbors of x within H_n.
    Bitset neighbors(uint64_t x) const;

private:
    const Graph* g_;
};

// One "u v" pair per line, u < v.
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace paley

#endif
