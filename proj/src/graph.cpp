#include "graph.hpp"

#include <ostream>

#include "errors.hpp"

namespace paley {

Graph::Graph(Modulus m, uint64_t row_cache_limit) : m_(std::move(m)) {
    rn_ = squares_mod_n(m_);
    degree_ = rn_.count();
    if (rn_.test(0))
        throw InternalError("graph: 0 in the connection set");
    // R_n is closed under negation (p_i = 1 mod 4), so adjacency is symmetric
    rn_.for_each([&](uint64_t d) {
        if (!rn_.test((m_.n - d) % m_.n))
            throw InternalError("graph: connection set not symmetric at " + std::to_string(d));
    });
    if (m_.n <= row_cache_limit) {
        rows_.reserve(m_.n);
        for (uint64_t x = 0; x < m_.n; ++x) rows_.push_back(rn_.rotated(x));
    }
}

Bitset Graph::row(uint64_t x) const {
    if (x >= m_.n) throw InvalidInput("graph: vertex out of range");
    if (!rows_.empty()) return rows_[x];
    return rn_.rotated(x);
}

InducedSubgraph::InducedSubgraph(const Graph& g) : g_(&g) {
    if (!g.modulus().odd())
        throw InvalidInput("induced subgraph H_n requires odd n");
}

Bitset InducedSubgraph::neighbors(uint64_t x) const {
    Bitset b = g_->row(x);
    b &= g_->diff_set();
    return b;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    Bitset scratch;
    for (uint64_t u = 0; u < g.order(); ++u) {
        const Bitset& row = g.row_ref(u, scratch);
        row.for_each_above(u, [&](uint64_t v) { out << u << ' ' << v << '\n'; });
    }
}

} // namespace paley
