#ifndef PALEY_CLIQUES_HPP
#define PALEY_CLIQUES_HPP

#include <chrono>
#include <cstdint>

#include "bigint.hpp"
#include "graph.hpp"

namespace paley {

enum class CountMethod { bruteforce, reduction, formula };
const char* to_string(CountMethod m);

struct CountOptions {
    unsigned threads = 0;            // 0 = all hardware threads
    uint64_t ceiling_k3 = 100000;    // largest n brute-force triangles will accept
    uint64_t ceiling_k4 = 20000;     // largest n brute-force K4 will accept
    bool reverse_order = false;      // flip edge traversal order; result must not change
};

// Exact triangle count by edge iteration: for each edge (u,v), u < v,
// popcount row(u) & row(v) above v.
BigInt count_triangles_bruteforce(const Graph& g, const CountOptions& opt = {});

// Exact K4 count: for each triangle (u,v,w), popcount of the common
// neighborhood above w.
BigInt count_k4_bruteforce(const Graph& g, const CountOptions& opt = {});

// K_2(H_n, 1): edges of H_n at vertex 1.
uint64_t rooted_degree(const InducedSubgraph& h);

// K_3(H_n, 1): triangles of H_n through vertex 1.
uint64_t rooted_triangles(const InducedSubgraph& h);

// Vertex-transitivity reduction: K_l(G_n) = n phi(n) / (2^k l(l-1)) * K_{l-1}(H_n, 1)
// for l in {3, 4} and odd admissible n. The division must be exact.
BigInt count_via_reduction(const Graph& g, int order);

struct CountReport {
    uint64_t n = 0;
    int order = 0;
    CountMethod method = CountMethod::bruteforce;
    BigInt value;
    std::chrono::milliseconds elapsed{0};
};

// Dispatch one method and time it.
CountReport run_count(const Graph& g, int order, CountMethod method,
                      const CountOptions& opt = {});

} // namespace paley

#endif
