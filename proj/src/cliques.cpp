#include "cliques.hpp"

#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"

namespace paley {

const char* to_string(CountMethod m) {
    switch (m) {
        case CountMethod::bruteforce: return "bruteforce";
        case CountMethod::reduction: return "reduction";
        case CountMethod::formula: return "formula";
    }
    return "?";
}

namespace {

// Triangles with least vertex u: edges (u,v) from row(u), then the common
// neighborhood above v.
uint64_t triangles_at(const Graph& g, uint64_t u, Bitset& s_u, Bitset& s_v) {
    uint64_t cnt = 0;
    const Bitset& ru = g.row_ref(u, s_u);
    ru.for_each_above(u, [&](uint64_t v) {
        const Bitset& rv = g.row_ref(v, s_v);
        cnt += Bitset::and_count_above(ru, rv, v);
    });
    return cnt;
}

uint64_t k4_at(const Graph& g, uint64_t u, Bitset& s_u, Bitset& s_v, Bitset& s_w, Bitset& uv) {
    uint64_t cnt = 0;
    const Bitset& ru = g.row_ref(u, s_u);
    ru.for_each_above(u, [&](uint64_t v) {
        const Bitset& rv = g.row_ref(v, s_v);
        uv = ru;
        uv &= rv;
        uv.for_each_above(v, [&](uint64_t w) {
            const Bitset& rw = g.row_ref(w, s_w);
            cnt += Bitset::and_count_above(uv, rw, w);
        });
    });
    return cnt;
}

// Sum per-vertex contributions over all u, optionally across threads.
// Each u's term is independent, so any partition gives the same total.
template <class PerVertex>
uint64_t sum_over_vertices(uint64_t n, const CountOptions& opt, PerVertex per_vertex) {
    unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (static_cast<uint64_t>(threads) > n) threads = static_cast<unsigned>(n);

    auto run_range = [&](unsigned tid) -> uint64_t {
        uint64_t local = 0;
        if (opt.reverse_order) {
            for (uint64_t i = n; i-- > 0;)
                if (i % threads == tid) local += per_vertex(i);
        } else {
            for (uint64_t i = tid; i < n; i += threads) local += per_vertex(i);
        }
        return local;
    };

    if (threads == 1) return run_range(0);

    std::vector<uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] { partial[t] = run_range(t); });
    for (auto& th : pool) th.join();
    uint64_t total = 0;
    for (uint64_t c : partial) total += c;
    return total;
}

} // namespace

BigInt count_triangles_bruteforce(const Graph& g, const CountOptions& opt) {
    if (g.order() > opt.ceiling_k3)
        throw LimitExceeded("triangle brute force refused: n = " + std::to_string(g.order()) +
                            " exceeds ceiling " + std::to_string(opt.ceiling_k3));
    uint64_t total = sum_over_vertices(g.order(), opt, [&](uint64_t u) {
        thread_local Bitset s_u, s_v;
        return triangles_at(g, u, s_u, s_v);
    });
    return BigInt(total);
}

BigInt count_k4_bruteforce(const Graph& g, const CountOptions& opt) {
    if (g.order() > opt.ceiling_k4)
        throw LimitExceeded("K4 brute force refused: n = " + std::to_string(g.order()) +
                            " exceeds ceiling " + std::to_string(opt.ceiling_k4));
    uint64_t total = sum_over_vertices(g.order(), opt, [&](uint64_t u) {
        thread_local Bitset s_u, s_v, s_w, uv;
        return k4_at(g, u, s_u, s_v, s_w, uv);
    });
    return BigInt(total);
}

uint64_t rooted_degree(const InducedSubgraph& h) {
    return h.neighbors(1).count();
}

uint64_t rooted_triangles(const InducedSubgraph& h) {
    const Bitset nb = h.neighbors(1);
    const Graph& g = h.parent();
    uint64_t cnt = 0;
    Bitset scratch;
    nb.for_each([&](uint64_t x) {
        cnt += Bitset::and_count_above(nb, g.row_ref(x, scratch), x);
    });
    return cnt;
}

BigInt count_via_reduction(const Graph& g, int order) {
    if (order != 3 && order != 4)
        throw InvalidInput("reduction counting supports orders 3 and 4 only");
    const Modulus& m = g.modulus();
    if (!m.odd())
        throw InvalidInput("reduction counting requires odd n");
    InducedSubgraph h(g);
    const uint64_t rooted = (order == 3) ? rooted_degree(h) : rooted_triangles(h);
    const BigInt numerator = BigInt(m.n) * m.phi * rooted;
    const BigInt denominator = (BigInt(1) << m.k()) * order * (order - 1);
    return exact_div(numerator, denominator);
}

CountReport run_count(const Graph& g, int order, CountMethod method, const CountOptions& opt) {
    if (order != 3 && order != 4)
        throw InvalidInput("clique counting supports orders 3 and 4 only");
    CountReport rep;
    rep.n = g.order();
    rep.order = order;
    rep.method = method;
    const auto t0 = std::chrono::steady_clock::now();
    switch (method) {
        case CountMethod::bruteforce:
            rep.value = (order == 3) ? count_triangles_bruteforce(g, opt)
                                     : count_k4_bruteforce(g, opt);
            break;
        case CountMethod::reduction:
            rep.value = count_via_reduction(g, order);
            break;
        case CountMethod::formula:
            rep.value = (order == 3) ? k3_formula(g.modulus()) : k4_formula(g.modulus());
            break;
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

} // namespace paley
