// C surface over the core. Every entry point catches, stashes the message in
// a thread-local slot, and maps the exception to a status code; nothing
// C++-ish crosses the boundary.

#include "paleytype.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "charsums.hpp"
#include "cliques.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "numtheory.hpp"

struct pt_modulus {
    paley::Modulus m;
};

struct pt_graph {
    paley::Graph g;
};

namespace {

thread_local std::string t_last_error;

pt_status fail(pt_status code, const char* msg) {
    t_last_error = msg ? msg : "";
    return code;
}

template <typename F>
pt_status guarded(F&& body) noexcept {
    try {
        body();
        t_last_error.clear();
        return PT_OK;
    } catch (const paley::InvalidInput& e) {
        return fail(PT_ERR_INVALID_INPUT, e.what());
    } catch (const paley::LimitExceeded& e) {
        return fail(PT_ERR_LIMIT, e.what());
    } catch (const paley::InternalError& e) {
        return fail(PT_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PT_ERR_IO, "out of memory");
    } catch (const std::exception& e) {
        return fail(PT_ERR_INTERNAL, e.what());
    }
}

// malloc so callers free with pt_string_free regardless of who built them.
char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) throw paley::InvalidInput(what);
}

} // namespace

extern "C" {

const char* pt_version(void) { return "0.1.0"; }

const char* pt_last_error(void) { return t_last_error.c_str(); }

void pt_string_free(char* s) { std::free(s); }

/* ---- modulus ----------------------------------------------------------- */

pt_status pt_modulus_create(uint64_t n, pt_modulus** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = new pt_modulus{paley::check_admissible(n)};
    });
}

void pt_modulus_destroy(pt_modulus* m) { delete m; }

pt_status pt_modulus_n(const pt_modulus* m, uint64_t* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = m->m.n;
    });
}

pt_status pt_modulus_s(const pt_modulus* m, uint32_t* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = static_cast<uint32_t>(m->m.s);
    });
}

pt_status pt_modulus_k(const pt_modulus* m, uint32_t* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = static_cast<uint32_t>(m->m.k());
    });
}

pt_status pt_modulus_phi(const pt_modulus* m, uint64_t* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = m->m.phi;
    });
}

pt_status pt_modulus_factor(const pt_modulus* m, uint32_t index,
                            uint64_t* p, uint32_t* alpha) {
    return guarded([&] {
        require(m && p && alpha, "null argument");
        require(index < m->m.factors.size(), "factor index out of range");
        *p = m->m.factors[index].p;
        *alpha = m->m.factors[index].alpha;
    });
}

/* ---- graph ------------------------------------------------------------- */

pt_status pt_graph_create(const pt_modulus* m, uint64_t row_cache_limit,
                          pt_graph** out) {
    return guarded([&] {
        require(m && out, "null argument");
        const uint64_t limit =
            row_cache_limit == 0 ? paley::Graph::kDefaultRowCacheLimit : row_cache_limit;
        *out = new pt_graph{paley::Graph(m->m, limit)};
    });
}

void pt_graph_destroy(pt_graph* g) { delete g; }

pt_status pt_graph_order(const pt_graph* g, uint64_t* out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = g->g.order();
    });
}

pt_status pt_graph_degree(const pt_graph* g, uint64_t* out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = g->g.degree();
    });
}

pt_status pt_graph_adjacent(const pt_graph* g, uint64_t u, uint64_t v, int* out) {
    return guarded([&] {
        require(g && out, "null argument");
        require(u < g->g.order() && v < g->g.order(), "vertex out of range");
        *out = g->g.adjacent(u, v) ? 1 : 0;
    });
}

pt_status pt_graph_edges(const pt_graph* g, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        const uint64_t limit = paley::CountOptions{}.ceiling_k3;
        if (g->g.order() > limit)
            throw paley::LimitExceeded("edge list refused: n exceeds " + std::to_string(limit));
        std::ostringstream os;
        paley::write_edge_list(g->g, os);
        *out = dup_string(os.str());
    });
}

/* ---- clique counts ----------------------------------------------------- */

pt_status pt_count_bruteforce(const pt_graph* g, uint32_t order, uint32_t threads,
                              uint64_t ceiling, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        paley::CountOptions opt;
        opt.threads = threads;
        if (ceiling != 0) {
            opt.ceiling_k3 = ceiling;
            opt.ceiling_k4 = ceiling;
        }
        const auto report =
            paley::run_count(g->g, static_cast<int>(order), paley::CountMethod::bruteforce, opt);
        *out = dup_string(report.value.str());
    });
}

pt_status pt_count_reduction(const pt_graph* g, uint32_t order, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup_string(paley::count_via_reduction(g->g, static_cast<int>(order)).str());
    });
}

pt_status pt_count_formula(const pt_modulus* m, uint32_t order, char** out) {
    return guarded([&] {
        require(m && out, "null argument");
        paley::BigInt value;
        if (order == 3) {
            value = paley::k3_formula(m->m);
        } else if (order == 4) {
            value = paley::k4_formula(m->m);
        } else {
            throw paley::InvalidInput("order must be 3 or 4");
        }
        *out = dup_string(value.str());
    });
}

pt_status pt_rooted_degree(const pt_graph* g, uint64_t* out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = paley::rooted_degree(paley::InducedSubgraph(g->g));
    });
}

pt_status pt_rooted_triangles(const pt_graph* g, uint64_t* out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = paley::rooted_triangles(paley::InducedSubgraph(g->g));
    });
}

/* ---- arithmetic --------------------------------------------------------- */

pt_status pt_two_squares(uint64_t p, uint64_t* a, uint64_t* b) {
    return guarded([&] {
        require(a && b, "null argument");
        const auto ts = paley::two_squares(p);
        *a = ts.a;
        *b = ts.b;
    });
}

pt_status pt_jacobi_sum(uint64_t p, uint32_t alpha, int64_t* x, int64_t* y) {
    return guarded([&] {
        require(x && y, "null argument");
        const auto psi = paley::CharacterTable::build(p, alpha, 4);
        const auto chi = paley::CharacterTable::build(p, alpha, 2);
        const auto j = paley::jacobi_sum(psi, chi);
        *x = j.re;
        *y = j.im;
    });
}

pt_status pt_jacobi_verify(uint64_t p, uint32_t alpha, pt_jacobi_report* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto r = paley::verify_xyreln(p, alpha);
        out->x = r.j.re;
        out->y = r.j.im;
        out->x2_minus_y2 = r.x2_minus_y2;
        out->rhs = r.rhs;
        out->norm = r.norm;
        out->norm_expected = r.norm_expected;
        out->ok = r.ok ? 1 : 0;
    });
}

/* ---- clique-number classification -------------------------------------- */

pt_status pt_k4_zero(const pt_modulus* m, int* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = paley::k4_is_zero(m->m) ? 1 : 0;
    });
}

pt_status pt_clique_number_class(const pt_modulus* m, uint32_t* out) {
    return guarded([&] {
        require(m && out, "null argument");
        switch (paley::clique_number_class(m->m)) {
            case paley::CliqueNumberClass::exactly_2: *out = 2; break;
            case paley::CliqueNumberClass::exactly_3: *out = 3; break;
            case paley::CliqueNumberClass::at_least_4: *out = 4; break;
        }
    });
}

} // extern "C"
