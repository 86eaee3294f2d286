// Acceptance gate: nine criteria, exact integer equality throughout.
// Prints one PASS/FAIL line per criterion; exits nonzero on any failure.
// Criteria 1 and 9 drive the CLI binary (--cli PATH); the rest run in-process.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "charsums.hpp"
#include "cliques.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "numtheory.hpp"

using namespace paley;
using json = nlohmann::json;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
fs::path g_tmp;

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const fs::path out_path = g_tmp / "acceptance_stdout.txt";
    const std::string cmd = g_cli + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream f(out_path);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

std::optional<Modulus> admissible(uint64_t n) {
    try {
        return check_admissible(n);
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
}

struct Expected2 {
    uint64_t n;
    const char* k3;
    const char* k4;
};
constexpr Expected2 kTable2[] = {
    {169, "57122", "0"},           {289, "334084", "0"},         {2873, "23305776", "0"},
    {841, "9901934", "143578043"}, {1073, "2163168", "2703960"},
};

struct Expected1 {
    uint64_t p;
    uint32_t alpha;
    int64_t x;
    int64_t y;
};
constexpr Expected1 kTable1[] = {
    {5, 2, 5, 10},    {5, 3, 25, 50},      {13, 2, -39, 26}, {13, 3, -507, 338},
    {17, 2, -17, 68}, {17, 3, -289, 1156}, {29, 1, 5, 2},    {29, 2, 145, 58},
    {37, 1, 1, -6},   {37, 2, 37, -222},   {41, 1, -5, 4},   {41, 2, -205, 164},
};

// 1. Reference clique counts by formula, brute force, and reduction, via the CLI.
bool criterion1(std::string& detail) {
    const auto t0 = Clock::now();
    CliRun r = run_cli("verify-tables");
    if (r.code != 0) {
        detail = "CLI exit code " + std::to_string(r.code);
        return false;
    }
    json doc = json::parse(r.out, nullptr, false);
    if (doc.is_discarded() || doc["all_pass"] != true) {
        detail = "report did not say all_pass";
        return false;
    }
    for (const auto& exp : kTable2) {
        bool seen = false;
        for (const auto& row : doc["table2"]) {
            if (row["n"] != exp.n) continue;
            seen = true;
            for (const char* method : {"formula", "bruteforce", "reduction"}) {
                if (row["k3"][method] != exp.k3 || row["k4"][method] != exp.k4) {
                    detail = "n=" + std::to_string(exp.n) + " " + method + " off";
                    return false;
                }
            }
        }
        if (!seen) {
            detail = "n=" + std::to_string(exp.n) + " missing from report";
            return false;
        }
    }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - t0);
    if (secs.count() >= 120) {
        detail = "took " + std::to_string(secs.count()) + "s (budget 120s)";
        return false;
    }
    detail = "5 rows x 2 counts x 3 methods in " + std::to_string(secs.count()) + "s";
    return true;
}

// 2. Reference Jacobi sums: x exact, |y| exact, identity and magnitude law.
bool criterion2(std::string& detail) {
    for (const auto& row : kTable1) {
        const auto rep = verify_xyreln(row.p, row.alpha);
        const int64_t ay = rep.j.im < 0 ? -rep.j.im : rep.j.im;
        const int64_t ey = row.y < 0 ? -row.y : row.y;
        if (rep.j.re != row.x || ay != ey || !rep.ok || rep.norm != rep.norm_expected) {
            detail = "row p=" + std::to_string(row.p) + " alpha=" + std::to_string(row.alpha);
            return false;
        }
    }
    detail = "12 rows";
    return true;
}

// 3. Identity sweep over p <= 100, alpha in {1,2}.
bool criterion3(std::string& detail) {
    int checked = 0;
    for (uint64_t p = 5; p <= 100; p += 4) {
        const auto f = factorize(p);
        if (f.size() != 1 || f[0].alpha != 1) continue;
        for (uint32_t alpha : {1u, 2u}) {
            if (!verify_xyreln(p, alpha).ok) {
                detail = "fails at p=" + std::to_string(p) + " alpha=" + std::to_string(alpha);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (p, alpha) pairs";
    return checked == 22;
}

// 4. Three-way agreement sweeps: K3 to 2000, K4 to 1100 (odd n).
bool criterion4(std::string& detail) {
    int n3 = 0, n4 = 0;
    for (uint64_t n = 5; n <= 2000; n += 2) {
        const auto m = admissible(n);
        if (!m) continue;
        Graph g(*m);
        const BigInt f3 = k3_formula(*m);
        if (f3 != count_triangles_bruteforce(g) || f3 != count_via_reduction(g, 3)) {
            detail = "K3 methods disagree at n=" + std::to_string(n);
            return false;
        }
        ++n3;
        if (n > 1100) continue;
        const BigInt f4 = k4_formula(*m);
        if (f4 != count_k4_bruteforce(g) || f4 != count_via_reduction(g, 4)) {
            detail = "K4 methods disagree at n=" + std::to_string(n);
            return false;
        }
        ++n4;
    }
    detail = std::to_string(n3) + " K3 moduli, " + std::to_string(n4) + " K4 moduli";
    return n3 == 235 && n4 == 134;
}

// 5. Square sets match the exhaustive oracle; |R_n| law for odd n.
bool criterion5(std::string& detail) {
    int checked = 0;
    for (uint64_t n = 2; n <= 5000; ++n) {
        const auto m = admissible(n);
        if (!m) continue;
        const Bitset rn = squares_mod_n(*m);
        if (rn != squares_bruteforce(n)) {
            detail = "R_n wrong at n=" + std::to_string(n);
            return false;
        }
        if (m->odd() && rn.count() != m->phi >> m->k()) {
            detail = "|R_n| law fails at n=" + std::to_string(n);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " moduli";
    return checked == 844;
}

// 6. Rooted-degree closed form; triangle lifting; product laws across primes.
bool criterion6(std::string& detail) {
    auto rooted = [](uint64_t n) {
        Graph g(check_admissible(n));
        InducedSubgraph h(g);
        return std::pair<uint64_t, uint64_t>{rooted_degree(h), rooted_triangles(h)};
    };

    int checked = 0;
    for (uint64_t p = 5; p <= 5000; p += 4) {
        const auto f = factorize(p);
        if (f.size() != 1 || f[0].alpha != 1) continue;
        uint64_t q = p, scale = 1;  // q = p^alpha, scale = p^(alpha-1)
        while (q <= 5000) {
            if (rooted(q).first != scale * (p - 5) / 4) {
                detail = "rooted degree off at " + std::to_string(q);
                return false;
            }
            ++checked;
            scale = q;
            q *= p;
        }
    }

    for (uint64_t p : {13u, 17u, 29u}) {
        if (rooted(p * p).second != p * p * rooted(p).second) {
            detail = "triangle lifting fails at p=" + std::to_string(p);
            return false;
        }
    }

    for (uint64_t n : {65u, 85u, 221u, 1073u}) {
        const auto m = check_admissible(n);
        const auto whole = rooted(n);
        uint64_t deg = 1, tri = 1;
        for (const auto& [p, alpha] : m.factors) {
            uint64_t q = 1;
            for (uint32_t i = 0; i < alpha; ++i) q *= p;
            const auto part = rooted(q);
            deg *= part.first;
            tri *= part.second;
        }
        tri <<= m.k() - 1;
        if (whole.first != deg || whole.second != tri) {
            detail = "product law fails at n=" + std::to_string(n);
            return false;
        }
    }
    detail = std::to_string(checked) + " prime powers + lifting + products";
    return true;
}

// 7. Divisor predicate == (K4 formula is zero), odd n to 5000.
bool criterion7(std::string& detail) {
    int checked = 0;
    for (uint64_t n = 5; n <= 5000; n += 2) {
        const auto m = admissible(n);
        if (!m) continue;
        if (k4_is_zero(*m) != (k4_formula(*m) == 0)) {
            detail = "disagrees at n=" + std::to_string(n);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " odd moduli";
    return checked > 0;
}

// 8. Even admissible n are triangle-free.
bool criterion8(std::string& detail) {
    int checked = 0;
    for (uint64_t n = 10; n <= 1000; n += 4) {  // admissible evens are 2 mod 4
        const auto m = admissible(n);
        if (!m) continue;
        Graph g(*m);
        if (count_triangles_bruteforce(g) != 0) {
            detail = "triangle found at n=" + std::to_string(n);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " even moduli";
    return checked == 64;
}

std::string strip_timing(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("elapsed_ms") == std::string::npos) out << line << "\n";
    return out.str();
}

// 9. verify-tables JSON is byte-identical across thread counts, timing aside.
bool criterion9(std::string& detail) {
    CliRun a = run_cli("verify-tables --threads 1");
    CliRun b = run_cli("verify-tables --threads 4");
    if (a.code != 0 || b.code != 0) {
        detail = "CLI exit codes " + std::to_string(a.code) + "/" + std::to_string(b.code);
        return false;
    }
    if (strip_timing(a.out) != strip_timing(b.out)) {
        detail = "reports differ beyond timing";
        return false;
    }
    detail = "1 vs 4 threads";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
    if (g_cli.empty()) {
        std::cerr << "usage: acceptance --cli <path-to-paley>\n";
        return 2;
    }
    g_tmp = fs::temp_directory_path() / "paley_acceptance";
    fs::create_directories(g_tmp);

    struct Criterion {
        const char* label;
        bool (*fn)(std::string&);
    };
    const Criterion criteria[] = {
        {"clique-count table by all three methods", criterion1},
        {"Jacobi-sum table", criterion2},
        {"identity sweep p <= 100", criterion3},
        {"three-way count agreement", criterion4},
        {"square-set equivalence", criterion5},
        {"rooted-count identities", criterion6},
        {"K4 vanishing predicate", criterion7},
        {"even-n triangle-freeness", criterion8},
        {"thread-count determinism", criterion9},
    };

    int failed = 0;
    for (size_t i = 0; i < std::size(criteria); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failed;
        std::cout << "criterion " << i + 1 << " (" << criteria[i].label
                  << "): " << (ok ? "PASS" : "FAIL") << (detail.empty() ? "" : " - " + detail)
                  << "\n";
    }
    if (failed == 0) {
        std::cout << "acceptance: all 9 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failed << " criterion(s) failed\n";
    return 1;
}
