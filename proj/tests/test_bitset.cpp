#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "bitset.hpp"

using paley::Bitset;

namespace {

Bitset random_bits(uint64_t n, std::mt19937_64& rng, double density = 0.4) {
    Bitset b(n);
    std::bernoulli_distribution coin(density);
    for (uint64_t i = 0; i < n; ++i)
        if (coin(rng)) b.set(i);
    return b;
}

std::vector<uint64_t> positions(const Bitset& b) {
    std::vector<uint64_t> out;
    b.for_each([&](uint64_t i) { out.push_back(i); });
    return out;
}

} // namespace

TEST_CASE("set, reset, test, count") {
    Bitset b(100);
    CHECK(b.size() == 100);
    CHECK(b.count() == 0);
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(99);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK_FALSE(b.test(62));
    b.reset(63);
    CHECK_FALSE(b.test(63));
    CHECK(b.count() == 3);
    CHECK(positions(b) == std::vector<uint64_t>{0, 64, 99});
}

TEST_CASE("and_count_above equals the naive filter") {
    std::mt19937_64 rng(7);
    for (uint64_t n : {1u, 5u, 63u, 64u, 65u, 127u, 128u, 200u, 1000u}) {
        Bitset a = random_bits(n, rng);
        Bitset b = random_bits(n, rng);
        for (uint64_t limit : {uint64_t(0), n / 3, n - 1, n, n + 5}) {
            uint64_t naive = 0;
            for (uint64_t i = limit + 1; i < n; ++i)
                naive += a.test(i) && b.test(i) ? 1 : 0;
            CAPTURE(n);
            CAPTURE(limit);
            CHECK(Bitset::and_count_above(a, b, limit) == naive);
        }
    }
}

TEST_CASE("rotation matches index arithmetic and composes") {
    std::mt19937_64 rng(11);
    for (uint64_t n : {1u, 2u, 63u, 64u, 65u, 130u}) {
        Bitset a = random_bits(n, rng);
        for (uint64_t s : {uint64_t(0), uint64_t(1) % n, n - 1, n / 2, 63 % n, 64 % n}) {
            Bitset r = a.rotated(s);
            CHECK(r.size() == n);
            CHECK(r.count() == a.count());
            bool match = true;
            for (uint64_t i = 0; i < n; ++i)
                match = match && r.test((i + s) % n) == a.test(i);
            CAPTURE(n);
            CAPTURE(s);
            CHECK(match);
        }
        CHECK(a.rotated(3 % n).rotated(5 % n) == a.rotated(8 % n));
        CHECK(a.rotated(0) == a);
    }
}

TEST_CASE("rotation leaves no stray bits past size") {
    std::mt19937_64 rng(3);
    Bitset a = random_bits(65, rng, 0.9);
    Bitset r = a.rotated(37);
    for (uint64_t i : positions(r)) CHECK(i < 65);
    CHECK(r.count() == a.count());
}

TEST_CASE("intersection and bounded iteration") {
    std::mt19937_64 rng(5);
    Bitset a = random_bits(200, rng);
    Bitset b = random_bits(200, rng);
    Bitset c = a;
    c &= b;
    bool match = true;
    for (uint64_t i = 0; i < 200; ++i)
        match = match && c.test(i) == (a.test(i) && b.test(i));
    CHECK(match);

    std::vector<uint64_t> above;
    a.for_each_above(77, [&](uint64_t i) { above.push_back(i); });
    std::vector<uint64_t> expected;
    for (uint64_t i : positions(a))
        if (i > 77) expected.push_back(i);
    CHECK(above == expected);

    a.for_each_above(199, [&](uint64_t) { FAIL("nothing lies above size-1"); });
    a.for_each_above(500, [&](uint64_t) { FAIL("limit past size visits nothing"); });
}
