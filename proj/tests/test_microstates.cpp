#include <doctest.h>

#include "oracles.hpp"
#include "wignerbell/errors.hpp"
#include "wignerbell/exhaustive.hpp"
#include "wignerbell/microstates.hpp"

using namespace wignerbell;

TEST_CASE("microstate_count examples") {
    CHECK(microstate_count(0, Population()) == 1);
    CHECK(microstate_count(3, Population{2, 1, 0, 0, 0, 0, 0, 0}) == 3);
    CHECK(microstate_count(4, Population{1, 1, 1, 1, 0, 0, 0, 0}) == 24);
    CHECK(microstate_count(20, Population{20, 0, 0, 0, 0, 0, 0, 0}) == 1);
    // 20! / (3!^4 2!^4)
    CHECK(microstate_count(20, Population{3, 3, 3, 3, 2, 2, 2, 2}) == 117327450240000ULL);

    CHECK_THROWS_AS(microstate_count(3, Population{1, 1, 0, 0, 0, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(microstate_count(21, Population{21, 0, 0, 0, 0, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(microstate_count(-1, Population()), DomainError);
}

TEST_CASE("microstate_count matches enumeration of all 8^m assignments, m <= 5") {
    for (int m = 0; m <= 5; ++m) {
        const auto histogram = oracle::enumerate_assignments(m);
        std::uint64_t macrostates = 0;
        std::uint64_t total = 0;
        for_each_population(m, {}, [&](const Population& p) {
            if (p.total() != m) return;
            ++macrostates;
            const auto it = histogram.find(p.counts());
            const std::uint64_t expected = it == histogram.end() ? 0 : it->second;
            REQUIRE(microstate_count(m, p) == expected);
            total += expected;
        });
        CHECK(macrostates == oracle::binomial(m + 7, 7));
        CHECK(total == (m == 0 ? 1 : [&] {
                  std::uint64_t t = 1;
                  for (int i = 0; i < m; ++i) t *= 8;
                  return t;
              }()));
    }
}

TEST_CASE("microstate counts sum to 8^m for m <= 20") {
    // Multinomial theorem: sum over macrostates of m!/prod(n!) = 8^m.
    for (int m : {7, 10, 15, 20}) {
        unsigned __int128 total = 0;
        for_each_population(m, {}, [&](const Population& p) {
            if (p.total() == m) total += microstate_count(m, p);
        });
        unsigned __int128 expected = 1;
        for (int i = 0; i < m; ++i) expected *= 8;
        CHECK(total == expected);
    }
}
