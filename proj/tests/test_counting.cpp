#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wignerbell/counting.hpp"
#include "wignerbell/errors.hpp"
#include "wignerbell/exhaustive.hpp"
#include "wignerbell/random.hpp"

using namespace wignerbell;
using enum AxisLabel;

namespace {

constexpr Sign kP = Sign::Plus;
constexpr Sign kM = Sign::Minus;

Population random_pop(CounterStream& s, Count max_each) {
    std::array<Count, kPairTypeCount> c{};
    for (Count& n : c) n = static_cast<Count>(s.next_u64() % static_cast<std::uint64_t>(max_each + 1));
    return Population(c);
}

// Reference P(la sa; lb sb) as (numerator, denominator) from the transcribed table.
std::pair<Count, Count> reference_joint(const Population& pop, int la, int sa, int lb, int sb) {
    Count num = 0, den = 0;
    for (int alpha = 1; alpha <= 8; ++alpha) {
        den += pop.counts()[alpha - 1];
        if (oracle::qualifies(alpha, la, sa, lb, sb)) num += pop.counts()[alpha - 1];
    }
    return {num, den};
}

}  // namespace

TEST_CASE("population basics") {
    const Population p{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(p[1] == 1);
    CHECK(p[8] == 8);
    CHECK(p.total() == 36);
    CHECK_THROWS_AS(p[0], DomainError);
    CHECK_THROWS_AS(p[9], DomainError);
    CHECK_THROWS_AS(Population({1, 2, 3}), DomainError);
    CHECK_THROWS_AS(Population({0, 0, 0, -1, 0, 0, 0, 0}), DomainError);
    CHECK(Population().empty());
}

TEST_CASE("multiplicity_inequality examples") {
    const auto zero = multiplicity_inequality(Population());
    CHECK(zero.lhs == Rational(0));
    CHECK(zero.rhs == Rational(0));
    CHECK(zero.satisfied);

    const auto r = multiplicity_inequality(Population{0, 1, 2, 3, 0, 0, 4, 0});
    CHECK(r.lhs == Rational(5));
    CHECK(r.rhs == Rational(10));
    CHECK(r.slack == Rational(5));
    CHECK(r.satisfied);
}

TEST_CASE("multiplicity inequality holds exhaustively for sum <= 12") {
    // Independent nested enumeration, not for_each_population.
    std::uint64_t tuples = 0;
    std::array<Count, 8> n{};
    auto rec = [&](auto& self, int i, Count left) -> void {
        if (i == 8) {
            ++tuples;
            const auto r = multiplicity_inequality(Population(n));
            REQUIRE(r.satisfied);
            REQUIRE(r.lhs == Rational(n[2] + n[3]));
            REQUIRE(r.rhs == Rational(n[1] + n[3] + n[2] + n[6]));
            return;
        }
        for (Count v = 0; v <= left; ++v) {
            n[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, 12);
    CHECK(tuples == oracle::stars_and_bars(12));
    CHECK(tuples == 125970);
}

TEST_CASE("multiplicity inequality on large random populations") {
    CounterStream s(2024);
    for (int i = 0; i < 2000; ++i) {
        REQUIRE(multiplicity_inequality(random_pop(s, 1'000'000'000)).satisfied);
    }
}

TEST_CASE("joint_probability examples") {
    CHECK(joint_probability(Population{0, 0, 1, 2, 0, 0, 5, 0}, A, kP, B, kP) == Rational(3, 8));
    CHECK(joint_probability(Population{0, 2, 0, 1, 0, 0, 3, 0}, A, kP, C, kP) == Rational(3, 6));
    CHECK(joint_probability(Population{1, 1, 1, 1, 1, 1, 1, 1}, A, kP, A, kP) == Rational(0));
    CHECK_THROWS_AS(joint_probability(Population(), A, kP, B, kP), EmptyPopulationError);
}

TEST_CASE("joint_probability matches the transcribed table on random populations") {
    CounterStream s(11);
    for (int trial = 0; trial < 300; ++trial) {
        Population pop = random_pop(s, 20);
        if (pop.empty()) continue;
        for (int la = 0; la < 3; ++la) {
            for (int lb = 0; lb < 3; ++lb) {
                Rational total{0};
                for (int sa : {1, -1}) {
                    for (int sb : {1, -1}) {
                        const auto [num, den] = reference_joint(pop, la, sa, lb, sb);
                        const Rational p = joint_probability(pop, static_cast<AxisLabel>(la),
                                                             static_cast<Sign>(sa),
                                                             static_cast<AxisLabel>(lb),
                                                             static_cast<Sign>(sb));
                        REQUIRE(p == Rational(num, den));
                        total += p;
                    }
                }
                REQUIRE(total == Rational(1));
            }
        }
    }
}

TEST_CASE("wigner_inequality examples") {
    const auto eq = wigner_inequality(Population{0, 0, 1, 2, 0, 0, 0, 3});
    CHECK(eq.lhs == Rational(3, 6));
    CHECK(eq.rhs == Rational(3, 6));
    CHECK(eq.slack == Rational(0));
    CHECK(eq.satisfied);

    const auto r = wigner_inequality(Population{0, 0, 1, 2, 0, 0, 3, 0});
    CHECK(r.lhs == Rational(3, 6));
    CHECK(r.rhs == Rational(1));
    CHECK(r.satisfied);

    CHECK_THROWS_AS(wigner_inequality(Population()), EmptyPopulationError);
}

TEST_CASE("wigner inequality exhaustively for sum <= 12, scale invariant") {
    std::uint64_t checked = 0;
    for_each_population(12, {}, [&](const Population& pop) {
        if (pop.empty()) return;
        ++checked;
        const auto direct = wigner_inequality(pop);
        REQUIRE(direct.satisfied);
        const auto normalized = wigner_inequality(normalize(pop));
        REQUIRE(normalized.lhs == direct.lhs);
        REQUIRE(normalized.rhs == direct.rhs);
        // Same thing as the multiplicity form divided by the total.
        const auto counts = multiplicity_inequality(pop);
        REQUIRE(direct.lhs == counts.lhs / pop.total());
        REQUIRE(direct.rhs == counts.rhs / pop.total());
    });
    CHECK(checked == oracle::stars_and_bars(12) - 1);
}

TEST_CASE("normalize") {
    const Distribution u = normalize(Population{1, 1, 1, 1, 1, 1, 1, 1});
    for (const Rational& p : u) CHECK(p == Rational(1, 8));

    const Distribution d = normalize(Population{3, 1, 0, 0, 0, 0, 0, 4});
    CHECK(d[0] == Rational(3, 8));
    CHECK(d[1] == Rational(1, 8));
    CHECK(d[2] == Rational(0));
    CHECK(d[7] == Rational(4, 8));
    Rational sum{0};
    for (const Rational& p : d) sum += p;
    CHECK(sum == Rational(1));

    CHECK_THROWS_AS(normalize(Population()), EmptyPopulationError);

    Distribution bad = d;
    bad[0] += 1;
    CHECK_THROWS_AS(wigner_inequality(bad), DomainError);
    Distribution negative = d;
    negative[0] = Rational(-1, 8);
    negative[1] = Rational(5, 8);
    CHECK_THROWS_AS(wigner_inequality(negative), DomainError);
}

TEST_CASE("partition function") {
    CHECK(partition_function(Population{1, 1, 1, 1, 1, 1, 1, 1}) == 8);
    CHECK(partition_function(Population{2, 0, 0, 0, 0, 0, 0, 0}) == 2);
    CHECK(partition_function(Population()) == 0);

    CounterStream s(3);
    for (int i = 0; i < 500; ++i) {
        const Population pop = random_pop(s, 1000);
        REQUIRE(partition_function(pop) == pop.total());
        // Floating route: sum of exp(ln N) over non-empty bins.
        double z = 0.0;
        for (Count n : pop.counts()) {
            if (n > 0) z += std::exp(std::log(static_cast<double>(n)));
        }
        REQUIRE(std::llround(z) == partition_function(pop));
    }
}

TEST_CASE("for_each_population respects minimums") {
    std::uint64_t count = 0;
    for_each_population(16, {0, 1, 1, 1, 0, 0, 1, 0}, [&](const Population& p) {
        ++count;
        REQUIRE(p[2] >= 1);
        REQUIRE(p[3] >= 1);
        REQUIRE(p[4] >= 1);
        REQUIRE(p[7] >= 1);
        REQUIRE(p.total() <= 16);
    });
    CHECK(count == oracle::stars_and_bars(12));

    std::uint64_t none = 0;
    for_each_population(3, {1, 1, 1, 1, 0, 0, 0, 0}, [&](const Population&) { ++none; });
    CHECK(none == 0);
}

TEST_CASE("check_exhaustive") {
    const auto eq1 = check_exhaustive(InequalityKind::Multiplicity, 12);
    CHECK(eq1.checked == 125970);
    CHECK(eq1.violations == 0);

    const auto eq2 = check_exhaustive(InequalityKind::Wigner, 6);
    CHECK(eq2.checked == oracle::stars_and_bars(6) - 1);
    CHECK(eq2.violations == 0);

    const auto eq3 = check_exhaustive(InequalityKind::Entropy, 8);
    CHECK(eq3.checked == oracle::stars_and_bars(4));
    CHECK(eq3.violations == 0);
    CHECK(eq3.max_slack_deviation <= 1e-12);

    CHECK_THROWS_AS(check_exhaustive(InequalityKind::Wigner, 0), DomainError);
    CHECK_THROWS_AS(check_exhaustive(InequalityKind::Wigner, 21), DomainError);
    CHECK(parse_inequality_kind("eq2") == InequalityKind::Wigner);
    CHECK(to_string(InequalityKind::Entropy) == "eq3");
    CHECK_THROWS_AS(parse_inequality_kind("eq4"), DomainError);
}
