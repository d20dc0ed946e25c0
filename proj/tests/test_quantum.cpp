#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "wignerbell/quantum.hpp"

using namespace wignerbell;
using std::numbers::pi;

namespace {

Axis in_xz(double polar) { return Axis::from_spherical(polar, 0.0); }

std::vector<Axis> random_axes(std::uint64_t seed, int count) {
    CounterStream s(seed);
    std::vector<Axis> out;
    for (int i = 0; i < count; ++i) {
        const double polar = std::acos(1.0 - 2.0 * s.uniform());
        out.push_back(Axis::from_spherical(polar, 2.0 * pi * s.uniform()));
    }
    return out;
}

}  // namespace

TEST_CASE("quantum_joint_probability closed forms") {
    const Axis z = Axis::z_hat();
    CHECK(quantum_joint_probability(z, z, Sign::Plus, Sign::Plus) == 0.0);
    CHECK(quantum_joint_probability(z, -z, Sign::Plus, Sign::Plus) == 0.5);
    CHECK(quantum_joint_probability(z, in_xz(pi / 2), Sign::Plus, Sign::Plus) ==
          doctest::Approx(0.25).epsilon(1e-15));
    CHECK(quantum_joint_probability(z, in_xz(pi / 3), Sign::Plus, Sign::Minus) ==
          doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("correlation") {
    const Axis z = Axis::z_hat();
    CHECK(correlation(z, z) == -1.0);
    CHECK(std::abs(correlation(z, in_xz(pi / 2))) < 1e-15);
    CHECK(correlation(z, in_xz(pi / 3)) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("normalization, marginals and (+,+) form on random axis pairs") {
    const auto axes = random_axes(7, 60);
    for (std::size_t i = 0; i + 1 < axes.size(); ++i) {
        const Axis& x = axes[i];
        const Axis& y = axes[i + 1];
        const auto p = QuantumProbabilities::singlet(x, y);
        for (double v : {p.pPP, p.pPM, p.pMP, p.pMM}) {
            CHECK(v >= 0.0);
            CHECK(v <= 0.5);
        }
        CHECK(std::abs(p.pPP + p.pPM + p.pMP + p.pMM - 1.0) < 1e-12);
        CHECK(std::abs(p.pPP + p.pPM - 0.5) < 1e-12);
        CHECK(std::abs(p.pPP + p.pMP - 0.5) < 1e-12);
        const double theta = angle_between(x, y);
        CHECK(std::abs(p.pPP - oracle::singlet_pp(theta)) < 1e-12);
        for (int sa : {1, -1}) {
            for (int sb : {1, -1}) {
                CHECK(std::abs(p(static_cast<Sign>(sa), static_cast<Sign>(sb)) -
                               oracle::singlet(theta, sa, sb)) < 1e-12);
            }
        }
        const double e = correlation(x, y);
        CHECK(e >= -1.0);
        CHECK(e <= 1.0);
        CHECK(std::abs(e + std::cos(theta)) < 1e-12);
    }
}

TEST_CASE("sample_joint at theta = 0 is perfectly anticorrelated") {
    const Axis z = Axis::z_hat();
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        CounterStream s = CounterStream::derive(seed, 0, 0);
        for (int i = 0; i < 10000; ++i) {
            const JointOutcome o = sample_joint(z, z, s);
            REQUIRE(o.alice == -o.bob);
        }
    }
}

TEST_CASE("sample_joint frequency at theta = pi/2 within 4 sigma") {
    const Axis z = Axis::z_hat();
    const Axis x = Axis::x_hat();
    constexpr std::int64_t n = 1'000'000;
    CounterStream s = CounterStream::derive(42, 0, 0);
    std::int64_t pp = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const JointOutcome o = sample_joint(z, x, s);
        pp += o.alice == Sign::Plus && o.bob == Sign::Plus;
    }
    const double p_hat = static_cast<double>(pp) / n;
    CHECK(std::abs(p_hat - 0.25) < 4.0 * oracle::binomial_sigma(0.25, n));
}

TEST_CASE("sample_joint is deterministic per seed") {
    const Axis a = in_xz(0.4);
    const Axis b = in_xz(1.9);
    CounterStream s1(123), s2(123), s3(124);
    bool any_difference = false;
    for (int i = 0; i < 1000; ++i) {
        const JointOutcome o1 = sample_joint(a, b, s1);
        CHECK(o1 == sample_joint(a, b, s2));
        any_difference = any_difference || !(o1 == sample_joint(a, b, s3));
    }
    CHECK(any_difference);
}

TEST_CASE("counter stream is addressable and uniform-ish") {
    CounterStream s(99);
    const CounterStream peek(99);
    for (std::uint64_t i = 0; i < 100; ++i) CHECK(peek.at(i) == s.next_u64());
    CHECK(s.position() == 100);

    CHECK(CounterStream::derive_key(1, 0, 0) != CounterStream::derive_key(1, 0, 1));
    CHECK(CounterStream::derive_key(1, 0, 0) != CounterStream::derive_key(1, 1, 0));
    CHECK(CounterStream::derive_key(1, 0, 0) != CounterStream::derive_key(2, 0, 0));

    CounterStream u(5);
    double sum = 0.0;
    constexpr int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double v = u.uniform();
        REQUIRE(v >= 0.0);
        REQUIRE(v < 1.0);
        sum += v;
    }
    CHECK(std::abs(sum / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("wigner_quantum examples") {
    const InequalityReport at_quarter = wigner_quantum(AxisTriple::coplanar(pi / 4));
    CHECK(std::abs(at_quarter.lhs - 0.25) < 1e-12);
    CHECK(std::abs(at_quarter.rhs - 0.1464466094067262378) < 1e-12);
    CHECK(at_quarter.violated());

    const InequalityReport at_half = wigner_quantum(AxisTriple::coplanar(pi / 2));
    CHECK(std::abs(at_half.lhs - 0.5) < 1e-12);
    CHECK(std::abs(at_half.rhs - 0.5) < 1e-12);
    CHECK(at_half.satisfied);

    // b == c: lhs reappears on the rhs.
    const Axis a = in_xz(0.0);
    const Axis bc = in_xz(1.2);
    const InequalityReport degenerate = wigner_quantum(AxisTriple{a, bc, bc});
    CHECK(degenerate.satisfied);
    CHECK(degenerate.rhs >= degenerate.lhs);
}

TEST_CASE("violation region on a 1000-point grid") {
    for (int i = 0; i < 1000; ++i) {
        const double theta = pi * (i + 0.5) / 1000.0;
        const InequalityReport r = wigner_quantum(AxisTriple::coplanar(theta));
        INFO("theta = " << theta);
        if (theta < pi / 2) {
            CHECK(r.violated());
        } else {
            CHECK(r.satisfied);
        }
    }
}

TEST_CASE("coplanar_scan") {
    const auto scan = coplanar_scan(5);
    REQUIRE(scan.size() == 5);
    CHECK(scan.front().theta == 0.0);
    CHECK(scan.back().theta == pi);
    CHECK(scan[0].report.lhs == 0.0);
    CHECK(scan[0].report.rhs == 0.0);
    CHECK(std::abs(scan[1].report.lhs - 0.25) < 1e-12);
    CHECK(scan[1].report.violated());
    CHECK(scan[2].report.satisfied);
    CHECK(std::abs(scan[2].report.slack) < 1e-12);
    CHECK_THROWS(coplanar_scan(1));
}
