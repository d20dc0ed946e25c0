#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "wignerbell/axis.hpp"
#include "wignerbell/errors.hpp"
#include "wignerbell/pair_types.hpp"

using namespace wignerbell;

namespace {

int sign_int(Sign s) { return to_int(s); }

}  // namespace

TEST_CASE("pair type table matches Table 1") {
    const auto& table = pair_type_table();
    REQUIRE(table.size() == 8);
    for (int alpha = 1; alpha <= 8; ++alpha) {
        const PairType& t = table[alpha - 1];
        CHECK(t.index == alpha);
        for (int axis = 0; axis < 3; ++axis) {
            CHECK(sign_int(t.particle1[axis]) == oracle::kTable1[alpha - 1][axis]);
            CHECK(sign_int(t.particle2[axis]) == -oracle::kTable1[alpha - 1][axis]);
        }
    }
    CHECK(format_signs(table[0].particle1) == "+,+,+");
    CHECK(format_signs(table[0].particle2) == "-,-,-");
    CHECK(format_signs(table[4].particle1) == "-,+,+");
    CHECK(format_signs(table[4].particle2) == "+,-,-");
    CHECK(format_signs(table[7].particle2) == "+,+,+");
}

TEST_CASE("particle-1 sign triples are a bijection") {
    std::set<std::string> seen;
    for (const PairType& t : pair_type_table()) seen.insert(format_signs(t.particle1));
    CHECK(seen.size() == 8);
}

TEST_CASE("lhv_outcome") {
    CHECK(lhv_outcome(5, Particle::First, AxisLabel::A) == Sign::Minus);
    CHECK(lhv_outcome(5, Particle::Second, AxisLabel::A) == Sign::Plus);
    CHECK(lhv_outcome(1, Particle::First, AxisLabel::C) == Sign::Plus);

    for (int alpha = 1; alpha <= 8; ++alpha) {
        for (AxisLabel l : kAxisLabels) {
            CHECK(lhv_outcome(alpha, Particle::Second, l) == -lhv_outcome(alpha, Particle::First, l));
        }
    }
    CHECK_THROWS_AS(lhv_outcome(0, Particle::First, AxisLabel::A), DomainError);
    CHECK_THROWS_AS(lhv_outcome(9, Particle::First, AxisLabel::A), DomainError);
}

TEST_CASE("joint_lhv_outcome") {
    using P = std::pair<Sign, Sign>;
    CHECK(joint_lhv_outcome(3, AxisLabel::A, AxisLabel::B) == P{Sign::Plus, Sign::Plus});
    CHECK(joint_lhv_outcome(3, AxisLabel::A, AxisLabel::A) == P{Sign::Plus, Sign::Minus});
    CHECK(joint_lhv_outcome(8, AxisLabel::C, AxisLabel::B) == P{Sign::Minus, Sign::Plus});
    CHECK_THROWS_AS(joint_lhv_outcome(-1, AxisLabel::A, AxisLabel::B), DomainError);

    for (int alpha = 1; alpha <= 8; ++alpha) {
        for (AxisLabel l : kAxisLabels) {
            const auto [a, b] = joint_lhv_outcome(alpha, l, l);
            CHECK(b == -a);
        }
        for (AxisLabel la : kAxisLabels) {
            for (AxisLabel lb : kAxisLabels) {
                const auto [a, b] = joint_lhv_outcome(alpha, la, lb);
                CHECK(a == lhv_outcome(alpha, Particle::First, la));
                CHECK(b == lhv_outcome(alpha, Particle::Second, lb));
            }
        }
    }
}

TEST_CASE("sign negation is an involution") {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        CHECK(-(-s) == s);
        CHECK(-s != s);
    }
}

TEST_CASE("axis construction") {
    CHECK_NOTHROW(Axis(0.6, 0.8, 0.0));
    CHECK_THROWS_AS(Axis(1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(Axis(1.0 + 1e-9, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(Axis::normalized(0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(Axis::from_spherical(NAN, 0.0), DomainError);

    const Axis n = Axis::normalized(3.0, 0.0, 4.0);
    CHECK(n.x() == doctest::Approx(0.6));
    CHECK(n.z() == doctest::Approx(0.8));

    const Axis s = Axis::from_spherical(std::numbers::pi / 2, std::numbers::pi / 2);
    CHECK(s.y() == doctest::Approx(1.0));
    CHECK(std::abs(s.x()) < 1e-15);
    CHECK(std::abs(s.z()) < 1e-15);
}

TEST_CASE("angle_between") {
    const Axis z = Axis::z_hat();
    const Axis x = Axis::x_hat();
    CHECK(angle_between(z, z) == 0.0);
    CHECK(angle_between(z, -z) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(angle_between(z, x) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));

    // Exactly zero for identical axes even when the dot product rounds below 1.
    const Axis odd = Axis::normalized(0.1, 0.7, 0.3);
    CHECK(angle_between(odd, odd) == 0.0);
}

TEST_CASE("angle_between is symmetric and bounded") {
    // Golden-ratio lattice of directions.
    std::vector<Axis> axes;
    for (int i = 0; i < 40; ++i) {
        const double polar = std::acos(1.0 - 2.0 * (i + 0.5) / 40);
        const double azimuth = 2.0 * std::numbers::pi * i / std::numbers::phi;
        axes.push_back(Axis::from_spherical(polar, azimuth));
    }
    for (const Axis& u : axes) {
        for (const Axis& v : axes) {
            const double t = angle_between(u, v);
            CHECK(t == angle_between(v, u));
            CHECK(t >= 0.0);
            CHECK(t <= std::numbers::pi);
        }
        CHECK(angle_between(u, -u) == doctest::Approx(std::numbers::pi).epsilon(1e-7));
    }
}

TEST_CASE("coplanar triple geometry") {
    const double theta = 0.3;
    const AxisTriple t = AxisTriple::coplanar(theta);
    CHECK(angle_between(t.a, t.c) == doctest::Approx(theta).epsilon(1e-12));
    CHECK(angle_between(t.c, t.b) == doctest::Approx(theta).epsilon(1e-12));
    CHECK(angle_between(t.a, t.b) == doctest::Approx(2 * theta).epsilon(1e-12));
    CHECK(&axis_for(t, AxisLabel::A) == &t.a);
    CHECK(&axis_for(t, AxisLabel::B) == &t.b);
    CHECK(&axis_for(t, AxisLabel::C) == &t.c);
}
