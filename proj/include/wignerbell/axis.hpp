#pragma once

#include <array>

namespace wignerbell {

/// Unit direction along which a spin projection is measured.
///
/// Components are direction cosines; the Euclidean norm is 1 within
/// `kNormTolerance`. Construction from raw components validates the norm,
/// `normalized` rescales any non-zero vector.
class Axis {
public:
    static constexpr double kNormTolerance = 1e-12;

    /// Throws DomainError unless |(x, y, z)| == 1 within kNormTolerance.
    Axis(double x, double y, double z);

    /// Rescales a non-zero vector to unit length.
    static Axis normalized(double x, double y, double z);

    /// Polar angle from +z and azimuth from +x toward +y, both in radians.
    static Axis from_spherical(double polar, double azimuth);

    static Axis x_hat() { return {1.0, 0.0, 0.0}; }
    static Axis y_hat() { return {0.0, 1.0, 0.0}; }
    static Axis z_hat() { return {0.0, 0.0, 1.0}; }

    double x() const noexcept { return v_[0]; }
    double y() const noexcept { return v_[1]; }
    double z() const noexcept { return v_[2]; }
    const std::array<double, 3>& components() const noexcept { return v_; }

    Axis operator-() const noexcept;

    friend bool operator==(const Axis&, const Axis&) = default;

private:
    struct Unchecked {};
    Axis(Unchecked, double x, double y, double z) noexcept : v_{x, y, z} {}

    std::array<double, 3> v_;
};

/// Dot product clamped to [-1, 1].
double clamped_dot(const Axis& x, const Axis& y) noexcept;

/// Angle in [0, pi]; angle_between(x, x) is exactly 0.
double angle_between(const Axis& x, const Axis& y) noexcept;

/// The three measurement directions. No orthogonality is required.
struct AxisTriple {
    Axis a;
    Axis b;
    Axis c;

    /// a, c, b in the xz-plane with angle(a, c) = angle(c, b) = theta and
    /// b at polar angle 2*theta. Used throughout for equal-angle scans.
    static AxisTriple coplanar(double theta);
};

}  // namespace wignerbell
