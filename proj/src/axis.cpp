#include "wignerbell/axis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wignerbell/errors.hpp"

namespace wignerbell {

Axis::Axis(double x, double y, double z) : v_{x, y, z} {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "axis (" << x << ", " << y << ", " << z << ") is not a unit vector (norm " << norm
            << ")";
        throw DomainError(msg.str());
    }
}

Axis Axis::normalized(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || norm == 0.0) {
        throw DomainError("cannot normalize a zero or non-finite vector");
    }
    return Axis(x / norm, y / norm, z / norm);
}

Axis Axis::from_spherical(double polar, double azimuth) {
    if (!std::isfinite(polar) || !std::isfinite(azimuth)) {
        throw DomainError("spherical angles must be finite");
    }
    const double s = std::sin(polar);
    return Axis(s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar));
}

Axis Axis::operator-() const noexcept { return Axis(Unchecked{}, -v_[0], -v_[1], -v_[2]); }

double clamped_dot(const Axis& x, const Axis& y) noexcept {
    const double d = x.x() * y.x() + x.y() * y.y() + x.z() * y.z();
    return std::clamp(d, -1.0, 1.0);
}

double angle_between(const Axis& x, const Axis& y) noexcept {
    if (x == y) return 0.0;
    return std::acos(clamped_dot(x, y));
}

AxisTriple AxisTriple::coplanar(double theta) {
    return AxisTriple{
        .a = Axis::from_spherical(0.0, 0.0),
        .b = Axis::from_spherical(2.0 * theta, 0.0),
        .c = Axis::from_spherical(theta, 0.0),
    };
}

}  // namespace wignerbell
