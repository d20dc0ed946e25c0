#include "wignerbell/pair_types.hpp"

#include "wignerbell/errors.hpp"

namespace wignerbell {

const Axis& axis_for(const AxisTriple& axes, AxisLabel label) noexcept {
    switch (label) {
        case AxisLabel::A: return axes.a;
        case AxisLabel::B: return axes.b;
        case AxisLabel::C: break;
    }
    return axes.c;
}

const std::array<PairType, kPairTypeCount>& pair_type_table() noexcept { return kPairTypes; }

const PairType& pair_type(int alpha) {
    if (alpha < 1 || alpha > kPairTypeCount) {
        throw DomainError("pair type index " + std::to_string(alpha) + " outside 1..8");
    }
    return kPairTypes[alpha - 1];
}

Sign lhv_outcome(int alpha, Particle particle, AxisLabel label) {
    return pair_type(alpha).outcome(particle, label);
}

std::pair<Sign, Sign> joint_lhv_outcome(int alpha, AxisLabel alice, AxisLabel bob) {
    const PairType& type = pair_type(alpha);
    return {type.outcome(Particle::First, alice), type.outcome(Particle::Second, bob)};
}

std::string format_signs(const std::array<Sign, 3>& signs) {
    std::string out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) out += ',';
        out += to_char(signs[i]);
    }
    return out;
}

}  // namespace wignerbell
