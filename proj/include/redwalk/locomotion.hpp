#pragma once

#include <variant>

#include "redwalk/geometry.hpp"

namespace redwalk {

inline constexpr double kStepLength = 0.1;  // meters of virtual walk per simulation step

inline constexpr double kTranslationGainMin = 0.86;
inline constexpr double kTranslationGainMax = 1.26;
inline constexpr double kCurvatureGainMax = 0.1333;  // 1/m, radius 7.5 m

// Redirection gains applied to one walking step. g_T is the ratio of virtual
// to physical distance (>1 slows the walker physically); g_C injects physical
// rotation per meter physically walked. reset_angle is a pending relative
// turn consumed only at reset events.
struct GainSet {
    double g_t = 1.0;
    double g_c = 0.0;
    double reset_angle = 0.0;  // radians in [0, 2*pi)

    bool in_range() const {
        return g_t >= kTranslationGainMin && g_t <= kTranslationGainMax &&
               g_c >= -kCurvatureGainMax && g_c <= kCurvatureGainMax;
    }
};

// Coupled physical/virtual walker state. The physical position is in free
// space between steps; each environment instance owns exactly one UserState.
struct UserState {
    Pose physical;
    Pose virtual_pose;
    double distance_walked_virtual = 0.0;
    long reset_count = 0;
    GainSet last_gains;
};

// The attempted physical segment that would have left free space.
struct CollisionEvent {
    Vec2 from;
    Vec2 to;
};

using AdvanceResult = std::variant<UserState, CollisionEvent>;

// Advances the walk one step: the virtual pose moves virtual_step along the
// virtual heading, the physical pose moves virtual_step / g_T along the
// physical heading, then the physical heading rotates by
// g_C * (virtual_step / g_T). A colliding physical segment leaves the state
// untouched and yields the CollisionEvent instead.
// Throws std::invalid_argument when the gains violate their ranges.
AdvanceResult advance(const UserState& state, const GainSet& gains, const TrackedSpace& space,
                      double virtual_step = kStepLength);

// Instantaneous reset turn: physical heading becomes new_physical_heading,
// position and virtual pose are unchanged, reset_count increments.
UserState perform_reset(const UserState& state, double new_physical_heading);

}  // namespace redwalk
