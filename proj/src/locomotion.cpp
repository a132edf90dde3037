#include "redwalk/locomotion.hpp"

#include <stdexcept>

namespace redwalk {

AdvanceResult advance(const UserState& state, const GainSet& gains, const TrackedSpace& space,
                      double virtual_step) {
    if (!gains.in_range()) {
        throw std::invalid_argument("advance: gains outside their legal ranges");
    }
    if (virtual_step < 0.0) {
        throw std::invalid_argument("advance: virtual_step must be non-negative");
    }

    const double physical_step = virtual_step / gains.g_t;
    const Vec2 from = state.physical.position;
    const Vec2 to = from + heading_vector(state.physical.heading) * physical_step;
    if (collides(from, to, space)) {
        return CollisionEvent{from, to};
    }

    UserState next = state;
    next.virtual_pose.position += heading_vector(state.virtual_pose.heading) * virtual_step;
    next.physical.position = to;
    // Curvature is integrated per discrete step: rotate after translate.
    next.physical.heading = wrap_angle(state.physical.heading + gains.g_c * physical_step);
    next.distance_walked_virtual += virtual_step;
    next.last_gains = gains;
    return next;
}

UserState perform_reset(const UserState& state, double new_physical_heading) {
    UserState next = state;
    next.physical.heading = wrap_angle(new_physical_heading);
    next.reset_count += 1;
    return next;
}

}  // namespace redwalk
