#pragma once

#include <optional>
#include <random>
#include <string>

#include "redwalk/locomotion.hpp"

namespace redwalk {

// Virtual-target generators. Distances and directions are sampled relative to
// the walker's current virtual position and heading; the virtual space is
// unbounded and obstacle-free, so the walk toward a target is the straight
// segment.
enum class PathMethod {
    OfficeBuilding,    // dist ~ unif(2, 8), direction in {-pi/2, +pi/2}
    ExplorationSmall,  // dist ~ unif(2, 6), direction ~ unif(-pi, pi)
    ExplorationLarge,  // dist ~ unif(8, 12), direction ~ unif(-pi, pi)
    LongWalk,          // dist = 1000, direction ~ unif(-pi, pi)
    Random,            // dist ~ unif(2, 12), direction ~ unif(-pi, pi)
};

PathMethod parse_path_method(const std::string& name);  // office|exp_small|exp_large|long_walk|random
std::string to_string(PathMethod method);

// Samples the next virtual target from the current virtual pose.
Vec2 next_target(PathMethod method, const Pose& virtual_pose, std::mt19937_64& rng);

// Bearing from the virtual position to the target, or nullopt when the
// target is within one step length (consumed; the caller requests the next
// target).
std::optional<double> walk_direction(const Pose& virtual_pose, const Vec2& target);

}  // namespace redwalk
