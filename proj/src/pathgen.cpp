#include "redwalk/pathgen.hpp"

#include <stdexcept>

namespace redwalk {

PathMethod parse_path_method(const std::string& name) {
    if (name == "office") return PathMethod::OfficeBuilding;
    if (name == "exp_small") return PathMethod::ExplorationSmall;
    if (name == "exp_large") return PathMethod::ExplorationLarge;
    if (name == "long_walk") return PathMethod::LongWalk;
    if (name == "random") return PathMethod::Random;
    throw std::invalid_argument("unknown path method: " + name);
}

std::string to_string(PathMethod method) {
    switch (method) {
        case PathMethod::OfficeBuilding: return "office";
        case PathMethod::ExplorationSmall: return "exp_small";
        case PathMethod::ExplorationLarge: return "exp_large";
        case PathMethod::LongWalk: return "long_walk";
        case PathMethod::Random: return "random";
    }
    throw std::invalid_argument("unknown path method");
}

Vec2 next_target(PathMethod method, const Pose& virtual_pose, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> full_circle(-kPi, kPi);
    double dist = 0.0;
    double dir = 0.0;
    switch (method) {
        case PathMethod::OfficeBuilding: {
            dist = std::uniform_real_distribution<double>(2.0, 8.0)(rng);
            dir = std::uniform_int_distribution<int>(0, 1)(rng) ? kPi / 2.0 : -kPi / 2.0;
            break;
        }
        case PathMethod::ExplorationSmall:
            dist = std::uniform_real_distribution<double>(2.0, 6.0)(rng);
            dir = full_circle(rng);
            break;
        case PathMethod::ExplorationLarge:
            dist = std::uniform_real_distribution<double>(8.0, 12.0)(rng);
            dir = full_circle(rng);
            break;
        case PathMethod::LongWalk:
            dist = 1000.0;
            dir = full_circle(rng);
            break;
        case PathMethod::Random:
            dist = std::uniform_real_distribution<double>(2.0, 12.0)(rng);
            dir = full_circle(rng);
            break;
    }
    return virtual_pose.position + heading_vector(virtual_pose.heading + dir) * dist;
}

std::optional<double> walk_direction(const Pose& virtual_pose, const Vec2& target) {
    if (distance(virtual_pose.position, target) < kStepLength) {
        return std::nullopt;  // target consumed
    }
    return bearing(virtual_pose.position, target);
}

}  // namespace redwalk
