#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "redwalk/vec2.hpp"

namespace redwalk {

// Axis-aligned square obstacle (a cube projected onto the walking plane).
struct Obstacle {
    Vec2 center;
    double half_side = 1.25;

    bool contains(const Vec2& p, double margin = 0.0) const {
        return std::abs(p.x - center.x) <= half_side + margin &&
               std::abs(p.y - center.y) <= half_side + margin;
    }
};

// Pose in either the physical or the virtual frame.
struct Pose {
    Vec2 position;
    double heading = 0.0;  // (-pi, pi], 0 along +x, counterclockwise positive
};

// Rectangular tracked space centered at the origin with axis-aligned square
// obstacles. Immutable once constructed; repositioning obstacles yields a new
// value (safe to share across rollout workers).
class TrackedSpace {
  public:
    TrackedSpace(double half_width = 7.5, double half_depth = 7.5,
                 std::vector<Obstacle> obstacles = {}, double safety_margin = 0.0);

    double half_width() const { return half_width_; }
    double half_depth() const { return half_depth_; }
    double safety_margin() const { return margin_; }
    const std::vector<Obstacle>& obstacles() const { return obstacles_; }

    // Length of the room diagonal; upper bound for any ray distance.
    double diagonal() const;

    // True when p is strictly inside the boundary and outside every obstacle.
    bool in_free_space(const Vec2& p) const;

    friend bool operator==(const TrackedSpace&, const TrackedSpace&);

  private:
    double half_width_;
    double half_depth_;
    double margin_;
    std::vector<Obstacle> obstacles_;
};

inline constexpr int kRayCount = 60;
inline constexpr double kRaySpacing = kTwoPi / kRayCount;  // 6 degrees

// Distance from `origin` along `direction` to the nearest boundary or
// obstacle surface. Throws std::domain_error when the origin is not in free
// space (callers must reset before sensing).
double cast_ray(const Vec2& origin, double direction, const TrackedSpace& space);

// The 60 proximity distances observed every 6 degrees starting at the pose
// heading; result[k] is the ray at heading + k * 6 deg.
std::vector<double> sense_surroundings(const Pose& pose, const TrackedSpace& space);
void sense_surroundings(const Pose& pose, const TrackedSpace& space, std::span<double> out);

// True iff the segment a->b leaves the boundary or enters an obstacle. The
// start must be in free space; the walker is treated as a point (plus the
// space's safety margin).
bool collides(const Vec2& a, const Vec2& b, const TrackedSpace& space);

// New space with `count` obstacles drawn uniformly inside the room. Any
// placement covering `forbidden` is resampled (at most 1000 attempts, after
// which the obstacle is dropped for this epoch). Obstacles may overlap each
// other.
TrackedSpace reposition_obstacles(const TrackedSpace& space, int count, std::mt19937_64& rng,
                                  const Vec2& forbidden);

// Scene description as a JSON document: room dimensions, obstacle count or a
// fixed obstacle list, and the placement seed.
struct SceneConfig {
    double half_width = 7.5;
    double half_depth = 7.5;
    double obstacle_half_side = 1.25;
    int obstacle_count = 0;
    std::vector<Obstacle> fixed_obstacles;  // takes precedence over obstacle_count
    double safety_margin = 0.0;
    std::uint64_t seed = 0;

    TrackedSpace make_space(std::mt19937_64& rng) const;
};

SceneConfig load_scene(const std::string& path);
void save_scene(const SceneConfig& scene, const std::string& path);

}  // namespace redwalk
