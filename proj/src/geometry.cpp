#include "redwalk/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace redwalk {

namespace {

// Distance to exit an origin-centered box from a point inside it.
double box_exit_distance(const Vec2& o, const Vec2& d, double hw, double hd) {
    double t = std::numeric_limits<double>::infinity();
    if (d.x > 0.0) {
        t = std::min(t, (hw - o.x) / d.x);
    } else if (d.x < 0.0) {
        t = std::min(t, (-hw - o.x) / d.x);
    }
    if (d.y > 0.0) {
        t = std::min(t, (hd - o.y) / d.y);
    } else if (d.y < 0.0) {
        t = std::min(t, (-hd - o.y) / d.y);
    }
    return t;
}

// Slab test: entry/exit parameters of the line o + t*d against an AABB.
// Returns false when the line misses the box entirely.
bool aabb_slab(const Vec2& o, const Vec2& d, const Obstacle& ob, double inflate, double& t_near,
               double& t_far) {
    const double hs = ob.half_side + inflate;
    t_near = -std::numeric_limits<double>::infinity();
    t_far = std::numeric_limits<double>::infinity();
    const double lo[2] = {ob.center.x - hs, ob.center.y - hs};
    const double hi[2] = {ob.center.x + hs, ob.center.y + hs};
    const double op[2] = {o.x, o.y};
    const double dp[2] = {d.x, d.y};
    for (int axis = 0; axis < 2; ++axis) {
        if (dp[axis] == 0.0) {
            if (op[axis] < lo[axis] || op[axis] > hi[axis]) return false;
            continue;
        }
        double t0 = (lo[axis] - op[axis]) / dp[axis];
        double t1 = (hi[axis] - op[axis]) / dp[axis];
        if (t0 > t1) std::swap(t0, t1);
        t_near = std::max(t_near, t0);
        t_far = std::min(t_far, t1);
        if (t_near > t_far) return false;
    }
    return true;
}

}  // namespace

TrackedSpace::TrackedSpace(double half_width, double half_depth, std::vector<Obstacle> obstacles,
                           double safety_margin)
    : half_width_(half_width),
      half_depth_(half_depth),
      margin_(safety_margin),
      obstacles_(std::move(obstacles)) {
    if (half_width_ <= 0.0 || half_depth_ <= 0.0) {
        throw std::invalid_argument("TrackedSpace: room half-extents must be positive");
    }
    if (margin_ < 0.0) {
        throw std::invalid_argument("TrackedSpace: safety margin must be non-negative");
    }
    for (const Obstacle& ob : obstacles_) {
        if (ob.half_side <= 0.0) {
            throw std::invalid_argument("TrackedSpace: obstacle half_side must be positive");
        }
        if (std::abs(ob.center.x) + ob.half_side > half_width_ ||
            std::abs(ob.center.y) + ob.half_side > half_depth_) {
            throw std::invalid_argument("TrackedSpace: obstacle extends outside the boundary");
        }
    }
}

double TrackedSpace::diagonal() const {
    return std::hypot(2.0 * half_width_, 2.0 * half_depth_);
}

bool TrackedSpace::in_free_space(const Vec2& p) const {
    if (std::abs(p.x) >= half_width_ - margin_ || std::abs(p.y) >= half_depth_ - margin_) {
        return false;
    }
    for (const Obstacle& ob : obstacles_) {
        if (ob.contains(p, margin_)) return false;
    }
    return true;
}

bool operator==(const TrackedSpace& a, const TrackedSpace& b) {
    if (a.half_width_ != b.half_width_ || a.half_depth_ != b.half_depth_ ||
        a.margin_ != b.margin_ || a.obstacles_.size() != b.obstacles_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.obstacles_.size(); ++i) {
        if (a.obstacles_[i].center.x != b.obstacles_[i].center.x ||
            a.obstacles_[i].center.y != b.obstacles_[i].center.y ||
            a.obstacles_[i].half_side != b.obstacles_[i].half_side) {
            return false;
        }
    }
    return true;
}

double cast_ray(const Vec2& origin, double direction, const TrackedSpace& space) {
    if (!space.in_free_space(origin)) {
        throw std::domain_error("cast_ray: origin is not in free space");
    }
    const Vec2 d = heading_vector(direction);
    double best = box_exit_distance(origin, d, space.half_width() - space.safety_margin(),
                                    space.half_depth() - space.safety_margin());
    for (const Obstacle& ob : space.obstacles()) {
        double t_near, t_far;
        if (!aabb_slab(origin, d, ob, space.safety_margin(), t_near, t_far)) continue;
        // Origin is outside the obstacle, so a forward hit enters at t_near.
        if (t_far >= 0.0 && t_near > 0.0) best = std::min(best, t_near);
    }
    return best;
}

std::vector<double> sense_surroundings(const Pose& pose, const TrackedSpace& space) {
    std::vector<double> out(kRayCount);
    sense_surroundings(pose, space, out);
    return out;
}

void sense_surroundings(const Pose& pose, const TrackedSpace& space, std::span<double> out) {
    if (out.size() != kRayCount) {
        throw std::invalid_argument("sense_surroundings: output span must hold 60 rays");
    }
    for (int k = 0; k < kRayCount; ++k) {
        out[k] = cast_ray(pose.position, pose.heading + k * kRaySpacing, space);
    }
}

bool collides(const Vec2& a, const Vec2& b, const TrackedSpace& space) {
    const double hw = space.half_width() - space.safety_margin();
    const double hd = space.half_depth() - space.safety_margin();
    // The boundary is convex: a segment starting inside leaves it iff the
    // endpoint is outside.
    if (std::abs(b.x) >= hw || std::abs(b.y) >= hd) return true;
    const Vec2 d = b - a;
    for (const Obstacle& ob : space.obstacles()) {
        if (ob.contains(b, space.safety_margin())) return true;
        if (d.x == 0.0 && d.y == 0.0) continue;
        double t_near, t_far;
        if (!aabb_slab(a, d, ob, space.safety_margin(), t_near, t_far)) continue;
        if (t_near <= 1.0 && t_far >= 0.0) return true;
    }
    return false;
}

TrackedSpace reposition_obstacles(const TrackedSpace& space, int count, std::mt19937_64& rng,
                                  const Vec2& forbidden) {
    if (count < 0) throw std::invalid_argument("reposition_obstacles: count must be >= 0");
    constexpr double kHalfSide = 1.25;
    constexpr int kMaxAttempts = 1000;
    const double range_x = space.half_width() - kHalfSide;
    const double range_y = space.half_depth() - kHalfSide;
    if (count > 0 && (range_x < 0.0 || range_y < 0.0)) {
        throw std::invalid_argument("reposition_obstacles: room too small for an obstacle");
    }
    std::uniform_real_distribution<double> ux(-range_x, range_x);
    std::uniform_real_distribution<double> uy(-range_y, range_y);
    std::vector<Obstacle> placed;
    placed.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            Obstacle ob{{ux(rng), uy(rng)}, kHalfSide};
            if (ob.contains(forbidden, space.safety_margin())) continue;
            placed.push_back(ob);
            break;
        }
    }
    return TrackedSpace(space.half_width(), space.half_depth(), std::move(placed),
                        space.safety_margin());
}

TrackedSpace SceneConfig::make_space(std::mt19937_64& rng) const {
    if (!fixed_obstacles.empty()) {
        return TrackedSpace(half_width, half_depth, fixed_obstacles, safety_margin);
    }
    TrackedSpace empty(half_width, half_depth, {}, safety_margin);
    return reposition_obstacles(empty, obstacle_count, rng, Vec2{0.0, 0.0});
}

SceneConfig load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_scene: cannot open " + path);
    nlohmann::json j;
    in >> j;
    SceneConfig scene;
    scene.half_width = j.value("half_width", scene.half_width);
    scene.half_depth = j.value("half_depth", scene.half_depth);
    scene.obstacle_half_side = j.value("obstacle_half_side", scene.obstacle_half_side);
    scene.obstacle_count = j.value("obstacle_count", scene.obstacle_count);
    scene.safety_margin = j.value("safety_margin", scene.safety_margin);
    scene.seed = j.value("seed", scene.seed);
    if (j.contains("obstacles")) {
        for (const auto& o : j.at("obstacles")) {
            Obstacle ob;
            ob.center.x = o.at("x").get<double>();
            ob.center.y = o.at("y").get<double>();
            ob.half_side = o.value("half_side", scene.obstacle_half_side);
            scene.fixed_obstacles.push_back(ob);
        }
    }
    return scene;
}

void save_scene(const SceneConfig& scene, const std::string& path) {
    nlohmann::json j;
    j["half_width"] = scene.half_width;
    j["half_depth"] = scene.half_depth;
    j["obstacle_half_side"] = scene.obstacle_half_side;
    j["obstacle_count"] = scene.obstacle_count;
    j["safety_margin"] = scene.safety_margin;
    j["seed"] = scene.seed;
    if (!scene.fixed_obstacles.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Obstacle& ob : scene.fixed_obstacles) {
            arr.push_back({{"x", ob.center.x}, {"y", ob.center.y}, {"half_side", ob.half_side}});
        }
        j["obstacles"] = arr;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_scene: cannot open " + path);
    out << j.dump(2) << '\n';
}

}  // namespace redwalk
