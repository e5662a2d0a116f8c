#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "pace/core/game.hpp"

// Predator-Prey with watchtowers: the ego predator plus one peer predator chase
// two path-following prey under a radius-limited view of the arena.
namespace pace::pp {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

double norm(Vec2 v);
double distance(Vec2 a, Vec2 b);

// Action ids follow the particle-environment convention.
enum class Move : int { Stay = 0, Right = 1, Left = 2, Up = 3, Down = 4 };
inline constexpr std::size_t kActionCount = 5;
Vec2 move_direction(Move m);

inline constexpr std::size_t kAgentCount = 4;  // ego, peer predator, prey 0, prey 1
inline constexpr std::size_t kPreyCount = 2;
inline constexpr std::size_t kTowerCount = 4;
inline constexpr std::size_t kLandmarkCount = 2;
inline constexpr std::size_t kObservationSize = 4 + 3 * 5 + (kTowerCount + kLandmarkCount) * 3;
static_assert(kObservationSize == 37);

struct PathPattern {
  std::string name;
  std::vector<Vec2> waypoints;
  bool train = true;
};

struct PhysicsConfig {
  double dt = 0.1;
  double damping = 0.25;
  double acceleration = 5.0;
  double max_speed = 1.0;
  double body_radius = 0.05;
  double tower_contact_radius = 0.1;
  double observation_radius = 0.2;
  double reward_scale = 0.1;
  std::size_t max_steps = 40;
  double arena_half_size = 1.0;
  // Prey speed as a fraction of the predator's max distance per step.
  double prey_speed_fraction = 0.8;

  [[nodiscard]] double touch_distance() const { return 2.0 * body_radius; }
  [[nodiscard]] double prey_step_length() const { return prey_speed_fraction * max_speed * dt; }
};

struct WorldConfig {
  PhysicsConfig physics;
  std::array<Vec2, kTowerCount> towers{{{-0.8, -0.8}, {-0.8, 0.8}, {0.8, -0.8}, {0.8, 0.8}}};
  std::array<Vec2, kLandmarkCount> landmarks{{{-0.35, 0.05}, {0.35, -0.05}}};
  std::vector<PathPattern> paths;

  // Reconstructed default patterns: 4 train paths, then 4 test paths.
  static WorldConfig defaults();
  [[nodiscard]] std::vector<std::size_t> train_path_ids() const;
  [[nodiscard]] std::vector<std::size_t> test_path_ids() const;
  void validate() const;
};

// Back-and-forth motion along a polyline. `segment` is the index of the
// current segment's first waypoint.
struct PreyPathPolicy {
  std::vector<Vec2> waypoints;
  int direction = 1;
  double speed = 0.08;  // distance per step
  std::size_t segment = 0;
};

// Advances `policy` from `position` by one step and returns the displacement.
// The direction flips on reaching either endpoint; leftover distance carries
// onto the next segment.
Vec2 prey_step(PreyPathPolicy& policy, Vec2 position);

// Point on the polyline at arc length s (clamped), with its segment index.
std::pair<Vec2, std::size_t> point_at_arc_length(const std::vector<Vec2>& waypoints, double s);
double path_length(const std::vector<Vec2>& waypoints);

struct PredatorPrefPolicy {
  std::size_t target_prey = 0;
};

struct World {
  std::array<Vec2, kAgentCount> positions{};
  std::array<Vec2, kAgentCount> velocities{};
  std::array<bool, kPreyCount> touched{};
  std::array<PreyPathPolicy, kPreyCount> prey{};
  std::size_t step_count = 0;
};

// Fully observing chase: the move whose probe displacement ends closest to the
// target prey; ties resolved by action order.
core::ActionId peer_predator_step(const PredatorPrefPolicy& policy, const World& world,
                                  const PhysicsConfig& physics);

// -c * sum over prey of the distance to the nearest predator.
double shared_reward(const World& world, const PhysicsConfig& physics);

bool in_tower_contact(const World& world, const WorldConfig& config);

// Ego view: own absolute position and velocity, then other agents and
// landmark slots relative to the ego, each with a visibility flag.
core::Observation build_ego_obs(const World& world, const WorldConfig& config);

// One synchronous step of all agents. Episode ends when every prey has been
// touched at least once, or at max_steps.
core::StepOutcome step_world(World& world, const WorldConfig& config, core::ActionId ego_action,
                             const PredatorPrefPolicy& peer);

struct PPPeers {
  PredatorPrefPolicy predator;
  std::array<std::size_t, kPreyCount> prey_paths{};
  std::array<double, kPreyCount> prey_speeds{};
};

class PPEnv final : public core::Environment {
 public:
  PPEnv(std::shared_ptr<const WorldConfig> config, PPPeers peers);

  [[nodiscard]] std::size_t observation_size() const override { return kObservationSize; }
  [[nodiscard]] std::size_t action_count() const override { return kActionCount; }

  core::Observation reset(core::RngStream& rng) override;
  core::StepOutcome step(core::ActionId action, core::RngStream& rng) override;
  [[nodiscard]] bool terminal() const override { return done_; }

  void set_peers(PPPeers peers) { peers_ = std::move(peers); }
  [[nodiscard]] const World& world() const noexcept { return world_; }
  [[nodiscard]] const WorldConfig& config() const noexcept { return *config_; }

 private:
  std::shared_ptr<const WorldConfig> config_;
  PPPeers peers_;
  World world_;
  bool done_ = true;
};

}  // namespace pace::pp
