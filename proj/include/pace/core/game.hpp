#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pace/core/rng.hpp"

namespace pace::core {

// Contract violation by the caller (bad index, stepping a finished episode, ...).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Observation = std::vector<double>;

// Discrete action index, validated against the environment's action count.
class ActionId {
 public:
  constexpr ActionId() = default;
  constexpr explicit ActionId(int id) : id_(id) {}
  [[nodiscard]] constexpr int value() const noexcept { return id_; }
  friend constexpr bool operator==(ActionId, ActionId) = default;

 private:
  int id_ = 0;
};

struct StepOutcome {
  Observation next_observation;
  double task_reward = 0.0;
  bool episode_done = false;
};

// Ego-centric stepping contract. Peers are advanced inside step(); the ego
// only ever sees its own decision points.
class Environment {
 public:
  virtual ~Environment() = default;

  [[nodiscard]] virtual std::size_t observation_size() const = 0;
  [[nodiscard]] virtual std::size_t action_count() const = 0;

  virtual Observation reset(RngStream& rng) = 0;
  virtual StepOutcome step(ActionId action, RngStream& rng) = 0;
  [[nodiscard]] virtual bool terminal() const = 0;

 protected:
  void check_action(ActionId action) const {
    if (action.value() < 0 || static_cast<std::size_t>(action.value()) >= action_count())
      throw UsageError("action id " + std::to_string(action.value()) + " out of range [0, " +
                       std::to_string(action_count()) + ")");
  }
  void check_not_terminal() const {
    if (terminal()) throw UsageError("step called on a terminal episode");
  }
};

// t + sum of completed episode lengths: the position of step t of the current
// episode inside the concatenated meta-episode.
std::size_t cumulative_step(std::span<const std::size_t> completed_lengths, std::size_t t);

// Tracks (episode n, step t) inside a meta-episode of a fixed number of episodes.
class MetaEpisodeClock {
 public:
  explicit MetaEpisodeClock(std::size_t episodes_per_meta);

  // Registers one ego step in the current episode; returns its cumulative step t'.
  std::size_t advance();
  // Seals the current episode. Returns true if this completed the meta-episode,
  // in which case the clock has been reset.
  bool end_episode();

  [[nodiscard]] std::size_t episode_index() const noexcept { return completed_.size() + 1; }
  [[nodiscard]] std::size_t step_in_episode() const noexcept { return step_; }
  [[nodiscard]] std::size_t cumulative() const;
  [[nodiscard]] const std::vector<std::size_t>& completed_lengths() const noexcept { return completed_; }

 private:
  std::size_t episodes_per_meta_;
  std::size_t step_ = 0;
  std::vector<std::size_t> completed_;
};

}  // namespace pace::core
