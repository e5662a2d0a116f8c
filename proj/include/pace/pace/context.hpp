#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace pace::pace_core {

// obs followed by the one-hot action; action < 0 gives the all-zero action
// vector used for terminal observations.
std::vector<double> make_item(std::span<const double> obs, int action, std::size_t action_count);

// The ego's cross-episode record. Raw items are kept per episode together with
// the running sum of the encoder's f over them, so encoding is O(d_z) after an
// append. The sums are only valid for the parameters they were computed with;
// recompute them (ContextEncoder::recache) after a parameter update.
class Context {
 public:
  struct Episode {
    std::vector<double> items;  // row-major, item_width per row
    std::size_t count = 0;
    std::vector<double> f_sum;  // d_z
  };

  Context(std::size_t item_width, std::size_t embedding_width, std::size_t max_episodes);

  // Adds an item (with its precomputed f value) to the current episode.
  // Throws UsageError once max_episodes episodes are complete.
  void append(std::span<const double> item, std::span<const double> f_value);
  // Appends the terminal item and seals the current episode.
  void close_episode(std::span<const double> terminal_item, std::span<const double> f_value);
  void clear();

  [[nodiscard]] bool full() const noexcept { return completed_ >= max_episodes_; }
  [[nodiscard]] std::size_t completed_episodes() const noexcept { return completed_; }
  [[nodiscard]] std::size_t partial_length() const noexcept;
  [[nodiscard]] std::size_t total_items() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return total_items() == 0; }
  [[nodiscard]] std::size_t item_width() const noexcept { return item_width_; }
  [[nodiscard]] std::size_t embedding_width() const noexcept { return embedding_width_; }
  [[nodiscard]] std::size_t max_episodes() const noexcept { return max_episodes_; }

  // Completed episodes, then the partial one when it has items.
  [[nodiscard]] const std::vector<Episode>& episodes() const noexcept { return episodes_; }
  std::vector<Episode>& mutable_episodes() noexcept { return episodes_; }

  // (1/N) sum_n (1/T_n) sum_t f(item): the input of g. Empty when the
  // context holds no items.
  [[nodiscard]] std::optional<std::vector<double>> pooled() const;

 private:
  Episode& current();

  std::size_t item_width_;
  std::size_t embedding_width_;
  std::size_t max_episodes_;
  std::size_t completed_ = 0;
  std::vector<Episode> episodes_;
};

}  // namespace pace::pace_core
