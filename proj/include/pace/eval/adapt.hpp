#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pace/core/rng.hpp"
#include "pace/pool/peer_pool.hpp"
#include "pace/train/envs.hpp"
#include "pace/train/model.hpp"

namespace pace::eval {

// Fires iff R_i < c_th * max_{j<=i} R_j + (1 - c_th) * min_{j<=i} R_j, the
// current return included in both extremes. Throws UsageError on an empty
// history or c_th outside [0, 1].
bool detect_change(std::span<const double> history, double c_th);

struct AdaptOptions {
  std::size_t episodes = 100;  // N_eps
  // Context is cleared whenever it holds this many complete episodes; 0 uses
  // the model's training N_ctx.
  std::size_t context_limit = 0;
  std::optional<std::size_t> switch_at;  // 1-based episode from which switch_to plays
  pool::PeerTuple switch_to;
  std::optional<double> change_threshold;  // c_th; detector off when empty
  bool greedy = false;                    // argmax instead of sampling
};

struct StepRecord {
  std::size_t episode_index = 0;  // 1-based
  std::size_t step_index = 0;     // 0-based within the episode
  std::vector<double> z;
};

struct MetaEpisodeReport {
  std::vector<double> returns;
  std::vector<std::size_t> lengths;
  std::vector<std::uint8_t> detected;  // per episode
  // Mean over slots of the identifier's probability of the true index,
  // measured after the last episode (before any clearing). Only set when the
  // tuple carries slot indices.
  std::optional<double> true_peer_posterior;

  [[nodiscard]] double mean_return() const;
};

// N_eps episodes with a context persisting across them, task
// reward only. `on_step` sees the embedding used for every decision.
MetaEpisodeReport adapt(const train::PaceModel& model, const train::EnvFactory& factory,
                        const pool::PeerTuple& peers, const AdaptOptions& options, core::RngStream& rng,
                        const std::function<void(const StepRecord&)>& on_step = {});

// Stream for run (peer, seed); shared by every evaluation entry point.
core::RngStream adaptation_stream(std::uint64_t seed, std::size_t peer_id);

struct RunResult {
  std::size_t peer_id = 0;
  std::uint64_t seed = 0;
  MetaEpisodeReport report;
};

// Every (tuple, seed) pair, in parallel; results ordered seed-major then peer.
std::vector<RunResult> evaluate(const train::PaceModel& model, const train::EnvFactory& factory,
                                const std::vector<pool::PeerTuple>& tuples, const std::vector<std::uint64_t>& seeds,
                                const AdaptOptions& options);

struct WindowedMetrics {
  std::size_t window = 0;
  std::vector<double> mean;  // per window, over runs
  std::vector<double> std;   // population std over runs
  bool last_partial = false;
  double overall_mean = 0.0;
  double overall_std = 0.0;
};

// Per-window average return of each run, then mean and std over runs.
// Throws UsageError on unequal lengths or window 0.
WindowedMetrics windowed_metrics(const std::vector<std::vector<double>>& returns, std::size_t window);

// Mean over peers of each seed's average return, then mean and std over seeds.
struct SeedSummary {
  double mean = 0.0;
  double std = 0.0;
  std::vector<double> per_seed;
};
SeedSummary summarize_over_seeds(const std::vector<RunResult>& runs);

struct CrossHorizonCell {
  std::size_t n_ctx = 0;
  std::size_t n_eps = 0;
  SeedSummary summary;
};

// models[k][s]: the model trained with n_ctx[k] and seed index s. Model s is
// evaluated under `repeats` adaptation seeds seeds[s] * 1000 + r, all counted
// towards seed s in the summary. The context is cleared whenever n_ctx
// complete episodes accumulate.
std::vector<CrossHorizonCell> cross_horizon(const std::vector<std::vector<const train::PaceModel*>>& models,
                                            const std::vector<std::size_t>& n_ctx,
                                            const std::vector<std::size_t>& n_eps, const train::EnvFactory& factory,
                                            const std::vector<pool::PeerTuple>& tuples,
                                            const std::vector<std::uint64_t>& seeds, std::size_t repeats = 1);

void write_results_csv(std::ostream& out, std::string_view env, std::string_view checkpoint,
                       const std::vector<RunResult>& runs);
void write_summary_csv(std::ostream& out, const WindowedMetrics& m, const SeedSummary& seeds);
void write_cross_horizon_csv(std::ostream& out, const std::vector<CrossHorizonCell>& cells);

// Embedding CSV header: peer_id, episode_index, step_index, z_0 .. z_{d-1}.
void write_embedding_header(std::ostream& out, std::size_t dz);
void write_embedding_row(std::ostream& out, std::size_t peer_id, const StepRecord& rec);

}  // namespace pace::eval
