#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pace/nn/mlp.hpp"
#include "pace/pace/context.hpp"

namespace pace::pace_core {

struct EncoderSpec {
  std::size_t input_width = 0;  // observation + action count
  std::vector<std::size_t> f_hidden{64, 64};
  std::vector<std::size_t> g_hidden{64};
  std::size_t embedding_width = 64;  // d_z
};

// A run of one environment's transitions inside one meta-episode, together
// with every raw context item those transitions can see (including items
// recorded before the run started). Transition t sees the first completed[t]
// episodes in full plus the first partial[t] items of episode completed[t].
struct ContextChunk {
  std::size_t item_width = 0;
  std::vector<double> items;                // row-major
  std::vector<std::size_t> episode_begin;   // first item of each episode
  std::vector<std::size_t> episode_length;  // items per episode at the end of the chunk
  std::vector<std::size_t> completed;
  std::vector<std::size_t> partial;

  [[nodiscard]] std::size_t item_count() const { return item_width ? items.size() / item_width : 0; }
  [[nodiscard]] std::size_t transitions() const { return completed.size(); }

  // Starts a chunk from a snapshot of a context's raw items.
  static ContextChunk from_context(const Context& ctx);
  // Mirrors Context::append / close_episode on the raw items.
  void append(std::span<const double> item);
  void close_episode(std::span<const double> terminal_item);
  // Records one transition that sees the chunk's current contents.
  void record_transition();

 private:
  bool open_ = false;  // last episode still accepting items
};

// Pooled g-inputs of every transition in a set of chunks, with what backward
// needs to route gradients to the f evaluations.
struct ChunkTape {
  std::vector<const ContextChunk*> chunks;
  std::vector<std::size_t> item_offset;        // per chunk, into f_out rows
  std::vector<std::size_t> transition_offset;  // per chunk, into pooled rows
  nn::MlpTape f_tape;
  nn::Tensor f_out;    // [items, d_z]
  nn::Tensor pooled;   // [transitions, d_z], zero rows for empty contexts
  std::vector<std::size_t> episode_count;  // N_t per transition (0 = empty)
  nn::MlpTape g_tape;
  std::vector<std::size_t> g_rows;  // transitions with N_t > 0, in order
};

// The context encoder chi = g(two-level mean of f). chi of an empty context
// is the zero vector and g is not applied.
class ContextEncoder {
 public:
  ContextEncoder() = default;
  ContextEncoder(EncoderSpec spec, nn::ParamStore& store, const std::string& name = "encoder");

  [[nodiscard]] const EncoderSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t embedding_width() const noexcept { return spec_.embedding_width; }
  [[nodiscard]] const nn::Mlp& f() const noexcept { return f_; }
  [[nodiscard]] const nn::Mlp& g() const noexcept { return g_; }
  [[nodiscard]] Context make_context(std::size_t max_episodes) const;

  // f on a batch of items, [rows, input_width] -> [rows, d_z].
  [[nodiscard]] nn::Tensor f_batch(const nn::ParamStore& store, const nn::Tensor& items) const;
  [[nodiscard]] std::vector<double> f_single(const nn::ParamStore& store, std::span<const double> item) const;

  // Convenience mutators that evaluate f for the new item.
  void append_step(const nn::ParamStore& store, Context& ctx, std::span<const double> obs, int action,
                   std::size_t action_count) const;
  void close_episode(const nn::ParamStore& store, Context& ctx, std::span<const double> terminal_obs,
                     std::size_t action_count) const;
  // Recomputes every cached f sum from the raw items.
  void recache(const nn::ParamStore& store, Context& ctx) const;

  // From the cached sums.
  [[nodiscard]] std::vector<double> encode(const nn::ParamStore& store, const Context& ctx) const;
  // Embeddings for many contexts with one g call.
  [[nodiscard]] nn::Tensor encode_many(const nn::ParamStore& store,
                                       const std::vector<const Context*>& contexts) const;
  // Full recomputation from raw items; the reference for the cached path.
  [[nodiscard]] std::vector<double> encode_from_raw(const nn::ParamStore& store, const Context& ctx) const;

  // z for every transition of the given chunks ([transitions, d_z]).
  nn::Tensor forward_chunks(const nn::ParamStore& store, const std::vector<const ContextChunk*>& chunks,
                            ChunkTape& tape) const;
  // d_z: [transitions, d_z] upstream gradient; accumulates into grads.
  void backward_chunks(const nn::ParamStore& store, const ChunkTape& tape, const nn::Tensor& d_z,
                       nn::Gradients& grads) const;

 private:
  EncoderSpec spec_;
  nn::Mlp f_;
  nn::Mlp g_;
};

void init_encoder(const ContextEncoder& enc, nn::ParamStore& store, core::RngStream& rng);

}  // namespace pace::pace_core
