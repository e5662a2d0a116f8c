#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pace/kuhn/kuhn.hpp"
#include "pace/pp/predator_prey.hpp"

namespace pace::pool {

inline constexpr int kPoolFormatVersion = 1;

enum class EnvKind { Kuhn, PredatorPrey };
std::string_view to_string(EnvKind env);
EnvKind env_kind_from_string(std::string_view s);

enum class PeerKind { KuhnP2, PPPredator, PPPrey };

struct PeerSpec {
  PeerKind kind = PeerKind::KuhnP2;
  double xi = 0.0;            // kuhn_p2
  double eta = 0.0;           // kuhn_p2
  std::size_t target = 0;     // pp_predator
  std::size_t path_id = 0;    // pp_prey
  double speed = 0.0;         // pp_prey, distance per step

  static PeerSpec kuhn_p2(double xi, double eta);
  static PeerSpec pp_predator(std::size_t target);
  static PeerSpec pp_prey(std::size_t path_id, double speed);
  void validate() const;
  friend bool operator==(const PeerSpec&, const PeerSpec&) = default;
};

// One peer per slot. slot_indices holds the identifier targets (i_1..i_m) and
// is only populated for training tuples.
struct PeerTuple {
  std::vector<PeerSpec> peers;
  std::vector<std::size_t> slot_indices;
  friend bool operator==(const PeerTuple&, const PeerTuple&) = default;
};

struct PoolSpec {
  int version = kPoolFormatVersion;
  EnvKind env = EnvKind::Kuhn;
  std::uint64_t seed = 0;
  std::vector<PeerTuple> train;
  std::vector<PeerTuple> test;
  std::vector<std::size_t> slot_cardinalities;

  [[nodiscard]] std::size_t slot_count() const { return slot_cardinalities.size(); }
  friend bool operator==(const PoolSpec&, const PoolSpec&) = default;
};

class PoolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class PoolFileMissing : public PoolError {
 public:
  using PoolError::PoolError;
};
class PoolSchemaError : public PoolError {
 public:
  using PoolError::PoolError;
};
class PoolVersionError : public PoolError {
 public:
  using PoolError::PoolError;
};
class PoolKindMismatch : public PoolError {
 public:
  using PoolError::PoolError;
};

// (xi, eta) i.i.d. uniform on [0,1]^2; train and test use disjoint substreams.
// One identifier slot whose classes are the training peers themselves.
PoolSpec gen_kuhn_pool(std::size_t n_train, std::size_t n_test, std::uint64_t seed);

// Distinct (predator preference, prey path, prey path) combinations: training
// tuples use train paths only, test tuples use test paths only.
PoolSpec gen_pp_pool(std::uint64_t seed, const pp::WorldConfig& world, std::size_t n_train = 16,
                     std::size_t n_test = 24);

// Recomputes slot cardinalities and per-tuple indices from the train tuples:
// slot j's classes are its distinct values in sorted order (training position
// for Kuhn).
void assign_slot_indices(PoolSpec& pool);

void save_pool(const PoolSpec& pool, const std::filesystem::path& path);
std::string pool_to_json(const PoolSpec& pool);
PoolSpec load_pool(const std::filesystem::path& path);
PoolSpec pool_from_json(std::string_view text);

void require_env(const PoolSpec& pool, EnvKind expected);

kuhn::KuhnPeerParams kuhn_params(const PeerTuple& tuple);
pp::PPPeers pp_peers(const PeerTuple& tuple);

}  // namespace pace::pool
