#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pace/core/game.hpp"

// Kuhn poker with the ego as P1 and a two-parameter P2 peer.
namespace pace::kuhn {

enum class Card : std::uint8_t { Jack = 0, Queen = 1, King = 2 };

// Action ids: 0 = pass (check / fold), 1 = bet (bet / call).
enum class Move : std::uint8_t { Pass = 0, Bet = 1 };

// One-hot stage index of the observation.
enum class Stage : std::uint8_t {
  P1Root = 0,
  P2AfterBet = 1,
  P2AfterCheck = 2,
  P1AfterCheckBet = 3,
  FoldTerminal = 4,
  ShowdownAfterBet = 5,
  ShowdownAfterChecks = 6,
};

inline constexpr std::size_t kStageCount = 7;
inline constexpr std::size_t kCardCount = 3;
inline constexpr std::size_t kObservationSize = kStageCount + 2 * kCardCount;
inline constexpr std::size_t kActionCount = 2;

enum class Player : std::uint8_t { P1, P2, None };

struct KuhnState {
  Card p1_card = Card::Jack;
  Card p2_card = Card::Queen;
  std::vector<Move> history;
  Stage stage = Stage::P1Root;

  [[nodiscard]] bool terminal() const noexcept;
  [[nodiscard]] Player to_move() const noexcept;
};

KuhnState initial_state(Card p1, Card p2);
// Pure transition; throws UsageError on a terminal state.
KuhnState apply_move(const KuhnState& state, Move move);

// P2 strategy with dominated choices removed: facing a bet J folds, Q calls
// with probability eta, K calls; after a check J bets with probability xi,
// Q checks, K bets.
struct KuhnPeerParams {
  double xi = 0.0;
  double eta = 0.0;

  KuhnPeerParams() = default;
  KuhnPeerParams(double xi_, double eta_);
  friend bool operator==(const KuhnPeerParams&, const KuhnPeerParams&) = default;
};

// Probability that P2 plays Bet at the given P2 stage while holding card.
double p2_bet_probability(const KuhnPeerParams& params, Card card, Stage stage);
Move p2_action(const KuhnPeerParams& params, Card card, Stage stage, core::RngStream& rng);

// [stage one-hot (7) | own card (3) | opponent card (3)]; the opponent slot is
// populated only at showdown terminals.
core::Observation encode_obs(const KuhnState& state);

// P1 payoff at a terminal state.
double terminal_payoff(const KuhnState& state);

// P1 behaviour: bet probability at the root and call probability after
// check-bet, each per own card.
struct BehavioralStrategy {
  std::array<double, kCardCount> root_bet{};
  std::array<double, kCardCount> call_after_check_bet{};
};

// One of the 64 deterministic P1 strategies. Bits 0-2: bet at root with J/Q/K;
// bits 3-5: call after check-bet with J/Q/K.
class PureStrategy {
 public:
  static constexpr int kCount = 64;

  constexpr PureStrategy() = default;
  explicit PureStrategy(int index);

  [[nodiscard]] int index() const noexcept { return index_; }
  [[nodiscard]] bool root_bet(Card c) const noexcept { return (index_ >> static_cast<int>(c)) & 1; }
  [[nodiscard]] bool call_after_check_bet(Card c) const noexcept {
    return (index_ >> (3 + static_cast<int>(c))) & 1;
  }
  [[nodiscard]] BehavioralStrategy behavioral() const;

  friend bool operator==(PureStrategy, PureStrategy) = default;

 private:
  int index_ = 0;
};

// Exact expected P1 payoff over the 6 deals and both players' randomization.
double exact_ev(const BehavioralStrategy& strategy, const KuhnPeerParams& params);

struct BestResponse {
  double value = 0.0;
  PureStrategy strategy;
};

// Maximizes exact_ev over the 64 pure strategies; ties go to the lowest index.
BestResponse best_response(const KuhnPeerParams& params);

// Lowest index among pure strategies with the same EV function as s (they
// differ only at information sets the peer never lets P1 reach).
int payoff_class(PureStrategy s, double tol = 1e-12);

// The payoff class of the best response when it is unique up to tol; empty on
// region boundaries where non-equivalent strategies tie.
std::optional<int> strict_best_response_class(const KuhnPeerParams& params, double tol = 1e-12);

class KuhnEnv final : public core::Environment {
 public:
  explicit KuhnEnv(KuhnPeerParams peer) : peer_(peer) {}

  [[nodiscard]] std::size_t observation_size() const override { return kObservationSize; }
  [[nodiscard]] std::size_t action_count() const override { return kActionCount; }

  core::Observation reset(core::RngStream& rng) override;
  // Deals a fixed hand; for tests and enumeration.
  core::Observation reset_to(Card p1, Card p2);
  core::StepOutcome step(core::ActionId action, core::RngStream& rng) override;
  [[nodiscard]] bool terminal() const override { return state_.terminal(); }

  void set_peer(KuhnPeerParams peer) { peer_ = peer; }
  [[nodiscard]] const KuhnPeerParams& peer() const noexcept { return peer_; }
  [[nodiscard]] const KuhnState& state() const noexcept { return state_; }

 private:
  KuhnPeerParams peer_;
  KuhnState state_;
  bool started_ = false;
};

}  // namespace pace::kuhn
