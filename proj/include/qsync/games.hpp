#pragma once

#include <optional>

#include "qsync/qset.hpp"

namespace qsync {

// ---- Pair shape -------------------------------------------------------------
//
// Game-level operations act on maps [Q, Q^op] -> [R, R^op] where Q and R are
// bundles of qset wires and the second half of each side carries the duals of
// the first. split_pair validates the shape and returns the first half.

std::vector<Wire> split_pair(const std::vector<Wire>& wires);

// ---- The commuting (star) product -------------------------------------------

// m_{cod} (f (x) g) Delta_{dom} with the product structures of the full wire
// bundles.
Morphism star(const Morphism& f, const Morphism& g);

bool commutes(const Morphism& f, const Morphism& g, double tol = 1e-9);

// ---- Games ------------------------------------------------------------------

struct GameCheck {
  double idempotent_residual = 0.0;
  double self_conjugate_residual = 0.0;
  bool pass(double tol) const {
    return idempotent_residual <= tol && self_conjugate_residual <= tol;
  }
};

// star(f, f) = f together with self-conjugacy under the thick-wire duality.
GameCheck is_game(const Morphism& f, double tol = 1e-9);

enum class Fairness { Fair, Unfair, Unknown };

// No product state |x> (x) |y> is annihilated by the game. Exact enumeration
// on classical sets; alternating search for a product kernel vector otherwise.
Fairness fairness(const Morphism& f, double tol = 1e-9, uint64_t seed = 0);

struct GameMap {
  Morphism map;
  bool is_game = false;
  bool is_correlation = false;
  bool is_bicorrelation = false;
  Fairness fair = Fairness::Unknown;
};

GameMap validate_game_map(const Morphism& f, double tol = 1e-9);

enum class CanonicalGame { Identity, Function, UnfairFunction };

// identity (Simon Says), the function game
// cup_A cap_X + (u (x) u)(eps (x) eps) - (u (x) u) cap_X, and its unfair
// variant cup_A cap_X.
GameMap canonical_game(CanonicalGame kind, const QuantumSetPtr& x,
                       const QuantumSetPtr& a, double tol = 1e-9);

// Wire-crossed tensor product keeping Alice's questions and answers separate;
// applies to games and correlations alike.
Morphism tensor_crossed(const Morphism& f1, const Morphism& f2);

// tensor_crossed restricted to games, with validation on both ends.
Morphism tensor_game(const Morphism& g1, const Morphism& g2, double tol = 1e-9);

// ---- Complete positivity and channels ---------------------------------------

// Choi criterion: embed the qset bundles block-diagonally into full matrix
// algebras (opposite legs embedded via the transpose *-isomorphism), extend by
// the pinching on the domain side, and test the Choi spectrum >= -tol.
bool is_cp(const Morphism& f, double tol = 1e-9);

struct ChannelProps {
  bool cp = false;
  bool counital = false;
  bool unital = false;
  double counital_residual = 0.0;
  double unital_residual = 0.0;
};

ChannelProps channel_props(const Morphism& f, double tol = 1e-9);

// ---- Non-signalling ----------------------------------------------------------

struct Marginals {
  bool is_ns = false;
  double residual_a = 0.0;
  double residual_b = 0.0;
  Morphism p_a;
  Morphism p_b;
};

// Candidates built by feeding a comultiplication into both question wires and
// discarding the other player's answer.
Marginals nonsignalling_marginals(const Morphism& p, double tol = 1e-9);

// ---- Synchronicity -----------------------------------------------------------

struct SyncStatus {
  bool synchronous = false;
  bool cosynchronous = false;
  bool bisynchronous = false;
  bool preserves_sharing = false;
  double sync_residual = 0.0;
  double cosync_residual = 0.0;
  double preserves_residual = 0.0;
};

// f share = share f share, its dagger version, and the preserves-sharing
// characterization of bisynchronicity (checked for consistency).
SyncStatus sync_status(const Morphism& f, double tol = 1e-9);

// ---- Perfection, loops, concurrency, BKS -------------------------------------

// star(game, p) = p, and the equivalent order with the factors swapped.
bool is_perfect(const Morphism& p, const Morphism& game, double tol = 1e-9);
double perfect_residual(const Morphism& p, const Morphism& game);

// cap_A P cup_X; equals dim X for synchronous P.
Complex loopslide(const Morphism& p);

// f(cup_X) = cup_A.
bool is_concurrent(const Morphism& f, double tol = 1e-9);
double concurrent_residual(const Morphism& f);

// The weighted diagonal sum sum 1/(n_k m_l) P^{(st)(st)}_{(ij)(ij)}; equals
// loopslide on classical sets.
Complex bks_sync_scalar(const Morphism& p);

}  // namespace qsync
