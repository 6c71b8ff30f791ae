#pragma once

#include <optional>

#include "qsync/games.hpp"

namespace qsync {

// A quantum function from a question bundle to an answer bundle over a
// resource space: a map H (x) X -> A (x) H satisfying comultiplicativity,
// counitality and self-conjugacy. Combined strategies are quantum functions
// on question pairs.
struct QuantumFunction {
  int resource_dim = 1;
  std::vector<Wire> q_wires;
  std::vector<Wire> a_wires;
  Morphism map;  // [H, q_wires] -> [a_wires, H]

  static QuantumFunction make(int resource_dim, std::vector<Wire> q,
                              std::vector<Wire> a, Matrix m);
};

struct QFuncReport {
  double comult_residual = 0.0;
  double counital_residual = 0.0;
  double self_conj_residual = 0.0;
  bool pass(double tol) const {
    return comult_residual <= tol && counital_residual <= tol &&
           self_conj_residual <= tol;
  }
};

QFuncReport is_quantum_function(const QuantumFunction& e, double tol = 1e-9);

// The categorical conjugate E_*: X^op ->_{H*} A^op. Conjugating twice gives
// back E.
QuantumFunction conj_qfunc(const QuantumFunction& e);

// ---- Combined strategies ------------------------------------------------------

enum class StrategyClass { Raw, Commuting, Tensor, Deterministic };

struct CombinedStrategy {
  QuantumFunction fn;  // questions [X, Y], answers [A, B]
  StrategyClass cls = StrategyClass::Raw;
  std::optional<QuantumFunction> alice;
  std::optional<QuantumFunction> bob;
};

// Residual of the two evaluation orders of a pair sharing one resource space.
double commutation_residual(const QuantumFunction& e, const QuantumFunction& f);

// commuting: (id (x) F)(E (x) id) on a shared H, after checking commutation;
// tensor: E and F on separate spaces, flattened to H_A (x) H_B;
// deterministic: a tensor pair with both resource spaces trivial.
CombinedStrategy combine(StrategyClass kind, const QuantumFunction& e,
                         const QuantumFunction& f, double tol = 1e-9);

// P = (id (x) <psi|) phi (|psi> (x) id); always a correlation for valid
// strategies and normalized states.
Morphism realize_correlation(const CombinedStrategy& phi, const Vector& psi,
                             double tol = 1e-9);

// star with the resource wire threaded through the strategy side.
double perfect_strategy_residual(const CombinedStrategy& phi, const Morphism& game);
bool is_perfect_strategy(const CombinedStrategy& phi, const Morphism& game,
                         double tol = 1e-9);

struct StrategySync {
  bool synchronous = false;
  bool bisynchronous = false;
  double sync_residual = 0.0;
  double flip_sync_residual = 0.0;
};

StrategySync sync_strategy_status(const CombinedStrategy& phi, double tol = 1e-9);

// The flipped map A (x) B ->_{H*} X (x) Y obtained by bending all wires.
QuantumFunction flip_qfunc(const QuantumFunction& e);
CombinedStrategy flip_strategy(const CombinedStrategy& phi);
bool is_bistrategy(const CombinedStrategy& phi, double tol = 1e-9);

// Alice's quantum function recovered from a combined strategy by discarding
// Bob's answer and feeding his question the unit (exact when Bob's side is
// counital).
QuantumFunction extract_alice(const CombinedStrategy& phi);
QuantumFunction extract_bob(const CombinedStrategy& phi);

// ---- Cauchy-Schwarz scalars ---------------------------------------------------

struct CsScalars {
  double lhs = 0.0;   // <f,g><g,f>
  double rhs = 0.0;   // <f,f><g,g>
  double ff = 0.0;
  double gg = 0.0;
  bool equality = false;
  double partner_residual = 0.0;  // distance in the equality-case equation
};

// E: X ->_H A and F: X^op ->_H A^op with a normalized state; omitting the
// state runs the stateless version through the extended functions and the
// normalized cup state of H (x) H*.
CsScalars cs_scalars(const QuantumFunction& e, const QuantumFunction& f,
                     const Vector& psi, double tol = 1e-9);
CsScalars cs_scalars(const QuantumFunction& e, const QuantumFunction& f,
                     double tol = 1e-9);

// E extended by an idle dual factor, E': X ->_{H (x) K} A acting on the first
// factor; mirrored version acting on the second.
QuantumFunction extend_resource_right(const QuantumFunction& e, int extra_dim);
QuantumFunction extend_resource_left(const QuantumFunction& e, int extra_dim);

// The quantum-commuting pair on K (x) K* implementing two copies of E, which
// together with the normalized cup state realizes E's synchronous correlation.
std::pair<QuantumFunction, QuantumFunction> matched_commuting_pair(
    const QuantumFunction& e);

Vector normalized_cup_state(int d);

// ---- Generators ----------------------------------------------------------------

// Deterministic function strategy on classical sets.
QuantumFunction gen_det_function(const QuantumSetPtr& x, const QuantumSetPtr& a,
                                 uint64_t seed);
QuantumFunction det_function(const QuantumSetPtr& x, const QuantumSetPtr& a,
                             const std::vector<int>& fn);

// Random projective measurement family on classical sets over a resource of
// dimension d.
QuantumFunction gen_pvm(const QuantumSetPtr& x, const QuantumSetPtr& a, int d,
                        uint64_t seed);

// Block permutation plus per-block unitary conjugation; Unsatisfiable when the
// block profiles do not match as multisets.
QuantumFunction gen_qset_isomorphism(const QuantumSetPtr& x, const QuantumSetPtr& a,
                                     uint64_t seed);

}  // namespace qsync
