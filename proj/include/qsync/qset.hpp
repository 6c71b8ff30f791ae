#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qsync/tensor.hpp"

namespace qsync {

// A quantum set: a weighted direct sum of matrix algebras (+)_k M_{n_k}.
// Multiplication divides by sqrt(n_k) per block, the unit is (+)_k sqrt(n_k) I,
// and the matrix-unit basis E^k_{ij} (ordered by block, then row-major) is
// orthonormal under <a,b> = Tr(a b†).
class QuantumSet : public std::enable_shared_from_this<QuantumSet> {
 public:
  static QuantumSetPtr make(std::string name, std::vector<int> blocks);

  const std::string& name() const { return name_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int dim() const { return dim_; }                      // sum n_k^2
  int classical_dim() const { return int(blocks_.size()); }
  bool is_classical() const;

  // Basis index <-> (block, i, j).
  int basis_index(int block, int i, int j) const;
  void basis_split(int idx, int& block, int& i, int& j) const;
  // The pairing permutation of the Frobenius cup: E^k_{ij} |-> E^k_{ji}.
  int pair_index(int idx) const;

 private:
  QuantumSet(std::string name, std::vector<int> blocks);
  std::string name_;
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int dim_;

  friend struct StructuralCache;
};

enum class StructuralMap { Mult, Unit, Comult, Counit };

// The structural maps in the matrix-unit basis, optionally for the opposite
// set (multiplication precomposed with the swap, comultiplication followed by
// it; unit and counit unchanged).
Morphism structural_map(const QuantumSetPtr& q, StructuralMap which, bool opposite = false);

Morphism mult(const QuantumSetPtr& q, bool opposite = false);
Morphism unit(const QuantumSetPtr& q);
Morphism comult(const QuantumSetPtr& q, bool opposite = false);
Morphism counit(const QuantumSetPtr& q);

// Comultiplication typed X -> X (x) X^op, as used when one output leg feeds
// an opposite-set position (marginals, sharing diagrams).
Morphism comult_pair(const QuantumSetPtr& q);

// Sharing: the Frobenius map Delta . m on X (x) X^op.
Morphism share(const QuantumSetPtr& q);

struct AxiomReport {
  std::map<std::string, double> residuals;
  bool pass = true;
  double worst() const;
};

// Associativity, unitality, Frobenius (all three forms pairwise), specialness
// and symmetry for the set's own structural maps.
AxiomReport check_axioms(const QuantumSetPtr& q, double tol = 1e-9);

// Same axioms for an arbitrary (mult, unit) pair on matching wires, with
// comult := mult† and counit := unit†.
AxiomReport check_axioms(const Morphism& mult, const Morphism& unit, double tol = 1e-9);

struct Dims {
  int dim = 0;
  int classical_dim = 0;
  double classical_dim_diagram = 0.0;
};

// dim, block count, and the diagrammatic classical dimension Tr(m sigma Delta),
// which must equal the block count (DiagramMismatch otherwise).
Dims dims(const QuantumSetPtr& q, double tol = 1e-9);

// ---- Product (bundle) structure -------------------------------------------
//
// A list of qset wires is itself a quantum set with multiplication
// (m_1 (x) ... (x) m_r) after the interleaving permutation, each factor using
// its wire's own (possibly opposite) multiplication. These are the thick-wire
// structures of the paper.

Morphism bundle_mult(const std::vector<Wire>& wires);
Morphism bundle_unit(const std::vector<Wire>& wires);
Morphism bundle_comult(const std::vector<Wire>& wires);
Morphism bundle_counit(const std::vector<Wire>& wires);
// Frobenius cup Delta u / cap of the bundle, a state on [wires, duals].
Morphism bundle_cup(const std::vector<Wire>& wires);
Morphism bundle_cap(const std::vector<Wire>& wires);
// Sharing of a bundle, typed [Q, Q^op] -> [Q, Q^op].
Morphism bundle_share(const std::vector<Wire>& wires);
// Comultiplication typed Q -> [Q, Q^op].
Morphism bundle_comult_pair(const std::vector<Wire>& wires);

std::vector<Wire> duals(const std::vector<Wire>& wires);

// ---- Weighted Schur structures (BKS comparison) ----------------------------
//
// Two commutative Frobenius structures on the same underlying space, with the
// entrywise (Schur) product per block. The Plus structure weights the product
// in block l by sqrt(m_l) and the all-ones unit by 1/sqrt(m_l); the Minus
// structure is the plain Schur structure, which is the one that is special
// under <a,b> = Tr(a b†): it is the classical set on the matrix-unit points.
// On classical sets both coincide with the classical quantum set.

enum class SchurSign { Plus, Minus };

struct SchurCfa {
  Morphism mult;
  Morphism unit;
};

SchurCfa schur_cfa(const QuantumSetPtr& q, SchurSign sign);

}  // namespace qsync
