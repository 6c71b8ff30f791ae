#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsync/errors.hpp"

namespace qsync {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class QuantumSet;
using QuantumSetPtr = std::shared_ptr<const QuantumSet>;

enum class WireKind { QSet, Space, DualSpace };

// A typed wire of the graphical calculus. QSet wires carry the Frobenius
// structure of a quantum set plus an opposite-flag; Space/DualSpace wires are
// bare resource Hilbert spaces paired by the basis duality.
struct Wire {
  WireKind kind = WireKind::Space;
  QuantumSetPtr set;     // QSet wires only
  bool op = false;       // QSet wires only
  int space_dim = 0;     // Space/DualSpace wires only

  int dim() const;

  // dual(dual(w)) = w. For a qset wire this toggles the opposite-flag; the
  // underlying space is self-dual under the Frobenius cups and caps.
  Wire dual() const;

  static Wire qset(QuantumSetPtr s, bool op = false) {
    Wire w;
    w.kind = WireKind::QSet;
    w.set = std::move(s);
    w.op = op;
    return w;
  }
  static Wire space(int d) {
    Wire w;
    w.kind = WireKind::Space;
    w.space_dim = d;
    return w;
  }
  static Wire dual_space(int d) {
    Wire w;
    w.kind = WireKind::DualSpace;
    w.space_dim = d;
    return w;
  }
};

// Two wires can be plugged together when they carry the same space and the
// same kind of structure. The opposite-flag is notational (the paper never
// distinguishes the cups/caps of X and X^op) and does not block composition.
bool wires_compatible(const Wire& a, const Wire& b);
bool wires_compatible(const std::vector<Wire>& a, const std::vector<Wire>& b);
std::string wires_to_string(const std::vector<Wire>& ws);
int total_dim(const std::vector<Wire>& ws);

// A linear map between tensor products of wires, stored densely. Rows are
// indexed by the codomain, columns by the domain; composite indices use
// Kronecker order with the leftmost wire most significant. Scalars are
// morphisms with empty dom and cod.
struct Morphism {
  std::vector<Wire> dom;
  std::vector<Wire> cod;
  Matrix matrix;

  Morphism() : matrix(Matrix::Zero(1, 1)) {}
  Morphism(std::vector<Wire> dom_, std::vector<Wire> cod_, Matrix m);

  int dom_dim() const { return int(matrix.cols()); }
  int cod_dim() const { return int(matrix.rows()); }
  bool is_scalar() const { return dom.empty() && cod.empty(); }
};

Morphism scalar(Complex value);
Morphism identity(const std::vector<Wire>& wires);

// f after g (vertical stacking, diagrams read bottom to top).
Morphism compose(const Morphism& f, const Morphism& g);

// Horizontal juxtaposition; Kronecker product with the left factor most
// significant.
Morphism tensor(const Morphism& f, const Morphism& g);

// Flip the diagram upside down: conjugate-transpose matrix, dom/cod swapped.
Morphism dagger(const Morphism& f);

// Half-turn of the diagram. Each wire is bent around with its own cup/cap
// (the Frobenius cup for qset wires, the basis pairing for space wires), so
// f* maps dual(cod) -> dual(dom) with duals taken wire by wire. This is the
// duality the paper uses for thick wires: the Frobenius cup of a product
// quantum set pairs the component wires in place, without reversing them.
Morphism transpose(const Morphism& f);

// Horizontal flip: conjugate = dagger . transpose = transpose . dagger.
Morphism conjugate(const Morphism& f);

enum class StructuralKind { Identity, Swap, Cup, Cap };

// identity(ws); swap of two wires; cup(w) = Delta u as a state on w (x) dual(w)
// for qset wires, the basis-pairing state for space wires; cap = dagger(cup).
Morphism structural_builder(StructuralKind kind, const std::vector<Wire>& wires);

Morphism cup(const Wire& w);
Morphism cap(const Wire& w);
Morphism wire_swap(const Wire& a, const Wire& b);

// Morphism permuting wires: output wire i is input wire perm[i].
Morphism wire_permutation(const std::vector<Wire>& wires, const std::vector<int>& perm);

// Relabel the wires of a morphism without touching the matrix. Dimensions
// must agree slot by slot; used where the paper silently retypes a wire
// (e.g. feeding a comultiplication output into an opposite-set leg).
Morphism relabel(const Morphism& f, std::vector<Wire> dom, std::vector<Wire> cod);

// Largest singular value.
double operator_norm(const Matrix& m);

// Max-entry distance after both matrices are scaled by
// 1 / max(1, operator_norm(g)).
bool approx_equal(const Morphism& f, const Morphism& g, double tol);
double distance(const Morphism& f, const Morphism& g);

Complex close_scalar(const Morphism& f);

// Index bookkeeping for composite wires.
class MultiIndex {
 public:
  explicit MultiIndex(const std::vector<Wire>& wires);
  int total() const { return total_; }
  int size() const { return int(dims_.size()); }
  void decode(int flat, std::vector<int>& out) const;
  int encode(const std::vector<int>& idx) const;

 private:
  std::vector<int> dims_;
  int total_;
};

}  // namespace qsync
