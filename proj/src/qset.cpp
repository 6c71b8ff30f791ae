#include "qsync/qset.hpp"

#include <cmath>
#include <numeric>

namespace qsync {

QuantumSet::QuantumSet(std::string name, std::vector<int> blocks)
    : name_(std::move(name)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error("quantum set needs at least one block");
  offsets_.reserve(blocks_.size());
  dim_ = 0;
  for (int n : blocks_) {
    if (n < 1) throw Error("block sizes must be >= 1");
    offsets_.push_back(dim_);
    dim_ += n * n;
  }
}

QuantumSetPtr QuantumSet::make(std::string name, std::vector<int> blocks) {
  return QuantumSetPtr(new QuantumSet(std::move(name), std::move(blocks)));
}

bool QuantumSet::is_classical() const {
  for (int n : blocks_)
    if (n != 1) return false;
  return true;
}

int QuantumSet::basis_index(int block, int i, int j) const {
  return offsets_[block] + i * blocks_[block] + j;
}

void QuantumSet::basis_split(int idx, int& block, int& i, int& j) const {
  block = 0;
  while (block + 1 < int(blocks_.size()) && offsets_[block + 1] <= idx) ++block;
  int rem = idx - offsets_[block];
  i = rem / blocks_[block];
  j = rem % blocks_[block];
}

int QuantumSet::pair_index(int idx) const {
  int k, i, j;
  basis_split(idx, k, i, j);
  return basis_index(k, j, i);
}

namespace {

Morphism mult_matrix(const QuantumSetPtr& q) {
  int d = q->dim();
  Matrix m = Matrix::Zero(d, d * d);
  for (size_t k = 0; k < q->blocks().size(); ++k) {
    int n = q->blocks()[k];
    double w = 1.0 / std::sqrt(double(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int p = 0; p < n; ++p) {
          int a = q->basis_index(int(k), i, j);
          int b = q->basis_index(int(k), j, p);
          int out = q->basis_index(int(k), i, p);
          m(out, a * d + b) = w;
        }
  }
  return Morphism({Wire::qset(q), Wire::qset(q)}, {Wire::qset(q)}, std::move(m));
}

Morphism unit_matrix(const QuantumSetPtr& q) {
  Matrix m = Matrix::Zero(q->dim(), 1);
  for (size_t k = 0; k < q->blocks().size(); ++k) {
    int n = q->blocks()[k];
    double w = std::sqrt(double(n));
    for (int i = 0; i < n; ++i) m(q->basis_index(int(k), i, i), 0) = w;
  }
  return Morphism({}, {Wire::qset(q)}, std::move(m));
}

}  // namespace

Morphism structural_map(const QuantumSetPtr& q, StructuralMap which, bool opposite) {
  Wire x = Wire::qset(q, opposite);
  switch (which) {
    case StructuralMap::Mult: {
      Morphism m = mult_matrix(q);
      if (opposite) m = compose(m, wire_swap(Wire::qset(q), Wire::qset(q)));
      return relabel(m, {x, x}, {x});
    }
    case StructuralMap::Comult: {
      Morphism d = dagger(mult_matrix(q));
      if (opposite) d = compose(wire_swap(Wire::qset(q), Wire::qset(q)), d);
      return relabel(d, {x}, {x, x});
    }
    case StructuralMap::Unit:
      return relabel(unit_matrix(q), {}, {x});
    case StructuralMap::Counit:
      return relabel(dagger(unit_matrix(q)), {x}, {});
  }
  throw Error("unreachable");
}

Morphism mult(const QuantumSetPtr& q, bool opposite) {
  return structural_map(q, StructuralMap::Mult, opposite);
}
Morphism unit(const QuantumSetPtr& q) {
  return structural_map(q, StructuralMap::Unit, false);
}
Morphism comult(const QuantumSetPtr& q, bool opposite) {
  return structural_map(q, StructuralMap::Comult, opposite);
}
Morphism counit(const QuantumSetPtr& q) {
  return structural_map(q, StructuralMap::Counit, false);
}

Morphism comult_pair(const QuantumSetPtr& q) {
  Morphism d = comult(q);
  return relabel(d, {Wire::qset(q)}, {Wire::qset(q), Wire::qset(q, true)});
}

Morphism share(const QuantumSetPtr& q) {
  Morphism s = compose(comult(q), mult(q));
  std::vector<Wire> pair = {Wire::qset(q), Wire::qset(q, true)};
  return relabel(s, pair, pair);
}

double AxiomReport::worst() const {
  double w = 0.0;
  for (const auto& [name, r] : residuals) w = std::max(w, r);
  return w;
}

AxiomReport check_axioms(const Morphism& m, const Morphism& u, double tol) {
  AxiomReport rep;
  const std::vector<Wire> x = m.cod;
  const int r = int(x.size());
  Morphism id = identity(x);
  Morphism d = dagger(m);
  Morphism eps = dagger(u);

  auto record = [&](const std::string& name, const Morphism& lhs, const Morphism& rhs) {
    double res = distance(lhs, rhs);
    rep.residuals[name] = res;
    if (res > tol) rep.pass = false;
  };

  // m(m (x) 1) = m(1 (x) m)
  record("associativity", compose(m, tensor(m, id)), compose(m, tensor(id, m)));
  // m(u (x) 1) = 1 = m(1 (x) u)
  record("unitality_left", compose(m, tensor(u, id)), id);
  record("unitality_right", compose(m, tensor(id, u)), id);
  // (1 (x) m)(Delta (x) 1) = Delta m = (m (x) 1)(1 (x) Delta)
  Morphism frob_mid = compose(d, m);
  record("frobenius_left", compose(tensor(id, m), tensor(d, id)), frob_mid);
  record("frobenius_right", compose(tensor(m, id), tensor(id, d)), frob_mid);
  // m Delta = Id
  record("special", compose(m, d), id);
  // eps m sigma = eps m, with sigma swapping the two tensor factors
  std::vector<int> swap_halves(2 * r);
  for (int i = 0; i < r; ++i) {
    swap_halves[i] = r + i;
    swap_halves[r + i] = i;
  }
  Morphism sigma = wire_permutation(m.dom, swap_halves);
  Morphism em = compose(eps, m);
  record("symmetric", compose(em, relabel(sigma, m.dom, m.dom)), em);
  return rep;
}

AxiomReport check_axioms(const QuantumSetPtr& q, double tol) {
  return check_axioms(mult(q), unit(q), tol);
}

Dims dims(const QuantumSetPtr& q, double tol) {
  Dims d;
  d.dim = q->dim();
  d.classical_dim = q->classical_dim();
  // Tr(m sigma Delta), the paper's diagrammatic block count.
  Wire x = Wire::qset(q);
  Morphism loop = compose(mult(q), compose(wire_swap(x, x), comult(q)));
  d.classical_dim_diagram = loop.matrix.trace().real();
  double imag = std::abs(loop.matrix.trace().imag());
  if (std::abs(d.classical_dim_diagram - d.classical_dim) > tol || imag > tol)
    throw DiagramMismatch("Tr(m sigma Delta) = " + std::to_string(d.classical_dim_diagram) +
                          " but block count is " + std::to_string(d.classical_dim));
  return d;
}

std::vector<Wire> duals(const std::vector<Wire>& wires) {
  std::vector<Wire> out;
  out.reserve(wires.size());
  for (const Wire& w : wires) out.push_back(w.dual());
  return out;
}

namespace {

// [w1..wr, w1..wr] -> [w1, w1, w2, w2, ...]
std::vector<int> interleave_perm(int r) {
  std::vector<int> perm(2 * r);
  for (int i = 0; i < r; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = r + i;
  }
  return perm;
}

Morphism wire_mult(const Wire& w) {
  if (w.kind != WireKind::QSet) throw WireMismatch("multiplication needs a qset wire");
  Morphism m = structural_map(w.set, StructuralMap::Mult, w.op);
  return relabel(m, {w, w}, {w});
}

Morphism wire_unit(const Wire& w) {
  if (w.kind != WireKind::QSet) throw WireMismatch("unit needs a qset wire");
  return relabel(unit(w.set), {}, {w});
}

}  // namespace

Morphism bundle_mult(const std::vector<Wire>& wires) {
  if (wires.empty()) return scalar(1.0);
  Morphism factors = wire_mult(wires[0]);
  for (size_t i = 1; i < wires.size(); ++i) factors = tensor(factors, wire_mult(wires[i]));
  std::vector<Wire> doubled = wires;
  doubled.insert(doubled.end(), wires.begin(), wires.end());
  Morphism perm = wire_permutation(doubled, interleave_perm(int(wires.size())));
  return compose(factors, perm);
}

Morphism bundle_unit(const std::vector<Wire>& wires) {
  Morphism u = scalar(1.0);
  for (const Wire& w : wires) u = tensor(u, wire_unit(w));
  return u;
}

Morphism bundle_comult(const std::vector<Wire>& wires) {
  return dagger(bundle_mult(wires));
}

Morphism bundle_counit(const std::vector<Wire>& wires) {
  return dagger(bundle_unit(wires));
}

Morphism bundle_cup(const std::vector<Wire>& wires) {
  Morphism c = compose(bundle_comult(wires), bundle_unit(wires));
  std::vector<Wire> cod = wires;
  std::vector<Wire> dd = duals(wires);
  cod.insert(cod.end(), dd.begin(), dd.end());
  return relabel(c, {}, cod);
}

Morphism bundle_cap(const std::vector<Wire>& wires) {
  return dagger(bundle_cup(wires));
}

Morphism bundle_share(const std::vector<Wire>& wires) {
  Morphism s = compose(bundle_comult(wires), bundle_mult(wires));
  std::vector<Wire> pair = wires;
  std::vector<Wire> dd = duals(wires);
  pair.insert(pair.end(), dd.begin(), dd.end());
  return relabel(s, pair, pair);
}

Morphism bundle_comult_pair(const std::vector<Wire>& wires) {
  Morphism d = bundle_comult(wires);
  std::vector<Wire> cod = wires;
  std::vector<Wire> dd = duals(wires);
  cod.insert(cod.end(), dd.begin(), dd.end());
  return relabel(d, wires, cod);
}

SchurCfa schur_cfa(const QuantumSetPtr& q, SchurSign sign) {
  int d = q->dim();
  Matrix m = Matrix::Zero(d, d * d);
  Matrix u = Matrix::Zero(d, 1);
  for (size_t k = 0; k < q->blocks().size(); ++k) {
    int n = q->blocks()[k];
    double wm = sign == SchurSign::Plus ? std::sqrt(double(n)) : 1.0;
    double wu = sign == SchurSign::Plus ? 1.0 / std::sqrt(double(n)) : 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int a = q->basis_index(int(k), i, j);
        m(a, a * d + a) = wm;
        u(a, 0) = wu;
      }
  }
  Wire x = Wire::qset(q);
  SchurCfa out;
  out.mult = Morphism({x, x}, {x}, std::move(m));
  out.unit = Morphism({}, {x}, std::move(u));
  return out;
}

}  // namespace qsync
