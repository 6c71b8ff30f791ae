#include "qsync/tensor.hpp"

#include <sstream>

#include "qsync/qset.hpp"

namespace qsync {

int Wire::dim() const {
  if (kind == WireKind::QSet) return set->dim();
  return space_dim;
}

Wire Wire::dual() const {
  Wire w = *this;
  switch (kind) {
    case WireKind::QSet:
      w.op = !op;
      break;
    case WireKind::Space:
      w.kind = WireKind::DualSpace;
      break;
    case WireKind::DualSpace:
      w.kind = WireKind::Space;
      break;
  }
  return w;
}

bool wires_compatible(const Wire& a, const Wire& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == WireKind::QSet)
    return a.set->name() == b.set->name() && a.set->blocks() == b.set->blocks();
  return a.space_dim == b.space_dim;
}

bool wires_compatible(const std::vector<Wire>& a, const std::vector<Wire>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!wires_compatible(a[i], b[i])) return false;
  return true;
}

std::string wires_to_string(const std::vector<Wire>& ws) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) os << ", ";
    const Wire& w = ws[i];
    switch (w.kind) {
      case WireKind::QSet:
        os << w.set->name() << (w.op ? "^op" : "");
        break;
      case WireKind::Space:
        os << "H(" << w.space_dim << ")";
        break;
      case WireKind::DualSpace:
        os << "H*(" << w.space_dim << ")";
        break;
    }
  }
  os << "]";
  return os.str();
}

int total_dim(const std::vector<Wire>& ws) {
  int d = 1;
  for (const Wire& w : ws) d *= w.dim();
  return d;
}

MultiIndex::MultiIndex(const std::vector<Wire>& wires) : total_(1) {
  dims_.reserve(wires.size());
  for (const Wire& w : wires) {
    dims_.push_back(w.dim());
    total_ *= w.dim();
  }
}

void MultiIndex::decode(int flat, std::vector<int>& out) const {
  out.resize(dims_.size());
  for (int i = int(dims_.size()) - 1; i >= 0; --i) {
    out[i] = flat % dims_[i];
    flat /= dims_[i];
  }
}

int MultiIndex::encode(const std::vector<int>& idx) const {
  int flat = 0;
  for (size_t i = 0; i < dims_.size(); ++i) flat = flat * dims_[i] + idx[i];
  return flat;
}

Morphism::Morphism(std::vector<Wire> dom_, std::vector<Wire> cod_, Matrix m)
    : dom(std::move(dom_)), cod(std::move(cod_)), matrix(std::move(m)) {
  if (matrix.rows() != total_dim(cod) || matrix.cols() != total_dim(dom))
    throw WireMismatch("matrix shape " + std::to_string(matrix.rows()) + "x" +
                       std::to_string(matrix.cols()) + " does not fit wires " +
                       wires_to_string(cod) + " x " + wires_to_string(dom));
}

Morphism scalar(Complex value) {
  Matrix m(1, 1);
  m(0, 0) = value;
  return Morphism({}, {}, std::move(m));
}

Morphism identity(const std::vector<Wire>& wires) {
  int d = total_dim(wires);
  return Morphism(wires, wires, Matrix::Identity(d, d));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!wires_compatible(f.dom, g.cod))
    throw WireMismatch("cannot compose: dom " + wires_to_string(f.dom) +
                       " does not match cod " + wires_to_string(g.cod));
  return Morphism(g.dom, f.cod, f.matrix * g.matrix);
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  std::vector<Wire> dom = f.dom;
  dom.insert(dom.end(), g.dom.begin(), g.dom.end());
  std::vector<Wire> cod = f.cod;
  cod.insert(cod.end(), g.cod.begin(), g.cod.end());
  Matrix m(f.matrix.rows() * g.matrix.rows(), f.matrix.cols() * g.matrix.cols());
  for (int i = 0; i < f.matrix.rows(); ++i)
    for (int j = 0; j < f.matrix.cols(); ++j)
      m.block(i * g.matrix.rows(), j * g.matrix.cols(), g.matrix.rows(),
              g.matrix.cols()) = f.matrix(i, j) * g.matrix;
  return Morphism(std::move(dom), std::move(cod), std::move(m));
}

Morphism dagger(const Morphism& f) {
  return Morphism(f.cod, f.dom, f.matrix.adjoint());
}

namespace {

// The pairing permutation of a wire's cup: E^k_{ij} <-> E^k_{ji} for qset
// wires, the identity for space wires.
int pair_permute(const Wire& w, int idx) {
  if (w.kind == WireKind::QSet) return w.set->pair_index(idx);
  return idx;
}

std::vector<int> pair_table(const Wire& w) {
  std::vector<int> t(w.dim());
  for (int i = 0; i < w.dim(); ++i) t[i] = pair_permute(w, i);
  return t;
}

}  // namespace

Morphism transpose(const Morphism& f) {
  std::vector<Wire> new_dom = duals(f.cod);
  std::vector<Wire> new_cod = duals(f.dom);
  MultiIndex mi_dom(f.dom), mi_cod(f.cod);
  std::vector<std::vector<int>> tau_dom, tau_cod;
  for (const Wire& w : f.dom) tau_dom.push_back(pair_table(w));
  for (const Wire& w : f.cod) tau_cod.push_back(pair_table(w));

  Matrix m(mi_dom.total(), mi_cod.total());
  std::vector<int> r, c;
  for (int i = 0; i < mi_dom.total(); ++i) {
    mi_dom.decode(i, r);
    for (size_t k = 0; k < r.size(); ++k) r[k] = tau_dom[k][r[k]];
    int fcol = mi_dom.encode(r);
    for (int j = 0; j < mi_cod.total(); ++j) {
      mi_cod.decode(j, c);
      for (size_t k = 0; k < c.size(); ++k) c[k] = tau_cod[k][c[k]];
      m(i, j) = f.matrix(mi_cod.encode(c), fcol);
    }
  }
  return Morphism(std::move(new_dom), std::move(new_cod), std::move(m));
}

Morphism conjugate(const Morphism& f) { return transpose(dagger(f)); }

Morphism cup(const Wire& w) {
  if (w.kind == WireKind::QSet) {
    // Delta u: pairs E^k_{ij} with E^k_{ji}.
    Matrix m = Matrix::Zero(w.dim() * w.dim(), 1);
    for (int i = 0; i < w.dim(); ++i) m(i * w.dim() + pair_permute(w, i), 0) = 1.0;
    return Morphism({}, {w, w.dual()}, std::move(m));
  }
  Matrix m = Matrix::Zero(w.dim() * w.dim(), 1);
  for (int i = 0; i < w.dim(); ++i) m(i * w.dim() + i, 0) = 1.0;
  return Morphism({}, {w, w.dual()}, std::move(m));
}

Morphism cap(const Wire& w) { return dagger(cup(w)); }

Morphism wire_swap(const Wire& a, const Wire& b) {
  int da = a.dim(), db = b.dim();
  Matrix m = Matrix::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) m(j * da + i, i * db + j) = 1.0;
  return Morphism({a, b}, {b, a}, std::move(m));
}

Morphism wire_permutation(const std::vector<Wire>& wires, const std::vector<int>& perm) {
  if (perm.size() != wires.size())
    throw WireMismatch("permutation size does not match wire count");
  std::vector<Wire> cod(wires.size());
  for (size_t i = 0; i < perm.size(); ++i) cod[i] = wires[perm[i]];
  MultiIndex mi_in(wires), mi_out(cod);
  Matrix m = Matrix::Zero(mi_out.total(), mi_in.total());
  std::vector<int> in, out(perm.size());
  for (int flat = 0; flat < mi_in.total(); ++flat) {
    mi_in.decode(flat, in);
    for (size_t i = 0; i < perm.size(); ++i) out[i] = in[perm[i]];
    m(mi_out.encode(out), flat) = 1.0;
  }
  return Morphism(wires, std::move(cod), std::move(m));
}

Morphism structural_builder(StructuralKind kind, const std::vector<Wire>& wires) {
  switch (kind) {
    case StructuralKind::Identity:
      return identity(wires);
    case StructuralKind::Swap:
      if (wires.size() != 2) throw WireMismatch("swap needs exactly two wires");
      return wire_swap(wires[0], wires[1]);
    case StructuralKind::Cup:
      if (wires.size() == 1) return cup(wires[0]);
      if (wires.size() == 2) {
        if (!wires_compatible(wires[0], wires[1].dual()))
          throw WireMismatch("cup requires dual wires, got " + wires_to_string(wires));
        return cup(wires[0]);
      }
      throw WireMismatch("cup needs one wire or a dual pair");
    case StructuralKind::Cap:
      return dagger(structural_builder(StructuralKind::Cup, wires));
  }
  throw Error("unreachable");
}

Morphism relabel(const Morphism& f, std::vector<Wire> dom, std::vector<Wire> cod) {
  if (total_dim(dom) != f.dom_dim() || total_dim(cod) != f.cod_dim())
    throw WireMismatch("relabel changes total dimension");
  return Morphism(std::move(dom), std::move(cod), f.matrix);
}

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double distance(const Morphism& f, const Morphism& g) {
  if (!wires_compatible(f.dom, g.dom) || !wires_compatible(f.cod, g.cod))
    throw WireMismatch("cannot compare " + wires_to_string(f.cod) + "<-" +
                       wires_to_string(f.dom) + " with " + wires_to_string(g.cod) +
                       "<-" + wires_to_string(g.dom));
  double scale = 1.0 / std::max(1.0, operator_norm(g.matrix));
  return ((f.matrix - g.matrix) * scale).cwiseAbs().maxCoeff();
}

bool approx_equal(const Morphism& f, const Morphism& g, double tol) {
  return distance(f, g) <= tol;
}

Complex close_scalar(const Morphism& f) {
  if (!f.is_scalar())
    throw WireMismatch("close_scalar needs empty dom and cod, got " +
                       wires_to_string(f.cod) + "<-" + wires_to_string(f.dom));
  return f.matrix(0, 0);
}

}  // namespace qsync
