#include "qsync/games.hpp"

#include <functional>
#include <unordered_map>

#include "qsync/rng.hpp"

namespace qsync {

std::vector<Wire> split_pair(const std::vector<Wire>& wires) {
  if (wires.empty() || wires.size() % 2 != 0)
    throw OppositeStructureMissing("expected an even number of qset wires, got " +
                                   wires_to_string(wires));
  size_t r = wires.size() / 2;
  for (size_t i = 0; i < r; ++i) {
    if (wires[i].kind != WireKind::QSet || wires[r + i].kind != WireKind::QSet ||
        !wires_compatible(wires[i], wires[r + i]))
      throw OppositeStructureMissing("wires are not of the X (x) X^op shape: " +
                                     wires_to_string(wires));
  }
  return std::vector<Wire>(wires.begin(), wires.begin() + r);
}

Morphism star(const Morphism& f, const Morphism& g) {
  if (!wires_compatible(f.dom, g.dom) || !wires_compatible(f.cod, g.cod))
    throw WireMismatch("star needs matching signatures");
  Morphism m = bundle_mult(f.cod);
  Morphism d = bundle_comult(f.dom);
  return compose(m, compose(tensor(f, g), d));
}

bool commutes(const Morphism& f, const Morphism& g, double tol) {
  return approx_equal(star(f, g), star(g, f), tol);
}

GameCheck is_game(const Morphism& f, double tol) {
  (void)tol;
  GameCheck c;
  c.idempotent_residual = distance(star(f, f), f);
  c.self_conjugate_residual = distance(conjugate(f), f);
  return c;
}

namespace {

bool all_classical(const std::vector<Wire>& ws) {
  for (const Wire& w : ws)
    if (w.kind != WireKind::QSet || !w.set->is_classical()) return false;
  return true;
}

std::pair<double, Vector> min_singular(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinV);
  int k = int(svd.singularValues().size()) - 1;
  return {svd.singularValues()(k), svd.matrixV().col(k)};
}

}  // namespace

Fairness fairness(const Morphism& f, double tol, uint64_t seed) {
  std::vector<Wire> q = split_pair(f.dom);
  int dx = total_dim(q);
  int dy = f.dom_dim() / dx;
  int dc = f.cod_dim();

  if (all_classical(f.dom)) {
    for (int c = 0; c < f.dom_dim(); ++c)
      if (f.matrix.col(c).cwiseAbs().maxCoeff() <= tol) return Fairness::Unfair;
    return Fairness::Fair;
  }

  // Alternating search for a product vector in the kernel.
  double scale = std::max(1.0, operator_norm(f.matrix));
  Rng rng(seed ^ 0x8badf00dULL);
  for (int restart = 0; restart < 8; ++restart) {
    Vector x = rng.state_vector(dx);
    Vector y = rng.state_vector(dy);
    for (int it = 0; it < 60; ++it) {
      Matrix mx(dc, dx);
      for (int i = 0; i < dx; ++i) {
        Vector acc = Vector::Zero(dc);
        for (int j = 0; j < dy; ++j) acc += f.matrix.col(i * dy + j) * y(j);
        mx.col(i) = acc;
      }
      x = min_singular(mx).second;
      Matrix my(dc, dy);
      for (int j = 0; j < dy; ++j) {
        Vector acc = Vector::Zero(dc);
        for (int i = 0; i < dx; ++i) acc += f.matrix.col(i * dy + j) * x(i);
        my.col(j) = acc;
      }
      auto [sy, vy] = min_singular(my);
      y = vy;
      if (sy <= tol * scale) return Fairness::Unfair;
    }
  }
  return Fairness::Unknown;
}

GameMap validate_game_map(const Morphism& f, double tol) {
  GameMap gm;
  gm.map = f;
  gm.is_game = is_game(f, tol).pass(tol);
  ChannelProps ch = channel_props(f, tol);
  gm.is_correlation = ch.cp && ch.counital;
  if (gm.is_correlation) {
    ChannelProps chd = channel_props(dagger(f), tol);
    gm.is_bicorrelation = chd.cp && chd.counital;
  }
  gm.fair = fairness(f, tol);
  return gm;
}

GameMap canonical_game(CanonicalGame kind, const QuantumSetPtr& x,
                       const QuantumSetPtr& a, double tol) {
  std::vector<Wire> xp = {Wire::qset(x), Wire::qset(x, true)};
  std::vector<Wire> ap = {Wire::qset(a), Wire::qset(a, true)};
  Morphism cup_a = relabel(cup(Wire::qset(a)), {}, ap);
  Morphism cap_x = relabel(cap(Wire::qset(x)), xp, {});

  Morphism m;
  switch (kind) {
    case CanonicalGame::Identity:
      m = identity(xp);
      break;
    case CanonicalGame::UnfairFunction:
      m = compose(cup_a, cap_x);
      break;
    case CanonicalGame::Function: {
      m = compose(cup_a, cap_x);
      Morphism uu = relabel(tensor(unit(a), unit(a)), {}, ap);
      Morphism ee = relabel(tensor(counit(x), counit(x)), xp, {});
      m.matrix += compose(uu, ee).matrix;
      m.matrix -= compose(uu, cap_x).matrix;
      break;
    }
  }
  if (!is_game(m, tol).pass(tol))
    throw NotAGame("canonical game failed its own validation");
  if (!sync_status(m, tol).synchronous)
    throw Error("canonical game is unexpectedly not synchronous");
  return validate_game_map(m, tol);
}

Morphism tensor_crossed(const Morphism& g1, const Morphism& g2) {
  int r1 = int(split_pair(g1.dom).size()), r2 = int(split_pair(g2.dom).size());
  int s1 = int(split_pair(g1.cod).size()), s2 = int(split_pair(g2.cod).size());

  auto append = [](std::vector<Wire>& to, const std::vector<Wire>& from, int b, int n) {
    to.insert(to.end(), from.begin() + b, from.begin() + b + n);
  };

  // crossed domain [X1, X2, Y1, Y2], fed to (g1 (x) g2) as [X1, Y1, X2, Y2]
  std::vector<Wire> dom_crossed;
  append(dom_crossed, g1.dom, 0, r1);
  append(dom_crossed, g2.dom, 0, r2);
  append(dom_crossed, g1.dom, r1, r1);
  append(dom_crossed, g2.dom, r2, r2);
  std::vector<int> pin;
  for (int i = 0; i < r1; ++i) pin.push_back(i);
  for (int i = 0; i < r1; ++i) pin.push_back(r1 + r2 + i);
  for (int i = 0; i < r2; ++i) pin.push_back(r1 + i);
  for (int i = 0; i < r2; ++i) pin.push_back(2 * r1 + r2 + i);
  Morphism perm_in = wire_permutation(dom_crossed, pin);

  // output [A1, B1, A2, B2] uncrossed to [A1, A2, B1, B2]
  std::vector<Wire> cod_joined;
  append(cod_joined, g1.cod, 0, 2 * s1);
  append(cod_joined, g2.cod, 0, 2 * s2);
  std::vector<int> pout;
  for (int i = 0; i < s1; ++i) pout.push_back(i);
  for (int i = 0; i < s2; ++i) pout.push_back(2 * s1 + i);
  for (int i = 0; i < s1; ++i) pout.push_back(s1 + i);
  for (int i = 0; i < s2; ++i) pout.push_back(2 * s1 + s2 + i);
  Morphism perm_out = wire_permutation(cod_joined, pout);

  return compose(perm_out, compose(tensor(g1, g2), perm_in));
}

Morphism tensor_game(const Morphism& g1, const Morphism& g2, double tol) {
  if (!is_game(g1, tol).pass(tol) || !is_game(g2, tol).pass(tol))
    throw NotAGame("tensor_game needs two games");
  Morphism crossed = tensor_crossed(g1, g2);
  if (!is_game(crossed, tol).pass(tol))
    throw NotAGame("tensor product of games failed validation");
  return crossed;
}

// ---- Choi / CP ---------------------------------------------------------------

namespace {

// Block-diagonal embedding of a qset wire bundle into M_N. Opposite legs are
// embedded through the transpose, the *-isomorphism from the opposite algebra.
struct Embedding {
  int big = 0;
  std::vector<std::pair<int, int>> pos;  // basis index -> (row, col) in M_N
  std::unordered_map<long long, int> inv;

  int lookup(int r, int c) const {
    auto it = inv.find((long long)r * big + c);
    return it == inv.end() ? -1 : it->second;
  }
};

Embedding build_embedding(const std::vector<Wire>& wires) {
  for (const Wire& w : wires)
    if (w.kind != WireKind::QSet)
      throw WireMismatch("complete positivity needs qset wires, got " +
                         wires_to_string(wires));
  int r = int(wires.size());
  MultiIndex mi(wires);

  Embedding e;
  e.pos.assign(mi.total(), {0, 0});

  std::vector<int> tuple(r, 0);
  int offset = 0;
  while (true) {
    std::vector<int> sizes(r);
    for (int i = 0; i < r; ++i) sizes[i] = wires[i].set->blocks()[tuple[i]];
    int block_size = 1;
    for (int s : sizes) block_size *= s;

    std::vector<int> iv(r, 0), jv(r, 0), basis(r);
    auto flatten = [&](const std::vector<int>& v) {
      int f = 0;
      for (int i = 0; i < r; ++i) f = f * sizes[i] + v[i];
      return f;
    };
    std::function<void(int)> walk = [&](int w) {
      if (w == r) {
        for (int i = 0; i < r; ++i) {
          int ii = iv[i], jj = jv[i];
          if (wires[i].op) std::swap(ii, jj);
          basis[i] = wires[i].set->basis_index(tuple[i], ii, jj);
        }
        e.pos[mi.encode(basis)] = {offset + flatten(iv), offset + flatten(jv)};
        return;
      }
      for (iv[w] = 0; iv[w] < sizes[w]; ++iv[w])
        for (jv[w] = 0; jv[w] < sizes[w]; ++jv[w]) walk(w + 1);
    };
    walk(0);
    offset += block_size;

    int i = r - 1;
    while (i >= 0 && ++tuple[i] == int(wires[i].set->blocks().size())) tuple[i--] = 0;
    if (i < 0) break;
  }
  e.big = offset;
  for (size_t b = 0; b < e.pos.size(); ++b)
    e.inv[(long long)e.pos[b].first * e.big + e.pos[b].second] = int(b);
  return e;
}

}  // namespace

bool is_cp(const Morphism& f, double tol) {
  Embedding ed = build_embedding(f.dom);
  Embedding ec = build_embedding(f.cod);
  int n = ed.big, m = ec.big;

  Matrix choi = Matrix::Zero(n * m, n * m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int b = ed.lookup(r, c);
      if (b < 0) continue;  // pinched away
      for (int out = 0; out < f.cod_dim(); ++out) {
        Complex v = f.matrix(out, b);
        if (v == Complex(0.0)) continue;
        auto [orow, ocol] = ec.pos[out];
        choi(r * m + orow, c * m + ocol) += v;
      }
    }

  double herm = (choi - choi.adjoint()).cwiseAbs().maxCoeff();
  if (herm <= 1e-12 * std::max(1.0, choi.cwiseAbs().maxCoeff())) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((choi + choi.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff() >= -tol;
  }
  Eigen::ComplexEigenSolver<Matrix> es(choi);
  return es.eigenvalues().real().minCoeff() >= -tol;
}

ChannelProps channel_props(const Morphism& f, double tol) {
  ChannelProps p;
  p.cp = is_cp(f, tol);
  p.counital_residual = distance(compose(bundle_counit(f.cod), f), bundle_counit(f.dom));
  p.counital = p.counital_residual <= tol;
  p.unital_residual =
      distance(compose(f, bundle_unit(f.dom)), relabel(bundle_unit(f.cod), {}, f.cod));
  p.unital = p.unital_residual <= tol;
  return p;
}

Marginals nonsignalling_marginals(const Morphism& p, double tol) {
  std::vector<Wire> xw = split_pair(p.dom);
  std::vector<Wire> aw = split_pair(p.cod);
  std::vector<Wire> yw(p.dom.begin() + xw.size(), p.dom.end());
  std::vector<Wire> bw(p.cod.begin() + aw.size(), p.cod.end());

  Morphism id_a = identity(aw), id_x = identity(xw);
  Morphism id_b = identity(bw), id_y = identity(yw);

  Morphism discard_b = compose(tensor(id_a, bundle_counit(bw)), p);  // [X,Y] -> [A]
  Morphism discard_a = compose(tensor(bundle_counit(aw), id_b), p);  // [X,Y] -> [B]

  Morphism feed = relabel(bundle_comult_pair(xw), xw, p.dom);  // X -> [X,Y]

  Marginals m;
  m.p_a = compose(discard_b, feed);
  m.p_b = relabel(compose(discard_a, feed), yw, bw);
  m.residual_a = distance(discard_b, compose(m.p_a, tensor(id_x, bundle_counit(yw))));
  m.residual_b = distance(discard_a, compose(relabel(m.p_b, yw, bw),
                                             tensor(bundle_counit(xw), id_y)));
  m.is_ns = m.residual_a <= tol && m.residual_b <= tol;
  return m;
}

SyncStatus sync_status(const Morphism& f, double tol) {
  std::vector<Wire> xw = split_pair(f.dom);
  std::vector<Wire> aw = split_pair(f.cod);
  Morphism sx = relabel(bundle_share(xw), f.dom, f.dom);
  Morphism sa = relabel(bundle_share(aw), f.cod, f.cod);

  SyncStatus s;
  Morphism f_sx = compose(f, sx);
  s.sync_residual = distance(f_sx, compose(sa, f_sx));
  s.synchronous = s.sync_residual <= tol;

  Morphism fd = dagger(f);
  Morphism fd_sa = compose(fd, sa);
  s.cosync_residual = distance(fd_sa, compose(sx, fd_sa));
  s.cosynchronous = s.cosync_residual <= tol;

  s.bisynchronous = s.synchronous && s.cosynchronous;
  s.preserves_residual = distance(f_sx, compose(sa, f));
  s.preserves_sharing = s.preserves_residual <= tol;

  // Bisynchronicity and preserving sharing are equivalent; a clear numeric
  // disagreement signals a broken structural map.
  if (s.bisynchronous != s.preserves_sharing) {
    double gap = s.bisynchronous ? s.preserves_residual
                                 : std::max(s.sync_residual, s.cosync_residual);
    if (gap > 1e3 * tol)
      throw DiagramMismatch("bisynchronous and preserves-sharing disagree");
  }
  return s;
}

double perfect_residual(const Morphism& p, const Morphism& game) {
  return std::max(distance(star(game, p), p), distance(star(p, game), p));
}

bool is_perfect(const Morphism& p, const Morphism& game, double tol) {
  if (!is_game(game, tol).pass(tol)) throw NotAGame("is_perfect needs a game");
  return perfect_residual(p, game) <= tol;
}

Complex loopslide(const Morphism& p) {
  std::vector<Wire> xw = split_pair(p.dom);
  std::vector<Wire> aw = split_pair(p.cod);
  Morphism loop = compose(relabel(bundle_cap(aw), p.cod, {}),
                          compose(p, relabel(bundle_cup(xw), {}, p.dom)));
  return close_scalar(loop);
}

double concurrent_residual(const Morphism& f) {
  std::vector<Wire> xw = split_pair(f.dom);
  std::vector<Wire> aw = split_pair(f.cod);
  Morphism cup_x = relabel(bundle_cup(xw), {}, f.dom);
  Morphism cup_a = relabel(bundle_cup(aw), {}, f.cod);
  return distance(compose(f, cup_x), cup_a);
}

bool is_concurrent(const Morphism& f, double tol) {
  return concurrent_residual(f) <= tol;
}

Complex bks_sync_scalar(const Morphism& p) {
  std::vector<Wire> xw = split_pair(p.dom);
  std::vector<Wire> aw = split_pair(p.cod);
  if (xw.size() != 1 || aw.size() != 1)
    throw WireMismatch("bks_sync_scalar needs single-wire question/answer sets");
  QuantumSetPtr x = xw[0].set, a = aw[0].set;
  int dx = x->dim(), da = a->dim();
  Complex total = 0.0;
  for (int xi = 0; xi < dx; ++xi) {
    int l, i, j;
    x->basis_split(xi, l, i, j);
    double ml = double(x->blocks()[l]);
    for (int ai = 0; ai < da; ++ai) {
      int k, s, t;
      a->basis_split(ai, k, s, t);
      double nk = double(a->blocks()[k]);
      total += p.matrix(ai * da + ai, xi * dx + xi) / (nk * ml);
    }
  }
  return total;
}

}  // namespace qsync
