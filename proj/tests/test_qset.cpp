#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsync/qset.hpp"
#include "qsync/rng.hpp"

using namespace qsync;

namespace {

const double kTol = 1e-9;

const std::vector<std::vector<int>> kProfiles = {{1},    {1, 1}, {1, 1, 1}, {2},
                                                 {2, 1}, {3},    {2, 2}};

}  // namespace

TEST_CASE("classical structural maps") {
  auto c = QuantumSet::make("C", {1, 1});
  // m(|i> (x) |j>) = delta_ij |i>
  Matrix m = mult(c).matrix;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(std::abs(m(k, i * 2 + j) - Complex(i == j && j == k ? 1.0 : 0.0)) < kTol);
  // Delta(|i>) = |i>|i>
  Matrix d = comult(c).matrix;
  CHECK(std::abs(d(0, 0) - Complex(1.0)) < kTol);
  CHECK(std::abs(d(3, 1) - Complex(1.0)) < kTol);
  CHECK(d.cwiseAbs().sum() == doctest::Approx(2.0));
  // eps(|i>) = 1
  Matrix e = counit(c).matrix;
  CHECK(std::abs(e(0, 0) - Complex(1.0)) < kTol);
  CHECK(std::abs(e(0, 1) - Complex(1.0)) < kTol);
}

TEST_CASE("maximally quantum structural maps") {
  auto x = QuantumSet::make("X", {2});
  // u(1) = sqrt(2) I
  Vector u = unit(x).matrix.col(0);
  CHECK(std::abs(u(x->basis_index(0, 0, 0)) - Complex(std::sqrt(2.0))) < kTol);
  CHECK(std::abs(u(x->basis_index(0, 1, 1)) - Complex(std::sqrt(2.0))) < kTol);
  CHECK(std::abs(u(x->basis_index(0, 0, 1))) < kTol);

  // Delta(E_11) = (1/sqrt 2)(E_11 (x) E_11 + E_12 (x) E_21)
  Vector de = comult(x).matrix.col(x->basis_index(0, 0, 0));
  double w = 1.0 / std::sqrt(2.0);
  int d = x->dim();
  CHECK(std::abs(de(x->basis_index(0, 0, 0) * d + x->basis_index(0, 0, 0)) - Complex(w)) < kTol);
  CHECK(std::abs(de(x->basis_index(0, 0, 1) * d + x->basis_index(0, 1, 0)) - Complex(w)) < kTol);
  CHECK(de.cwiseAbs().sum() == doctest::Approx(2 * w));
}

TEST_CASE("axioms hold on the profile grid") {
  for (const auto& blocks : kProfiles) {
    auto q = QuantumSet::make("Q", blocks);
    AxiomReport rep = check_axioms(q, kTol);
    INFO("profile size ", blocks.size());
    CHECK(rep.pass);
  }
}

TEST_CASE("tampered multiplication fails specialness") {
  // dropping the 1/sqrt(n) weight on a [2] block makes m Delta = sqrt(2) Id
  auto q = QuantumSet::make("Q", {2});
  Morphism m = mult(q);
  Morphism u = unit(q);
  m.matrix *= std::sqrt(2.0);
  u.matrix /= std::sqrt(2.0);  // keep unitality
  AxiomReport rep = check_axioms(m, u, kTol);
  CHECK_FALSE(rep.pass);
  CHECK(rep.residuals.at("special") > 0.1);
  CHECK(rep.residuals.at("associativity") < kTol);
  CHECK(rep.residuals.at("unitality_left") < kTol);
}

TEST_CASE("product of quantum sets is a quantum set") {
  auto x = QuantumSet::make("X", {1, 1});
  auto y = QuantumSet::make("Y", {1, 1});
  std::vector<Wire> xy = {Wire::qset(x), Wire::qset(y)};
  CHECK(check_axioms(bundle_mult(xy), bundle_unit(xy), kTol).pass);

  auto q = QuantumSet::make("Q", {2});
  std::vector<Wire> qq = {Wire::qset(q), Wire::qset(q, true)};
  CHECK(check_axioms(bundle_mult(qq), bundle_unit(qq), kTol).pass);

  // eps_prod(u_prod) = dim X dim Y
  Complex s = close_scalar(compose(bundle_counit(qq), bundle_unit(qq)));
  CHECK(std::abs(s - Complex(16.0)) < kTol);
}

TEST_CASE("sharing lemma") {
  for (const auto& blocks : kProfiles) {
    auto q = QuantumSet::make("Q", blocks);
    Morphism s = share(q);
    // self-adjoint projection
    CHECK(approx_equal(dagger(s), s, kTol));
    CHECK(approx_equal(compose(s, s), s, kTol));
    // sharing the unit produces the cup state
    Morphism uu = tensor(unit(q), relabel(unit(q), {}, {Wire::qset(q, true)}));
    Morphism cup_q = relabel(cup(Wire::qset(q)), {}, s.cod);
    CHECK(approx_equal(compose(s, uu), cup_q, kTol));
    // all three Frobenius forms agree
    Morphism id = identity({Wire::qset(q)});
    Morphism left = compose(tensor(id, mult(q)), tensor(comult(q), id));
    Morphism right = compose(tensor(mult(q), id), tensor(id, comult(q)));
    CHECK(approx_equal(relabel(left, s.dom, s.cod), s, kTol));
    CHECK(approx_equal(relabel(right, s.dom, s.cod), s, kTol));
    // share commutes with the right leg of multiplication
    Morphism lhs = compose(relabel(s, {Wire::qset(q), Wire::qset(q)}, {Wire::qset(q), Wire::qset(q)}),
                           tensor(id, mult(q)));
    Morphism rhs = compose(tensor(id, mult(q)),
                           tensor(relabel(s, {Wire::qset(q), Wire::qset(q)},
                                          {Wire::qset(q), Wire::qset(q)}),
                                  id));
    CHECK(approx_equal(lhs, rhs, kTol));
    // Tr(share) = dim
    CHECK(std::abs(s.matrix.trace() - Complex(double(q->dim()))) < kTol);
  }
}

TEST_CASE("dimensions") {
  auto q = QuantumSet::make("Q", {2, 1});
  Dims d = dims(q);
  CHECK(d.dim == 5);
  CHECK(d.classical_dim == 2);
  CHECK(d.classical_dim_diagram == doctest::Approx(2.0).epsilon(1e-12));

  auto c = QuantumSet::make("C", {1, 1, 1});
  Dims dc = dims(c);
  CHECK(dc.dim == 3);
  CHECK(dc.classical_dim == 3);

  auto m3 = QuantumSet::make("M", {3});
  Dims dm = dims(m3);
  CHECK(dm.dim == 9);
  CHECK(dm.classical_dim == 1);

  for (const auto& blocks : kProfiles) {
    auto s = QuantumSet::make("S", blocks);
    CHECK(dims(s).classical_dim_diagram ==
          doctest::Approx(double(blocks.size())).epsilon(1e-12));
    // classical iff dim equals classical dim
    CHECK((dims(s).dim == dims(s).classical_dim) == s->is_classical());
  }
}

TEST_CASE("opposite of opposite is the original") {
  auto q = QuantumSet::make("Q", {2, 1});
  Wire x = Wire::qset(q);
  Morphism sw = wire_swap(x, x);
  Morphism mop = compose(mult(q), sw);
  Morphism mopop = compose(relabel(mop, {x, x}, {x}), sw);
  CHECK(approx_equal(mopop, mult(q), kTol));
}

TEST_CASE("weighted Schur structures") {
  // classical: both signs coincide with the classical quantum set
  auto c = QuantumSet::make("C", {1, 1});
  SchurCfa plus = schur_cfa(c, SchurSign::Plus);
  SchurCfa minus = schur_cfa(c, SchurSign::Minus);
  CHECK(approx_equal(plus.mult, mult(c), kTol));
  CHECK(approx_equal(minus.mult, mult(c), kTol));
  CHECK(approx_equal(plus.unit, unit(c), kTol));

  // the Minus structure is special on every profile
  for (const auto& blocks : kProfiles) {
    auto q = QuantumSet::make("Q", blocks);
    SchurCfa m = schur_cfa(q, SchurSign::Minus);
    CHECK(check_axioms(m.mult, m.unit, kTol).pass);
  }

  // Plus with the quoted sqrt(n) weighting: mult(E11 (x) E11) = sqrt(2) E11,
  // and specialness fails on any block of size >= 2
  auto q2 = QuantumSet::make("Q", {2});
  SchurCfa p2 = schur_cfa(q2, SchurSign::Plus);
  int e11 = q2->basis_index(0, 0, 0);
  Vector col = p2.mult.matrix.col(e11 * q2->dim() + e11);
  CHECK(std::abs(col(e11) - Complex(std::sqrt(2.0))) < kTol);
  AxiomReport rep = check_axioms(p2.mult, p2.unit, kTol);
  CHECK_FALSE(rep.pass);
  CHECK(rep.residuals.at("special") > 0.1);
  CHECK(rep.residuals.at("unitality_left") < kTol);
  CHECK(rep.residuals.at("associativity") < kTol);
}
