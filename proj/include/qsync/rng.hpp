#pragma once

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

namespace qsync {

// Splittable 64-bit generator (splitmix64). Deterministic across platforms,
// unlike the std distributions, so suite reports are reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Child generator independent of subsequent draws from this one.
  Rng split() { return Rng(next() ^ 0x6a09e667f3bcc909ULL); }

  // Uniform on [0, 1).
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  int uniform_int(int n) { return int(next() % uint64_t(n)); }

  double gaussian() {
    // Box-Muller; avoids platform-dependent std::normal_distribution.
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> complex_gaussian() {
    return {gaussian(), gaussian()};
  }

  Eigen::VectorXcd state_vector(int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_gaussian();
    v.normalize();
    return v;
  }

  // Haar-ish unitary from the QR decomposition of a Ginibre matrix.
  Eigen::MatrixXcd unitary(int dim) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = complex_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
      std::complex<double> d = r(i, i);
      double a = std::abs(d);
      q.col(i) *= (a > 1e-15) ? d / a : 1.0;
    }
    return q;
  }

 private:
  uint64_t state_;
};

}  // namespace qsync
