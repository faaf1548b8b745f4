// Seeded sampling of field elements, vectors and forms over GF(p).
#pragma once

#include <cstdint>
#include <random>

#include "multisecant/linalg.hpp"
#include "multisecant/polynomial.hpp"

namespace msec {

class Sampler {
public:
  Sampler(std::uint64_t seed, std::uint32_t p) : rng_(seed), p_(p), dist_(0, p - 1) {}

  std::uint32_t prime() const { return p_; }
  Fp element() { return Fp::from_residue(dist_(rng_), p_); }
  Fp nonzero() {
    while (true)
      if (Fp c = element(); !c.is_zero()) return c;
  }
  VectorP vector(Eigen::Index n) {
    VectorP v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = element();
    return v;
  }
  MatrixP matrix(Eigen::Index rows, Eigen::Index cols) {
    MatrixP m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = element();
    return m;
  }
  // Uniform random invertible matrix (rejection sampling).
  MatrixP invertible(Eigen::Index n) {
    while (true) {
      MatrixP m = matrix(n, n);
      if (rank(m) == n) return m;
    }
  }
  // Dense form of the given degree in the variables listed (all of the
  // ring's variables when `vars` is empty).
  PolyP form(const RingPtr<Fp>& ring, int degree, std::vector<int> vars = {});
  // Affine-linear polynomial c0 + sum c_i x_i over the listed variables.
  PolyP affine_linear(const RingPtr<Fp>& ring, const std::vector<int>& vars);

  std::mt19937_64& engine() { return rng_; }
  std::uint64_t next_seed() { return rng_(); }

private:
  std::mt19937_64 rng_;
  std::uint32_t p_;
  std::uniform_int_distribution<std::uint32_t> dist_;
};

}  // namespace msec
