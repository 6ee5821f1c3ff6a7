#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qha/operator_core.hpp"

namespace qha {

// Seedable generator for reproducible ensembles. The algorithm is pinned so
// another implementation of the same file formats can reproduce runs:
// mt19937_64 raw words; uniform(0,1] = ((word >> 11) + 1) * 2^-53; normals by
// Box-Muller sqrt(-2 ln u1) cos(2 pi u2); complex normals (n1 + i n2)/sqrt(2).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t word() { return gen_(); }

  double uniform01() {  // in (0, 1]
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal();
  cplx cnormal();

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  int below(int bound);

  Signal random_signal(const GroupParams& p);
  OperatorMatrix random_operator(const GroupParams& p);
  PhaseFunction random_phase_function(const GroupParams& p);

  // Function supported on exactly `support_size` points, with moduli in
  // [0.5, 1.5] and random phases; used to craft operators with prescribed
  // Fourier-Wigner zero sets.
  PhaseFunction random_support_function(const GroupParams& p, int support_size);

 private:
  std::mt19937_64 gen_;
};

}  // namespace qha
