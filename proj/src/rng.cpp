#include "qha/rng.hpp"

#include <cmath>

namespace qha {

double Rng::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

cplx Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

int Rng::below(int bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(bound);
  std::uint64_t w;
  do {
    w = gen_();
  } while (w >= limit);
  return static_cast<int>(w % static_cast<std::uint64_t>(bound));
}

Signal Rng::random_signal(const GroupParams& p) {
  Signal s(p);
  for (int t = 0; t < p.n; ++t) s.values(t) = cnormal();
  return s;
}

OperatorMatrix Rng::random_operator(const GroupParams& p) {
  OperatorMatrix a(p);
  for (int r = 0; r < p.n; ++r) {
    for (int c = 0; c < p.n; ++c) a.entries(r, c) = cnormal();
  }
  return a;
}

PhaseFunction Rng::random_phase_function(const GroupParams& p) {
  PhaseFunction f(p);
  for (int x = 0; x < p.n; ++x) {
    for (int w = 0; w < p.n; ++w) f.values(x, w) = cnormal();
  }
  return f;
}

PhaseFunction Rng::random_support_function(const GroupParams& p, int support_size) {
  const int total = p.n * p.n;
  if (support_size < 0 || support_size > total) {
    throw InvalidExponentError("support size out of range");
  }
  std::vector<int> idx(total);
  for (int i = 0; i < total; ++i) idx[i] = i;
  for (int i = total - 1; i > 0; --i) std::swap(idx[i], idx[below(i + 1)]);

  PhaseFunction f(p);
  for (int k = 0; k < support_size; ++k) {
    const int x = idx[k] / p.n;
    const int w = idx[k] % p.n;
    f.values(x, w) = std::polar(0.5 + uniform01(), 2.0 * kPi * uniform01());
  }
  return f;
}

}  // namespace qha
