#include "qha/transforms.hpp"

#include <cmath>
#include <vector>

namespace qha {

namespace {

std::vector<cplx> character_table(const GroupParams& p) {
  std::vector<cplx> table(p.n);
  for (int k = 0; k < p.n; ++k) table[k] = std::polar(1.0, 2.0 * kPi * k / p.n);
  return table;
}

}  // namespace

PhaseFunction stft(const Signal& psi, const Signal& phi) {
  require_same_params(psi.params, phi.params, "stft");
  const int n = psi.params.n;
  const auto table = character_table(psi.params);
  PhaseFunction v(psi.params);
  std::vector<cplx> win(n);
  for (int x = 0; x < n; ++x) {
    // One length-N DFT per time shift, in a fixed summation order.
    for (int t = 0; t < n; ++t) {
      win[t] = psi.values(t) * std::conj(phi.values(mod_reduce(static_cast<long long>(t) - x, n)));
    }
    for (int w = 0; w < n; ++w) {
      cplx acc = 0.0;
      for (int t = 0; t < n; ++t) {
        acc += win[t] * std::conj(table[mod_reduce(static_cast<long long>(w) * t, n)]);
      }
      v.values(x, w) = acc;
    }
  }
  return v;
}

PhaseFunction ambiguity(const Signal& psi, const Signal& phi) {
  PhaseFunction a = stft(psi, phi);
  const int n = a.params.n;
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) a.values(x, w) *= half_phase(a.params, {x, w});
  }
  return a;
}

PhaseFunction cross_wigner(const Signal& psi, const Signal& phi) {
  return symplectic_fourier(ambiguity(psi, phi));
}

PhaseFunction fourier_wigner(const OperatorMatrix& s) {
  const int n = s.params.n;
  const auto table = character_table(s.params);
  PhaseFunction out(s.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      // tr(pi(-z) S) = sum_t e^{-2 pi i w t / N} S((t+x)%N, t)
      cplx tr = 0.0;
      for (int t = 0; t < n; ++t) {
        tr += std::conj(table[mod_reduce(static_cast<long long>(w) * t, n)]) *
              s.entries(mod_reduce(static_cast<long long>(t) + x, n), t);
      }
      out.values(x, w) = std::conj(half_phase(s.params, {x, w})) * tr;
    }
  }
  return out;
}

OperatorMatrix rho(const PhaseFunction& f) {
  const int n = f.params.n;
  const auto table = character_table(f.params);
  OperatorMatrix out(f.params);
  // Coefficient of f(z) lands on the entries of half_phase(z) pi(-z)^*, i.e.
  // rho(f)((t+x)%N, t) += (1/N) f(z) half_phase(z) e^{2 pi i w t / N}.
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      const cplx coeff = f.values(x, w) * half_phase(f.params, {x, w}) / static_cast<double>(n);
      for (int t = 0; t < n; ++t) {
        out.entries(mod_reduce(static_cast<long long>(t) + x, n), t) +=
            coeff * table[mod_reduce(static_cast<long long>(w) * t, n)];
      }
    }
  }
  return out;
}

PhaseFunction twisted_convolution(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_params(f.params, g.params, "twisted_convolution");
  const int n = f.params.n;
  const int hinv = f.params.half_inverse();
  const auto table = character_table(f.params);
  PhaseFunction out(f.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      cplx acc = 0.0;
      for (int xp = 0; xp < n; ++xp) {
        for (int wp = 0; wp < n; ++wp) {
          const long long sig = static_cast<long long>(w) * xp - static_cast<long long>(wp) * x;
          acc += f.values(mod_reduce(static_cast<long long>(x) - xp, n),
                          mod_reduce(static_cast<long long>(w) - wp, n)) *
                 g.values(xp, wp) * table[mod_reduce(hinv * sig, n)];
        }
      }
      out.values(x, w) = acc / static_cast<double>(n);
    }
  }
  return out;
}

OperatorMatrix weyl_transform(const PhaseFunction& f) {
  return rho(symplectic_fourier(f));
}

PhaseFunction weyl_symbol(const OperatorMatrix& a) {
  return symplectic_fourier(fourier_wigner(a));
}

}  // namespace qha
