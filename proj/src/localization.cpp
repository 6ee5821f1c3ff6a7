#include "qha/localization.hpp"

namespace qha {

OperatorMatrix localization_operator(const PhaseFunction& f, const Signal& w1,
                                     const Signal& w2) {
  require_same_params(f.params, w1.params, "localization_operator");
  require_same_params(f.params, w2.params, "localization_operator");
  const int n = f.params.n;
  OperatorMatrix out(f.params);
  for (int t = 0; t < n; ++t) {
    const PhaseFunction v = stft(basis_delta(f.params, t), w1);
    for (int x = 0; x < n; ++x) {
      for (int w = 0; w < n; ++w) {
        const cplx coeff = f.values(x, w) * v.values(x, w) / static_cast<double>(n);
        if (coeff == cplx{0.0, 0.0}) continue;
        for (int s = 0; s < n; ++s) {
          // (pi(z) w2)(s) = e^{2 pi i w s / N} w2(s - x)
          out.entries(s, t) += coeff *
                               character(f.params, static_cast<long long>(w) * s) *
                               w2.values(mod_reduce(static_cast<long long>(s) - x, n));
        }
      }
    }
  }
  return out;
}

PhaseFunction berezin_transform(const OperatorMatrix& t, const Signal& w1,
                                const Signal& w2) {
  require_same_params(t.params, w1.params, "berezin_transform");
  require_same_params(t.params, w2.params, "berezin_transform");
  const int n = t.params.n;
  PhaseFunction out(t.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      const Signal u1 = apply_tf_shift({x, w}, w1);
      const Signal u2 = apply_tf_shift({x, w}, w2);
      // Eigen's dot conjugates its left operand, so this is sum (T u1) conj(u2).
      out.values(x, w) = u2.values.dot(t.entries * u1.values);
    }
  }
  return out;
}

PhaseFunction locop_twisted_symbol(const PhaseFunction& f, const Signal& w1,
                                   const Signal& w2, double* residual_out) {
  PhaseFunction symbol = symplectic_fourier(f);
  const PhaseFunction amb = ambiguity(w2, w1);
  symbol.values = symbol.values.array() * amb.values.array();
  if (residual_out != nullptr) {
    const PhaseFunction direct = fourier_wigner(localization_operator(f, w1, w2));
    *residual_out = phase_max_abs_diff(symbol, direct);
  }
  return symbol;
}

}  // namespace qha
