#include "qha/tauberian.hpp"

#include <algorithm>

namespace qha {

std::vector<PhasePoint> zero_set(const OperatorMatrix& s, double tol) {
  const PhaseFunction fw = fourier_wigner(s);
  const int n = s.params.n;
  const double peak = fw.values.cwiseAbs().maxCoeff();
  std::vector<PhasePoint> zeros;
  if (peak == 0.0) {
    for (int x = 0; x < n; ++x) {
      for (int w = 0; w < n; ++w) zeros.push_back({x, w});
    }
    return zeros;
  }
  const double cut = tol * peak;
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      if (std::abs(fw.values(x, w)) <= cut) zeros.push_back({x, w});
    }
  }
  return zeros;
}

int translate_span_rank(const OperatorMatrix& s, int cap) {
  const int n = s.params.n;
  const int dim = n * n;
  if (dim > cap) {
    throw ResourceLimitError("translate span assembly needs N^2 = " + std::to_string(dim) +
                             " > cap " + std::to_string(cap));
  }
  CMat cols(dim, dim);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) cols.col(x * n + w) = vec_op(alpha_shift(s, {x, w}));
  }
  return matrix_numerical_rank(cols, kSpanRankRelTol);
}

int function_translate_span_rank(const PhaseFunction& f, int cap) {
  const int n = f.params.n;
  const int dim = n * n;
  if (dim > cap) {
    throw ResourceLimitError("translate span assembly needs N^2 = " + std::to_string(dim) +
                             " > cap " + std::to_string(cap));
  }
  CMat cols(dim, dim);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) cols.col(x * n + w) = vec_phase(phase_translate(f, {x, w}));
  }
  return matrix_numerical_rank(cols, kSpanRankRelTol);
}

RegularityReport regularity_report(const OperatorMatrix& s, double tol, int cap) {
  RegularityReport rep;
  rep.params = s.params;
  rep.tol = tol;
  rep.zero_set = zero_set(s, tol);
  const int dim = s.params.n * s.params.n;
  rep.support_size = dim - static_cast<int>(rep.zero_set.size());
  rep.degenerate = rep.support_size == 0;
  rep.regular = rep.zero_set.empty();
  rep.translate_rank = translate_span_rank(s, cap);
  const ConvMapMatrix map_a = build_conv_map(s, ConvMapKind::kFunctionToOperator, cap);
  const ConvMapMatrix map_b = build_conv_map(s, ConvMapKind::kOperatorToFunction, cap);
  rep.kernel_dim_A = dim - matrix_numerical_rank(map_a.matrix, kSpanRankRelTol);
  rep.kernel_dim_B = dim - matrix_numerical_rank(map_b.matrix, kSpanRankRelTol);
  rep.arveson_support = arveson_spectrum(s, tol);
  return rep;
}

std::vector<PhasePoint> arveson_spectrum(const OperatorMatrix& s, double tol) {
  const PhaseFunction fw = fourier_wigner(s);
  const int n = s.params.n;
  const double peak = fw.values.cwiseAbs().maxCoeff();
  std::vector<PhasePoint> support;
  if (peak == 0.0) return support;
  const double cut = tol * peak;
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      // Support of z -> F_W S(-z).
      if (std::abs(fw.values(mod_reduce(-x, n), mod_reduce(-w, n))) > cut) {
        support.push_back({x, w});
      }
    }
  }
  return support;
}

RegularityReport localization_density_check(const Signal& w1, const Signal& w2,
                                            double tol, int cap) {
  require_same_params(w1.params, w2.params, "localization_density_check");
  const OperatorMatrix s = rank_one(w2, w1);
  RegularityReport rep = regularity_report(s, tol, cap);

  const PhaseFunction amb = ambiguity(w2, w1);
  const double peak = amb.values.cwiseAbs().maxCoeff();
  std::vector<PhasePoint> amb_zeros;
  const int n = s.params.n;
  if (peak == 0.0) {
    for (int x = 0; x < n; ++x) {
      for (int w = 0; w < n; ++w) amb_zeros.push_back({x, w});
    }
  } else {
    const double cut = tol * peak;
    for (int x = 0; x < n; ++x) {
      for (int w = 0; w < n; ++w) {
        if (std::abs(amb.values(x, w)) <= cut) amb_zeros.push_back({x, w});
      }
    }
  }
  rep.ambiguity_zeroset_match = amb_zeros == rep.zero_set;
  return rep;
}

}  // namespace qha
