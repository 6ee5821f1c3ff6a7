#include "qha/convolutions.hpp"

#include <vector>

namespace qha {

OperatorMatrix conv_fun_op(const PhaseFunction& f, const OperatorMatrix& s) {
  require_same_params(f.params, s.params, "conv_fun_op");
  const int n = f.params.n;
  OperatorMatrix out(f.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      const cplx coeff = f.values(x, w) / static_cast<double>(n);
      if (coeff == cplx{0.0, 0.0}) continue;
      // alpha_z(S)(r,c) = e^{2 pi i w (r-c)/N} S(r-x, c-x)
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          out.entries(r, c) += coeff *
                               character(f.params, static_cast<long long>(w) * (r - c)) *
                               s.entries(mod_reduce(static_cast<long long>(r) - x, n),
                                         mod_reduce(static_cast<long long>(c) - x, n));
        }
      }
    }
  }
  return out;
}

PhaseFunction conv_op_op(const OperatorMatrix& s, const OperatorMatrix& t) {
  require_same_params(s.params, t.params, "conv_op_op");
  const int n = s.params.n;
  const OperatorMatrix tc = parity_conjugate(t);
  PhaseFunction out(s.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      // tr(S alpha_z(T-check)) = sum_{a,b} S(a,b) e^{2 pi i w (b-a)/N} Tc(b-x, a-x)
      cplx acc = 0.0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          acc += s.entries(a, b) *
                 character(s.params, static_cast<long long>(w) * (b - a)) *
                 tc.entries(mod_reduce(static_cast<long long>(b) - x, n),
                            mod_reduce(static_cast<long long>(a) - x, n));
        }
      }
      out.values(x, w) = acc;
    }
  }
  return out;
}

PhaseFunction conv_fun_fun(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_params(f.params, g.params, "conv_fun_fun");
  const int n = f.params.n;
  PhaseFunction out(f.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      cplx acc = 0.0;
      for (int xp = 0; xp < n; ++xp) {
        for (int wp = 0; wp < n; ++wp) {
          acc += f.values(mod_reduce(static_cast<long long>(x) - xp, n),
                          mod_reduce(static_cast<long long>(w) - wp, n)) *
                 g.values(xp, wp);
        }
      }
      out.values(x, w) = acc / static_cast<double>(n);
    }
  }
  return out;
}

ConvMapMatrix build_conv_map(const OperatorMatrix& s, ConvMapKind kind, int cap) {
  const int n = s.params.n;
  const int dim = n * n;
  if (dim > cap) {
    throw ResourceLimitError("conv map assembly needs N^2 = " + std::to_string(dim) +
                             " > cap " + std::to_string(cap));
  }
  ConvMapMatrix map{s.params, kind, CMat::Zero(dim, dim)};
  if (kind == ConvMapKind::kFunctionToOperator) {
    // Column for the delta at z is vec((1/N) alpha_z(S)).
    for (int x = 0; x < n; ++x) {
      for (int w = 0; w < n; ++w) {
        const OperatorMatrix az = alpha_shift(s, {x, w});
        map.matrix.col(x * n + w) = vec_op(az) / static_cast<double>(n);
      }
    }
  } else {
    // (B_S T)(z) = T * (S-check)^* (z) = tr(T alpha_z(S^*)); the row at z has
    // the entries of alpha_z(S^*) transposed over (r,c).
    const OperatorMatrix sa = op_adjoint(s);
    for (int x = 0; x < n; ++x) {
      for (int w = 0; w < n; ++w) {
        const OperatorMatrix az = alpha_shift(sa, {x, w});
        for (int r = 0; r < n; ++r) {
          for (int c = 0; c < n; ++c) {
            map.matrix(x * n + w, r * n + c) = az.entries(c, r);
          }
        }
      }
    }
  }
  return map;
}

CVec apply_conv_map(const ConvMapMatrix& map, const CVec& v) {
  if (v.size() != map.matrix.cols()) {
    throw ParamMismatchError("apply_conv_map: vector length does not match map dimension");
  }
  return map.matrix * v;
}

}  // namespace qha
