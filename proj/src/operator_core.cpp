#include "qha/operator_core.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace qha {

Signal basis_delta(const GroupParams& p, int t) {
  Signal s(p);
  s.values(mod_reduce(t, p.n)) = 1.0;
  return s;
}

cplx inner(const Signal& a, const Signal& b) {
  require_same_params(a.params, b.params, "inner");
  return (a.values.array() * b.values.array().conjugate()).sum();
}

double signal_norm(const Signal& a) { return a.values.norm(); }

Signal translate_signal(const Signal& psi, int x) {
  const int n = psi.params.n;
  Signal out(psi.params);
  for (int t = 0; t < n; ++t) {
    out.values(t) = psi.values(mod_reduce(static_cast<long long>(t) - x, n));
  }
  return out;
}

Signal modulate_signal(const Signal& psi, int w) {
  const int n = psi.params.n;
  Signal out(psi.params);
  for (int t = 0; t < n; ++t) {
    out.values(t) = character(psi.params, static_cast<long long>(w) * t) * psi.values(t);
  }
  return out;
}

Signal apply_tf_shift(PhasePoint z, const Signal& psi) {
  const int n = psi.params.n;
  Signal out(psi.params);
  for (int t = 0; t < n; ++t) {
    out.values(t) = character(psi.params, static_cast<long long>(z.w) * t) *
                    psi.values(mod_reduce(static_cast<long long>(t) - z.x, n));
  }
  return out;
}

Signal parity_signal(const Signal& psi) {
  const int n = psi.params.n;
  Signal out(psi.params);
  for (int t = 0; t < n; ++t) out.values(t) = psi.values(mod_reduce(-t, n));
  return out;
}

OperatorMatrix identity_operator(const GroupParams& p) {
  return {p, CMat::Identity(p.n, p.n)};
}

OperatorMatrix tf_shift_matrix(const GroupParams& p, PhasePoint z) {
  const int n = p.n;
  const PhasePoint zr = reduce(p, z);
  OperatorMatrix m(p);
  for (int s = 0; s < n; ++s) {
    m.entries(s, mod_reduce(static_cast<long long>(s) - zr.x, n)) =
        character(p, static_cast<long long>(zr.w) * s);
  }
  return m;
}

OperatorMatrix parity_conjugate(const OperatorMatrix& a) {
  const int n = a.params.n;
  OperatorMatrix out(a.params);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out.entries(r, c) = a.entries(mod_reduce(-r, n), mod_reduce(-c, n));
    }
  }
  return out;
}

OperatorMatrix alpha_shift(const OperatorMatrix& a, PhasePoint z) {
  const int n = a.params.n;
  const PhasePoint zr = reduce(a.params, z);
  OperatorMatrix out(a.params);
  // (alpha_z A)(r,c) = exp(2 pi i w (r-c)/N) A(r-x, c-x)
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out.entries(r, c) =
          character(a.params, static_cast<long long>(zr.w) * (r - c)) *
          a.entries(mod_reduce(static_cast<long long>(r) - zr.x, n),
                    mod_reduce(static_cast<long long>(c) - zr.x, n));
    }
  }
  return out;
}

OperatorMatrix rank_one(const Signal& xi, const Signal& eta) {
  require_same_params(xi.params, eta.params, "rank_one");
  return {xi.params, xi.values * eta.values.adjoint()};
}

cplx trace(const OperatorMatrix& a) { return a.entries.trace(); }

OperatorMatrix op_adjoint(const OperatorMatrix& a) { return {a.params, a.entries.adjoint()}; }

cplx hs_inner(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_params(a.params, b.params, "hs_inner");
  return (a.entries.array() * b.entries.array().conjugate()).sum();
}

double op_max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_params(a.params, b.params, "op_max_abs_diff");
  return (a.entries - b.entries).cwiseAbs().maxCoeff();
}

RVec matrix_singular_values(const CMat& m) {
  Eigen::BDCSVD<CMat> svd(m);
  return svd.singularValues();
}

double matrix_schatten_norm(const CMat& m, double p) {
  if (p != kInf && p < 1.0) {
    throw InvalidExponentError("Schatten norm needs p >= 1, got " + std::to_string(p));
  }
  const RVec sv = matrix_singular_values(m);
  if (p == kInf) return sv.size() > 0 ? sv(0) : 0.0;
  double acc = 0.0;
  for (int i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
  return std::pow(acc, 1.0 / p);
}

double schatten_norm(const OperatorMatrix& a, double p) {
  return matrix_schatten_norm(a.entries, p);
}

int matrix_numerical_rank(const CMat& m, double rel_tol) {
  const RVec sv = matrix_singular_values(m);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rel_tol * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  return rank;
}

SchattenReport schatten_report(const OperatorMatrix& a, const std::vector<double>& ps) {
  SchattenReport rep;
  rep.singular_values = matrix_singular_values(a.entries);
  for (double p : ps) {
    if (p != kInf && p < 1.0) {
      throw InvalidExponentError("Schatten norm needs p >= 1, got " + std::to_string(p));
    }
    if (p == kInf) {
      rep.norms[p] = rep.singular_values.size() > 0 ? rep.singular_values(0) : 0.0;
    } else {
      double acc = 0.0;
      for (int i = 0; i < rep.singular_values.size(); ++i) {
        acc += std::pow(rep.singular_values(i), p);
      }
      rep.norms[p] = std::pow(acc, 1.0 / p);
    }
  }
  return rep;
}

CVec vec_op(const OperatorMatrix& a) {
  const int n = a.params.n;
  CVec v(n * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) v(r * n + c) = a.entries(r, c);
  }
  return v;
}

OperatorMatrix unvec_op(const GroupParams& p, const CVec& v) {
  if (v.size() != static_cast<long>(p.n) * p.n) {
    throw ParamMismatchError("unvec_op: vector length does not match N^2");
  }
  OperatorMatrix a(p);
  for (int r = 0; r < p.n; ++r) {
    for (int c = 0; c < p.n; ++c) a.entries(r, c) = v(r * p.n + c);
  }
  return a;
}

}  // namespace qha
