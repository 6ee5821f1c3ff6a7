#pragma once

#include <map>
#include <vector>

#include "qha/phase_space.hpp"

namespace qha {

// Element of l^2(Z_N); plain counting measure, <psi,phi> = sum psi conj(phi).
struct Signal {
  GroupParams params;
  CVec values;

  Signal() = default;
  explicit Signal(const GroupParams& p) : params(p), values(CVec::Zero(p.n)) {}
};

Signal basis_delta(const GroupParams& p, int t);

cplx inner(const Signal& a, const Signal& b);
double signal_norm(const Signal& a);

// (T_x psi)(t) = psi(t - x), cyclically.
Signal translate_signal(const Signal& psi, int x);

// (M_w psi)(t) = exp(2*pi*i*w*t/N) psi(t).
Signal modulate_signal(const Signal& psi, int w);

// pi(z) psi = M_w T_x psi, applied without materializing the matrix.
Signal apply_tf_shift(PhasePoint z, const Signal& psi);

// (P psi)(t) = psi(-t).
Signal parity_signal(const Signal& psi);

// Bounded (= trace-class) operator on l^2(Z_N) as a dense N x N matrix.
struct OperatorMatrix {
  GroupParams params;
  CMat entries;

  OperatorMatrix() = default;
  explicit OperatorMatrix(const GroupParams& p)
      : params(p), entries(CMat::Zero(p.n, p.n)) {}
  OperatorMatrix(const GroupParams& p, CMat m) : params(p), entries(std::move(m)) {}
};

OperatorMatrix identity_operator(const GroupParams& p);

// Unitary matrix of the time-frequency shift pi(z) = M_w T_x.
OperatorMatrix tf_shift_matrix(const GroupParams& p, PhasePoint z);

// A-check = P A P. Involutive and a Schatten isometry. In this discrete model
// pi(z)-check equals pi(-z) exactly, with unit phase (pinned at N=3; see the
// kParityConjugationPhase regression test).
OperatorMatrix parity_conjugate(const OperatorMatrix& a);

// The phase c in pi(z)-check = c * pi(-z), determined by brute force at N=3.
inline constexpr cplx kParityConjugationPhase{1.0, 0.0};

// alpha_z(A) = pi(z) A pi(z)^*.
OperatorMatrix alpha_shift(const OperatorMatrix& a, PhasePoint z);

// (xi (x) eta)(zeta) = <zeta, eta> xi; entries xi(s) conj(eta(t)).
OperatorMatrix rank_one(const Signal& xi, const Signal& eta);

cplx trace(const OperatorMatrix& a);
OperatorMatrix op_adjoint(const OperatorMatrix& a);

// Hilbert-Schmidt pairing tr(a b^*); antilinear in the second slot.
cplx hs_inner(const OperatorMatrix& a, const OperatorMatrix& b);

double op_max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

// Descending singular values of an arbitrary dense complex matrix.
RVec matrix_singular_values(const CMat& m);

// Schatten p-norm from singular values; p = infinity gives the largest one.
double matrix_schatten_norm(const CMat& m, double p);
double schatten_norm(const OperatorMatrix& a, double p);

// Relative threshold under which singular values count as zero for rank
// decisions (the translate-span machinery overrides it with its own).
inline constexpr double kRankRelTol = 1e-10;

int matrix_numerical_rank(const CMat& m, double rel_tol = kRankRelTol);

struct SchattenReport {
  RVec singular_values;             // descending, nonnegative
  std::map<double, double> norms;   // p -> Schatten p-norm; kInf allowed
};

SchattenReport schatten_report(const OperatorMatrix& a, const std::vector<double>& ps);

// Row-major linearization of matrix entries: index = row*N + col.
CVec vec_op(const OperatorMatrix& a);
OperatorMatrix unvec_op(const GroupParams& p, const CVec& v);

}  // namespace qha
