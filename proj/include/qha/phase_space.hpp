#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qha/errors.hpp"

namespace qha {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Parameters of the phase space Z_N x Z_N. The modulus must be odd so that 2
// is invertible mod N; its inverse (N+1)/2 defines the discrete half-phase.
// Even moduli are rejected outright rather than approximated.
struct GroupParams {
  int n = 0;

  GroupParams() = default;
  explicit GroupParams(int modulus);

  // Multiplicative inverse of 2 mod n.
  int half_inverse() const { return (n + 1) / 2; }

  bool operator==(const GroupParams&) const = default;
};

void require_same_params(const GroupParams& a, const GroupParams& b, const char* what);

// Reduce an integer into [0, n).
int mod_reduce(long long v, int n);

// A point z = (x, w) of Z_N x Z_N; x is the time shift, w the frequency shift.
struct PhasePoint {
  int x = 0;
  int w = 0;

  bool operator==(const PhasePoint&) const = default;
};

PhasePoint reduce(const GroupParams& p, PhasePoint z);
PhasePoint negate(const GroupParams& p, PhasePoint z);
PhasePoint add(const GroupParams& p, PhasePoint a, PhasePoint b);
PhasePoint sub(const GroupParams& p, PhasePoint a, PhasePoint b);

// Standard symplectic form (w1*x2 - w2*x1) mod N, returned in [0, N).
int symplectic_form(const GroupParams& p, PhasePoint a, PhasePoint b);

// exp(2*pi*i*k/N) for any integer k.
cplx character(const GroupParams& p, long long k);

// Discrete stand-in for exp(pi*i*x*w): exp(2*pi*i*hinv*x*w/N) with
// hinv = (N+1)/2, so that half_phase(z)^2 = exp(2*pi*i*x*w/N).
cplx half_phase(const GroupParams& p, PhasePoint z);

// Complex function on Z_N x Z_N carrying the measure weight 1/N.
// values(x, w) indexes time shift by row and frequency shift by column.
struct PhaseFunction {
  GroupParams params;
  CMat values;

  PhaseFunction() = default;
  explicit PhaseFunction(const GroupParams& p)
      : params(p), values(CMat::Zero(p.n, p.n)) {}

  cplx& at(PhasePoint z) { return values(z.x, z.w); }
  cplx at(PhasePoint z) const { return values(z.x, z.w); }
};

// (F_sigma f)(z) = (1/N) sum_{z'} f(z') exp(-2*pi*i*sigma(z,z')/N).
// Involutive: applying it twice returns the input.
PhaseFunction symplectic_fourier(const PhaseFunction& f);

// (T_z f)(z') = f(z' - z).
PhaseFunction phase_translate(const PhaseFunction& f, PhasePoint z);

// (1/N) sum_z f(z); the integral against the measure.
cplx phase_integral(const PhaseFunction& f);

// f-check: z -> f(-z).
PhaseFunction phase_parity(const PhaseFunction& f);

// f-star: z -> conj(f(z)).
PhaseFunction phase_conj(const PhaseFunction& f);

// L^p norm under the 1/N measure; p = infinity gives the max modulus.
double phase_lp_norm(const PhaseFunction& f, double p);

// (1/N) sum_z f(z) conj(g(z)); antilinear in the second slot.
cplx phase_inner(const PhaseFunction& f, const PhaseFunction& g);

double phase_max_abs_diff(const PhaseFunction& f, const PhaseFunction& g);

// Row-major linearization on (x, w): index = x*N + w.
CVec vec_phase(const PhaseFunction& f);
PhaseFunction unvec_phase(const GroupParams& p, const CVec& v);

}  // namespace qha
