#pragma once

#include "qha/operator_core.hpp"

namespace qha {

// V_phi psi(x,w) = <psi, pi(z) phi> = sum_t psi(t) conj(phi(t-x)) e^{-2 pi i w t / N}.
PhaseFunction stft(const Signal& psi, const Signal& phi);

// A(psi,phi)(z) = half_phase(z) * V_phi psi(z).
PhaseFunction ambiguity(const Signal& psi, const Signal& phi);

// W(psi,phi) = F_sigma A(psi,phi).
PhaseFunction cross_wigner(const Signal& psi, const Signal& phi);

// F_W S(z) = conj(half_phase(z)) * tr(pi(-z) S).
//
// With the measure weight 1/N on phase space this is a unitary map from
// (OperatorMatrix, Hilbert-Schmidt) onto L^2(nu). The sign convention (conj
// of the half-phase here, and again in rho below) is the unique one of the
// four candidates for which rho inverts F_W and rho(f natural g) =
// rho(f) rho(g); pinned by the N=3 oracle test.
PhaseFunction fourier_wigner(const OperatorMatrix& s);

// Inverse of fourier_wigner: expansion of f in the orthogonal family
// z -> half_phase(z) pi(-z)^*. Coincides with the superposition formula
// rho(f) = (1/N) sum_z f(z) conj(half_phase(z)) pi(z), which is kept as a
// tested theorem rather than the definition.
OperatorMatrix rho(const PhaseFunction& f);

// (f natural g)(z) = (1/N) sum_{z'} f(z-z') g(z') e^{2 pi i hinv sigma(z,z')/N};
// the product making rho multiplicative.
PhaseFunction twisted_convolution(const PhaseFunction& f, const PhaseFunction& g);

// L_f = rho(F_sigma f).
OperatorMatrix weyl_transform(const PhaseFunction& f);

// F_sigma(F_W A); left inverse of weyl_transform.
PhaseFunction weyl_symbol(const OperatorMatrix& a);

}  // namespace qha
