#pragma once

#include "qha/transforms.hpp"

namespace qha {

// A_f psi = (1/N) sum_z f(z) V_{w1} psi(z) pi(z) w2, assembled column by
// column from the basis deltas. Equals conv_fun_op(f, rank_one(w2, w1)).
OperatorMatrix localization_operator(const PhaseFunction& f, const Signal& w1,
                                     const Signal& w2);

// B T(z) = <T pi(z) w1, pi(z) w2>. Equals conv_op_op(T, rank_one(w1-check, w2-check)).
PhaseFunction berezin_transform(const OperatorMatrix& t, const Signal& w1,
                                const Signal& w2);

// Twisted Weyl symbol of the localization operator: F_sigma(f) * A(w2, w1)
// pointwise. If residual_out is given it receives the max deviation from
// fourier_wigner(localization_operator(f, w1, w2)), computed independently.
PhaseFunction locop_twisted_symbol(const PhaseFunction& f, const Signal& w1,
                                   const Signal& w2, double* residual_out = nullptr);

}  // namespace qha
