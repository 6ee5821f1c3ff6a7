#pragma once

#include "qha/operator_core.hpp"

namespace qha {

// f * S = (1/N) sum_z f(z) alpha_z(S); an operator.
OperatorMatrix conv_fun_op(const PhaseFunction& f, const OperatorMatrix& s);

// (S * T)(z) = tr(S alpha_z(T-check)); a function on phase space.
PhaseFunction conv_op_op(const OperatorMatrix& s, const OperatorMatrix& t);

// Ordinary group convolution on the phase space with the 1/N measure:
// (f * g)(z) = (1/N) sum_{z'} f(z-z') g(z').
PhaseFunction conv_fun_fun(const PhaseFunction& f, const PhaseFunction& g);

enum class ConvMapKind {
  kFunctionToOperator,  // f |-> f * S
  kOperatorToFunction,  // T |-> T * (S-check)^*  ( = z -> tr(T alpha_z S^*) )
};

inline constexpr int kConvMapDefaultCap = 4096;  // max N^2 for dense assembly

// Dense N^2 x N^2 matrix of one of the two convolution maps, under the fixed
// row-major orderings of vec_phase / vec_op. Columns are images of basis
// elements; above the cap the dense build is refused (the matrix-free
// conv_fun_op / conv_op_op remain available).
struct ConvMapMatrix {
  GroupParams params;
  ConvMapKind kind;
  CMat matrix;
};

ConvMapMatrix build_conv_map(const OperatorMatrix& s, ConvMapKind kind,
                             int cap = kConvMapDefaultCap);

// Apply a built map to a function (kFunctionToOperator) or operator
// (kOperatorToFunction) and return the linearized image.
CVec apply_conv_map(const ConvMapMatrix& map, const CVec& v);

}  // namespace qha
