#pragma once

#include <vector>

#include "qha/convolutions.hpp"
#include "qha/transforms.hpp"

namespace qha {

inline constexpr double kZeroSetDefaultTol = 1e-9;
inline constexpr double kSpanRankRelTol = 1e-8;

// Computational regularity data for an operator S.
//
// On a finite phase space all of the p-regularity notions collapse into one
// exact rank law: the span of the translates {alpha_z S} has dimension equal
// to the support size of F_W S, because F_W maps each translate to a
// character multiple of F_W S and the characters separate points. Likewise
// ker(A_S) and ker(B_S) both have dimension |zero set|, via
// F_W(f * S) = F_sigma(f) F_W(S). The continuum distinctions (measure-zero
// zero sets, dense complements, weak* vs norm topologies) have no finite
// counterpart and are not modeled; the report records the zero set only.
struct RegularityReport {
  GroupParams params;
  std::vector<PhasePoint> zero_set;     // |F_W S| <= tol * max |F_W S|
  int support_size = 0;                 // N^2 - |zero_set|
  int translate_rank = 0;               // rank of [vec(alpha_z S)]_z
  int kernel_dim_A = 0;                 // dim ker (f -> f * S)
  int kernel_dim_B = 0;                 // dim ker (T -> T * (S-check)^*)
  bool regular = false;                 // zero set empty (and S != 0)
  bool degenerate = false;              // S = 0: every point is a zero
  std::vector<PhasePoint> arveson_support;
  double tol = kZeroSetDefaultTol;
  // Set by localization_density_check: zero set of F_W(rank_one(w2,w1))
  // coincides with the zero set of ambiguity(w2,w1) at the same threshold.
  bool ambiguity_zeroset_match = true;
};

// Points where |F_W S| <= tol * max |F_W S| (all points when S = 0).
std::vector<PhasePoint> zero_set(const OperatorMatrix& s, double tol = kZeroSetDefaultTol);

// Numerical rank of the N^2 x N^2 matrix whose columns are vec(alpha_z S).
int translate_span_rank(const OperatorMatrix& s, int cap = kConvMapDefaultCap);

// Same rank machinery for a phase-space function under phase_translate;
// equals |supp F_sigma f| (Wiener's theorem on the finite group).
int function_translate_span_rank(const PhaseFunction& f, int cap = kConvMapDefaultCap);

RegularityReport regularity_report(const OperatorMatrix& s,
                                   double tol = kZeroSetDefaultTol,
                                   int cap = kConvMapDefaultCap);

// Support of z -> F_W S(-z) above the threshold; on a finite discrete space
// the closure operation is the identity.
std::vector<PhasePoint> arveson_spectrum(const OperatorMatrix& s,
                                         double tol = kZeroSetDefaultTol);

// Regularity report of rank_one(w2, w1), plus the rank-one-lemma consistency
// check against the zero set of ambiguity(w2, w1).
RegularityReport localization_density_check(const Signal& w1, const Signal& w2,
                                            double tol = kZeroSetDefaultTol,
                                            int cap = kConvMapDefaultCap);

}  // namespace qha
