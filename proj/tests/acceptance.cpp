// Acceptance runner: one numbered criterion per invocation (--criterion k),
// or the whole table when run bare. Prints one PASS/FAIL/REPORT line per
// criterion; exit code is nonzero iff an executed thresholded criterion
// failed.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "qha/continuum.hpp"
#include "qha/convolutions.hpp"
#include "qha/localization.hpp"
#include "qha/rng.hpp"
#include "qha/tauberian.hpp"
#include "qha/transforms.hpp"

using namespace qha;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool thresholded = true;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// 1. Moyal identity: 200 random quadruples at each N in {3,5,7,9,15},
//    residual < 1e-12 * product of norms, total runtime < 10 s.
Outcome criterion_1() {
  const auto start = Clock::now();
  Rng rng(20250801);
  double worst = 0.0;
  for (int n : {3, 5, 7, 9, 15}) {
    GroupParams p(n);
    for (int rep = 0; rep < 200; ++rep) {
      const Signal psi1 = rng.random_signal(p), psi2 = rng.random_signal(p);
      const Signal phi1 = rng.random_signal(p), phi2 = rng.random_signal(p);
      const cplx lhs = phase_inner(stft(psi1, phi1), stft(psi2, phi2));
      const cplx rhs = inner(psi1, psi2) * std::conj(inner(phi1, phi2));
      const double scale = signal_norm(psi1) * signal_norm(psi2) * signal_norm(phi1) *
                           signal_norm(phi2);
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
  }
  const double secs = elapsed(start);
  Outcome o;
  o.measured = worst;
  o.threshold = 1e-12;
  o.pass = worst < 1e-12 && secs < 10.0;
  o.detail = "runtime " + sci(secs) + " s (budget 10 s)";
  return o;
}

// 2. Trace formula: phase_integral(S*T) = tr(S) tr(T), 100 random pairs,
//    relative error < 1e-12.
Outcome criterion_2() {
  Rng rng(20250802);
  const std::vector<int> ns = {3, 5, 7, 9, 11, 13, 15};
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    GroupParams p(ns[rep % ns.size()]);
    const OperatorMatrix s = rng.random_operator(p);
    const OperatorMatrix t = rng.random_operator(p);
    const cplx lhs = phase_integral(conv_op_op(s, t));
    const cplx rhs = trace(s) * trace(t);  // parity conjugation preserves the trace
    const double scale = schatten_norm(s, 1.0) * schatten_norm(t, 1.0);
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  Outcome o;
  o.measured = worst;
  o.threshold = 1e-12;
  o.pass = worst < o.threshold;
  return o;
}

// 3. F_W unitarity and inverse at 1e-12 across N in {3,...,15}, plus the
//    N=3 oracle selecting exactly one of the four sign conventions.
Outcome criterion_3() {
  Rng rng(20250803);
  double worst = 0.0;
  for (int n = 3; n <= 15; n += 2) {
    GroupParams p(n);
    for (int rep = 0; rep < 10; ++rep) {
      const OperatorMatrix s = rng.random_operator(p);
      const PhaseFunction fw = fourier_wigner(s);
      worst = std::max(worst, std::abs(phase_lp_norm(fw, 2.0) - schatten_norm(s, 2.0)) /
                                  schatten_norm(s, 2.0));
      worst = std::max(worst, op_max_abs_diff(rho(fw), s));
    }
  }

  // sign-convention oracle at N=3
  GroupParams p3(3);
  int survivors = 0;
  bool conj_pair = false;
  for (int eps : {-1, +1}) {
    for (int delta : {-1, +1}) {
      auto rho_cand = [&](const PhaseFunction& h) {
        OperatorMatrix acc(p3);
        for (int x = 0; x < 3; ++x) {
          for (int w = 0; w < 3; ++w) {
            const cplx hp = half_phase(p3, {x, w});
            acc.entries += h.values(x, w) * (delta < 0 ? std::conj(hp) : hp) / 3.0 *
                           tf_shift_matrix(p3, {x, w}).entries;
          }
        }
        return acc;
      };
      auto fw_cand = [&](const OperatorMatrix& s) {
        PhaseFunction out(p3);
        for (int x = 0; x < 3; ++x) {
          for (int w = 0; w < 3; ++w) {
            const cplx tr =
                (tf_shift_matrix(p3, negate(p3, {x, w})).entries * s.entries).trace();
            const cplx hp = half_phase(p3, {x, w});
            out.values(x, w) = (eps < 0 ? std::conj(hp) : hp) * tr;
          }
        }
        return out;
      };
      double cand_worst = 0.0;
      for (int rep = 0; rep < 6; ++rep) {
        const PhaseFunction f = rng.random_phase_function(p3);
        const PhaseFunction g = rng.random_phase_function(p3);
        cand_worst = std::max(cand_worst, phase_max_abs_diff(fw_cand(rho_cand(f)), f));
        cand_worst = std::max(
            cand_worst, op_max_abs_diff(rho_cand(twisted_convolution(f, g)),
                                        {p3, rho_cand(f).entries * rho_cand(g).entries}));
      }
      if (cand_worst < 1e-13) {
        ++survivors;
        if (eps < 0 && delta < 0) conj_pair = true;
      }
    }
  }

  Outcome o;
  o.measured = worst;
  o.threshold = 1e-12;
  o.pass = worst < o.threshold && survivors == 1 && conj_pair;
  o.detail = "sign-convention survivors: " + std::to_string(survivors) + " of 4";
  return o;
}

// 4. Product formulas, each < 1e-11 max error over 100 random instances.
Outcome criterion_4() {
  Rng rng(20250804);
  const std::vector<int> ns = {3, 5, 7, 9, 15};
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    GroupParams p(ns[rep % ns.size()]);
    const OperatorMatrix s = rng.random_operator(p);
    const OperatorMatrix t = rng.random_operator(p);
    const PhaseFunction f = rng.random_phase_function(p);
    const PhaseFunction g = rng.random_phase_function(p);

    PhaseFunction prod = fourier_wigner(s);
    prod.values = prod.values.array() * fourier_wigner(t).values.array();
    worst = std::max(worst, phase_max_abs_diff(symplectic_fourier(conv_op_op(s, t)), prod));

    PhaseFunction rhs = symplectic_fourier(f);
    rhs.values = rhs.values.array() * fourier_wigner(s).values.array();
    worst = std::max(worst, phase_max_abs_diff(fourier_wigner(conv_fun_op(f, s)), rhs));

    worst = std::max(worst,
                     phase_max_abs_diff(fourier_wigner({p, s.entries * t.entries}),
                                        twisted_convolution(fourier_wigner(s),
                                                            fourier_wigner(t))));

    worst = std::max(worst, op_max_abs_diff(rho(twisted_convolution(f, g)),
                                            {p, rho(f).entries * rho(g).entries}));
  }
  Outcome o;
  o.measured = worst;
  o.threshold = 1e-11;
  o.pass = worst < o.threshold;
  return o;
}

// 5. Convolution algebra: commutativity/associativity < 1e-11, tidbits
//    < 1e-13, Young table ratios <= 1 + 1e-10.
Outcome criterion_5() {
  Rng rng(20250805);
  double worst_assoc = 0.0, worst_tidbits = 0.0, worst_young = 0.0;
  const struct {
    double p_, q_, r_;
  } rows[] = {{1, 1, 1}, {1, 2, 2}, {2, 2, kInf}, {1, kInf, kInf}};
  for (int n : {3, 5, 7, 9}) {
    GroupParams p(n);
    for (int rep = 0; rep < 8; ++rep) {
      const PhaseFunction f = rng.random_phase_function(p);
      const PhaseFunction g = rng.random_phase_function(p);
      const OperatorMatrix s = rng.random_operator(p);
      const OperatorMatrix t = rng.random_operator(p);
      const OperatorMatrix u = rng.random_operator(p);
      const PhasePoint z{rng.below(n), rng.below(n)};

      worst_assoc = std::max(worst_assoc,
                             phase_max_abs_diff(conv_op_op(s, t), conv_op_op(t, s)));
      worst_assoc = std::max(worst_assoc,
                             op_max_abs_diff(conv_fun_op(conv_fun_fun(f, g), s),
                                             conv_fun_op(f, conv_fun_op(g, s))));
      worst_assoc = std::max(worst_assoc,
                             phase_max_abs_diff(conv_op_op(conv_fun_op(f, s), t),
                                                conv_fun_fun(f, conv_op_op(s, t))));
      worst_assoc = std::max(worst_assoc,
                             op_max_abs_diff(conv_fun_op(conv_op_op(t, u), s),
                                             conv_fun_op(conv_op_op(s, t), u)));

      worst_tidbits = std::max(worst_tidbits,
                               op_max_abs_diff(op_adjoint(conv_fun_op(f, s)),
                                               conv_fun_op(phase_conj(f), op_adjoint(s))));
      worst_tidbits = std::max(
          worst_tidbits, op_max_abs_diff(parity_conjugate(conv_fun_op(f, s)),
                                         conv_fun_op(phase_parity(f), parity_conjugate(s))));
      worst_tidbits = std::max(worst_tidbits,
                               phase_max_abs_diff(phase_conj(conv_op_op(s, t)),
                                                  conv_op_op(op_adjoint(s), op_adjoint(t))));
      worst_tidbits = std::max(
          worst_tidbits,
          phase_max_abs_diff(phase_parity(conv_op_op(s, t)),
                             conv_op_op(parity_conjugate(s), parity_conjugate(t))));
      worst_tidbits = std::max(worst_tidbits,
                               op_max_abs_diff(alpha_shift(conv_fun_op(f, s), z),
                                               conv_fun_op(phase_translate(f, z), s)));
      worst_tidbits = std::max(worst_tidbits,
                               phase_max_abs_diff(phase_translate(conv_op_op(s, t), z),
                                                  conv_op_op(alpha_shift(s, z), t)));

      const PhaseFunction st = conv_op_op(s, t);
      for (const auto& row : rows) {
        worst_young = std::max(worst_young, phase_lp_norm(st, row.r_) /
                                                (schatten_norm(s, row.p_) *
                                                 schatten_norm(t, row.q_)));
        worst_young =
            std::max(worst_young, schatten_norm(conv_fun_op(f, t), row.r_) /
                                      (phase_lp_norm(f, row.p_) * schatten_norm(t, row.q_)));
      }
    }
  }
  Outcome o;
  const bool ok = worst_assoc < 1e-11 && worst_tidbits < 1e-13 && worst_young <= 1.0 + 1e-10;
  o.measured = worst_assoc;
  o.threshold = 1e-11;
  o.pass = ok;
  o.detail = "tidbits " + sci(worst_tidbits) + " (<1e-13), young " +
             sci(worst_young) + " (<=1+1e-10)";
  return o;
}

// 6. Localization/Berezin: direct definition vs convolution path < 1e-12;
//    twisted-symbol identity < 1e-12.
Outcome criterion_6() {
  Rng rng(20250806);
  double worst = 0.0;
  for (int n : {3, 5, 7, 9}) {
    GroupParams p(n);
    for (int rep = 0; rep < 10; ++rep) {
      const PhaseFunction f = rng.random_phase_function(p);
      const Signal w1 = rng.random_signal(p), w2 = rng.random_signal(p);
      const OperatorMatrix t = rng.random_operator(p);

      worst = std::max(worst, op_max_abs_diff(localization_operator(f, w1, w2),
                                              conv_fun_op(f, rank_one(w2, w1))));
      worst = std::max(worst,
                       phase_max_abs_diff(
                           berezin_transform(t, w1, w2),
                           conv_op_op(t, rank_one(parity_signal(w1), parity_signal(w2)))));
      double residual = 0.0;
      locop_twisted_symbol(f, w1, w2, &residual);
      worst = std::max(worst, residual);
    }
  }
  Outcome o;
  o.measured = worst;
  o.threshold = 1e-12;
  o.pass = worst < o.threshold;
  return o;
}

// 7. Finite Tauberian identity, exact integers, at N in {5,7,9}:
//    (a) ground projection, (b) identity, (c) 20 crafted zero sets,
//    (d) 20 generic random operators.
Outcome criterion_7() {
  Rng rng(20250807);
  int violations = 0;
  int cases = 0;
  auto check_op = [&](const GroupParams& p, const OperatorMatrix& s, int expect_zeros) {
    ++cases;
    const RegularityReport rep = regularity_report(s);
    const int dim = p.n * p.n;
    const int zeros = static_cast<int>(rep.zero_set.size());
    if (expect_zeros >= 0 && zeros != expect_zeros) ++violations;
    if (rep.support_size != dim - zeros) ++violations;
    if (rep.translate_rank != dim - zeros) ++violations;
    if (rep.kernel_dim_A != zeros) ++violations;
    if (rep.kernel_dim_B != zeros) ++violations;
  };
  for (int n : {5, 7, 9}) {
    GroupParams p(n);
    // (a) rank N, zero set N(N-1)
    check_op(p, rank_one(basis_delta(p, 0), basis_delta(p, 0)), n * (n - 1));
    // (b) identity: rank 1
    check_op(p, identity_operator(p), n * n - 1);
    // (c) crafted zero sets
    const int ks[4] = {0, 1, n, n * n - 1};
    for (int i = 0; i < 20; ++i) {
      const int k = ks[i % 4];
      check_op(p, rho(rng.random_support_function(p, n * n - k)), k);
    }
    // (d) generic random: nonvanishing transform, then full rank
    for (int i = 0; i < 20; ++i) {
      OperatorMatrix s = rng.random_operator(p);
      PhaseFunction fw = fourier_wigner(s);
      while (fw.values.cwiseAbs().minCoeff() < 1e-6 * fw.values.cwiseAbs().maxCoeff()) {
        s = rng.random_operator(p);
        fw = fourier_wigner(s);
      }
      check_op(p, s, 0);
    }
  }
  Outcome o;
  o.measured = violations;
  o.threshold = 0.0;
  o.pass = violations == 0;
  o.detail = std::to_string(cases) + " operators checked, exact integer identities";
  return o;
}

// 8. Finite Hausdorff-Young: 200 random operators, p in {1, 4/3, 2};
//    ratio <= 1 + 1e-10, equality at p = 2 and for pi(z0) at p = 1.
Outcome criterion_8() {
  Rng rng(20250808);
  const std::vector<int> ns = {3, 5, 7, 9, 11, 13, 15};
  double worst_ratio = 0.0;
  double worst_eq = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    GroupParams p(ns[rep % ns.size()]);
    const OperatorMatrix s = rng.random_operator(p);
    const PhaseFunction fw = fourier_wigner(s);
    const std::pair<double, double> pq[] = {{1.0, kInf}, {4.0 / 3.0, 4.0}, {2.0, 2.0}};
    for (const auto& [pp, qq] : pq) {
      const double ratio = phase_lp_norm(fw, qq) / schatten_norm(s, pp);
      worst_ratio = std::max(worst_ratio, ratio);
      if (pp == 2.0) worst_eq = std::max(worst_eq, std::abs(ratio - 1.0));
    }
  }
  for (int n : {3, 7, 15}) {
    GroupParams p(n);
    const PhasePoint z0{rng.below(n), rng.below(n)};
    const OperatorMatrix piz = tf_shift_matrix(p, z0);
    const double r = phase_lp_norm(fourier_wigner(piz), kInf) / schatten_norm(piz, 1.0);
    worst_eq = std::max(worst_eq, std::abs(r - 1.0));
  }
  Outcome o;
  o.measured = worst_ratio;
  o.threshold = 1.0 + 1e-10;
  o.pass = worst_ratio <= o.threshold && worst_eq < 1e-12;
  o.detail = "equality residual " + sci(worst_eq) + " (<1e-12)";
  return o;
}

// 9. Continuum Gaussian closed form at n=256, L=8: the criterion compares
//    F_W(phi x phi) against e^{2 pi i x w} e^{-pi |z|^2 / 2} over |z| <= 3.
//    The rank-one route produces the phase-free Gaussian e^{-pi |z|^2 / 2}
//    (the half-phase cancels the STFT phase exactly), so this check records
//    a deviation of about 0.64 instead of passing; the corrected-form error
//    alongside shows the implementation itself is quadrature-accurate.
Outcome criterion_9() {
  const GaussianFwResult res = gaussian_fw_check(SampledLine(256, 8.0));
  Outcome o;
  o.measured = res.paper_form_error;
  o.threshold = 1e-6;
  o.pass = res.paper_form_error < o.threshold;
  o.detail = "corrected-form error " + sci(res.corrected_form_error) +
             " (<1e-6 shows quadrature accuracy); origin error " +
             sci(res.origin_error);
  return o;
}

// 10. Lieb sharpness and bounds, runtime < 60 s.
Outcome criterion_10() {
  const auto start = Clock::now();
  const SampledLine line(256, 8.0);
  const ContinuumSignal gauss = gaussian_signal(line);
  const auto fam = hermite_family(line, 6);
  Rng rng(20250810);

  double matched_err = 0.0;
  for (double p : {2.0, 3.0, 4.0, 6.0}) {
    matched_err = std::max(matched_err, std::abs(lieb_ratio(gauss, gauss, p) - 1.0));
  }

  double random_ratio = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    ContinuumSignal a(line), b(line);
    for (int m = 0; m < 6; ++m) {
      a.samples += rng.cnormal() * fam[m].samples;
      b.samples += rng.cnormal() * fam[m].samples;
    }
    for (double p : {2.0, 3.0, 4.0, 6.0}) {
      random_ratio = std::max(random_ratio, lieb_ratio(a, b, p));
    }
  }

  double trace_ratio = 0.0;
  for (int rank : {1, 2, 3}) {
    std::vector<WeightedPair> parts;
    for (int m = 0; m < rank; ++m) {
      parts.push_back({0.25 + rng.uniform01(), fam[m], fam[m]});
    }
    for (double q : {2.0, 3.0, 4.0, 6.0}) {
      trace_ratio = std::max(trace_ratio, lieb_traceclass_ratio(parts, q));
    }
  }

  const double secs = elapsed(start);
  Outcome o;
  o.measured = std::max({matched_err, random_ratio - 1.0, trace_ratio - 1.0});
  o.threshold = 1e-6;
  o.pass = matched_err < 1e-6 && random_ratio <= 1.0 + 1e-6 && trace_ratio <= 1.0 + 1e-6 &&
           secs < 60.0;
  o.detail = "matched " + sci(matched_err) + ", random " +
             sci(random_ratio) + ", trace-class " + sci(trace_ratio) +
             ", runtime " + sci(secs) + " s (budget 60 s)";
  return o;
}

// 11. Report-only envelopes: modulation-space ratios, Riemann-Lebesgue
//     decay, refinement trend. Recorded, never thresholded.
Outcome criterion_11() {
  Outcome o;
  o.thresholded = false;
  o.pass = true;

  std::string detail;
  {
    const PlaneGrid grid(32);
    const PlaneFunction gk = gaussian_plane(grid);
    PlaneFunction broad(grid);
    for (int i = 0; i < grid.m(); ++i) {
      for (int j = 0; j < grid.m(); ++j) {
        const double u1 = grid.axis.point(i), u2 = grid.axis.point(j);
        broad.values(i, j) = std::exp(-0.05 * (u1 * u1 + u2 * u2));
      }
    }
    double env = 0.0;
    for (double p : {1.0, 2.0, kInf}) {
      env = std::max(env, locop_modspace_ratio(broad, gk, p));
      env = std::max(env, locop_modspace_ratio(gk, gk, p));
    }
    const double fei = feichtinger_ratio(kernel_to_operator(gk), gk);
    detail += "locandmod envelope " + sci(env) + "; feichtinger ratio " +
              sci(fei);
    o.measured = env;
  }
  {
    const SampledLine line(256, 8.0);
    const auto fam = hermite_family(line, 2);
    const std::vector<WeightedPair> parts = {{1.0, fam[0], fam[0]}, {0.5, fam[1], fam[1]}};
    const auto peaks = annulus_max(traceclass_fourier_wigner(parts), {2.0, 3.0, 4.0});
    detail += "; RL annulus peaks";
    for (double v : peaks) detail += " " + sci(v);
  }
  {
    detail += "; refinement corrected-form errors";
    for (int n : {128, 256, 512}) {
      const GaussianFwResult res = gaussian_fw_check(SampledLine(n, 8.0));
      detail += " " + sci(res.corrected_form_error);
    }
  }
  o.detail = detail;
  return o;
}

Outcome run_criterion(int k) {
  switch (k) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    default: throw Error("criterion index out of range: " + std::to_string(k));
  }
}

const char* kCriterionNames[] = {
    "moyal identity (finite)",
    "trace formula integral(S*T) = tr S tr T",
    "F_W unitarity, inverse, sign-convention oracle",
    "product formulas (F_sigma, F_W, twisted)",
    "convolution algebra (comm/assoc/tidbits/young)",
    "localization & berezin equivalences",
    "finite tauberian rank law (exact integers)",
    "hausdorff-young (finite)",
    "continuum gaussian closed form",
    "lieb sharpness and trace-class bound",
    "report-only envelopes (mod-space, RL decay, refinement)",
};

int print_and_code(int k, const Outcome& o) {
  const char* status = !o.thresholded ? "REPORT" : (o.pass ? "PASS" : "FAIL");
  std::cout << "criterion " << k << " [" << kCriterionNames[k - 1] << "]: " << status;
  if (o.thresholded) {
    std::cout << " measured=" << sci(o.measured) << " threshold=" << sci(o.threshold);
  } else {
    std::cout << " recorded=" << sci(o.measured);
  }
  if (!o.detail.empty()) std::cout << "\n    " << o.detail;
  std::cout << std::endl;
  return o.thresholded && !o.pass ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    }
  }
  try {
    if (only != 0) {
      return print_and_code(only, run_criterion(only));
    }
    int rc = 0;
    for (int k = 1; k <= 11; ++k) {
      rc |= print_and_code(k, run_criterion(k));
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "acceptance runner error: " << e.what() << "\n";
    return 2;
  }
}
