#include "qha/continuum.hpp"

#include <cmath>

#include <fftw3.h>

namespace qha {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Forward DFT out[k] = sum_i in[i] e^{-2 pi i k i / n}, reusing one plan for
// repeated transforms of the same length.
class Dft {
 public:
  explicit Dft(int n) : n_(n) {
    in_ = fftw_alloc_complex(n);
    out_ = fftw_alloc_complex(n);
    plan_ = fftw_plan_dft_1d(n, in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  ~Dft() {
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  void run(const cplx* in, cplx* out) {
    for (int i = 0; i < n_; ++i) {
      in_[i][0] = in[i].real();
      in_[i][1] = in[i].imag();
    }
    fftw_execute(plan_);
    for (int i = 0; i < n_; ++i) out[i] = {out_[i][0], out_[i][1]};
  }

 private:
  int n_;
  fftw_complex* in_;
  fftw_complex* out_;
  fftw_plan plan_;
};

double parity_sign(int i) { return (i % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

SampledLine::SampledLine(int points, double half_width_in)
    : n(points), half_width(half_width_in) {
  if (n < 16 || !is_power_of_two(n)) {
    throw InvalidExponentError("grid size must be a power of two >= 16, got " +
                               std::to_string(n));
  }
  if (!(half_width > 0.0)) {
    throw InvalidExponentError("grid half-width must be positive");
  }
}

cplx csignal_inner(const ContinuumSignal& a, const ContinuumSignal& b) {
  if (!(a.line == b.line)) throw ParamMismatchError("csignal_inner: grids differ");
  return a.line.spacing() * (a.samples.array() * b.samples.array().conjugate()).sum();
}

double csignal_norm(const ContinuumSignal& a) {
  return std::sqrt(a.line.spacing()) * a.samples.norm();
}

ContinuumSignal gaussian_signal(const SampledLine& line) {
  ContinuumSignal s(line);
  const double amp = std::pow(2.0, 0.25);
  for (int i = 0; i < line.n; ++i) {
    const double t = line.point(i);
    s.samples(i) = amp * std::exp(-kPi * t * t);
  }
  return s;
}

std::vector<ContinuumSignal> hermite_family(const SampledLine& line, int count) {
  std::vector<ContinuumSignal> family;
  family.reserve(count);
  for (int k = 0; k < count; ++k) {
    ContinuumSignal h(line);
    for (int i = 0; i < line.n; ++i) {
      const double t = line.point(i);
      h.samples(i) = std::pow(t, k) * std::exp(-kPi * t * t);
    }
    // Modified Gram-Schmidt against the earlier members.
    for (const auto& g : family) {
      const cplx c = csignal_inner(h, g);
      h.samples -= c * g.samples;
    }
    h.samples /= csignal_norm(h);
    family.push_back(std::move(h));
  }
  return family;
}

PlaneSamples continuum_stft(const ContinuumSignal& psi, const ContinuumSignal& phi) {
  if (!(psi.line == phi.line)) throw ParamMismatchError("continuum_stft: grids differ");
  const SampledLine& line = psi.line;
  const int n = line.n;
  const double dx = line.spacing();
  PlaneSamples v(line);

  Dft dft(n);
  std::vector<cplx> win(n), spec(n);
  // With t_i = (i - n/2) dx and w_k = (k - n/2)/(n dx):
  //   e^{-2 pi i w_k t_i} = e^{-2 pi i k i / n} (-1)^i (-1)^k (-1)^{n/2}
  const double grid_sign = parity_sign(n / 2);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int widx = ((i - j + n / 2) % n + n) % n;
      win[i] = psi.samples(i) * std::conj(phi.samples(widx)) * parity_sign(i);
    }
    dft.run(win.data(), spec.data());
    for (int k = 0; k < n; ++k) {
      v.values(j, k) = dx * grid_sign * parity_sign(k) * spec[k];
    }
  }
  return v;
}

PlaneSamples continuum_ambiguity(const ContinuumSignal& psi, const ContinuumSignal& phi) {
  PlaneSamples v = continuum_stft(psi, phi);
  const int n = v.line.n;
  for (int j = 0; j < n; ++j) {
    const double x = v.line.point(j);
    for (int k = 0; k < n; ++k) {
      v.values(j, k) *= std::polar(1.0, kPi * x * v.line.freq(k));
    }
  }
  return v;
}

double plane_integral_abs_pow(const PlaneSamples& v, double p) {
  double acc = 0.0;
  for (int j = 0; j < v.values.rows(); ++j) {
    for (int k = 0; k < v.values.cols(); ++k) {
      acc += std::pow(std::abs(v.values(j, k)), p);
    }
  }
  return acc * v.cell_weight();
}

double plane_lq_norm(const PlaneSamples& v, double q) {
  if (q == kInf) return plane_max_abs(v);
  if (q < 1.0) throw InvalidExponentError("L^q norm needs q >= 1");
  return std::pow(plane_integral_abs_pow(v, q), 1.0 / q);
}

double plane_max_abs(const PlaneSamples& v) { return v.values.cwiseAbs().maxCoeff(); }

GaussianFwResult gaussian_fw_check(const SampledLine& line) {
  const ContinuumSignal phi = gaussian_signal(line);
  const PlaneSamples fw = continuum_ambiguity(phi, phi);
  GaussianFwResult res;
  const int n = line.n;
  for (int j = 0; j < n; ++j) {
    const double x = line.point(j);
    for (int k = 0; k < n; ++k) {
      const double w = line.freq(k);
      const double r2 = x * x + w * w;
      if (r2 > 9.0) continue;
      const double envelope = std::exp(-0.5 * kPi * r2);
      const cplx paper_form = std::polar(envelope, 2.0 * kPi * x * w);
      const cplx corrected_form = envelope;
      res.paper_form_error = std::max(res.paper_form_error, std::abs(fw.values(j, k) - paper_form));
      res.corrected_form_error =
          std::max(res.corrected_form_error, std::abs(fw.values(j, k) - corrected_form));
    }
  }
  res.origin_error = std::abs(fw.values(n / 2, n / 2) - 1.0);
  return res;
}

double lieb_ratio(const ContinuumSignal& psi, const ContinuumSignal& phi, double p) {
  if (p < 2.0 || p > 64.0) {
    throw InvalidExponentError("Lieb exponent must lie in [2, 64], got " + std::to_string(p));
  }
  const PlaneSamples v = continuum_stft(psi, phi);
  const double num = plane_integral_abs_pow(v, p);
  const double den =
      (2.0 / p) * std::pow(csignal_norm(phi) * csignal_norm(psi), p);
  return num / den;
}

PlaneSamples traceclass_fourier_wigner(const std::vector<WeightedPair>& parts) {
  if (parts.empty()) throw ParamMismatchError("traceclass_fourier_wigner: no components");
  PlaneSamples acc(parts.front().left.line);
  for (const auto& part : parts) {
    const PlaneSamples a = continuum_ambiguity(part.left, part.right);
    if (!(a.line == acc.line)) {
      throw ParamMismatchError("traceclass_fourier_wigner: grids differ");
    }
    acc.values += part.weight * a.values;
  }
  return acc;
}

double traceclass_schatten_norm(const std::vector<WeightedPair>& parts, double p) {
  if (parts.empty()) throw ParamMismatchError("traceclass_schatten_norm: no components");
  const SampledLine& line = parts.front().left.line;
  const double dx = line.spacing();
  CMat s = CMat::Zero(line.n, line.n);
  for (const auto& part : parts) {
    if (!(part.left.line == line) || !(part.right.line == line)) {
      throw ParamMismatchError("traceclass_schatten_norm: grids differ");
    }
    s += part.weight * (dx * part.left.samples) * part.right.samples.adjoint();
  }
  return matrix_schatten_norm(s, p);
}

double lieb_traceclass_ratio(const std::vector<WeightedPair>& parts, double q) {
  if (q < 2.0 || q > 64.0) {
    throw InvalidExponentError("Lieb exponent must lie in [2, 64], got " + std::to_string(q));
  }
  const PlaneSamples fw = traceclass_fourier_wigner(parts);
  const double num = plane_lq_norm(fw, q);
  const double den = std::pow(2.0 / q, 1.0 / q) * traceclass_schatten_norm(parts, 1.0);
  return num / den;
}

double modulation_norm(const ContinuumSignal& psi, double p, double q) {
  if ((p != kInf && p < 1.0) || (q != kInf && q < 1.0)) {
    throw InvalidExponentError("modulation norm needs p, q >= 1");
  }
  const ContinuumSignal window = gaussian_signal(psi.line);
  const PlaneSamples v = continuum_stft(psi, window);
  const int n = psi.line.n;
  const double dx = psi.line.spacing();
  const double dw = psi.line.freq_spacing();

  // Inner norm in x (column direction) for each frequency, then outer in w.
  double outer_acc = 0.0;
  double outer_max = 0.0;
  for (int k = 0; k < n; ++k) {
    double inner;
    if (p == kInf) {
      inner = v.values.col(k).cwiseAbs().maxCoeff();
    } else {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += std::pow(std::abs(v.values(j, k)), p);
      inner = std::pow(acc * dx, 1.0 / p);
    }
    if (q == kInf) {
      outer_max = std::max(outer_max, inner);
    } else {
      outer_acc += std::pow(inner, q);
    }
  }
  return q == kInf ? outer_max : std::pow(outer_acc * dw, 1.0 / q);
}

std::vector<double> annulus_max(const PlaneSamples& v, const std::vector<double>& radii) {
  std::vector<double> out;
  out.reserve(radii.size());
  const int n = v.line.n;
  for (double r : radii) {
    double peak = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = v.line.point(j);
      for (int k = 0; k < n; ++k) {
        const double w = v.line.freq(k);
        const double rad = std::sqrt(x * x + w * w);
        if (rad >= r && rad < r + 1.0) peak = std::max(peak, std::abs(v.values(j, k)));
      }
    }
    out.push_back(peak);
  }
  return out;
}

PlaneGrid::PlaneGrid(int m) : axis(m, 0.5 * m / std::sqrt(static_cast<double>(m))) {
  // axis spacing = 1/sqrt(m), so the dual grid coincides with the space grid.
}

PlaneFunction gaussian_plane(const PlaneGrid& g) {
  PlaneFunction f(g);
  const int m = g.m();
  for (int i1 = 0; i1 < m; ++i1) {
    const double u1 = g.axis.point(i1);
    for (int i2 = 0; i2 < m; ++i2) {
      const double u2 = g.axis.point(i2);
      f.values(i1, i2) = std::sqrt(2.0) * std::exp(-kPi * (u1 * u1 + u2 * u2));
    }
  }
  return f;
}

double plane_modulation_norm(const PlaneFunction& f, double p, double q) {
  if ((p != kInf && p < 1.0) || (q != kInf && q < 1.0)) {
    throw InvalidExponentError("modulation norm needs p, q >= 1");
  }
  const int m = f.grid.m();
  const double d = f.grid.axis.spacing();
  const double dw = f.grid.axis.freq_spacing();
  const PlaneFunction window = gaussian_plane(f.grid);

  // Streamed 4-d STFT: loop over window positions a = (a1, a2), take a 2-d
  // DFT in t, and fold each slice into the mixed-norm accumulators over the
  // frequency page. Grid-offset phase corrections are the 1-d ones per axis.
  fftw_complex* buf = fftw_alloc_complex(m * m);
  fftw_plan plan = fftw_plan_dft_2d(m, m, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);

  RMat inner_acc = RMat::Zero(m, m);  // per-frequency sum of |V|^p dx (or max)
  const bool inner_max = (p == kInf);

  for (int a1 = 0; a1 < m; ++a1) {
    for (int a2 = 0; a2 < m; ++a2) {
      for (int i1 = 0; i1 < m; ++i1) {
        const int s1 = ((i1 - a1 + m / 2) % m + m) % m;
        for (int i2 = 0; i2 < m; ++i2) {
          const int s2 = ((i2 - a2 + m / 2) % m + m) % m;
          const cplx val = f.values(i1, i2) * std::conj(window.values(s1, s2)) *
                           parity_sign(i1 + i2);
          buf[i1 * m + i2][0] = val.real();
          buf[i1 * m + i2][1] = val.imag();
        }
      }
      fftw_execute(plan);
      for (int b1 = 0; b1 < m; ++b1) {
        for (int b2 = 0; b2 < m; ++b2) {
          const double mag = std::hypot(buf[b1 * m + b2][0], buf[b1 * m + b2][1]) * d * d;
          if (inner_max) {
            inner_acc(b1, b2) = std::max(inner_acc(b1, b2), mag);
          } else {
            inner_acc(b1, b2) += std::pow(mag, p);
          }
        }
      }
    }
  }
  fftw_destroy_plan(plan);
  fftw_free(buf);

  // Finish the inner norm (the phase corrections are unimodular and drop out
  // of the mixed norm, which only sees |V|).
  double outer_acc = 0.0;
  double outer_max = 0.0;
  for (int b1 = 0; b1 < m; ++b1) {
    for (int b2 = 0; b2 < m; ++b2) {
      const double inner = inner_max
                               ? inner_acc(b1, b2)
                               : std::pow(inner_acc(b1, b2) * d * d, 1.0 / p);
      if (q == kInf) {
        outer_max = std::max(outer_max, inner);
      } else {
        outer_acc += std::pow(inner, q);
      }
    }
  }
  return q == kInf ? outer_max : std::pow(outer_acc * dw * dw, 1.0 / q);
}

CMat kernel_to_operator(const PlaneFunction& kernel) {
  return kernel.grid.axis.spacing() * kernel.values;
}

CMat lab_conv_fun_op(const PlaneFunction& f, const CMat& a) {
  const int m = f.grid.m();
  if (a.rows() != m || a.cols() != m) {
    throw ParamMismatchError("lab_conv_fun_op: operator size does not match grid");
  }
  const double cell = f.grid.axis.spacing() * f.grid.axis.freq_spacing();
  CMat out = CMat::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    const int shift = j - m / 2;
    for (int k = 0; k < m; ++k) {
      const cplx coeff = cell * f.values(j, k);
      if (coeff == cplx{0.0, 0.0}) continue;
      // (pi(z) A pi(z)^*)(r,c) = e^{2 pi i w (t_r - t_c)} A(r-shift, c-shift)
      for (int r = 0; r < m; ++r) {
        const int rs = ((r - shift) % m + m) % m;
        for (int c = 0; c < m; ++c) {
          const int cs = ((c - shift) % m + m) % m;
          const double angle = 2.0 * kPi * f.grid.axis.freq(k) *
                               (f.grid.axis.point(r) - f.grid.axis.point(c));
          out(r, c) += coeff * std::polar(1.0, angle) * a(rs, cs);
        }
      }
    }
  }
  return out;
}

PlaneFunction lab_conv_op_op(const CMat& s, const CMat& t, const PlaneGrid& g) {
  const int m = g.m();
  if (s.rows() != m || s.cols() != m || t.rows() != m || t.cols() != m) {
    throw ParamMismatchError("lab_conv_op_op: operator size does not match grid");
  }
  // T-check = P T P with the periodized reflection i -> (m - i) mod m.
  CMat tc(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) tc(r, c) = t((m - r) % m, (m - c) % m);
  }
  PlaneFunction out(g);
  for (int j = 0; j < m; ++j) {
    const int shift = j - m / 2;
    for (int k = 0; k < m; ++k) {
      const double w = g.axis.freq(k);
      cplx acc = 0.0;
      for (int a = 0; a < m; ++a) {
        const int as = ((a - shift) % m + m) % m;
        for (int b = 0; b < m; ++b) {
          const int bs = ((b - shift) % m + m) % m;
          const double angle = 2.0 * kPi * w * (g.axis.point(b) - g.axis.point(a));
          acc += s(a, b) * std::polar(1.0, angle) * tc(bs, as);
        }
      }
      out.values(j, k) = acc;
    }
  }
  return out;
}

double locop_modspace_ratio(const PlaneFunction& f, const PlaneFunction& kernel, double p) {
  const CMat op = kernel_to_operator(kernel);
  const CMat conv = lab_conv_fun_op(f, op);
  const double num = matrix_schatten_norm(conv, p);
  const double den =
      plane_modulation_norm(kernel, 1.0, 1.0) * plane_modulation_norm(f, p, kInf);
  return num / den;
}

double feichtinger_ratio(const CMat& t, const PlaneFunction& kernel) {
  const CMat op = kernel_to_operator(kernel);
  const PlaneFunction conv = lab_conv_op_op(t, op, kernel.grid);
  const double num = plane_modulation_norm(conv, 1.0, 1.0);
  const double den = plane_modulation_norm(kernel, 1.0, 1.0) * matrix_schatten_norm(t, 1.0);
  return num / den;
}

}  // namespace qha
