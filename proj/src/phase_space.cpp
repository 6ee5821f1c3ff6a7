#include "qha/phase_space.hpp"

#include <cmath>

namespace qha {

GroupParams::GroupParams(int modulus) : n(modulus) {
  if (modulus < 3) {
    throw UnsupportedModulusError("modulus must be >= 3, got " + std::to_string(modulus));
  }
  if (modulus % 2 == 0) {
    throw UnsupportedModulusError("modulus must be odd, got " + std::to_string(modulus));
  }
}

void require_same_params(const GroupParams& a, const GroupParams& b, const char* what) {
  if (!(a == b)) {
    throw ParamMismatchError(std::string(what) + ": group parameters differ (" +
                             std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
  }
}

int mod_reduce(long long v, int n) {
  long long r = v % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

PhasePoint reduce(const GroupParams& p, PhasePoint z) {
  return {mod_reduce(z.x, p.n), mod_reduce(z.w, p.n)};
}

PhasePoint negate(const GroupParams& p, PhasePoint z) {
  return {mod_reduce(-static_cast<long long>(z.x), p.n),
          mod_reduce(-static_cast<long long>(z.w), p.n)};
}

PhasePoint add(const GroupParams& p, PhasePoint a, PhasePoint b) {
  return {mod_reduce(static_cast<long long>(a.x) + b.x, p.n),
          mod_reduce(static_cast<long long>(a.w) + b.w, p.n)};
}

PhasePoint sub(const GroupParams& p, PhasePoint a, PhasePoint b) {
  return {mod_reduce(static_cast<long long>(a.x) - b.x, p.n),
          mod_reduce(static_cast<long long>(a.w) - b.w, p.n)};
}

int symplectic_form(const GroupParams& p, PhasePoint a, PhasePoint b) {
  long long v = static_cast<long long>(a.w) * b.x - static_cast<long long>(b.w) * a.x;
  return mod_reduce(v, p.n);
}

cplx character(const GroupParams& p, long long k) {
  int r = mod_reduce(k, p.n);
  return std::polar(1.0, 2.0 * kPi * r / p.n);
}

cplx half_phase(const GroupParams& p, PhasePoint z) {
  long long k = static_cast<long long>(p.half_inverse()) * z.x * z.w;
  return character(p, k);
}

namespace {

// exp(2*pi*i*k/N) for k = 0..N-1, from a single table so repeated angles are
// computed identically everywhere.
std::vector<cplx> character_table(const GroupParams& p) {
  std::vector<cplx> table(p.n);
  for (int k = 0; k < p.n; ++k) table[k] = std::polar(1.0, 2.0 * kPi * k / p.n);
  return table;
}

}  // namespace

PhaseFunction symplectic_fourier(const PhaseFunction& f) {
  const int n = f.params.n;
  const auto table = character_table(f.params);
  PhaseFunction out(f.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      cplx acc = 0.0;
      for (int xp = 0; xp < n; ++xp) {
        for (int wp = 0; wp < n; ++wp) {
          // -sigma((x,w),(xp,wp)) = wp*x - w*xp
          long long k = static_cast<long long>(wp) * x - static_cast<long long>(w) * xp;
          acc += f.values(xp, wp) * table[mod_reduce(k, n)];
        }
      }
      out.values(x, w) = acc / static_cast<double>(n);
    }
  }
  return out;
}

PhaseFunction phase_translate(const PhaseFunction& f, PhasePoint z) {
  const int n = f.params.n;
  PhaseFunction out(f.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      out.values(x, w) = f.values(mod_reduce(static_cast<long long>(x) - z.x, n),
                                  mod_reduce(static_cast<long long>(w) - z.w, n));
    }
  }
  return out;
}

cplx phase_integral(const PhaseFunction& f) {
  return f.values.sum() / static_cast<double>(f.params.n);
}

PhaseFunction phase_parity(const PhaseFunction& f) {
  const int n = f.params.n;
  PhaseFunction out(f.params);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      out.values(x, w) = f.values(mod_reduce(-x, n), mod_reduce(-w, n));
    }
  }
  return out;
}

PhaseFunction phase_conj(const PhaseFunction& f) {
  PhaseFunction out(f.params);
  out.values = f.values.conjugate();
  return out;
}

double phase_lp_norm(const PhaseFunction& f, double p) {
  if (p == kInf) return f.values.cwiseAbs().maxCoeff();
  if (p < 1.0) throw InvalidExponentError("L^p norm needs p >= 1, got " + std::to_string(p));
  double acc = 0.0;
  const int n = f.params.n;
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) acc += std::pow(std::abs(f.values(x, w)), p);
  }
  return std::pow(acc / n, 1.0 / p);
}

cplx phase_inner(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_params(f.params, g.params, "phase_inner");
  return (f.values.array() * g.values.array().conjugate()).sum() /
         static_cast<double>(f.params.n);
}

double phase_max_abs_diff(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_params(f.params, g.params, "phase_max_abs_diff");
  return (f.values - g.values).cwiseAbs().maxCoeff();
}

CVec vec_phase(const PhaseFunction& f) {
  const int n = f.params.n;
  CVec v(n * n);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) v(x * n + w) = f.values(x, w);
  }
  return v;
}

PhaseFunction unvec_phase(const GroupParams& p, const CVec& v) {
  if (v.size() != static_cast<long>(p.n) * p.n) {
    throw ParamMismatchError("unvec_phase: vector length does not match N^2");
  }
  PhaseFunction f(p);
  for (int x = 0; x < p.n; ++x) {
    for (int w = 0; w < p.n; ++w) f.values(x, w) = v(x * p.n + w);
  }
  return f;
}

}  // namespace qha
