#include <doctest.h>

#include <cmath>

#include "qha/continuum.hpp"
#include "qha/rng.hpp"

using namespace qha;

TEST_CASE("sampled line validation") {
  CHECK_THROWS(SampledLine(12, 8.0));
  CHECK_THROWS(SampledLine(33, 8.0));
  CHECK_THROWS(SampledLine(64, -1.0));
  const SampledLine line(256, 8.0);
  CHECK(line.spacing() == doctest::Approx(1.0 / 16.0));
  CHECK(line.point(128) == doctest::Approx(0.0));
  CHECK(line.freq(128) == doctest::Approx(0.0));
  CHECK(line.freq_spacing() == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("gaussian samples") {
  const SampledLine line(256, 8.0);
  const ContinuumSignal g = gaussian_signal(line);
  CHECK(std::abs(csignal_norm(g) * csignal_norm(g) - 1.0) < 1e-10);
  CHECK(std::abs(g.samples(128) - std::pow(2.0, 0.25)) == 0.0);
  for (int i = 0; i < line.n; ++i) {
    CHECK(g.samples(i) == g.samples((line.n - i) % line.n));  // parity, exactly
  }
}

TEST_CASE("hermite family is orthonormal on the grid") {
  const SampledLine line(256, 8.0);
  const auto fam = hermite_family(line, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const cplx want = i == j ? cplx(1, 0) : cplx(0, 0);
      CHECK(std::abs(csignal_inner(fam[i], fam[j]) - want) < 1e-12);
    }
  }
}

TEST_CASE("continuum stft against the direct definition") {
  const SampledLine line(32, 6.0);
  Rng rng(211);
  ContinuumSignal psi(line), phi(line);
  const ContinuumSignal g = gaussian_signal(line);
  for (int i = 0; i < line.n; ++i) {
    psi.samples(i) = g.samples(i) * rng.cnormal();
    phi.samples(i) = g.samples(i) * rng.cnormal();
  }
  const PlaneSamples v = continuum_stft(psi, phi);
  for (int j : {0, 5, 16, 31}) {
    for (int k : {0, 7, 16, 30}) {
      cplx acc = 0.0;
      for (int i = 0; i < line.n; ++i) {
        const double t = line.point(i);
        const cplx mod = std::exp(cplx(0.0, 2.0 * kPi * line.freq(k) * t));
        const int widx = ((i - j + line.n / 2) % line.n + line.n) % line.n;
        acc += psi.samples(i) * std::conj(mod * phi.samples(widx));
      }
      acc *= line.spacing();
      CHECK(std::abs(v.values(j, k) - acc) < 1e-12);
    }
  }
}

TEST_CASE("gaussian stft closed form") {
  const SampledLine line(256, 8.0);
  const ContinuumSignal g = gaussian_signal(line);
  const PlaneSamples v = continuum_stft(g, g);
  CHECK(std::abs(v.values(128, 128) - 1.0) < 1e-10);
  double worst = 0.0;
  for (int j = 0; j < line.n; ++j) {
    const double x = line.point(j);
    for (int k = 0; k < line.n; ++k) {
      const double w = line.freq(k);
      if (x * x + w * w > 9.0) continue;
      worst = std::max(worst,
                       std::abs(std::norm(v.values(j, k)) - std::exp(-kPi * (x * x + w * w))));
    }
  }
  CHECK(worst < 1e-8);
  // quadrature Moyal
  CHECK(std::abs(plane_integral_abs_pow(v, 2.0) - 1.0) < 1e-10);
}

TEST_CASE("gaussian fourier-wigner check") {
  const SampledLine line(256, 8.0);
  const GaussianFwResult res = gaussian_fw_check(line);
  CHECK(res.origin_error < 1e-10);
  // the rank-one route agrees with the phase-free Gaussian to quadrature error
  CHECK(res.corrected_form_error < 1e-6);
  // the printed closed form differs by |1 - e^{2 pi i x w}| e^{-pi|z|^2/2},
  // whose maximum over |z| <= 3 is sqrt(2) e^{-pi/4} = 0.64479...
  CHECK(res.paper_form_error == doctest::Approx(std::sqrt(2.0) * std::exp(-kPi / 4.0))
                                    .epsilon(0.02));
}

TEST_CASE("lieb ratios") {
  const SampledLine line(256, 8.0);
  const ContinuumSignal g = gaussian_signal(line);

  SUBCASE("matched gaussians sit at the sharp constant") {
    for (double p : {2.0, 3.0, 4.0, 6.0}) {
      CHECK(std::abs(lieb_ratio(g, g, p) - 1.0) < 1e-6);
    }
  }

  SUBCASE("p = 2 is Moyal") {
    CHECK(std::abs(lieb_ratio(g, g, 2.0) - 1.0) < 1e-8);
  }

  SUBCASE("random smooth pairs stay below one") {
    const auto fam = hermite_family(line, 6);
    Rng rng(223);
    for (int rep = 0; rep < 5; ++rep) {
      ContinuumSignal a(line), b(line);
      for (int m = 0; m < 6; ++m) {
        a.samples += rng.cnormal() * fam[m].samples;
        b.samples += rng.cnormal() * fam[m].samples;
      }
      for (double p : {2.0, 3.0, 6.0}) {
        CHECK(lieb_ratio(a, b, p) <= 1.0 + 1e-6);
      }
    }
  }

  SUBCASE("exponent validation") {
    CHECK_THROWS_AS(lieb_ratio(g, g, 1.5), InvalidExponentError);
    CHECK_THROWS_AS(lieb_ratio(g, g, 100.0), InvalidExponentError);
  }
}

TEST_CASE("trace-class lieb corollary") {
  const SampledLine line(256, 8.0);
  const auto fam = hermite_family(line, 6);

  SUBCASE("rank one reduces to the matched case") {
    const std::vector<WeightedPair> parts = {{1.0, fam[0], fam[0]}};
    for (double q : {2.0, 4.0}) {
      CHECK(std::abs(lieb_traceclass_ratio(parts, q) - 1.0) < 1e-6);
    }
  }

  SUBCASE("orthogonal ranks stay below one") {
    const std::vector<WeightedPair> parts = {{1.0, fam[0], fam[0]}, {0.7, fam[1], fam[1]},
                                             {0.2, fam[2], fam[3]}};
    for (double q : {2.0, 3.0, 6.0}) {
      CHECK(lieb_traceclass_ratio(parts, q) <= 1.0 + 1e-6);
    }
    // q = 2: unitarity plus norm monotonicity
    const PlaneSamples fw = traceclass_fourier_wigner(parts);
    CHECK(plane_lq_norm(fw, 2.0) <=
          traceclass_schatten_norm(parts, 1.0) * (1 + 1e-10));
    CHECK(std::abs(plane_lq_norm(fw, 2.0) - traceclass_schatten_norm(parts, 2.0)) < 1e-8);
  }
}

TEST_CASE("modulation norms of signals") {
  const SampledLine line(256, 8.0);
  const ContinuumSignal g = gaussian_signal(line);
  CHECK(std::abs(modulation_norm(g, 2.0, 2.0) - csignal_norm(g)) < 1e-8);
  // homogeneity
  ContinuumSignal scaled = g;
  scaled.samples *= cplx(3.0, -4.0);
  CHECK(std::abs(modulation_norm(scaled, 1.0, kInf) - 5.0 * modulation_norm(g, 1.0, kInf)) <
        1e-10 * modulation_norm(g, 1.0, kInf));
  // finite positive for a random smooth input
  Rng rng(227);
  const auto fam = hermite_family(line, 4);
  ContinuumSignal s(line);
  for (int m = 0; m < 4; ++m) s.samples += rng.cnormal() * fam[m].samples;
  for (double pp : {1.0, 2.0, kInf}) {
    for (double qq : {1.0, 2.0, kInf}) {
      const double v = modulation_norm(s, pp, qq);
      CHECK(v > 0.0);
      CHECK(std::isfinite(v));
    }
  }
  CHECK_THROWS_AS(modulation_norm(g, 0.5, 2.0), InvalidExponentError);
}

TEST_CASE("matched plane lab") {
  const PlaneGrid grid(64);
  CHECK(grid.axis.spacing() == doctest::Approx(0.125));
  CHECK(grid.axis.half_width == doctest::Approx(4.0));
  // dual grid coincides with the space grid
  CHECK(grid.axis.freq_spacing() == doctest::Approx(grid.axis.spacing()));

  const PlaneFunction g2 = gaussian_plane(grid);

  SUBCASE("2-d modulation norm at p=q=2 is the L^2 norm") {
    double l2 = 0.0;
    for (int i = 0; i < 64; ++i) {
      for (int j = 0; j < 64; ++j) l2 += std::norm(g2.values(i, j));
    }
    l2 = std::sqrt(l2 * grid.axis.spacing() * grid.axis.spacing());
    CHECK(std::abs(l2 - 1.0) < 1e-10);
    CHECK(std::abs(plane_modulation_norm(g2, 2.0, 2.0) - l2) < 1e-8);
  }

  SUBCASE("kernel operator basics") {
    const CMat op = kernel_to_operator(g2);
    // trace approximates the diagonal integral of the kernel
    double diag = 0.0;
    for (int i = 0; i < 64; ++i) {
      const double t = grid.axis.point(i);
      diag += std::sqrt(2.0) * std::exp(-2.0 * kPi * t * t);
    }
    diag *= grid.axis.spacing();
    CHECK(std::abs(op.trace().real() - diag) < 1e-12);

    // f == broad constant-like: conv trace = (plane integral of f) tr(S)
    PlaneFunction f(grid);
    f.values.setOnes();
    const CMat conv = lab_conv_fun_op(f, op);
    const double cell = grid.axis.spacing() * grid.axis.freq_spacing();
    const cplx want = cell * 64.0 * 64.0 * op.trace();
    CHECK(std::abs(conv.trace() - want) < 1e-8 * std::abs(want));
  }

  SUBCASE("ratio studies are finite, positive, and homogeneous") {
    const PlaneGrid small(16);
    const PlaneFunction k = gaussian_plane(small);
    PlaneFunction f(small);
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) {
        const double u1 = small.axis.point(i), u2 = small.axis.point(j);
        f.values(i, j) = std::exp(-0.1 * (u1 * u1 + u2 * u2));
      }
    }
    const double r = locop_modspace_ratio(f, k, 2.0);
    CHECK(r > 0.0);
    CHECK(std::isfinite(r));
    PlaneFunction fs = f;
    fs.values *= cplx(0.0, 2.0);
    CHECK(std::abs(locop_modspace_ratio(fs, k, 2.0) - r) < 1e-10 * r);
    PlaneFunction ks = k;
    ks.values *= 3.0;
    CHECK(std::abs(locop_modspace_ratio(f, ks, 2.0) - r) < 1e-10 * r);

    const CMat t = kernel_to_operator(k);
    const double fr = feichtinger_ratio(t, k);
    CHECK(fr > 0.0);
    CHECK(std::isfinite(fr));
  }
}

TEST_CASE("annulus maxima decay for gaussian rank ones") {
  const SampledLine line(256, 8.0);
  const auto fam = hermite_family(line, 2);
  const std::vector<WeightedPair> parts = {{1.0, fam[0], fam[0]}, {0.5, fam[1], fam[1]}};
  const PlaneSamples fw = traceclass_fourier_wigner(parts);
  const auto peaks = annulus_max(fw, {2.0, 3.0, 4.0});
  REQUIRE(peaks.size() == 3);
  CHECK(peaks[0] >= peaks[1]);
  CHECK(peaks[1] >= peaks[2]);
}
