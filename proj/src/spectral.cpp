// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rydsim {

PowerSpectrum power_spectrum(const TimeSeries& series) {
  const std::size_t n = series.values.size();
  if (n < 16) throw std::invalid_argument("time series too short (need >= 16 samples)");
  if (!(series.dt > 0.0)) throw std::invalid_argument("time step must be positive");

  const double mean =
      std::accumulate(series.values.begin(), series.values.end(), 0.0) / double(n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = series.values[i] - mean;

  std::vector<fftw_complex> out(n / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), x.data(), out.data(),
                                        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  PowerSpectrum ps;
  ps.domega = 2.0 * M_PI / (double(n) * series.dt);
  const std::size_t bins = n / 2 + 1;
  ps.omega.resize(bins);
  ps.power.resize(bins);
  for (std::size_t m = 0; m < bins; ++m) {
    ps.omega[m] = ps.domega * double(m);
    double mag2 = out[m][0] * out[m][0] + out[m][1] * out[m][1];
    // fold the negative-frequency half into the interior bins so that
    // sum(power) = n * variance (Parseval)
    const bool interior = m != 0 && !(n % 2 == 0 && m == n / 2);
    ps.power[m] = (interior ? 2.0 : 1.0) * mag2 / double(n);
  }
  return ps;
}

PeakMatchReport peak_match(const PowerSpectrum& spectrum, const std::vector<double>& gaps) {
  if (spectrum.power.empty()) throw std::invalid_argument("empty power spectrum");
  PeakMatchReport report;
  const auto& p = spectrum.power;
  const double floor_level =
      1e-12 * (*std::max_element(p.begin(), p.end()) + std::numeric_limits<double>::min());
  for (std::size_t m = 1; m + 1 < p.size(); ++m) {
    if (p[m] > floor_level && p[m] > p[m - 1] && p[m] >= p[m + 1])
      report.peaks.push_back(spectrum.omega[m]);
  }
  report.has_peaks = !report.peaks.empty();
  for (double g : gaps) {
    PeakMatch match;
    match.gap = g;
    if (report.has_peaks) {
      double best = std::numeric_limits<double>::infinity();
      for (double w : report.peaks) {
        if (std::abs(w - g) < best) {
          best = std::abs(w - g);
          match.peak_omega = w;
        }
      }
      match.bin_distance = best / spectrum.domega;
    } else {
      match.peak_omega = std::numeric_limits<double>::quiet_NaN();
      match.bin_distance = std::numeric_limits<double>::infinity();
    }
    report.matches.push_back(match);
  }
  return report;
}

}  // namespace rydsim
