// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace rydsim {

/// Real observable sampled on a uniform time grid.
struct TimeSeries {
  double t0 = 0.0;
  double dt = 0.1;
  std::vector<double> values;
  std::string label;
};

/// One-sided periodogram over angular frequencies; power is normalized so
/// that its sum equals length * variance of the mean-subtracted series.
struct PowerSpectrum {
  std::vector<double> omega;  // ascending from 0, spacing 2*pi/(n*dt)
  std::vector<double> power;
  double domega = 0.0;
};

/// Mean-subtracted rectangular-window periodogram (length >= 16).
PowerSpectrum power_spectrum(const TimeSeries& series);

struct PeakMatch {
  double gap = 0.0;          // requested frequency
  double peak_omega = 0.0;   // nearest local maximum
  double bin_distance = 0.0; // |gap - peak| in units of the frequency resolution
};

struct PeakMatchReport {
  bool has_peaks = false;
  std::vector<double> peaks;        // local maxima of the spectrum (omega > 0)
  std::vector<PeakMatch> matches;   // one entry per requested gap
};

/// Locate spectral peaks and report, for every supplied gap frequency, the
/// nearest peak and the distance in bins.
PeakMatchReport peak_match(const PowerSpectrum& spectrum, const std::vector<double>& gaps);

}  // namespace rydsim
