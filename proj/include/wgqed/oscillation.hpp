#pragma once

// Dominant oscillation frequency of a sampled real signal by peak spacing.

#include <optional>
#include <vector>

namespace wgqed {

struct OscillationFit {
  double angular_frequency;   ///< 2 pi (n - 1) / (t_last - t_first)
  std::vector<double> peaks;  ///< interpolated peak times
};

/// Peaks are local maxima refined by a parabola through the three samples
/// around them. A maximum only counts once the signal has fallen by more than
/// `prominence` below it and risen by more than `prominence` after the
/// preceding trough, so rounding noise on a monotone signal gives no peaks.
/// Returns nullopt when fewer than `min_peaks` peaks are found.
std::optional<OscillationFit> fit_oscillation(const std::vector<double>& times,
                                              const std::vector<double>& values,
                                              double prominence, int min_peaks = 2);

}  // namespace wgqed
