#include "wgqed/oscillation.hpp"


#include "wgqed/constants.hpp"
#include "wgqed/errors.hpp"

namespace wgqed {
namespace {

double refine_peak(const std::vector<double>& t, const std::vector<double>& v, std::size_t i) {
  if (i == 0 || i + 1 >= t.size()) return t[i];
  const double y0 = v[i - 1];
  const double y1 = v[i];
  const double y2 = v[i + 1];
  const double denom = y0 - 2.0 * y1 + y2;
  if (denom >= 0.0) return t[i];
  const double shift = 0.5 * (y0 - y2) / denom;
  const double h = shift >= 0.0 ? t[i + 1] - t[i] : t[i] - t[i - 1];
  return t[i] + shift * h;
}

}  // namespace

std::optional<OscillationFit> fit_oscillation(const std::vector<double>& times,
                                              const std::vector<double>& values,
                                              double prominence, int min_peaks) {
  if (times.size() != values.size()) {
    throw PreconditionError("fit_oscillation: times and values differ in length");
  }
  if (times.size() < 3) return std::nullopt;

  OscillationFit fit{0.0, {}};
  bool rising = false;
  std::size_t best = 0;
  double trough = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double v = values[i];
    if (!rising) {
      if (v < trough) trough = v;
      if (v > trough + prominence) {
        rising = true;
        best = i;
      }
    } else {
      if (v > values[best]) best = i;
      if (v < values[best] - prominence) {
        fit.peaks.push_back(refine_peak(times, values, best));
        rising = false;
        trough = v;
      }
    }
  }
  if (static_cast<int>(fit.peaks.size()) < min_peaks || fit.peaks.size() < 2) return std::nullopt;
  const double span = fit.peaks.back() - fit.peaks.front();
  fit.angular_frequency = kTwoPi * static_cast<double>(fit.peaks.size() - 1) / span;
  return fit;
}

}  // namespace wgqed
