#include "wgqed/stationary.hpp"

#include <cmath>
#include <string>

#include "wgqed/errors.hpp"

namespace wgqed {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

void SystemParams::validate() const {
  require(std::isfinite(omega_q) && omega_q > 0.0, "omega_q must be > 0");
  require(std::isfinite(gamma_rad) && gamma_rad > 0.0, "gamma_rad must be > 0");
  require(std::isfinite(gamma_phi) && gamma_phi >= 0.0, "gamma_phi must be >= 0");
  require(std::isfinite(gamma_loss) && gamma_loss >= 0.0, "gamma_loss must be >= 0");
  require(std::isfinite(v_g) && v_g > 0.0, "v_g must be > 0");
}

void DriveSpec::validate() const {
  require(std::isfinite(omega_s) && omega_s > 0.0, "omega_s must be > 0");
  require(std::isfinite(rabi) && rabi >= 0.0, "rabi must be >= 0");
}

cplx effective_omega(const SystemParams& params) {
  return {params.omega_q, -(params.gamma_phi + 0.5 * params.gamma_loss)};
}

cplx qubit_frequency(const SystemParams& params, Losses losses) {
  return losses == Losses::included ? effective_omega(params) : cplx{params.omega_q, 0.0};
}

cplx complex_frequency(const SystemParams& params, Losses losses) {
  return qubit_frequency(params, losses) - kI * (0.5 * params.gamma_rad);
}

cplx transmission(const SystemParams& params, double omega_s, Losses losses) {
  const cplx detuning = omega_s - qubit_frequency(params, losses);
  return detuning / (omega_s - complex_frequency(params, losses));
}

cplx reflection(const SystemParams& params, double omega_s, Losses losses) {
  return -kI * (0.5 * params.gamma_rad) / (omega_s - complex_frequency(params, losses));
}

cplx reflection_driven(const SystemParams& params, const DriveSpec& drive) {
  const double gamma = params.total_decoherence();
  const double ratio = (drive.omega_s - params.omega_q) / gamma;
  const double saturation =
      drive.rabi * drive.rabi / ((params.gamma_rad + params.gamma_loss) * gamma);
  const cplx numerator{1.0, ratio};
  return -(params.gamma_rad / (2.0 * gamma)) * numerator / (1.0 + ratio * ratio + saturation);
}

cplx transmission_driven(const SystemParams& params, const DriveSpec& drive) {
  return 1.0 + reflection_driven(params, drive);
}

}  // namespace wgqed
