#include <algorithm>
#include <cmath>
#include <sstream>

#include "wgqed/errors.hpp"
#include "wgqed/oracle.hpp"

namespace wgqed::oracle {
namespace {

// Tails are pushed out until the phase a w reaches this many radians, where
// the averaged remainder is far below the declared accuracy.
constexpr double kTailPhase = 4000.0;

double effective_omega_max(const QuadratureConfig& cfg, const SystemParams& params) {
  return cfg.omega_max > 0.0 ? cfg.omega_max : params.omega_q + 2000.0 * params.gamma_rad;
}

template <class F>
cplx gauss_panel(const GaussRule& rule, double lo, double hi, F&& f) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

template <class F>
cplx integrate_uniform(const GaussRule& rule, double lo, double hi, double max_width, F&& f) {
  if (!(hi > lo)) return 0.0;
  const auto panels = static_cast<long long>(std::ceil((hi - lo) / max_width));
  const double h = (hi - lo) / static_cast<double>(panels);
  cplx sum = 0.0;
  for (long long i = 0; i < panels; ++i) {
    const double a = lo + h * static_cast<double>(i);
    const double b = i + 1 == panels ? hi : a + h;
    sum += gauss_panel(rule, a, b, f);
  }
  return sum;
}

// Panels shrink geometrically towards `pole` (never narrower than `floor`
// times 1/4) and a panel boundary sits exactly on it.
template <class F>
cplx integrate_graded(const GaussRule& rule, double lo, double hi, double max_width, double pole,
                      double floor, F&& f) {
  cplx sum = 0.0;
  double w = lo;
  while (w < hi) {
    const double dist = std::abs(w - pole);
    double width = std::min(max_width, 0.25 * std::max(dist, floor));
    double end = std::min(hi, w + width);
    if (w < pole && end > pole) end = pole;
    sum += gauss_panel(rule, w, end, f);
    w = end;
  }
  return sum;
}

// \int_{w1}^{inf} e^{i a w} / (w - c) dw as the mean of the partial integrals
// F(W) over W in [W2, W2 + P], P a whole number of periods of e^{i a w}:
//   mean = F(W2) + (1/P) \int_{W2}^{W2+P} (W2 + P - w) f(w) dw.
cplx averaged_tail(const GaussRule& rule, double a, cplx c, double w1, int periods) {
  const double abs_a = std::abs(a);
  const double period = kTwoPi / abs_a;
  const double w2 = std::max(w1, kTailPhase / abs_a);
  const double span = periods * period;
  const double width = period / 4.0;
  auto f = [&](double w) { return std::exp(kI * (a * w)) / (w - c); };
  const cplx head = integrate_uniform(rule, w1, w2, width, f);
  const double end = w2 + span;
  const cplx ramp = integrate_uniform(rule, w2, end, width,
                                      [&](double w) { return (end - w) * f(w); });
  return head + ramp / span;
}

struct Setup {
  cplx pole;      // c in (e^{i(w-c)t} - 1) / (w - c)
  cplx factor;    // 1 for the I1 family, 1/i for the I2 family
  double phase;   // b in e^{i w b}
  double shifted; // b + t
};

Setup make_setup(Kernel which, const SpaceTimePoint& p, const SystemParams& params,
                 const PulseSpec& pulse, Losses losses) {
  const Direction dir = which == Kernel::I1 || which == Kernel::I2 ? Direction::forward
                                                                   : Direction::backward;
  check_region(p, params, dir);
  Setup s{};
  // forward: e^{i w (x - v_g t)/v_g}; backward: e^{-i w (x + v_g t)/v_g}
  s.phase = dir == Direction::forward ? (p.x - params.v_g * p.t) / params.v_g
                                      : -(p.x + params.v_g * p.t) / params.v_g;
  s.shifted = s.phase + p.t;
  const bool damped = which == Kernel::I1 || which == Kernel::J1;
  s.pole = damped ? complex_frequency(params, losses) : cplx{pulse.omega_s, 0.0};
  s.factor = damped ? cplx{1.0, 0.0} : -kI;
  return s;
}

}  // namespace

const char* to_string(Kernel k) {
  switch (k) {
    case Kernel::I1: return "I1";
    case Kernel::I2: return "I2";
    case Kernel::J1: return "J1";
    case Kernel::J2: return "J2";
  }
  return "?";
}

void QuadratureConfig::validate(const SystemParams& params) const {
  const double w = effective_omega_max(*this, params);
  if (w < params.omega_q + 1e3 * params.gamma_rad) {
    throw ValidationError("QuadratureConfig: omega_max must be at least Omega + 1e3 Gamma");
  }
  if (periods_avg < 8 || periods_avg % 2 != 0) {
    throw ValidationError("QuadratureConfig: periods_avg must be even and at least 8");
  }
  if (panel_points < 16) {
    throw ValidationError("QuadratureConfig: panel_points must be at least 16");
  }
}

cplx quadrature_kernel_once(Kernel which, const SpaceTimePoint& point,
                            const SystemParams& params, const PulseSpec& pulse,
                            const QuadratureConfig& cfg, Losses losses) {
  cfg.validate(params);
  const Setup s = make_setup(which, point, params, pulse, losses);
  const GaussRule rule = gauss_legendre(cfg.panel_points);
  const double t = point.t;
  const double w_max = effective_omega_max(cfg, params);

  auto integrand = [&](double w) {
    const cplx d = w - s.pole;
    const cplx u = kI * d * t;
    // (e^{u} - 1)/d, with the removable point at d = 0 taken from the series.
    const cplx ratio = std::abs(u) < 1e-6 ? kI * t * (1.0 + 0.5 * u) : (std::exp(u) - 1.0) / d;
    return s.factor * ratio * std::exp(kI * (w * s.phase));
  };

  const double fastest = std::max({std::abs(s.phase), std::abs(s.shifted), t});
  const double max_width = kTwoPi / fastest / 4.0;
  const double floor = std::max(std::abs(s.pole.imag()), 0.5 * params.gamma_rad);
  const cplx body =
      integrate_graded(rule, 0.0, w_max, max_width, s.pole.real(), floor, integrand);

  // Beyond w_max the two exponentials are integrated separately:
  //   e^{-ict} \int e^{i w (b + t)}/(w - c)  -  \int e^{i w b}/(w - c)
  const cplx tail_shifted = std::exp(-kI * s.pole * t) *
                            averaged_tail(rule, s.shifted, s.pole, w_max, cfg.periods_avg);
  const cplx tail_plain = averaged_tail(rule, s.phase, s.pole, w_max, cfg.periods_avg);
  return body + s.factor * (tail_shifted - tail_plain);
}

cplx quadrature_kernel(Kernel which, const SpaceTimePoint& point, const SystemParams& params,
                       const PulseSpec& pulse, const QuadratureConfig& cfg, Losses losses) {
  const cplx coarse = quadrature_kernel_once(which, point, params, pulse, cfg, losses);
  QuadratureConfig fine = cfg;
  fine.panel_points *= 2;
  fine.periods_avg *= 2;
  const cplx refined = quadrature_kernel_once(which, point, params, pulse, fine, losses);
  const double diff = std::abs(refined - coarse) / std::max(std::abs(refined), 1e-300);
  if (diff > kQuadratureAccuracy) {
    std::ostringstream os;
    os << "quadrature_kernel(" << to_string(which) << "): refinement changed the result by "
       << diff << " relative at x=" << point.x << ", t=" << point.t;
    throw ConvergenceError(os.str());
  }
  return refined;
}

cplx principal_value_exp_over_z(double omega_s, double tau) {
  if (!(omega_s > 0.0) || !(tau > 0.0)) {
    throw PreconditionError("principal_value_exp_over_z: omega_s and tau must be positive");
  }
  const GaussRule rule = gauss_legendre(32);
  // On [-w, w] the cosine part is odd and cancels under symmetric excision;
  // the sine part is even and regular at z = 0.
  auto sinc = [&](double z) -> cplx {
    const double u = z * tau;
    return std::abs(u) < 1e-8 ? tau : std::sin(u) / z;
  };
  const double width = std::min(kTwoPi / tau / 4.0, omega_s);
  const cplx inner = 2.0 * kI * integrate_uniform(rule, 0.0, omega_s, width, sinc);
  return inner + averaged_tail(rule, tau, 0.0, omega_s, 32);
}

}  // namespace wgqed::oracle
