#include "pclique/theory.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pclique/errors.hpp"
#include "pclique/geometry.hpp"

namespace pclique {
namespace {

constexpr double kE = std::numbers::e;
constexpr double kInvE = 1.0 / std::numbers::e;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Branch-point expansion in p = sqrt(2(e y + 1)); sign selects W0 (+1) or W-1 (-1).
double branch_point_series(double y, double sign) {
  const double q = std::max(0.0, 2.0 * (kE * y + 1.0));
  const double p = sign * std::sqrt(q);
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
}

// Halley iteration on w e^w - y.
double halley(double y, double w) {
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - y;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    if (!std::isfinite(dw)) break;
    w -= dw;
    if (std::abs(dw) <= 4.0 * kEps * (1.0 + std::abs(w))) break;
  }
  return w;
}

bool is_branch_point(double y) { return y == -kInvE; }

void require_log_n(double n) {
  if (!(n > 1.0)) {
    throw ModelDomainError("threshold theory needs n > 1, got " + std::to_string(n));
  }
}

double dense_alpha(const ModelParams& params, const RegimeCuts& cuts) {
  return cuts.dense_alpha.value_or(std::log(params.n()));
}

}  // namespace

// ---------------------------------------------------------------------------
// ModelParams

double mu_from_radius(double n, int d, double radius) {
  if (!(n > 0.0)) throw UsageError("n must be positive");
  if (!(radius >= 0.0)) throw UsageError("radius must be non-negative");
  return n * unit_ball_volume(d) * std::pow(radius, d);
}

double radius_from_mu(double n, int d, double mu) {
  if (!(n > 0.0)) throw UsageError("n must be positive");
  if (!(mu >= 0.0)) throw UsageError("mu must be non-negative");
  const double r = std::pow(mu / (n * unit_ball_volume(d)), 1.0 / d);
  if (!(r < 0.25)) {
    throw ModelDomainError("implied radius " + std::to_string(r) + " is not below 1/4");
  }
  return r;
}

ModelParams ModelParams::from_mu(double n, int d, double mu) {
  return ModelParams(n, d, radius_from_mu(n, d, mu), mu);
}

ModelParams ModelParams::from_radius(double n, int d, double radius) {
  if (!(radius < 0.25)) {
    throw ModelDomainError("radius " + std::to_string(radius) + " is not below 1/4");
  }
  return ModelParams(n, d, radius, mu_from_radius(n, d, radius));
}

double ModelParams::alpha() const {
  require_log_n(n_);
  return mu_ / std::log(n_);
}

// ---------------------------------------------------------------------------
// Lambert W and inverse entropy

double lambert_w0(double y) {
  if (std::isnan(y) || y < -kInvE) {
    throw ModelDomainError("lambert_w0: argument below -1/e");
  }
  if (is_branch_point(y)) return -1.0;
  if (y == 0.0) return 0.0;
  if (std::isinf(y)) return y;

  double w;
  if (y < -0.25) {
    w = branch_point_series(y, 1.0);
    // Close to the branch point the series is already exact to rounding.
    if (kE * y + 1.0 < 5e-7) return w;
  } else if (std::abs(y) < 1e-3) {
    w = y * (1.0 + y * (-1.0 + y * 1.5));
  } else {
    // Winitzki's approximation.
    const double l = std::log1p(y);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  return halley(y, w);
}

double lambert_wm1(double y) {
  if (std::isnan(y) || y < -kInvE || y >= 0.0) {
    throw ModelDomainError("lambert_wm1: argument outside [-1/e, 0)");
  }
  if (is_branch_point(y)) return -1.0;

  double w;
  if (y < -0.25) {
    w = branch_point_series(y, -1.0);
    if (kE * y + 1.0 < 5e-7) return w;
  } else {
    const double l1 = std::log(-y);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  return halley(y, w);
}

double entropy(double x) {
  if (!(x >= 0.0)) throw ModelDomainError("entropy: negative argument");
  if (x == 0.0) return 1.0;
  return 1.0 - x + x * std::log(x);
}

double inverse_entropy_plus(double y) {
  if (!(y >= 0.0)) throw ModelDomainError("inverse_entropy_plus: negative argument");
  if (y == 0.0) return 1.0;
  return std::exp(lambert_w0((y - 1.0) / kE) + 1.0);
}

double inverse_entropy_minus(double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw ModelDomainError("inverse_entropy_minus: argument outside [0,1]");
  }
  if (y == 0.0) return 1.0;
  if (y == 1.0) return 0.0;
  return std::exp(lambert_wm1((y - 1.0) / kE) + 1.0);
}

// ---------------------------------------------------------------------------
// Degree thresholds

DegreeRegime degree_regime(const ModelParams& params, const RegimeCuts& cuts) {
  const double alpha = params.alpha();
  // A hair of slack so mu = (log n)^2 computed either way lands in the dense branch.
  if (alpha >= dense_alpha(params, cuts) * (1.0 - 1e-12)) return DegreeRegime::kDense;
  if (alpha < cuts.sparse_alpha) return DegreeRegime::kSparse;
  return DegreeRegime::kConnectivity;
}

std::string_view to_string(DegreeRegime regime) {
  switch (regime) {
    case DegreeRegime::kSparse: return "sparse";
    case DegreeRegime::kConnectivity: return "connectivity";
    case DegreeRegime::kDense: return "dense";
  }
  return "?";
}

double max_degree_threshold(const ModelParams& params, const RegimeCuts& cuts) {
  const double mu = params.mu();
  switch (degree_regime(params, cuts)) {
    case DegreeRegime::kSparse: {
      if (mu == 0.0) return 0.0;
      const double log_n = std::log(params.n());
      if (!(log_n > mu)) {
        throw ModelDomainError("sparse max-degree formula needs mu < log n");
      }
      return log_n / std::log(log_n / mu);
    }
    case DegreeRegime::kConnectivity:
      return mu * inverse_entropy_plus(1.0 / params.alpha());
    case DegreeRegime::kDense:
      return mu;
  }
  return mu;
}

double min_degree_threshold(const ModelParams& params, const RegimeCuts& cuts) {
  const DegreeRegime regime = degree_regime(params, cuts);
  if (regime == DegreeRegime::kDense) return params.mu();
  const double alpha = params.alpha();
  if (alpha < 1.0) return 0.0;
  return params.mu() * inverse_entropy_minus(1.0 / alpha);
}

// ---------------------------------------------------------------------------
// Clique number

std::string_view to_string(CliqueNumberRegime regime) {
  switch (regime) {
    case CliqueNumberRegime::kBounded: return "bounded";
    case CliqueNumberRegime::kSparse: return "sparse";
    case CliqueNumberRegime::kConnectivity: return "connectivity";
    case CliqueNumberRegime::kDense: return "dense";
  }
  return "?";
}

CliqueNumberEstimate clique_number_asymptotic(const ModelParams& params,
                                              const CliqueNumberCuts& cuts) {
  require_log_n(params.n());
  const double mu = params.mu();
  if (mu <= std::pow(params.n(), -cuts.bounded_exponent)) {
    return {CliqueNumberRegime::kBounded, std::nullopt};
  }
  const double two_d = std::ldexp(1.0, params.dimension());
  switch (degree_regime(params, cuts.regimes)) {
    case DegreeRegime::kSparse: {
      const double log_n = std::log(params.n());
      return {CliqueNumberRegime::kSparse, log_n / std::log(log_n / mu)};
    }
    case DegreeRegime::kConnectivity: {
      const double f = inverse_entropy_plus(two_d / params.alpha()) / two_d;
      return {CliqueNumberRegime::kConnectivity, mu * f};
    }
    case DegreeRegime::kDense:
      return {CliqueNumberRegime::kDense, mu / two_d};
  }
  return {CliqueNumberRegime::kBounded, std::nullopt};
}

// ---------------------------------------------------------------------------
// Regime classifier

std::string_view to_string(VdVerdict v) {
  switch (v) {
    case VdVerdict::kSuccess: return "SUCCESS";
    case VdVerdict::kFail: return "FAIL";
    case VdVerdict::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(CnVerdict v) {
  return v == CnVerdict::kSuccess ? "SUCCESS" : "UNKNOWN";
}

std::string_view to_string(CnCountBranch b) {
  switch (b) {
    case CnCountBranch::kBelowLens: return "below-lens";
    case CnCountBranch::kGap: return "gap";
    case CnCountBranch::kAboveMean: return "above-mean";
    case CnCountBranch::kNone: return "none";
  }
  return "?";
}

CnConditionValues cn_condition_values(const ModelParams& params, long long k,
                                      const ClassifierConfig& config) {
  const int d = params.dimension();
  const double n = params.n();
  const double mu = params.mu();
  CnConditionValues out{};
  out.c1 = config.c1.value_or(blocking_region_fraction(d));
  out.c2 = config.c2.value_or(min_lens_fraction(d));
  out.blocking = mu == 0.0 ? 0.0 : std::exp(std::log(mu) + std::log(n) - out.c1 * mu);

  const double m = static_cast<double>(k - 2);
  const double lens_mean = out.c2 * mu;
  if (m <= lens_mean) {
    out.count_branch = CnCountBranch::kBelowLens;
    if (mu == 0.0) {
      out.count = 0.0;
    } else {
      out.count = std::exp(std::log(mu * n / 2.0) + m * std::log(lens_mean) - lens_mean -
                           std::lgamma(m + 1.0));
    }
  } else if (m >= mu) {
    out.count_branch = CnCountBranch::kAboveMean;
    if (static_cast<double>(k) * mu / n < config.large_k_mu_over_n) {
      const double log_mu_term = mu == 0.0 ? 0.0 : (m + 1.0) * std::log(mu);
      out.count = mu == 0.0 ? 0.0
                            : std::exp(std::log(n / 2.0) + log_mu_term - mu -
                                       std::lgamma(m + 1.0));
    }
  } else {
    out.count_branch = CnCountBranch::kGap;
  }
  return out;
}

RegimeVerdict classify_regime(const ModelParams& params, long long k, double epsilon,
                              const ClassifierConfig& config) {
  if (k < 2) throw UsageError("classify_regime: k must be >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw UsageError("classify_regime: epsilon must lie in (0,1)");
  }
  const double n = params.n();
  const double mu = params.mu();
  require_log_n(n);
  if (mu / n > config.ill_posed_mu_over_n) {
    throw ModelDomainError("ill-posed: mu/n = " + std::to_string(mu / n) +
                           " puts the planted clique inside the natural graph");
  }

  RegimeVerdict v;
  v.alpha = params.alpha();
  v.regime = degree_regime(params, config.regimes);
  v.T_n = max_degree_threshold(params, config.regimes);
  v.t_n = min_degree_threshold(params, config.regimes);
  const double kd = static_cast<double>(k);

  std::string notes = "finite-n heuristic; regime=";
  notes += to_string(v.regime);

  if (v.regime == DegreeRegime::kDense) {
    if (kd > epsilon * mu) {
      v.vd = VdVerdict::kSuccess;
      notes += "; vd: k > eps*mu";
    } else if (mu / n < config.dense_mu_over_n && kd < epsilon * std::sqrt(mu)) {
      v.vd = VdVerdict::kFail;
      notes += "; vd: k < eps*sqrt(mu) with mu=o(n)";
    }
  } else {
    if (kd > (1.0 + epsilon) * (v.T_n - v.t_n)) {
      v.vd = VdVerdict::kSuccess;
      notes += "; vd: k > (1+eps)(T-t)";
    } else if (v.regime == DegreeRegime::kConnectivity &&
               kd <= (1.0 - epsilon) * (v.T_n - mu)) {
      v.vd = VdVerdict::kFail;
      notes += "; vd: k <= (1-eps)(T-mu)";
    }
  }

  const CnConditionValues cn = cn_condition_values(params, k, config);
  const bool blocking_ok = kd <= config.max_clique_fraction * n && cn.blocking < config.tau;
  const bool count_ok = cn.count.has_value() && *cn.count < config.tau;
  if (blocking_ok || count_ok) v.cn = CnVerdict::kSuccess;
  if (blocking_ok) notes += "; cn: mu n e^{-c1 mu} < tau";
  if (count_ok) notes += "; cn: common-neighbour count bound < tau";
  if (cn.count_branch == CnCountBranch::kGap) notes += "; cn: k-2 in (c2 mu, mu) gap";

  v.notes = std::move(notes);
  return v;
}

}  // namespace pclique
