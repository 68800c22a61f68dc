#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pclique {

// Expected vertex count n, dimension d, and the radius / mean-degree pair
// tied by mu = n * phi_d * r^d. Both factories reject r >= 1/4.
class ModelParams {
 public:
  static ModelParams from_mu(double n, int d, double mu);
  static ModelParams from_radius(double n, int d, double radius);

  double n() const noexcept { return n_; }
  int dimension() const noexcept { return d_; }
  double radius() const noexcept { return radius_; }
  double mu() const noexcept { return mu_; }

  // mu / log n. Throws ModelDomainError when n <= 1.
  double alpha() const;

 private:
  ModelParams(double n, int d, double radius, double mu)
      : n_(n), d_(d), radius_(radius), mu_(mu) {}

  double n_;
  int d_;
  double radius_;
  double mu_;
};

double mu_from_radius(double n, int d, double radius);
// Throws ModelDomainError when the implied radius is >= 1/4.
double radius_from_mu(double n, int d, double mu);

// Principal branch, y >= -1/e. Result >= -1.
double lambert_w0(double y);
// Lower branch, y in [-1/e, 0). Result <= -1.
double lambert_wm1(double y);

// H(x) = 1 - x + x log x, with H(0) = 1.
double entropy(double x);
// Inverse of H on [1, inf). Domain y >= 0.
double inverse_entropy_plus(double y);
// Inverse of H on (0, 1]. Domain y in [0, 1]; returns 0 at y = 1 (the limit).
double inverse_entropy_minus(double y);

// Where alpha = mu / log n sits. The asymptotic regimes alpha = 0, alpha
// finite and alpha = infinity are read at finite n through two cut-offs.
enum class DegreeRegime { kSparse, kConnectivity, kDense };

struct RegimeCuts {
  // alpha below this uses the alpha = 0 formulas.
  double sparse_alpha = 1e-3;
  // alpha at or above this is treated as alpha = infinity. Unset means
  // log n, i.e. mu >= (log n)^2.
  std::optional<double> dense_alpha;
};

DegreeRegime degree_regime(const ModelParams& params, const RegimeCuts& cuts = {});
std::string_view to_string(DegreeRegime regime);

// T(n): scale of the maximum degree.
double max_degree_threshold(const ModelParams& params, const RegimeCuts& cuts = {});
// t(n): scale of the minimum degree; 0 for alpha < 1.
double min_degree_threshold(const ModelParams& params, const RegimeCuts& cuts = {});

enum class CliqueNumberRegime { kBounded, kSparse, kConnectivity, kDense };
std::string_view to_string(CliqueNumberRegime regime);

struct CliqueNumberEstimate {
  CliqueNumberRegime regime;
  // Unset in the bounded (O(1)) regime.
  std::optional<double> value;
};

struct CliqueNumberCuts {
  RegimeCuts regimes;
  // mu <= n^{-bounded_exponent} selects the O(1) branch.
  double bounded_exponent = 0.1;
};

// Leading-order natural clique number of the hard geometric graph.
CliqueNumberEstimate clique_number_asymptotic(const ModelParams& params,
                                              const CliqueNumberCuts& cuts = {});

enum class VdVerdict { kSuccess, kFail, kUnknown };
enum class CnVerdict { kSuccess, kUnknown };
std::string_view to_string(VdVerdict v);
std::string_view to_string(CnVerdict v);

// Finite-n readings of the asymptotic recovery conditions.
struct ClassifierConfig {
  RegimeCuts regimes;
  // "expression = o(1)" is read as "expression < tau".
  double tau = 0.1;
  // "mu = o(n)" in the dense VD-failure condition.
  double dense_mu_over_n = 0.01;
  // "k = o(n / mu)" in the large-k CN condition, read as k * mu / n < this.
  double large_k_mu_over_n = 0.01;
  // "k <= alpha n" in the first CN condition.
  double max_clique_fraction = 0.9;
  // mu / n above this is treated as the ill-posed mu ~ n regime.
  double ill_posed_mu_over_n = 0.9;
  // Override the geometric constants c1,d and c2,d.
  std::optional<double> c1;
  std::optional<double> c2;
};

enum class CnCountBranch { kBelowLens, kGap, kAboveMean, kNone };
std::string_view to_string(CnCountBranch b);

// The two CN success expressions evaluated at (params, k).
struct CnConditionValues {
  double c1;
  double c2;
  // mu n e^{-c1 mu}
  double blocking;
  CnCountBranch count_branch;
  // Branch expression of the second condition; unset in the gap, or when
  // the large-k side condition k = o(n/mu) fails.
  std::optional<double> count;
};

CnConditionValues cn_condition_values(const ModelParams& params, long long k,
                                      const ClassifierConfig& config = {});

struct RegimeVerdict {
  VdVerdict vd = VdVerdict::kUnknown;
  CnVerdict cn = CnVerdict::kUnknown;
  double alpha = 0.0;
  double t_n = 0.0;
  double T_n = 0.0;
  DegreeRegime regime = DegreeRegime::kSparse;
  std::string notes;
};

// Throws UsageError for k < 2 or epsilon outside (0,1), ModelDomainError for
// ill-posed parameters.
RegimeVerdict classify_regime(const ModelParams& params, long long k, double epsilon,
                              const ClassifierConfig& config = {});

}  // namespace pclique
