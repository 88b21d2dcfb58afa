#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/bounds.hpp"
#include "orlicz/domain.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Nodal values on the interior nodes of a domain; zero everywhere else.
struct GridFunction {
  std::shared_ptr<const DomainGeometry> domain;
  std::vector<double> values;

  static GridFunction zeros(std::shared_ptr<const DomainGeometry> domain);
  std::size_t size() const { return values.size(); }
};

/// Per-node weight ω and its quadrature norms.
struct Weight {
  std::vector<double> values;
  double l1 = 0.0;
  double linf = 0.0;
};

Weight constant_weight(const DomainGeometry& g, double c);
/// ω ≡ 1/|Ω|, so that ‖ω‖_{L¹} = 1.
Weight unit_mass_weight(const DomainGeometry& g);
Weight weight_from_values(const DomainGeometry& g, std::vector<double> values);
/// Rows of numbers laid out like a mask over the unpadded cell grid (row 0 on top).
Weight load_weight_file(const DomainGeometry& g, const std::string& path);

/// Pairwise quadrature of the modular Gagliardo form on a domain plus an
/// exterior collar of zero nodes extending `collar`·d_Ω beyond the bounding box.
/// Interior pairs are summed exactly; exterior cells are grouped per node into
/// logarithmic distance bins whose representative distance makes the sum exact
/// for A = t².
class Discretization {
 public:
  Discretization(std::shared_ptr<const DomainGeometry> domain, double s, double collar = 2.0);

  const DomainGeometry& domain() const { return *domain_; }
  const std::shared_ptr<const DomainGeometry>& domain_ptr() const { return domain_; }
  double s() const { return s_; }
  int n() const { return domain_->dim; }
  std::size_t size() const { return domain_->size(); }
  std::size_t exterior_cells() const { return exterior_cells_; }

  double seminorm(const std::vector<double>& u, const YoungFunction& f) const;
  double seminorm_and_gradient(const std::vector<double>& u, const YoungFunction& f, std::vector<double>& grad) const;
  /// Σ a(|D^s u|)|D^s u| over the same pairs and weights.
  double pairing(const std::vector<double>& u, const YoungFunction& f) const;
  /// Row-major N×N matrix K with seminorm(u, t²) = uᵀKu.
  std::vector<double> quadratic_kernel() const;

  /// Squared integer offset → |x − y|^{−s} and 2|x − y|^{−n}h^{2n}.
  double inv_ds(long d2) const { return inv_ds_[static_cast<std::size_t>(d2)]; }
  double pair_weight(long d2) const { return pair_w_[static_cast<std::size_t>(d2)]; }

 private:
  template <class Visit>
  void for_each_term(const std::vector<double>& u, Visit&& visit) const;

  std::shared_ptr<const DomainGeometry> domain_;
  double s_;
  std::vector<double> inv_ds_, pair_w_;
  // Exterior bins in CSR layout.
  std::vector<std::size_t> ext_offset_;
  std::vector<double> ext_inv_ds_, ext_w_;
  std::size_t exterior_cells_ = 0;
};

double modular_seminorm(const Discretization& disc, const GridFunction& u, const YoungFunction& f);
double modular_seminorm(const GridFunction& u, const YoungFunction& f, double s);

/// Σ ω A(|u|) hⁿ with compensated summation.
double weighted_modular(const GridFunction& u, const YoungFunction& f, const Weight& omega);

struct Normalized {
  GridFunction u;
  double r = 1.0;
};

/// r·u with Σ ω A(r|u|) hⁿ = α to 1e-10 relative.
Normalized normalize_to_alpha(const GridFunction& u, const YoungFunction& f, const Weight& omega, double alpha);

struct SolverOptions {
  int max_iterations = 5000;
  double rel_tol = 1e-9;
  double armijo_c = 1e-4;
  bool eigen_start = true;
  bool distance_start = true;
  bool constant_start = true;
  int random_starts = 0;
  std::uint64_t seed = 0;
  // Extra start tried first, e.g. a neighbouring α's minimizer.
  std::optional<std::vector<double>> warm_start;
  bool keep_history = false;
};

struct StartDiagnostics {
  std::string name;
  double lambda = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;  // λ after each accepted step, when requested
};

struct CriticalValueResult {
  double alpha = 0.0;
  double lambda = 0.0;
  double Lambda = 0.0;
  GridFunction minimizer;
  int iterations = 0;
  int restarts = 0;
  bool converged = false;
  double constraint_residual = 0.0;
  std::string best_start;
  std::vector<StartDiagnostics> starts;
};

CriticalValueResult minimize_critical_value(const Discretization& disc, const YoungFunction& f, const Weight& omega,
                                            double alpha, const SolverOptions& opts = {});

/// Multiplier obtained by testing the weak form with v = u.
double lagrange_eigenvalue(const Discretization& disc, const GridFunction& u, const YoungFunction& f,
                           const Weight& omega);

struct EnergySample {
  double alpha = 0.0;
  double energy = 0.0;
  double lambda = 0.0;
  bool converged = false;
};

struct EnergyCurve {
  std::vector<EnergySample> samples;
  bool monotone = true;
  std::vector<std::size_t> violations;  // i with E(α_{i+1}) ≤ E(α_i)
};

/// E(α) = α·λ at each α (positive, increasing list).
EnergyCurve alpha_energy(const Discretization& disc, const YoungFunction& f, const Weight& omega,
                         const std::vector<double>& alphas, const SolverOptions& opts = {});

struct Alpha0Result {
  double alpha0 = 0.0;
  double energy = 0.0;
  double target = 0.0;
  double residual = 0.0;
  int evaluations = 0;
};

/// α₀ with α₀·λ(α₀) = r_Ω^n to 1e-3 relative.
Alpha0Result solve_alpha0(const Discretization& disc, const YoungFunction& f, const Weight& omega,
                          const SolverOptions& opts = {});

/// inf{k > 0 : Σ A(|u|/k) hⁿ ≤ 1}.
double luxemburg_norm(const GridFunction& u, const YoungFunction& f);

/// max over node pairs (and each node with its nearest exterior cell) of
/// |u(x) − u(y)| / (|x − y|^s B⁻¹(S(u)/|x − y|ⁿ)), B the complement of E.
double morrey_ratio(const Discretization& disc, const GridFunction& u, const YoungFunction& f,
                    Method method = Method::automatic);

enum class HardyVariant { origin, boundary };
const char* to_string(HardyVariant v) noexcept;

/// Σ A(|u|/ρ^s)hⁿ / S(u) with ρ = |x| or δ_Ω(x); 0 for u ≡ 0.
double hardy_ratio(const Discretization& disc, const GridFunction& u, const YoungFunction& f, HardyVariant variant);

struct Probe {
  std::string name;
  GridFunction u;
};

/// bump, distance, shifted bump, cosine bump and distance·bump. Bumps are
/// centred at the bounding-box center with radius ρ = r_Ω − h/2, and the
/// distance probe is δ − h/2.
std::vector<Probe> probe_suite(std::shared_ptr<const DomainGeometry> domain);

/// Header "x,value" (1D) or "x,y,value" (2D).
std::string grid_function_csv(const GridFunction& u);

}  // namespace orlicz
