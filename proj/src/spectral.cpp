#include "orlicz/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBinRatio = 1.01;
// Dense start vector only below this many nodes.
constexpr std::size_t kEigenStartLimit = 2500;

double param(const YoungFunction& f, const char* key) {
  for (const auto& [k, v] : f.params())
    if (k == key) return v;
  return 0.0;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::invalid_argument, message);
}

// Neumaier compensated sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      c_ += (sum_ - t) + x;
    else
      c_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0, c_ = 0.0;
};

double volume(const DomainGeometry& g) { return g.cell_volume(); }

double modular_values(const std::vector<double>& u, const YoungFunction& f, const Weight& w, double hn) {
  Accumulator acc;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (w.values[i] != 0.0 && u[i] != 0.0) acc.add(w.values[i] * f.A_raw(std::abs(u[i])) * hn);
  return acc.value();
}

// Scales u in place so that Σ ω A(|u|) hⁿ = α; returns the factor.
double normalize_values(std::vector<double>& u, const YoungFunction& f, const Weight& w, double hn, double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be > 0");
  const double phi1 = modular_values(u, f, w, hn);
  if (!(phi1 > 0.0)) throw Error(ErrorCode::degenerate, "normalization: u vanishes where omega > 0");
  double r = 1.0;
  if (f.kind() == YoungKind::power && std::isfinite(phi1)) {
    r = std::pow(alpha / phi1, 1.0 / param(f, "p"));
  } else {
    // Safeguarded Newton on x = log r for F(x) = log Φ(e^x) − log α.
    const double target = std::log(alpha);
    auto phi = [&](double x, double* dlog) {
      const double rr = std::exp(x);
      Accumulator v, dv;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (w.values[i] == 0.0 || u[i] == 0.0) continue;
        const double t = rr * std::abs(u[i]);
        double A = 0.0, a = 0.0;
        f.A_and_a_raw(t, A, a);
        v.add(w.values[i] * A * hn);
        dv.add(w.values[i] * a * t * hn);
      }
      if (dlog) *dlog = dv.value() / v.value();
      return v.value();
    };
    double lo = -kInf, hi = kInf;
    double x = 0.0;
    double step = 1.0;
    double val = std::log(phi1) - target;
    if (!std::isfinite(phi1)) val = kInf;
    // Bracket.
    if (val < 0.0) {
      lo = 0.0;
      for (x = step; ; x += step, step *= 2.0) {
        const double p = phi(x, nullptr);
        if (!std::isfinite(p) || p > kSaturation)
          throw Error(ErrorCode::overflow, "normalization unreachable at saturation");
        if (std::log(p) - target >= 0.0) {
          hi = x;
          break;
        }
        lo = x;
        if (x > 1400.0) throw Error(ErrorCode::overflow, "normalization unreachable at saturation");
      }
    } else {
      hi = 0.0;
      for (x = -step; ; x -= step, step *= 2.0) {
        const double p = phi(x, nullptr);
        if (std::isfinite(p) && std::log(p) - target <= 0.0) {
          lo = x;
          break;
        }
        hi = x;
        if (x < -1400.0) throw Error(ErrorCode::degenerate, "normalization: cannot bracket the scale");
      }
    }
    x = 0.5 * (lo + hi);
    for (int it = 0; it < kMaxBisection; ++it) {
      double slope = 0.0;
      const double p = phi(x, &slope);
      const double F = std::isfinite(p) && p > 0.0 ? std::log(p) - target : (p > 0.0 ? kInf : -kInf);
      if (std::abs(std::expm1(F)) <= 1e-13) break;
      if (F > 0.0)
        hi = x;
      else
        lo = x;
      if (hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) break;
      double next = std::isfinite(F) && slope > 0.0 ? x - F / slope : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      x = next;
    }
    r = std::exp(x);
  }
  for (double& v : u) v *= r;
  return r;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Uniform (0, 1] from the top 53 bits; independent of the library's
// distribution implementations.
double unit_uniform(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; }

std::string to_chars_string(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

GridFunction GridFunction::zeros(std::shared_ptr<const DomainGeometry> domain) {
  GridFunction u;
  u.values.assign(domain->size(), 0.0);
  u.domain = std::move(domain);
  return u;
}

Weight weight_from_values(const DomainGeometry& g, std::vector<double> values) {
  require(values.size() == g.size(), "weight: one value per interior node required");
  Weight w;
  Accumulator l1;
  bool any = false;
  for (double v : values) {
    require(v >= 0.0 && std::isfinite(v), "weight: values must be finite and >= 0");
    any = any || v > 0.0;
    l1.add(v * volume(g));
    w.linf = std::max(w.linf, v);
  }
  require(any, "weight: identically zero on the domain");
  w.l1 = l1.value();
  w.values = std::move(values);
  return w;
}

Weight constant_weight(const DomainGeometry& g, double c) {
  require(c > 0.0 && std::isfinite(c), "weight: constant must be > 0");
  return weight_from_values(g, std::vector<double>(g.size(), c));
}

Weight unit_mass_weight(const DomainGeometry& g) { return constant_weight(g, 1.0 / g.measure); }

Weight load_weight_file(const DomainGeometry& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open weight file " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double v = 0.0;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw Error(ErrorCode::config, "weight file: cannot parse '" + line + "'");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t cols = static_cast<std::size_t>(g.nx - 2);
  const std::size_t nrows = g.dim == 1 ? 1 : static_cast<std::size_t>(g.ny - 2);
  if (rows.size() != nrows) throw Error(ErrorCode::config, "weight file: expected " + std::to_string(nrows) + " rows");
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(ErrorCode::config, "weight file: expected " + std::to_string(cols) + " columns");
  std::vector<double> values;
  for (const auto& node : g.nodes) {
    const std::size_t row = g.dim == 1 ? 0 : nrows - static_cast<std::size_t>(node[1]);
    values.push_back(rows[row][static_cast<std::size_t>(node[0] - 1)]);
  }
  return weight_from_values(g, std::move(values));
}

Discretization::Discretization(std::shared_ptr<const DomainGeometry> domain, double s, double collar)
    : domain_(std::move(domain)), s_(s) {
  require(domain_ && domain_->size() > 0, "discretization: empty domain");
  require(s > 0.0 && s < 1.0, "s must lie in (0, 1)");
  require(collar >= 0.0, "collar must be >= 0");
  const DomainGeometry& g = *domain_;
  const int n = g.dim;
  const double h = g.h;
  const double h2n = std::pow(h, 2 * n);

  int xmin = g.nx, xmax = 0, ymin = g.ny, ymax = 0;
  for (const auto& c : g.nodes) {
    xmin = std::min(xmin, c[0]);
    xmax = std::max(xmax, c[0]);
    ymin = std::min(ymin, c[1]);
    ymax = std::max(ymax, c[1]);
  }
  const double width = collar * g.d_omega / h;
  const int pad = std::max(1, static_cast<int>(std::ceil(width - 1e-9)));
  const int bx0 = xmin - pad, bx1 = xmax + pad;
  const int by0 = n == 2 ? ymin - pad : 0, by1 = n == 2 ? ymax + pad : 0;
  const long spanx = bx1 - bx0, spany = by1 - by0;
  const std::size_t max_d2 = static_cast<std::size_t>(spanx * spanx + spany * spany);

  inv_ds_.assign(max_d2 + 1, 0.0);
  pair_w_.assign(max_d2 + 1, 0.0);
  std::vector<double> kernel(max_d2 + 1, 0.0);  // |x − y|^{−n−2s}
  std::vector<int> bin_of(max_d2 + 1, 0);
  const double log_ratio = std::log(kBinRatio);
  for (std::size_t d2 = 1; d2 <= max_d2; ++d2) {
    const double d = h * std::sqrt(static_cast<double>(d2));
    inv_ds_[d2] = std::pow(d, -s);
    pair_w_[d2] = 2.0 * std::pow(d, -n) * h2n;
    kernel[d2] = std::pow(d, -n - 2.0 * s);
    bin_of[d2] = static_cast<int>(std::floor(0.5 * std::log(static_cast<double>(d2)) / log_ratio + 1e-12));
  }
  const std::size_t nbins = static_cast<std::size_t>(bin_of[max_d2]) + 1;

  std::vector<long> count(nbins, 0);
  std::vector<double> ksum(nbins, 0.0);
  std::vector<int> touched;
  ext_offset_.assign(1, 0);
  for (int iy = by0; iy <= by1; ++iy)
    for (int ix = bx0; ix <= bx1; ++ix)
      if (!g.inside(ix, iy)) ++exterior_cells_;
  for (const auto& c : g.nodes) {
    touched.clear();
    for (int iy = by0; iy <= by1; ++iy) {
      const long dy = iy - c[1];
      for (int ix = bx0; ix <= bx1; ++ix) {
        if (g.inside(ix, iy)) continue;
        const long dx = ix - c[0];
        const std::size_t d2 = static_cast<std::size_t>(dx * dx + dy * dy);
        const int b = bin_of[d2];
        if (count[b] == 0) touched.push_back(b);
        ++count[b];
        ksum[b] += kernel[d2];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int b : touched) {
      const double mean = ksum[b] / count[b];
      const double rho = std::pow(mean, -1.0 / (n + 2.0 * s));
      ext_inv_ds_.push_back(std::pow(rho, -s));
      ext_w_.push_back(2.0 * h2n * count[b] * std::pow(rho, -n));
      count[b] = 0;
      ksum[b] = 0.0;
    }
    ext_offset_.push_back(ext_w_.size());
  }
}

template <class Visit>
void Discretization::for_each_term(const std::vector<double>& u, Visit&& visit) const {
  const auto& nodes = domain_->nodes;
  const std::size_t N = nodes.size();
  for (std::size_t i = 0; i < N; ++i) {
    const double ui = u[i];
    for (std::size_t j = i + 1; j < N; ++j) {
      const long dx = nodes[i][0] - nodes[j][0], dy = nodes[i][1] - nodes[j][1];
      const std::size_t d2 = static_cast<std::size_t>(dx * dx + dy * dy);
      visit(i, j, ui - u[j], inv_ds_[d2], pair_w_[d2]);
    }
    for (std::size_t k = ext_offset_[i]; k < ext_offset_[i + 1]; ++k) visit(i, N, ui, ext_inv_ds_[k], ext_w_[k]);
  }
}

double Discretization::seminorm(const std::vector<double>& u, const YoungFunction& f) const {
  require(u.size() == size(), "seminorm: size mismatch");
  double total = 0.0;
  for_each_term(u, [&](std::size_t, std::size_t, double diff, double ids, double w) {
    if (diff != 0.0) total += w * f.A_raw(std::abs(diff) * ids);
  });
  return total;
}

double Discretization::seminorm_and_gradient(const std::vector<double>& u, const YoungFunction& f,
                                             std::vector<double>& grad) const {
  require(u.size() == size(), "seminorm: size mismatch");
  const std::size_t N = size();
  grad.assign(N, 0.0);
  double total = 0.0;
  for_each_term(u, [&](std::size_t i, std::size_t j, double diff, double ids, double w) {
    if (diff == 0.0) return;
    double A = 0.0, a = 0.0;
    f.A_and_a_raw(std::abs(diff) * ids, A, a);
    total += w * A;
    const double g = w * a * ids * (diff > 0.0 ? 1.0 : -1.0);
    grad[i] += g;
    if (j < N) grad[j] -= g;
  });
  return total;
}

double Discretization::pairing(const std::vector<double>& u, const YoungFunction& f) const {
  require(u.size() == size(), "pairing: size mismatch");
  double total = 0.0;
  for_each_term(u, [&](std::size_t, std::size_t, double diff, double ids, double w) {
    if (diff == 0.0) return;
    const double t = std::abs(diff) * ids;
    total += w * f.a_raw(t) * t;
  });
  return total;
}

std::vector<double> Discretization::quadratic_kernel() const {
  const std::size_t N = size();
  std::vector<double> K(N * N, 0.0);
  std::vector<double> unit(N, 0.0);
  for_each_term(unit, [&](std::size_t i, std::size_t j, double, double ids, double w) {
    const double c = w * ids * ids;
    K[i * N + i] += c;
    if (j < N) {
      K[j * N + j] += c;
      K[i * N + j] -= c;
      K[j * N + i] -= c;
    }
  });
  return K;
}

double modular_seminorm(const Discretization& disc, const GridFunction& u, const YoungFunction& f) {
  return disc.seminorm(u.values, f);
}

double modular_seminorm(const GridFunction& u, const YoungFunction& f, double s) {
  require(u.domain != nullptr, "grid function without domain");
  return Discretization(u.domain, s).seminorm(u.values, f);
}

double weighted_modular(const GridFunction& u, const YoungFunction& f, const Weight& omega) {
  require(u.domain && omega.values.size() == u.size(), "weighted_modular: size mismatch");
  return modular_values(u.values, f, omega, volume(*u.domain));
}

Normalized normalize_to_alpha(const GridFunction& u, const YoungFunction& f, const Weight& omega, double alpha) {
  require(u.domain && omega.values.size() == u.size(), "normalize_to_alpha: size mismatch");
  Normalized out{u, 1.0};
  out.r = normalize_values(out.u.values, f, omega, volume(*u.domain), alpha);
  return out;
}

namespace {

struct Descent {
  const Discretization& disc;
  const YoungFunction& f;
  const Weight& omega;
  double alpha;
  double hn;
  const SolverOptions& opts;

  // Projected descent from u0; u0 is replaced by the final iterate.
  StartDiagnostics run(std::vector<double>& u, const std::string& name) const {
    StartDiagnostics d;
    d.name = name;
    normalize_values(u, f, omega, hn, alpha);
    std::vector<double> g, normal(u.size()), gt(u.size()), trial(u.size()), gtrial;
    double S = disc.seminorm_and_gradient(u, f, g);
    if (!std::isfinite(S)) throw Error(ErrorCode::overflow, "objective saturated at start '" + name + "'");
    double eta = -1.0;
    int small_steps = 0;
    for (int it = 0; it < opts.max_iterations; ++it) {
      // Tangent part of the gradient with respect to the constraint surface.
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double au = f.a_raw(std::abs(u[i]));
        normal[i] = omega.values[i] * au * hn * (u[i] > 0.0 ? 1.0 : (u[i] < 0.0 ? -1.0 : 0.0));
      }
      const double nn = dot(normal, normal);
      const double coef = nn > 0.0 ? dot(g, normal) / nn : 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) gt[i] = g[i] - coef * normal[i];
      const double gn = norm2(gt);
      if (!(gn > 0.0)) {
        d.converged = true;
        break;
      }
      if (eta < 0.0) eta = norm2(u) / gn;
      bool accepted = false;
      double S_new = S;
      for (int k = 0; k < 60; ++k) {
        for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] - eta * gt[i];
        try {
          normalize_values(trial, f, omega, hn, alpha);
          S_new = disc.seminorm_and_gradient(trial, f, gtrial);
        } catch (const Error&) {
          S_new = kInf;
        }
        if (std::isfinite(S_new) && S_new <= S - opts.armijo_c * eta * gn * gn) {
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) {
        // No decrease resolvable at double precision: stationary.
        d.converged = true;
        break;
      }
      const double rel = (S - S_new) / S;
      u.swap(trial);
      g.swap(gtrial);
      S = S_new;
      ++d.iterations;
      if (opts.keep_history) d.history.push_back(S / alpha);
      eta *= 2.0;
      if (rel < opts.rel_tol) {
        if (++small_steps >= 2) {
          d.converged = true;
          break;
        }
      } else {
        small_steps = 0;
      }
    }
    d.lambda = S / alpha;
    return d;
  }
};

// First generalized eigenvector of the quadratic pair (K, diag(ω hⁿ)).
std::optional<std::vector<double>> quadratic_eigenvector(const Discretization& disc, const Weight& omega, double hn) {
  const std::size_t N = disc.size();
  if (N > kEigenStartLimit) return std::nullopt;
  for (double w : omega.values)
    if (!(w > 0.0)) return std::nullopt;
  const std::vector<double> Kv = disc.quadratic_kernel();
  Eigen::MatrixXd K(N, N);
  Eigen::VectorXd scale(N);
  for (std::size_t i = 0; i < N; ++i) scale(i) = 1.0 / std::sqrt(omega.values[i] * hn);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) K(i, j) = Kv[i * N + j] * scale(i) * scale(j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
  if (es.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd v = es.eigenvectors().col(0);
  std::vector<double> out(N);
  for (std::size_t i = 0; i < N; ++i) out[i] = std::abs(v(i) * scale(i));
  return out;
}

}  // namespace

CriticalValueResult minimize_critical_value(const Discretization& disc, const YoungFunction& f, const Weight& omega,
                                            double alpha, const SolverOptions& opts) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be > 0");
  require(omega.values.size() == disc.size(), "weight size mismatch");
  require(opts.max_iterations > 0 && opts.rel_tol > 0.0, "solver options out of range");
  const DomainGeometry& g = disc.domain();
  const double hn = volume(g);
  const Descent descent{disc, f, omega, alpha, hn, opts};

  std::vector<std::pair<std::string, std::vector<double>>> starts;
  if (opts.warm_start) {
    require(opts.warm_start->size() == disc.size(), "warm start size mismatch");
    starts.emplace_back("warm", *opts.warm_start);
  }
  if (opts.eigen_start)
    if (auto v = quadratic_eigenvector(disc, omega, hn)) starts.emplace_back("quadratic_eigenvector", std::move(*v));
  if (opts.distance_start) starts.emplace_back("distance", g.delta);
  if (opts.constant_start) starts.emplace_back("constant", std::vector<double>(disc.size(), 1.0));
  std::mt19937_64 rng(opts.seed);
  for (int k = 0; k < opts.random_starts; ++k) {
    std::vector<double> v(disc.size());
    for (double& x : v) x = unit_uniform(rng);
    starts.emplace_back("random_" + std::to_string(k), std::move(v));
  }
  require(!starts.empty(), "solver: no start vectors enabled");

  CriticalValueResult best;
  best.alpha = alpha;
  best.lambda = kInf;
  bool any_converged = false;
  int total_iterations = 0;
  std::vector<StartDiagnostics> diags;
  for (auto& [name, u] : starts) {
    StartDiagnostics d = descent.run(u, name);
    total_iterations += d.iterations;
    any_converged = any_converged || d.converged;
    if (d.lambda < best.lambda) {
      best.lambda = d.lambda;
      best.best_start = name;
      best.minimizer = GridFunction{disc.domain_ptr(), u};
    }
    diags.push_back(std::move(d));
  }
  best.starts = std::move(diags);
  best.iterations = total_iterations;
  best.restarts = static_cast<int>(starts.size());
  best.converged = any_converged;
  best.constraint_residual = std::abs(weighted_modular(best.minimizer, f, omega) - alpha);
  best.Lambda = lagrange_eigenvalue(disc, best.minimizer, f, omega);
  return best;
}

double lagrange_eigenvalue(const Discretization& disc, const GridFunction& u, const YoungFunction& f,
                           const Weight& omega) {
  require(u.size() == disc.size() && omega.values.size() == disc.size(), "lagrange_eigenvalue: size mismatch");
  const double hn = volume(disc.domain());
  Accumulator den;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double t = std::abs(u.values[i]);
    if (t > 0.0) den.add(omega.values[i] * f.a_raw(t) * t * hn);
  }
  if (!(den.value() > 0.0)) throw Error(ErrorCode::degenerate, "degenerate test pairing");
  return disc.pairing(u.values, f) / den.value();
}

EnergyCurve alpha_energy(const Discretization& disc, const YoungFunction& f, const Weight& omega,
                         const std::vector<double>& alphas, const SolverOptions& opts) {
  require(!alphas.empty(), "alpha_energy: empty alpha list");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    require(alphas[i] > 0.0, "alpha_energy: alphas must be > 0");
    if (i > 0) require(alphas[i] > alphas[i - 1], "alpha_energy: alphas must increase");
  }
  EnergyCurve curve;
  SolverOptions local = opts;
  for (double a : alphas) {
    CriticalValueResult r;
    try {
      r = minimize_critical_value(disc, f, omega, a, local);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "alpha_energy failed at alpha=" << a << ": " << e.what();
      throw Error(e.code(), os.str());
    }
    curve.samples.push_back({a, a * r.lambda, r.lambda, r.converged});
    // Later levels start from the previous minimizer only.
    local.warm_start = r.minimizer.values;
    local.eigen_start = local.distance_start = local.constant_start = false;
    local.random_starts = 0;
  }
  for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i)
    if (!(curve.samples[i + 1].energy > curve.samples[i].energy)) {
      curve.monotone = false;
      curve.violations.push_back(i);
    }
  return curve;
}

Alpha0Result solve_alpha0(const Discretization& disc, const YoungFunction& f, const Weight& omega,
                          const SolverOptions& opts) {
  Alpha0Result out;
  out.target = std::pow(disc.domain().r_omega, disc.n());
  SolverOptions local = opts;
  auto energy = [&](double a) {
    const CriticalValueResult r = minimize_critical_value(disc, f, omega, a, local);
    ++out.evaluations;
    local.warm_start = r.minimizer.values;
    local.eigen_start = local.distance_start = local.constant_start = false;
    local.random_starts = 0;
    return a * r.lambda;
  };
  // F(x) = log E(e^x) − log target is increasing in x.
  const double log_target = std::log(out.target);
  double x0 = 0.0, f0 = std::log(energy(1.0)) - log_target;
  double x1 = x0, f1 = f0;
  const double step = std::log(4.0);
  const double limit = std::log(1e8);
  while ((f0 < 0.0) == (f1 < 0.0)) {
    x0 = x1;
    f0 = f1;
    x1 = f0 < 0.0 ? x1 + step : x1 - step;
    if (std::abs(x1) > limit) throw Error(ErrorCode::out_of_bracket, "alpha0 out of range [1e-8, 1e8]");
    f1 = std::log(energy(std::exp(x1))) - log_target;
  }
  // Illinois iteration on the bracket.
  double xl = std::min(x0, x1), fl = x0 < x1 ? f0 : f1;
  double xr = std::max(x0, x1), fr = x0 < x1 ? f1 : f0;
  int side = 0;
  double x = xl, fx = fl;
  if (std::abs(fr) < std::abs(fl)) {
    x = xr;
    fx = fr;
  }
  for (int it = 0; it < 60 && std::abs(std::expm1(fx)) > 2e-4; ++it) {
    x = (xl * fr - xr * fl) / (fr - fl);
    fx = std::log(energy(std::exp(x))) - log_target;
    if (fx < 0.0) {
      xl = x;
      fl = fx;
      if (side == -1) fr *= 0.5;
      side = -1;
    } else {
      xr = x;
      fr = fx;
      if (side == 1) fl *= 0.5;
      side = 1;
    }
  }
  out.alpha0 = std::exp(x);
  out.energy = out.target * std::exp(fx);
  out.residual = std::abs(out.energy - out.target);
  if (out.residual > 1e-3 * out.target)
    throw Error(ErrorCode::nonconvergent, "alpha0: residual " + to_chars_string(out.residual) + " above tolerance");
  return out;
}

double luxemburg_norm(const GridFunction& u, const YoungFunction& f) {
  require(u.domain != nullptr, "grid function without domain");
  const double hn = volume(*u.domain);
  double umax = 0.0;
  for (double v : u.values) umax = std::max(umax, std::abs(v));
  if (umax == 0.0) return 0.0;
  auto modular = [&](double k) {
    Accumulator acc;
    for (double v : u.values)
      if (v != 0.0) acc.add(f.A_raw(std::abs(v) / k) * hn);
    return acc.value();
  };
  if (f.kind() == YoungKind::power) return std::pow(modular(1.0), 1.0 / param(f, "p"));
  double lo = umax, hi = umax;
  while (modular(hi) > 1.0) hi *= 2.0;
  while (modular(lo) <= 1.0 && lo > 1e-300) lo *= 0.5;
  for (int i = 0; i < kMaxBisection && hi / lo - 1.0 > 4e-16; ++i) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (mid <= lo || mid >= hi) break;
    if (modular(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double morrey_ratio(const Discretization& disc, const GridFunction& u, const YoungFunction& f, Method method) {
  require(u.size() == disc.size(), "morrey_ratio: size mismatch");
  const double S = disc.seminorm(u.values, f);
  if (!(S > 0.0)) return 0.0;
  const DomainGeometry& g = disc.domain();
  const Order order{g.dim, disc.s()};
  const YoungFunction B = conjugate(e_function(f, order, method));
  std::vector<double> cache;
  auto denominator = [&](long d2) {
    const std::size_t k = static_cast<std::size_t>(d2);
    if (k >= cache.size()) cache.resize(k + 1, -1.0);
    if (cache[k] < 0.0) {
      const double d = g.h * std::sqrt(static_cast<double>(d2));
      cache[k] = std::pow(d, disc.s()) * inverse(B, S / std::pow(d, g.dim));
    }
    return cache[k];
  };
  double best = 0.0;
  const auto& nodes = g.nodes;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const double diff = std::abs(u.values[i] - u.values[j]);
      if (diff == 0.0) continue;
      const long dx = nodes[i][0] - nodes[j][0], dy = nodes[i][1] - nodes[j][1];
      best = std::max(best, diff / denominator(dx * dx + dy * dy));
    }
    if (u.values[i] != 0.0) {
      const long d2 = std::lround(std::pow(g.delta[i] / g.h, 2));
      best = std::max(best, std::abs(u.values[i]) / denominator(d2));
    }
  }
  return best;
}

const char* to_string(HardyVariant v) noexcept { return v == HardyVariant::origin ? "origin" : "boundary"; }

double hardy_ratio(const Discretization& disc, const GridFunction& u, const YoungFunction& f, HardyVariant variant) {
  require(u.size() == disc.size(), "hardy_ratio: size mismatch");
  const DomainGeometry& g = disc.domain();
  if (variant == HardyVariant::origin) {
    const long ix = std::lround(-g.origin[0] / g.h);
    const long iy = g.dim == 1 ? 0 : std::lround(-g.origin[1] / g.h);
    const bool inside = ix >= 0 && iy >= 0 && ix < g.nx && iy < g.ny && g.inside(static_cast<int>(ix), static_cast<int>(iy));
    if (!inside) throw Error(ErrorCode::invalid_argument, "origin not in domain");
  }
  bool zero = true;
  for (double v : u.values) zero = zero && v == 0.0;
  if (zero) return 0.0;
  const double hn = volume(g);
  Accumulator num;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double rho = 0.0;
    if (variant == HardyVariant::origin)
      rho = std::hypot(g.coords[i][0], g.coords[i][1]);
    else
      rho = g.delta[i];
    if (!(rho > 0.0) || u.values[i] == 0.0) continue;
    num.add(f.A_raw(std::abs(u.values[i]) / std::pow(rho, disc.s())) * hn);
  }
  const double S = disc.seminorm(u.values, f);
  if (!(S > 0.0)) return num.value() > 0.0 ? kInf : 0.0;
  return num.value() / S;
}

std::vector<Probe> probe_suite(std::shared_ptr<const DomainGeometry> domain) {
  const DomainGeometry& g = *domain;
  const double cx = 0.5 * (g.bbox[0] + g.bbox[1]);
  const double cy = 0.5 * (g.bbox[2] + g.bbox[3]);
  const double rho = g.r_omega > g.h ? g.r_omega - 0.5 * g.h : g.r_omega;
  const double pi = std::acos(-1.0);
  auto bump = [](double r2, double radius) { return std::max(0.0, 1.0 - r2 / (radius * radius)); };
  std::vector<Probe> out;
  for (const char* name : {"bump", "distance", "shifted_bump", "cos_bump", "distance_bump"})
    out.push_back({name, GridFunction::zeros(domain)});
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.coords[i][0] - cx, y = g.coords[i][1] - cy;
    const double r2 = x * x + y * y;
    const double dist = g.delta[i] - 0.5 * g.h;
    const double sx = x - rho / 3.0;
    const double r = std::sqrt(r2);
    out[0].u.values[i] = bump(r2, rho);
    out[1].u.values[i] = dist;
    out[2].u.values[i] = bump(sx * sx + y * y, rho / 2.0);
    out[3].u.values[i] = r < rho ? std::pow(std::cos(pi * r / (2.0 * rho)), 2) : 0.0;
    out[4].u.values[i] = dist * bump(r2, rho);
  }
  return out;
}

std::string grid_function_csv(const GridFunction& u) {
  require(u.domain != nullptr, "grid function without domain");
  const DomainGeometry& g = *u.domain;
  std::string out = g.dim == 1 ? "x,value\n" : "x,y,value\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += to_chars_string(g.coords[i][0]);
    out += ',';
    if (g.dim == 2) {
      out += to_chars_string(g.coords[i][1]);
      out += ',';
    }
    out += to_chars_string(u.values[i]);
    out += '\n';
  }
  return out;
}

}  // namespace orlicz
