#pragma once

#include <string>
#include <vector>

#include "orlicz/extended.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// automatic returns the closed forms known for catalog kinds and falls back
/// to sampling otherwise; numeric always samples.
enum class Method { automatic, numeric };
enum class LimitEnd { zero, infinity };
enum class IndexKind { global, zero, infinity };

struct LimitValue {
  ExtendedReal value;
  bool converged = true;
};

/// M(t) = sup_α A(αt)/A(α), α on a log grid over [2^-60, 2^60].
ExtendedReal matuszewska_sup(const YoungFunction& f, double t, Method method = Method::automatic);

/// liminf of A(αt)/A(α) as α → 0⁺ or ∞ along α_k = 2^{∓k}, k ≤ 60.
LimitValue matuszewska_limit(const YoungFunction& f, double t, LimitEnd end, Method method = Method::automatic);

/// Slope of log M(t) against log t for large t, using the M variant matching
/// `which`. Infinite when M is infinite at some t > 1.
ExtendedReal matuszewska_index(const YoungFunction& f, IndexKind which, Method method = Method::automatic);

struct MatuszewskaProfile {
  std::vector<double> t_grid;
  std::vector<ExtendedReal> M;
  std::vector<ExtendedReal> M0;
  std::vector<ExtendedReal> Minf;
  ExtendedReal i;
  ExtendedReal i0;
  ExtendedReal iinf;
  bool converged_zero = true;
  bool converged_inf = true;
};

std::vector<double> default_profile_grid();

MatuszewskaProfile matuszewska_profile(const YoungFunction& f, const std::vector<double>& t_grid,
                                       Method method = Method::automatic);

InvariantCheck check_profile_invariants(const MatuszewskaProfile& profile, double tol = 1e-9);

/// Header "t,M,M0,Minf"; infinite entries written as "inf".
std::string profile_csv(const MatuszewskaProfile& profile);

}  // namespace orlicz
