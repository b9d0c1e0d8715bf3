#include "germforge/transition.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace germforge {

std::vector<std::vector<double>> sample_witnesses(const std::vector<Jet>& system,
                                                  const std::vector<std::string>& params, std::size_t count,
                                                  std::uint64_t seed, double box,
                                                  const std::function<bool(const std::vector<double>&)>& reject) {
  std::vector<std::vector<double>> out;
  if (system.empty()) return out;
  const VarList& V = system.front().vars();
  const std::size_t n = V.size(), r = system.size();
  std::vector<std::size_t> pidx;
  for (const auto& p : params) pidx.push_back(V.require(p));
  std::vector<std::vector<Jet>> jac(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(system[i].derivative(j));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-box, box);
  const std::size_t max_starts = 200 * std::max<std::size_t>(count, 1);
  for (std::size_t start = 0; start < max_starts && out.size() < count; ++start) {
    std::vector<double> z(n);
    for (auto& v : z) v = uni(rng);
    bool ok = false;
    for (int it = 0; it < 100; ++it) {
      Eigen::VectorXd f(r);
      Eigen::MatrixXd J(r, n);
      double worst = 0;
      for (std::size_t i = 0; i < r; ++i) {
        f(i) = system[i].eval(z);
        const double scale = std::max(system[i].eval_scale(z), 1e-300);
        worst = std::max(worst, std::fabs(f(i)) / scale);
        for (std::size_t j = 0; j < n; ++j) J(i, j) = jac[i][j].eval(z);
      }
      if (!std::isfinite(worst)) break;
      if (worst < 1e-14) {
        ok = true;
        break;
      }
      const Eigen::VectorXd dz = J.completeOrthogonalDecomposition().solve(-f);
      if (!dz.allFinite()) break;
      for (std::size_t j = 0; j < n; ++j) z[j] += dz(j);
      if (dz.norm() < 1e-16 * (1 + Eigen::Map<Eigen::VectorXd>(z.data(), n).norm())) {
        ok = worst < 1e-12;
        break;
      }
    }
    if (!ok) continue;
    if (std::any_of(z.begin(), z.end(), [](double v) { return !std::isfinite(v) || std::fabs(v) > 1e3; })) continue;
    if (reject && reject(z)) continue;
    std::vector<double> a;
    for (auto i : pidx) a.push_back(z[i]);
    out.push_back(std::move(a));
  }
  return out;
}

double normalized_residual(const Jet& p, const std::vector<double>& alpha) {
  const double scale = p.eval_scale(alpha);
  if (scale == 0) return 0;
  return std::fabs(p.eval(alpha)) / scale;
}

double component_residual(const TransitionComponent& c, const std::vector<double>& alpha) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& piece : c.pieces) {
    double worst = 0;
    for (const auto& e : piece.equations) worst = std::max(worst, normalized_residual(e, alpha));
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace germforge
