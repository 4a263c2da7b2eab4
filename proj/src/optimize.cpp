#include "qacc/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace qacc {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, int max_iter, double ftol) {
  const size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> vals(n + 1);
  int evals = 0;
  for (size_t i = 0; i <= n; ++i) {
    vals[i] = f(pts[i]);
    ++evals;
  }

  auto centroid_except = [&](size_t skip) {
    std::vector<double> c(n, 0.0);
    for (size_t i = 0; i <= n; ++i) {
      if (i == skip) continue;
      for (size_t j = 0; j < n; ++j) c[j] += pts[i][j];
    }
    for (double& v : c) v /= double(n);
    return c;
  };
  auto blend = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = a[j] + t * (b[j] - a[j]);
    return out;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    std::vector<size_t> order(n + 1);
    for (size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    size_t best = order[0], worst = order[n], second = order[n - 1];
    if (std::abs(vals[worst] - vals[best]) <= ftol * (std::abs(vals[best]) + ftol)) break;

    std::vector<double> c = centroid_except(worst);
    std::vector<double> refl = blend(c, pts[worst], -1.0);
    double frefl = f(refl);
    ++evals;
    if (frefl < vals[best]) {
      std::vector<double> exp = blend(c, pts[worst], -2.0);
      double fexp = f(exp);
      ++evals;
      if (fexp < frefl) {
        pts[worst] = std::move(exp);
        vals[worst] = fexp;
      } else {
        pts[worst] = std::move(refl);
        vals[worst] = frefl;
      }
    } else if (frefl < vals[second]) {
      pts[worst] = std::move(refl);
      vals[worst] = frefl;
    } else {
      std::vector<double> con = blend(c, pts[worst], 0.5);
      double fcon = f(con);
      ++evals;
      if (fcon < vals[worst]) {
        pts[worst] = std::move(con);
        vals[worst] = fcon;
      } else {
        for (size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          pts[i] = blend(pts[best], pts[i], 0.5);
          vals[i] = f(pts[i]);
          ++evals;
        }
      }
    }
  }

  size_t best = 0;
  for (size_t i = 1; i <= n; ++i)
    if (vals[i] < vals[best]) best = i;
  return {pts[best], vals[best], evals};
}

}  // namespace qacc
