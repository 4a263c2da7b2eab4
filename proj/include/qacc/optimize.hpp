#pragma once

#include <functional>
#include <vector>

namespace qacc {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

// Minimizes f over R^n starting from x0 with the given initial simplex step.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, int max_iter, double ftol = 1e-14);

}  // namespace qacc
