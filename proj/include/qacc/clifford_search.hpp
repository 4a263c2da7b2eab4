#pragma once

#include <optional>

#include "qacc/twirl.hpp"

namespace qacc {

// Two-qubit Clifford group enumerated by its conjugation action (11520
// elements modulo phase), each reconstructible as a matrix from its
// generator word over {H0, H1, S0, S1, CNOT01}.
class CliffordGroup {
 public:
  static const CliffordGroup& instance();

  size_t size() const { return parents_.size(); }
  Mat matrix(size_t idx) const;
  // Indices of elements fixing both |00> and |++> up to phase, in BFS order.
  const std::vector<size_t>& state_fixing_elements() const { return fixing_; }

 private:
  CliffordGroup();
  std::vector<int> parents_;
  std::vector<int> gen_applied_;
  std::vector<size_t> fixing_;
};

// Euler-angle chart of U(2) modulo global phase.
Mat u2_from_params(double theta, double phi, double lam);

struct DecompositionSearchResult {
  std::optional<TauDecomposition> dec;
  double best_residual = std::numeric_limits<double>::infinity();
  size_t candidates = 0;       // Cliffords passing the fixed-state filter
  size_t hosting_count = 0;    // candidates that reached the tolerance
};

// Scans every state-fixing Clifford M and minimizes the phase-invariant
// distance between (tau1 (x) tau2)^dag M (tau1 (x) tau2) and g over
// tau1, tau2 in U(2). Returns the first decomposition below `tolerance`,
// or none with the best residual recorded.
DecompositionSearchResult search_tau_decomposition(const Mat& g, double tolerance, uint64_t seed);

}  // namespace qacc
