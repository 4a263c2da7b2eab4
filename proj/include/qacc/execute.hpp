#pragma once

#include "qacc/distribution.hpp"
#include "qacc/ensemble.hpp"
#include "qacc/noise.hpp"

namespace qacc {

// A unitary fault spliced into an execution, for detection studies.
struct Injection {
  enum class Where { after_op, after_prep, before_meas };
  Where where = Where::after_op;
  int op_index = -1;           // for after_op
  std::vector<int> qubits;
  Mat u;

  static Injection after_op(int op_index, std::vector<int> qubits, Mat u);
  static Injection after_prep(int qubit, Mat u);
  static Injection before_meas(int qubit, Mat u);
};

struct ExecutionResult {
  Distribution dist;
  std::vector<std::string> transcript;  // one line per noisy site, in order
};

// Exact density-matrix execution. Noise is applied after each prep and each
// gate, and immediately before measurement, once per site.
ExecutionResult execute_exact(const Circuit& c, const NoiseModel& nm,
                              const std::vector<Injection>& injections = {});

std::vector<uint64_t> sample(const Circuit& c, const NoiseModel& nm, int shots, uint64_t seed);

// Exact distribution of the ensemble averaged over every random draw.
// Contiguous draw variables are averaged segment-by-segment; layer coins are
// enumerated as global branches. Equals the brute-force draw average.
Distribution averaged_distribution(const ProtocolEnsemble& e, const NoiseModel& nm);

// Brute-force check of the same average by enumerating all assignments
// (only usable when the product of outcomes is small).
Distribution averaged_distribution_enumerated(const ProtocolEnsemble& e, const NoiseModel& nm,
                                              size_t max_assignments = 4096);

// Per-dressed-gate stochastic extraction: projects each twirled two-qubit
// site's averaged error onto the frame of conjugations, then replays the
// execution with the extracted stochastic channels in place of the raw site
// noise. `frame` is the conjugation family the twirl is expected to land in.
struct StochasticEquivalent {
  Distribution averaged;
  Distribution stochastic_model;
  std::vector<MixtureFit> site_fits;  // one per two-qubit gate site
  bool extraction_ok = true;
  double distribution_gap = 0.0;  // tvd(averaged, stochastic_model)
};
StochasticEquivalent stochastic_pauli_equivalent(const ProtocolEnsemble& e, const NoiseModel& nm,
                                                 const std::vector<Mat>& frame);

}  // namespace qacc
