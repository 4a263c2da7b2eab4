#pragma once

#include "qacc/accredit.hpp"
#include "qacc/execute.hpp"

namespace qacc {

inline constexpr int kOracleQubitLimit = 10;

// Exact noiseless distribution via a statevector pass over full embedded
// operators; an implementation path independent of the density simulator.
Distribution ideal_distribution(const Circuit& c);

// Total variation distance between the ideal and the noisy distribution.
double ideal_actual_vd(const Circuit& c, const NoiseModel& nm);

// The same against the draw-averaged execution of a protocol ensemble whose
// ideal output matches `input`.
double averaged_ideal_actual_vd(const Circuit& input, const ProtocolEnsemble& e, const NoiseModel& nm);

struct SoundnessVerdict {
  int runs = 0;
  int violations = 0;  // bound < true nu (beyond float slack)
  double true_nu = 0;
  double mean_bound = 0;
  double alpha = 0;
  std::vector<std::pair<double, double>> records;  // (bound, true_nu) per run
};

SoundnessVerdict verify_soundness(const Circuit& c, const NoiseModel& nm, const AccreditationConfig& cfg,
                                  int runs, uint64_t seed);

struct RobustnessCheck {
  double lhs = 0;  // tvd between the two noisy output distributions
  double rhs = 0;  // noisy_sites * max per-site diamond-distance estimate
  bool ok = false;  // false is inconclusive (the rhs is a lower-bound estimate)
  int noisy_sites = 0;
  double max_site_distance = 0;
};

RobustnessCheck verify_robustness(const Circuit& c, const NoiseModel& a, const NoiseModel& b,
                                  int restarts = 8, uint64_t seed = 1);

// 1 - prod over sites of (1 - fire probability); throws if any noisy site has
// no probabilistic-unitary form.
double stochastic_fire_probability(const Circuit& c, const NoiseModel& nm);

// Searches per-qubit end-of-circuit faults (drawn from wire_frame, identity
// first) reproducing the outcome distribution of an injected fault. Returns
// the per-qubit frame indices, or nullopt if none matches within tol.
std::optional<std::vector<int>> find_equivalent_end_fault(const Circuit& c, const NoiseModel& nm,
                                                          const Injection& fault,
                                                          const std::array<Mat, 4>& wire_frame,
                                                          double tol = 1e-9);

}  // namespace qacc
