#pragma once

#include "qacc/clifford_search.hpp"
#include "qacc/execute.hpp"
#include "qacc/generators.hpp"

namespace qacc {

enum class Protocol { tau, xy, xy_strong };

std::string protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& s);

struct AccreditationConfig {
  double theta = 0.2;   // minimum looseness numerator
  double alpha = 0.95;  // confidence
  double k = 0.5;       // per-trap detection constant
  Protocol protocol = Protocol::tau;
  uint64_t seed = 0;
  int jobs = 1;

  void validate() const;
};

// ceil((2 / theta^2) ln(2 / (1 - alpha))) + 1
int trap_count(double theta, double alpha);

struct TrapRecord {
  int index;      // trap number, 0-based
  int order_pos;  // position in the randomized execution order
  std::string outcome;
  std::string expected;
  bool pass;
};

struct AccreditationReport {
  std::string target_sample;
  double bound = 0;  // (TrapResult + theta) / k
  int n_traps = 0;
  int trap_failures = 0;
  double trap_result = 0;
  AccreditationConfig config;
  std::vector<TrapRecord> traps;
  std::vector<int> order;  // order[pos] = circuit id (traps 0..N-1, target = N)
};

// Prebuilt trap/target ensembles for one input circuit; building these once
// amortizes the decomposition search across protocol runs.
struct ProtocolContext {
  Protocol protocol = Protocol::tau;
  std::optional<TauDecomposition> dec;
  ProtocolEnsemble trap_ensemble;
  ProtocolEnsemble target_ensemble;

  static ProtocolContext resolve(const Circuit& c, Protocol p, const NoiseModel& nm,
                                 uint64_t search_seed = 0x7a0);
  static ProtocolContext with_decomposition(const Circuit& c, const TauDecomposition& dec);
};

AccreditationReport run_accreditation(const Circuit& c, const NoiseModel& nm, const AccreditationConfig& cfg);
AccreditationReport run_accreditation(const ProtocolContext& ctx, const NoiseModel& nm,
                                      const AccreditationConfig& cfg);

}  // namespace qacc
