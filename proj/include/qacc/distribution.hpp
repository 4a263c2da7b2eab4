#pragma once

#include "qacc/common.hpp"

namespace qacc {

// Probability table over computational-basis outcomes of n qubits. Outcome
// index encodes qubit 0 as the most significant bit, matching the tensor
// ordering used for states and gates.
class Distribution {
 public:
  Distribution(int qubits, std::vector<double> probs);
  static Distribution point(int qubits, uint64_t outcome);

  int qubits() const { return qubits_; }
  size_t size() const { return probs_.size(); }
  double prob(uint64_t outcome) const { return probs_.at(outcome); }
  const std::vector<double>& probs() const { return probs_; }
  std::string bitstring(uint64_t outcome) const;
  static uint64_t index_of(const std::string& bits);
  uint64_t argmax() const;
  double max_prob() const;
  bool normalized(double tol = 1e-9) const;

 private:
  int qubits_;
  std::vector<double> probs_;
};

double tvd(const Distribution& p, const Distribution& q);

uint64_t sample_outcome(const Distribution& d, Rng& rng);

std::string outcome_bits(uint64_t outcome, int qubits);

}  // namespace qacc
