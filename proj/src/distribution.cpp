#include "qacc/distribution.hpp"

#include <cmath>

namespace qacc {

Distribution::Distribution(int qubits, std::vector<double> probs) : qubits_(qubits), probs_(std::move(probs)) {
  if (probs_.size() != (size_t(1) << qubits_)) throw std::invalid_argument("Distribution: wrong table size");
}

Distribution Distribution::point(int qubits, uint64_t outcome) {
  std::vector<double> p(size_t(1) << qubits, 0.0);
  p.at(outcome) = 1.0;
  return Distribution(qubits, std::move(p));
}

std::string outcome_bits(uint64_t outcome, int qubits) {
  std::string s(size_t(qubits), '0');
  for (int q = 0; q < qubits; ++q)
    if (outcome & (uint64_t(1) << (qubits - 1 - q))) s[size_t(q)] = '1';
  return s;
}

std::string Distribution::bitstring(uint64_t outcome) const { return outcome_bits(outcome, qubits_); }

uint64_t Distribution::index_of(const std::string& bits) {
  uint64_t idx = 0;
  for (char c : bits) {
    idx <<= 1;
    if (c == '1')
      idx |= 1;
    else if (c != '0')
      throw std::invalid_argument("index_of: bad bitstring");
  }
  return idx;
}

uint64_t Distribution::argmax() const {
  uint64_t best = 0;
  for (uint64_t i = 1; i < probs_.size(); ++i)
    if (probs_[i] > probs_[best]) best = i;
  return best;
}

double Distribution::max_prob() const { return probs_[argmax()]; }

bool Distribution::normalized(double tol) const {
  double s = 0;
  for (double p : probs_) {
    if (p < -tol) return false;
    s += p;
  }
  return std::abs(s - 1.0) <= tol;
}

double tvd(const Distribution& p, const Distribution& q) {
  if (p.qubits() != q.qubits()) throw std::invalid_argument("tvd: outcome spaces differ");
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += std::abs(p.probs()[i] - q.probs()[i]);
  return 0.5 * s;
}

uint64_t sample_outcome(const Distribution& d, Rng& rng) {
  double r = rng.uniform();
  double acc = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    acc += d.probs()[i];
    if (r < acc) return i;
  }
  return d.size() - 1;
}

}  // namespace qacc
