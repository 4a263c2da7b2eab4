#pragma once

#include "qacc/ensemble.hpp"
#include "qacc/twirl.hpp"

namespace qacc {

// Dressed pair of half-angle XY gates equal to exp(-i t H) when j = 0 and to
// the identity when j = 1, up to a global phase.
struct VanishingBlock {
  int j = 0;
  double t = 0;
  PauliString p1, p2;  // two-qubit dressings; the plain twirl draws p (x) p
  std::vector<int> qubits{0, 1};
  bool strong = false;

  std::vector<PlacedGate> ops() const;
  Mat unitary() const;  // product of the block's gates
};

VanishingBlock build_vanishing_block(int j, double t, uint64_t seed, bool strong_n3);

// Angle t if the gate is an XY-interaction gate exp(-i t (XX + YY)).
std::optional<double> xy_angle_of(const PlacedGate& g);

ProtocolEnsemble make_tau_target(const Circuit& input, const TauDecomposition& dec);
ProtocolEnsemble make_tau_trap(const Circuit& input, const TauDecomposition& dec);
ProtocolEnsemble make_xy_target(const Circuit& input, bool strong_n3 = false);
ProtocolEnsemble make_xy_trap(const Circuit& input, bool strong_n3 = false);

Circuit build_tau_target(const Circuit& input, const TauDecomposition& dec, uint64_t seed);
std::pair<Circuit, std::vector<int>> build_tau_trap(const Circuit& input, const TauDecomposition& dec,
                                                    uint64_t seed);
Circuit build_xy_target(const Circuit& input, uint64_t seed, bool strong_n3 = false);
std::pair<Circuit, std::vector<int>> build_xy_trap(const Circuit& input, uint64_t seed,
                                                   bool strong_n3 = false);

}  // namespace qacc
