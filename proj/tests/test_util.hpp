#pragma once

#include "qacc/circuit.hpp"
#include "qacc/noise.hpp"

namespace qacc::testutil {

// Random circuit whose two-qubit gates are all `two_qubit`; preps and
// measurement bases drawn from small gate sets.
inline Circuit random_circuit(int qubits, int depth, Rng& rng, const PlacedGate* two_qubit_template,
                              double two_qubit_density = 0.4) {
  Circuit c;
  c.qubits = qubits;
  const char* preps[] = {"0", "1", "+"};
  for (int q = 0; q < qubits; ++q) c.preps.push_back(Prep::basis(preps[rng.uniform_int(3)]));
  const char* oneq[] = {"x", "y", "z", "h", "s", "t"};
  for (int d = 0; d < depth; ++d) {
    if (qubits >= 2 && rng.uniform() < two_qubit_density && two_qubit_template) {
      int a = rng.uniform_int(qubits);
      int b = rng.uniform_int(qubits - 1);
      if (b >= a) ++b;
      PlacedGate g = *two_qubit_template;
      g.qubits = {a, b};
      c.ops.push_back(std::move(g));
    } else {
      c.ops.push_back(PlacedGate::named(oneq[rng.uniform_int(6)], {rng.uniform_int(qubits)}));
    }
  }
  for (int q = 0; q < qubits; ++q) {
    if (rng.uniform() < 0.3) {
      Mat b = random_unitary(2, rng);
      c.measurements.push_back(MeasBasis::rotated(b));
    } else {
      c.measurements.push_back(MeasBasis::z());
    }
  }
  return c;
}

inline NoiseModel depolarizing_on_gates(double p) {
  NoiseModel nm;
  NoiseRule r;
  r.kind = SiteKind::gate2q;
  r.channel.name = "depolarizing";
  r.channel.params = {p};
  nm.rules.push_back(std::move(r));
  return nm;
}

}  // namespace qacc::testutil
