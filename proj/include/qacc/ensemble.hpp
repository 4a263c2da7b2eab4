#pragma once

#include "qacc/circuit.hpp"

namespace qacc {

// One slot of a protocol circuit. A slot either holds a fixed gate or a table
// of gates indexed by the outcome of a random variable; a second (branch)
// variable can switch between two tables, which covers layers whose merged
// value depends on two coins.
struct EnsembleOp {
  PlacedGate fixed;
  int var = -1;
  std::vector<PlacedGate> values;
  int branch_var = -1;
  std::vector<PlacedGate> values_alt;  // used when the branch variable is 1

  const PlacedGate& resolve(const std::vector<int>& assignment) const;
};

enum class VarRole { gate_twirl, coin };

struct EnsembleVar {
  int outcomes = 2;
  VarRole role = VarRole::coin;
  int lo = -1, hi = -1;  // op index span where the var appears as `var`
  bool branching = false;  // averaged execution enumerates it globally
};

// A trap or target generator output: the circuit family over its random
// draws. All draws share one skeleton (same op positions, arities and
// provenance), which is what keys the noise model.
struct ProtocolEnsemble {
  Circuit skeleton;  // ops hold each slot's outcome-0 value
  std::vector<EnsembleOp> slots;
  std::vector<EnsembleVar> vars;
  bool is_trap = false;
  int input_two_qubit_count = 0;
  int input_gate_count = 0;
  // The family of unitaries the per-gate dressing draws conjugate error by
  // (the twirl frame); used by the stochastic-equivalence analysis.
  std::vector<Mat> gate_dressing_frame;
  // Size-discipline constants: generated gate count <= gate_factor * input
  // gate count + per_qubit_constant * qubits.
  double gate_factor = 0;
  double per_qubit_constant = 0;

  std::vector<int> draw_assignment(uint64_t seed) const;
  Circuit realize(const std::vector<int>& assignment) const;
  Circuit draw(uint64_t seed) const { return realize(draw_assignment(seed)); }
};

class EnsembleBuilder {
 public:
  EnsembleBuilder(int qubits, bool is_trap);
  int add_var(int outcomes, VarRole role = VarRole::coin);
  void set_prep(int qubit, Prep p);
  void set_measurement(int qubit, MeasBasis m);
  size_t push_fixed(PlacedGate g);
  size_t push_choice(int var, std::vector<PlacedGate> values);
  size_t push_two_var(int var, std::vector<PlacedGate> values, int branch_var,
                      std::vector<PlacedGate> values_alt);
  ProtocolEnsemble finish();

 private:
  ProtocolEnsemble e_;
};

}  // namespace qacc
