#include "qacc/ensemble.hpp"

namespace qacc {

const PlacedGate& EnsembleOp::resolve(const std::vector<int>& assignment) const {
  const std::vector<PlacedGate>* table = &values;
  if (branch_var >= 0 && assignment[size_t(branch_var)] == 1 && !values_alt.empty()) table = &values_alt;
  if (var < 0) {
    if (branch_var >= 0) return (*table)[0];
    return fixed;
  }
  return (*table)[size_t(assignment[size_t(var)])];
}

std::vector<int> ProtocolEnsemble::draw_assignment(uint64_t seed) const {
  Rng rng(seed);
  std::vector<int> a(vars.size());
  for (size_t v = 0; v < vars.size(); ++v) a[v] = rng.uniform_int(vars[v].outcomes);
  return a;
}

Circuit ProtocolEnsemble::realize(const std::vector<int>& assignment) const {
  Circuit c = skeleton;
  for (size_t i = 0; i < slots.size(); ++i) c.ops[i] = slots[i].resolve(assignment);
  return c;
}

EnsembleBuilder::EnsembleBuilder(int qubits, bool is_trap) {
  e_.skeleton.qubits = qubits;
  e_.skeleton.preps.assign(size_t(qubits), Prep::zero());
  e_.skeleton.measurements.assign(size_t(qubits), MeasBasis::z());
  e_.is_trap = is_trap;
}

int EnsembleBuilder::add_var(int outcomes, VarRole role) {
  e_.vars.push_back({outcomes, role, -1, -1, false});
  return int(e_.vars.size()) - 1;
}

void EnsembleBuilder::set_prep(int qubit, Prep p) { e_.skeleton.preps.at(size_t(qubit)) = std::move(p); }

void EnsembleBuilder::set_measurement(int qubit, MeasBasis m) {
  e_.skeleton.measurements.at(size_t(qubit)) = std::move(m);
}

size_t EnsembleBuilder::push_fixed(PlacedGate g) {
  e_.skeleton.ops.push_back(g);
  e_.slots.push_back({std::move(g), -1, {}, -1, {}});
  return e_.slots.size() - 1;
}

size_t EnsembleBuilder::push_choice(int var, std::vector<PlacedGate> values) {
  if (values.size() != size_t(e_.vars.at(size_t(var)).outcomes))
    throw std::invalid_argument("push_choice: value table does not match var outcomes");
  e_.skeleton.ops.push_back(values[0]);
  e_.slots.push_back({values[0], var, std::move(values), -1, {}});
  return e_.slots.size() - 1;
}

size_t EnsembleBuilder::push_two_var(int var, std::vector<PlacedGate> values, int branch_var,
                                     std::vector<PlacedGate> values_alt) {
  if (values.size() != values_alt.size()) throw std::invalid_argument("push_two_var: table sizes differ");
  e_.skeleton.ops.push_back(values[0]);
  e_.slots.push_back({values[0], var, std::move(values), branch_var, std::move(values_alt)});
  e_.vars.at(size_t(branch_var)).branching = true;
  return e_.slots.size() - 1;
}

ProtocolEnsemble EnsembleBuilder::finish() {
  // Work out var spans and decide which vars the averaged executor must
  // enumerate globally (non-contiguous spans).
  for (size_t i = 0; i < e_.slots.size(); ++i) {
    int v = e_.slots[i].var;
    if (v < 0) continue;
    EnsembleVar& var = e_.vars[size_t(v)];
    if (var.lo < 0) var.lo = int(i);
    var.hi = int(i);
  }
  for (size_t v = 0; v < e_.vars.size(); ++v) {
    EnsembleVar& var = e_.vars[v];
    if (var.lo < 0) {
      var.branching = true;  // only referenced through branch tables
      continue;
    }
    for (int i = var.lo; i <= var.hi; ++i) {
      int other = e_.slots[size_t(i)].var;
      if (other != -1 && other != int(v)) var.branching = true;
    }
  }
  e_.skeleton.validate();
  return std::move(e_);
}

}  // namespace qacc
