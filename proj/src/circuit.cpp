#include "qacc/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace qacc {

std::string prov_name(Prov p) {
  switch (p) {
    case Prov::input: return "input";
    case Prov::twirl: return "twirl";
    case Prov::delta: return "delta";
    case Prov::vanishing: return "vanishing";
    case Prov::spam_twirl: return "spam-twirl";
    case Prov::trap_layer: return "trap-layer";
  }
  throw std::logic_error("bad Prov");
}

Prov prov_from_name(const std::string& s) {
  for (Prov p : {Prov::input, Prov::twirl, Prov::delta, Prov::vanishing, Prov::spam_twirl, Prov::trap_layer})
    if (prov_name(p) == s) return p;
  throw std::invalid_argument("unknown provenance tag: " + s);
}

Mat named_gate_matrix(const std::string& kind) {
  if (kind == "id") return gate_id2();
  if (kind == "x") return gate_x();
  if (kind == "y") return gate_y();
  if (kind == "z") return gate_z();
  if (kind == "h") return gate_h();
  if (kind == "s") return gate_s();
  if (kind == "sdg") return gate_sdg();
  if (kind == "t") return gate_t();
  if (kind == "tdg") return gate_tdg();
  if (kind == "cnot") return gate_cnot();
  if (kind == "cz") return gate_cz();
  if (kind == "swap") return gate_swap();
  if (kind == "iswap") return gate_iswap();
  if (kind == "sqrt_iswap") return gate_sqrt_iswap();
  if (kind == "fswap") return gate_fswap();
  throw std::invalid_argument("unknown gate kind: " + kind);
}

PlacedGate PlacedGate::named(const std::string& kind, std::vector<int> qubits, Prov prov) {
  PlacedGate g;
  g.kind = kind;
  g.matrix = named_gate_matrix(kind);
  g.qubits = std::move(qubits);
  g.prov = prov;
  if ((g.matrix.rows() == 2) != (g.qubits.size() == 1))
    throw std::invalid_argument("gate arity does not match qubit count: " + kind);
  return g;
}

PlacedGate PlacedGate::xy(double t, std::vector<int> qubits, Prov prov, double s1, double s2) {
  PlacedGate g;
  g.kind = "xy";
  g.params = {t, s1, s2};
  g.matrix = xy_gate(t, s1, s2);
  g.qubits = std::move(qubits);
  g.prov = prov;
  return g;
}

PlacedGate PlacedGate::custom1(Mat u, int qubit, Prov prov) {
  if (u.rows() != 2 || !is_unitary(u, 1e-9)) throw std::invalid_argument("custom1: not a 2x2 unitary");
  PlacedGate g;
  g.kind = "u2";
  g.matrix = std::move(u);
  g.qubits = {qubit};
  g.prov = prov;
  return g;
}

PlacedGate PlacedGate::custom2(Mat u, std::vector<int> qubits, Prov prov) {
  if (u.rows() != 4 || !is_unitary(u, 1e-9)) throw std::invalid_argument("custom2: not a 4x4 unitary");
  PlacedGate g;
  g.kind = "u4";
  g.matrix = std::move(u);
  g.qubits = std::move(qubits);
  g.prov = prov;
  return g;
}

PlacedGate PlacedGate::id_marker(int qubit, Prov prov) {
  PlacedGate g = named("id", {qubit});
  g.prov = prov;
  return g;
}

Vec Prep::state() const {
  Vec v(2);
  if (label == "0") {
    v << 1, 0;
  } else if (label == "1") {
    v << 0, 1;
  } else if (label == "+") {
    v << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  } else if (label == "u") {
    if (u.rows() != 2 || !is_unitary(u, 1e-9)) throw std::invalid_argument("prep: not a 2x2 unitary");
    v = u.col(0);
  } else {
    throw std::invalid_argument("unknown prep label: " + label);
  }
  return v;
}

Prep Prep::basis(const std::string& label) {
  if (label != "0" && label != "1" && label != "+") throw std::invalid_argument("unknown prep label: " + label);
  return {label, Mat()};
}

Mat MeasBasis::rotation() const {
  if (label == "z") return gate_id2();
  if (label == "u") {
    if (b.rows() != 2 || !is_unitary(b, 1e-9)) throw std::invalid_argument("measurement: not a 2x2 unitary");
    return b.adjoint();
  }
  throw std::invalid_argument("unknown measurement label: " + label);
}

void Circuit::validate() const {
  if (qubits <= 0) throw std::invalid_argument("circuit: needs at least one qubit");
  if (int(preps.size()) != qubits) throw std::invalid_argument("circuit: one prep per qubit required");
  if (int(measurements.size()) != qubits) throw std::invalid_argument("circuit: one measurement per qubit required");
  for (const Prep& p : preps) p.state();
  for (const MeasBasis& m : measurements) m.rotation();
  for (size_t i = 0; i < ops.size(); ++i) {
    const PlacedGate& g = ops[i];
    if (g.qubits.empty() || g.qubits.size() > 2)
      throw std::invalid_argument("circuit: op " + std::to_string(i) + " has bad qubit count");
    for (int q : g.qubits)
      if (q < 0 || q >= qubits) throw std::invalid_argument("circuit: op " + std::to_string(i) + " qubit out of range");
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1])
      throw std::invalid_argument("circuit: op " + std::to_string(i) + " acts twice on one qubit");
    if (int(g.matrix.rows()) != (g.qubits.size() == 1 ? 2 : 4))
      throw std::invalid_argument("circuit: op " + std::to_string(i) + " matrix shape mismatch");
  }
}

std::vector<size_t> Circuit::two_qubit_ops() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].is_two_qubit()) out.push_back(i);
  return out;
}

int Circuit::gate_count() const {
  int n = 0;
  for (const PlacedGate& g : ops)
    if (!g.is_identity_marker()) ++n;
  return n;
}

Circuit standard_form(const Circuit& c) {
  c.validate();
  Circuit out;
  out.qubits = c.qubits;
  out.preps.assign(size_t(c.qubits), Prep::zero());
  for (int q = 0; q < c.qubits; ++q) {
    const Prep& p = c.preps[size_t(q)];
    if (p.label == "0") {
      out.ops.push_back(PlacedGate::id_marker(q, Prov::input));
    } else if (p.label == "1") {
      out.ops.push_back(PlacedGate::named("x", {q}, Prov::input));
    } else if (p.label == "+") {
      out.ops.push_back(PlacedGate::named("h", {q}, Prov::input));
    } else {
      out.ops.push_back(PlacedGate::custom1(p.u, q, Prov::input));
    }
  }
  for (const PlacedGate& g : c.ops) out.ops.push_back(g);
  for (int q = 0; q < c.qubits; ++q) {
    const MeasBasis& m = c.measurements[size_t(q)];
    if (m.label == "z")
      out.ops.push_back(PlacedGate::id_marker(q, Prov::input));
    else
      out.ops.push_back(PlacedGate::custom1(m.rotation(), q, Prov::input));
  }
  out.measurements.assign(size_t(c.qubits), MeasBasis::z());
  return out;
}

std::vector<int> band_schedule(const Circuit& c) {
  std::vector<int> band(c.ops.size(), 0);
  std::vector<int> frontier(size_t(c.qubits), -1);
  for (size_t i = 0; i < c.ops.size(); ++i) {
    int b = 0;
    for (int q : c.ops[i].qubits) b = std::max(b, frontier[size_t(q)] + 1);
    band[i] = b;
    for (int q : c.ops[i].qubits) frontier[size_t(q)] = b;
  }
  return band;
}

}  // namespace qacc
