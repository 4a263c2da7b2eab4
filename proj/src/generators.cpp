#include "qacc/generators.hpp"

#include <cmath>

#include "qacc/oracle.hpp"

namespace qacc {

namespace {

PlacedGate merged_1q(const Mat& u, int qubit, Prov prov) {
  if ((u - gate_id2()).cwiseAbs().maxCoeff() < 1e-14) return PlacedGate::id_marker(qubit, prov);
  return PlacedGate::custom1(u, qubit, prov);
}

std::vector<PlacedGate> block_ops(int j, double t, const PauliString& p1, const PauliString& p2,
                                  int qa, int qb) {
  const Mat zj = (j == 1) ? Mat(gate_z()) : Mat(gate_id2());
  const Mat a1 = pauli_matrix(p1.letters[0]);
  const Mat b1 = pauli_matrix(p1.letters[1]);
  const Mat a2 = pauli_matrix(p2.letters[0]);
  const Mat b2 = pauli_matrix(p2.letters[1]);
  auto [s11, s12] = xy_conjugation_signs(p1);
  auto [s21, s22] = xy_conjugation_signs(p2);
  std::vector<PlacedGate> ops;
  ops.push_back(merged_1q(a1 * zj, qa, Prov::vanishing));
  ops.push_back(merged_1q(b1, qb, Prov::vanishing));
  ops.push_back(PlacedGate::xy(t / 2, {qa, qb}, Prov::vanishing, double(s11), double(s12)));
  ops.push_back(merged_1q(a2 * zj * a1, qa, Prov::vanishing));
  ops.push_back(merged_1q(b2 * b1, qb, Prov::vanishing));
  ops.push_back(PlacedGate::xy(t / 2, {qa, qb}, Prov::vanishing, double(s21), double(s22)));
  ops.push_back(merged_1q(a2, qa, Prov::vanishing));
  ops.push_back(merged_1q(b2, qb, Prov::vanishing));
  return ops;
}

PauliString two_qubit_pauli(int code) {
  PauliString p;
  p.letters = {Pauli(code / 4), Pauli(code % 4)};
  return p;
}

}  // namespace

std::vector<PlacedGate> VanishingBlock::ops() const {
  return block_ops(j, t, p1, p2, qubits[0], qubits[1]);
}

Mat VanishingBlock::unitary() const {
  Mat u = Mat::Identity(4, 4);
  for (const PlacedGate& g : ops()) {
    Mat full;
    if (g.is_two_qubit()) {
      full = g.matrix;
    } else {
      full = (g.qubits[0] == qubits[0]) ? kron(g.matrix, gate_id2()) : kron(gate_id2(), g.matrix);
    }
    u = full * u;
  }
  return u;
}

VanishingBlock build_vanishing_block(int j, double t, uint64_t seed, bool strong_n3) {
  if (j != 0 && j != 1) throw std::invalid_argument("vanishing block: j must be 0 or 1");
  Rng rng(seed);
  VanishingBlock b;
  b.j = j;
  b.t = t;
  b.strong = strong_n3;
  if (strong_n3) {
    b.p1 = two_qubit_pauli(rng.uniform_int(16));
    b.p2 = two_qubit_pauli(rng.uniform_int(16));
  } else {
    int p = rng.uniform_int(4), q = rng.uniform_int(4);
    b.p1 = two_qubit_pauli(p * 4 + p);
    b.p2 = two_qubit_pauli(q * 4 + q);
  }
  return b;
}

std::optional<double> xy_angle_of(const PlacedGate& g) {
  if (!g.is_two_qubit()) return std::nullopt;
  if (g.kind == "xy") {
    if (g.params.size() == 3 && (g.params[1] != 1.0 || g.params[2] != 1.0)) return std::nullopt;
    return g.params.at(0);
  }
  if (g.kind == "iswap") return -M_PI / 4;
  if (g.kind == "sqrt_iswap") return -M_PI / 8;
  return std::nullopt;
}

namespace {

// Which tau factor a gate presents on qubit q: 1 for the first gate qubit, 2
// for the second.
int tau_index(const PlacedGate& g, int q) { return g.qubits[0] == q ? 1 : 2; }

struct TauTables {
  std::array<Mat, 4> ves1, ves2;   // tau^dag P tau per letter
  std::array<Mat, 16> pre1, pre2;  // pushed pair per (j,k)
  Mat delta, delta_dag;
  Mat spam_z, h_layer;
};

TauTables tau_tables(const TauDecomposition& dec) {
  TauTables t;
  t.ves1 = conjugated_paulis(dec.tau1);
  t.ves2 = conjugated_paulis(dec.tau2);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      auto [p, q] = pushed_pair(Pauli(j), Pauli(k), dec);
      t.pre1[size_t(j * 4 + k)] = p;
      t.pre2[size_t(j * 4 + k)] = q;
    }
  t.delta = dec.delta();
  t.delta_dag = t.delta.adjoint();
  t.spam_z = dec.tau1.adjoint() * gate_z() * dec.tau1;
  t.h_layer = dec.tau1.adjoint() * gate_h() * dec.tau1;
  return t;
}

ProtocolEnsemble make_tau_protocol(const Circuit& input, const TauDecomposition& dec, bool trap) {
  dec.validate();
  Circuit std_c = standard_form(input);
  Mat g_ref = dec.gate();
  for (size_t i : std_c.two_qubit_ops())
    if (!equal_up_to_phase(std_c.ops[i].matrix, g_ref, 1e-9))
      throw std::invalid_argument("protocol input has a two-qubit gate that is not the decomposed gate");

  TauTables tab = tau_tables(dec);
  int n = std_c.qubits;
  EnsembleBuilder b(n, trap);

  // prep in the tau1^dag-rotated basis; measurement likewise
  for (int q = 0; q < n; ++q) {
    b.set_prep(q, Prep::rotated(dec.tau1.adjoint()));
    b.set_measurement(q, MeasBasis::rotated(dec.tau1.adjoint()));
  }

  int v_spam = b.add_var(2, VarRole::coin);
  int v_h = trap ? b.add_var(2, VarRole::coin) : -1;

  // per-qubit tau index presented by the first / last two-qubit gate
  std::vector<int> first_idx(size_t(n), 1), last_idx(size_t(n), 1);
  std::vector<bool> touched(size_t(n), false);
  for (size_t i : std_c.two_qubit_ops()) {
    for (int q : std_c.ops[i].qubits) {
      if (!touched[size_t(q)]) {
        first_idx[size_t(q)] = tau_index(std_c.ops[i], q);
        touched[size_t(q)] = true;
      }
      last_idx[size_t(q)] = tau_index(std_c.ops[i], q);
    }
  }
  // next two-qubit gate (if any) after each op position per qubit
  auto next_idx_after = [&](size_t op, int q) -> int {
    for (size_t i = op + 1; i < std_c.ops.size(); ++i) {
      const PlacedGate& g = std_c.ops[i];
      if (g.is_two_qubit() && (g.qubits[0] == q || g.qubits[1] == q)) return tau_index(g, q);
    }
    return 0;  // measurement side
  };

  for (int q = 0; q < n; ++q)
    b.push_choice(v_spam, {PlacedGate::id_marker(q, Prov::spam_twirl),
                           PlacedGate::custom1(tab.spam_z, q, Prov::spam_twirl)});
  for (int q = 0; q < n; ++q) {
    if (trap)
      b.push_choice(v_h, {PlacedGate::id_marker(q, Prov::trap_layer),
                          PlacedGate::custom1(tab.h_layer, q, Prov::trap_layer)});
    else
      b.push_fixed(PlacedGate::id_marker(q, Prov::trap_layer));
  }
  for (int q = 0; q < n; ++q) {
    if (trap)
      b.push_fixed(PlacedGate::id_marker(q, Prov::input));  // corrections removed with the input gates
    else
      b.push_fixed(PlacedGate::custom1(dec.tau1, q, Prov::input));
  }
  for (int q = 0; q < n; ++q) {
    bool needs = trap && first_idx[size_t(q)] == 2;
    b.push_fixed(needs ? PlacedGate::custom1(tab.delta_dag, q, Prov::delta)
                       : PlacedGate::id_marker(q, Prov::delta));
  }

  for (size_t i = 0; i < std_c.ops.size(); ++i) {
    const PlacedGate& g = std_c.ops[i];
    if (!g.is_two_qubit()) {
      if (trap)
        b.push_fixed(PlacedGate::id_marker(g.qubits[0], Prov::input));
      else
        b.push_fixed(g);
      continue;
    }
    int qa = g.qubits[0], qb = g.qubits[1];
    int v = b.add_var(16, VarRole::gate_twirl);
    std::vector<PlacedGate> pre_a, pre_b, post_a, post_b;
    for (int code = 0; code < 16; ++code) {
      pre_a.push_back(merged_1q(tab.pre1[size_t(code)], qa, Prov::twirl));
      pre_b.push_back(merged_1q(tab.pre2[size_t(code)], qb, Prov::twirl));
      post_a.push_back(merged_1q(tab.ves1[size_t(code / 4)], qa, Prov::twirl));
      post_b.push_back(merged_1q(tab.ves2[size_t(code % 4)], qb, Prov::twirl));
    }
    b.push_choice(v, std::move(pre_a));
    b.push_choice(v, std::move(pre_b));
    b.push_fixed(g);
    b.push_choice(v, std::move(post_a));
    b.push_choice(v, std::move(post_b));
    // seam toward the next gate on each wire
    for (int q : {qa, qb}) {
      int cur = tau_index(g, q);
      int nxt = next_idx_after(i, q);
      Mat d;
      bool needs = trap && nxt != 0 && nxt != cur;
      if (needs) d = (cur == 1) ? tab.delta_dag : tab.delta;
      b.push_fixed(needs ? PlacedGate::custom1(d, q, Prov::delta) : PlacedGate::id_marker(q, Prov::delta));
    }
  }

  for (int q = 0; q < n; ++q) {
    if (trap)
      b.push_fixed(PlacedGate::id_marker(q, Prov::input));
    else
      b.push_fixed(PlacedGate::custom1(dec.tau1.adjoint(), q, Prov::input));
  }
  for (int q = 0; q < n; ++q) {
    bool needs = trap && last_idx[size_t(q)] == 2;
    b.push_fixed(needs ? PlacedGate::custom1(tab.delta, q, Prov::delta)
                       : PlacedGate::id_marker(q, Prov::delta));
  }
  for (int q = 0; q < n; ++q) {
    if (trap)
      b.push_choice(v_h, {PlacedGate::id_marker(q, Prov::trap_layer),
                          PlacedGate::custom1(tab.h_layer, q, Prov::trap_layer)});
    else
      b.push_fixed(PlacedGate::id_marker(q, Prov::trap_layer));
  }
  for (int q = 0; q < n; ++q)
    b.push_choice(v_spam, {PlacedGate::id_marker(q, Prov::spam_twirl),
                           PlacedGate::custom1(tab.spam_z, q, Prov::spam_twirl)});

  ProtocolEnsemble e = b.finish();
  e.input_two_qubit_count = int(std_c.two_qubit_ops().size());
  e.input_gate_count = std_c.gate_count();
  e.gate_factor = 7;
  e.per_qubit_constant = 8;
  e.gate_dressing_frame = twirl_frame(dec);
  return e;
}

ProtocolEnsemble make_xy_protocol(const Circuit& input, bool trap, bool strong) {
  Circuit std_c = standard_form(input);
  std::vector<double> angles(std_c.ops.size(), 0.0);
  for (size_t i : std_c.two_qubit_ops()) {
    auto t = xy_angle_of(std_c.ops[i]);
    if (!t) throw std::invalid_argument("protocol input has a two-qubit gate without an XY angle");
    angles[i] = *t;
  }

  int n = std_c.qubits;
  EnsembleBuilder b(n, trap);
  int j = trap ? 1 : 0;

  int v_h = -1;
  std::vector<int> v_zprep(size_t(n), -1), v_zmeas(size_t(n), -1);
  if (trap) {
    v_h = b.add_var(2, VarRole::coin);
    for (int q = 0; q < n; ++q) v_zprep[size_t(q)] = b.add_var(2, VarRole::coin);
    for (int q = 0; q < n; ++q) v_zmeas[size_t(q)] = b.add_var(2, VarRole::coin);
  }

  for (int q = 0; q < n; ++q) {
    if (trap) {
      // prep side, applied order: Z then H; merged into one placed gate
      std::vector<PlacedGate> plain = {PlacedGate::id_marker(q, Prov::trap_layer),
                                       PlacedGate::named("z", {q}, Prov::trap_layer)};
      std::vector<PlacedGate> with_h = {PlacedGate::named("h", {q}, Prov::trap_layer),
                                        PlacedGate::custom1(gate_h() * gate_z(), q, Prov::trap_layer)};
      b.push_two_var(v_zprep[size_t(q)], std::move(plain), v_h, std::move(with_h));
    } else {
      b.push_fixed(PlacedGate::id_marker(q, Prov::trap_layer));
    }
  }

  for (size_t i = 0; i < std_c.ops.size(); ++i) {
    const PlacedGate& g = std_c.ops[i];
    if (!g.is_two_qubit()) {
      if (trap)
        b.push_fixed(PlacedGate::id_marker(g.qubits[0], Prov::input));
      else
        b.push_fixed(g);
      continue;
    }
    int qa = g.qubits[0], qb = g.qubits[1];
    int outcomes = strong ? 256 : 16;
    int v = b.add_var(outcomes, VarRole::gate_twirl);
    std::vector<std::vector<PlacedGate>> tables(8);
    for (int code = 0; code < outcomes; ++code) {
      PauliString p1, p2;
      if (strong) {
        p1 = two_qubit_pauli(code / 16);
        p2 = two_qubit_pauli(code % 16);
      } else {
        int a = code / 4, c = code % 4;
        p1 = two_qubit_pauli(a * 4 + a);
        p2 = two_qubit_pauli(c * 4 + c);
      }
      std::vector<PlacedGate> ops = block_ops(j, angles[i], p1, p2, qa, qb);
      for (size_t k = 0; k < 8; ++k) tables[k].push_back(ops[k]);
    }
    for (size_t k = 0; k < 8; ++k) b.push_choice(v, std::move(tables[k]));
  }

  for (int q = 0; q < n; ++q) {
    if (trap) {
      // measurement side, applied order: H then Z
      std::vector<PlacedGate> plain = {PlacedGate::id_marker(q, Prov::trap_layer),
                                       PlacedGate::named("z", {q}, Prov::trap_layer)};
      std::vector<PlacedGate> with_h = {PlacedGate::named("h", {q}, Prov::trap_layer),
                                        PlacedGate::custom1(gate_z() * gate_h(), q, Prov::trap_layer)};
      b.push_two_var(v_zmeas[size_t(q)], std::move(plain), v_h, std::move(with_h));
    } else {
      b.push_fixed(PlacedGate::id_marker(q, Prov::trap_layer));
    }
  }

  ProtocolEnsemble e = b.finish();
  e.input_two_qubit_count = int(std_c.two_qubit_ops().size());
  e.input_gate_count = std_c.gate_count();
  e.gate_factor = 8;
  e.per_qubit_constant = 2;
  if (strong) {
    for (const PauliString& p : all_pauli_strings(2)) e.gate_dressing_frame.push_back(p.matrix());
  } else {
    for (int p = 0; p < 4; ++p) e.gate_dressing_frame.push_back(two_qubit_pauli(p * 4 + p).matrix());
  }
  return e;
}

}  // namespace

ProtocolEnsemble make_tau_target(const Circuit& input, const TauDecomposition& dec) {
  return make_tau_protocol(input, dec, false);
}
ProtocolEnsemble make_tau_trap(const Circuit& input, const TauDecomposition& dec) {
  return make_tau_protocol(input, dec, true);
}
ProtocolEnsemble make_xy_target(const Circuit& input, bool strong_n3) {
  return make_xy_protocol(input, false, strong_n3);
}
ProtocolEnsemble make_xy_trap(const Circuit& input, bool strong_n3) {
  return make_xy_protocol(input, true, strong_n3);
}

namespace {

std::vector<int> deterministic_outcome(const Circuit& trap) {
  Distribution d = ideal_distribution(trap);
  uint64_t top = d.argmax();
  if (d.prob(top) < 1.0 - 1e-9)
    throw std::runtime_error("trap is not deterministic; max outcome probability " +
                             std::to_string(d.prob(top)));
  std::vector<int> m(size_t(trap.qubits));
  for (int q = 0; q < trap.qubits; ++q) m[size_t(q)] = int((top >> (trap.qubits - 1 - q)) & 1);
  return m;
}

}  // namespace

Circuit build_tau_target(const Circuit& input, const TauDecomposition& dec, uint64_t seed) {
  return make_tau_target(input, dec).draw(seed);
}

std::pair<Circuit, std::vector<int>> build_tau_trap(const Circuit& input, const TauDecomposition& dec,
                                                    uint64_t seed) {
  Circuit c = make_tau_trap(input, dec).draw(seed);
  return {c, deterministic_outcome(c)};
}

Circuit build_xy_target(const Circuit& input, uint64_t seed, bool strong_n3) {
  return make_xy_target(input, strong_n3).draw(seed);
}

std::pair<Circuit, std::vector<int>> build_xy_trap(const Circuit& input, uint64_t seed, bool strong_n3) {
  Circuit c = make_xy_trap(input, strong_n3).draw(seed);
  return {c, deterministic_outcome(c)};
}

}  // namespace qacc
