#pragma once

#include "qacc/gates.hpp"

namespace qacc {

// Origin of a placed gate; protocol generators key noise structurally off it.
enum class Prov { input, twirl, delta, vanishing, spam_twirl, trap_layer };

std::string prov_name(Prov p);
Prov prov_from_name(const std::string& s);

struct PlacedGate {
  std::string kind;             // id,x,y,z,h,s,sdg,t,tdg,u2 | cnot,cz,swap,iswap,sqrt_iswap,fswap,xy,u4
  std::vector<double> params;   // xy: {t, s1, s2}
  Mat matrix;                   // resolved unitary, 2x2 or 4x4
  std::vector<int> qubits;
  Prov prov = Prov::input;

  bool is_two_qubit() const { return qubits.size() == 2; }
  bool is_identity_marker() const { return kind == "id"; }

  static PlacedGate named(const std::string& kind, std::vector<int> qubits, Prov prov = Prov::input);
  static PlacedGate xy(double t, std::vector<int> qubits, Prov prov = Prov::input, double s1 = 1.0,
                       double s2 = 1.0);
  static PlacedGate custom1(Mat u, int qubit, Prov prov);
  static PlacedGate custom2(Mat u, std::vector<int> qubits, Prov prov);
  static PlacedGate id_marker(int qubit, Prov prov);
};

Mat named_gate_matrix(const std::string& kind);

struct Prep {
  std::string label;  // "0", "1", "+", or "u"
  Mat u;              // prepared state is u|0> when label == "u"
  Vec state() const;
  static Prep zero() { return {"0", Mat()}; }
  static Prep basis(const std::string& label);
  static Prep rotated(Mat u) { return {"u", std::move(u)}; }
};

struct MeasBasis {
  std::string label;  // "z" or "u"
  Mat b;              // basis states are the columns of b when label == "u"
  Mat rotation() const;  // applied before a computational readout: b^dag
  static MeasBasis z() { return {"z", Mat()}; }
  static MeasBasis rotated(Mat b) { return {"u", std::move(b)}; }
};

struct Circuit {
  int qubits = 0;
  std::vector<Prep> preps;
  std::vector<PlacedGate> ops;
  std::vector<MeasBasis> measurements;

  void validate() const;  // throws on index/shape violations
  std::vector<size_t> two_qubit_ops() const;
  int gate_count() const;  // ops that are not identity markers
};

// Rewrites preps as |0> + an explicit gate and measurements as an explicit
// gate + a computational readout; the ideal distribution is unchanged.
Circuit standard_form(const Circuit& c);

// Greedy ASAP band index per op (ops in one band act on disjoint qubits).
std::vector<int> band_schedule(const Circuit& c);

}  // namespace qacc
