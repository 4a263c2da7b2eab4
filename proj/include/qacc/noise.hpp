#pragma once

#include <optional>

#include "qacc/channel.hpp"
#include "qacc/circuit.hpp"

namespace qacc {

enum class SiteKind { prep, gate2q, meas, slot1q };

std::string site_kind_name(SiteKind k);
SiteKind site_kind_from_name(const std::string& s);

// A noise attachment point. `ordinal` counts sites of the same kind in
// circuit order (prep/meas: the qubit itself). `op_index` is the position in
// the circuit's op list, or -1 for prep/meas sites.
struct NoiseSite {
  SiteKind kind;
  int ordinal;
  std::vector<int> qubits;
  int op_index = -1;
  std::string describe() const;
};

std::vector<NoiseSite> enumerate_sites(const Circuit& c);

// Channel constructor by name; `ancillas` requests that many fresh
// environment qubits at the site (Kraus dims must include them).
struct ChannelSpec {
  std::string name = "identity";  // identity | depolarizing | dephasing | amplitude_damping |
                                  // pauli | unitary_mixture | kraus
  std::vector<double> params;
  std::vector<Mat> matrices;  // unitaries for unitary_mixture, Kraus ops for kraus
  int ancillas = 0;

  Channel build(int site_qubits) const;
  bool is_identity() const { return name == "identity"; }
  // Probability that a stochastic channel applies a non-identity unitary;
  // nullopt for channels without a probabilistic-unitary form.
  std::optional<double> fire_probability(int site_qubits) const;
  bool operator==(const ChannelSpec& o) const;
};

struct NoiseRule {
  SiteKind kind;
  std::optional<int> ordinal;
  std::optional<std::vector<int>> qubits;
  ChannelSpec channel;
  bool matches(const NoiseSite& s) const;
};

struct NoiseModel {
  std::vector<NoiseRule> rules;
  bool n3_declared = false;
  std::vector<std::vector<int>> n3_groups;  // gate2q ordinals sharing one channel

  static NoiseModel none() { return {}; }
  // Last matching rule wins; nullptr means the site is noiseless.
  const NoiseRule* match(const NoiseSite& s) const;
  // Throws with the offending site/rule named.
  void validate_against(const Circuit& c) const;
};

}  // namespace qacc
