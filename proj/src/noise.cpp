#include "qacc/noise.hpp"

#include <cmath>

namespace qacc {

std::string site_kind_name(SiteKind k) {
  switch (k) {
    case SiteKind::prep: return "prep";
    case SiteKind::gate2q: return "gate2q";
    case SiteKind::meas: return "meas";
    case SiteKind::slot1q: return "slot1q";
  }
  throw std::logic_error("bad SiteKind");
}

SiteKind site_kind_from_name(const std::string& s) {
  for (SiteKind k : {SiteKind::prep, SiteKind::gate2q, SiteKind::meas, SiteKind::slot1q})
    if (site_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown site kind: " + s);
}

std::string NoiseSite::describe() const {
  std::string s = site_kind_name(kind) + "[" + std::to_string(ordinal) + "] on qubit";
  if (qubits.size() > 1) s += "s";
  for (int q : qubits) s += " " + std::to_string(q);
  return s;
}

std::vector<NoiseSite> enumerate_sites(const Circuit& c) {
  std::vector<NoiseSite> sites;
  for (int q = 0; q < c.qubits; ++q) sites.push_back({SiteKind::prep, q, {q}, -1});
  int n2 = 0, n1 = 0;
  for (size_t i = 0; i < c.ops.size(); ++i) {
    const PlacedGate& g = c.ops[i];
    if (g.is_two_qubit())
      sites.push_back({SiteKind::gate2q, n2++, g.qubits, int(i)});
    else
      sites.push_back({SiteKind::slot1q, n1++, g.qubits, int(i)});
  }
  for (int q = 0; q < c.qubits; ++q) sites.push_back({SiteKind::meas, q, {q}, -1});
  return sites;
}

Channel ChannelSpec::build(int site_qubits) const {
  int total_qubits = site_qubits + ancillas;
  int dim = 1 << total_qubits;
  if (name == "identity") return Channel::identity(dim);
  if (name == "depolarizing") {
    if (params.size() != 1) throw std::invalid_argument("depolarizing expects one parameter");
    return Channel::depolarizing(total_qubits, params[0]);
  }
  if (name == "dephasing") {
    if (params.size() != 1 || total_qubits != 1) throw std::invalid_argument("dephasing is single-qubit, one parameter");
    return Channel::dephasing(params[0]);
  }
  if (name == "amplitude_damping") {
    if (params.size() != 1 || total_qubits != 1)
      throw std::invalid_argument("amplitude_damping is single-qubit, one parameter");
    return Channel::amplitude_damping(params[0]);
  }
  if (name == "pauli") {
    auto strings = all_pauli_strings(total_qubits);
    if (params.size() != strings.size())
      throw std::invalid_argument("pauli expects " + std::to_string(strings.size()) + " probabilities here");
    std::vector<Mat> us;
    us.reserve(strings.size());
    for (const PauliString& p : strings) us.push_back(p.matrix());
    return Channel::mixture_of_unitaries(params, us);
  }
  if (name == "unitary_mixture") {
    if (params.size() != matrices.size()) throw std::invalid_argument("unitary_mixture: weight/matrix count mismatch");
    for (const Mat& u : matrices)
      if (int(u.rows()) != dim) throw std::invalid_argument("unitary_mixture: matrix dimension mismatch");
    return Channel::mixture_of_unitaries(params, matrices);
  }
  if (name == "kraus") {
    for (const Mat& k : matrices)
      if (int(k.rows()) != dim) throw std::invalid_argument("kraus: matrix dimension mismatch");
    return Channel(matrices);
  }
  throw std::invalid_argument("unknown channel constructor: " + name);
}

std::optional<double> ChannelSpec::fire_probability(int site_qubits) const {
  int total_qubits = site_qubits + ancillas;
  if (name == "identity") return 0.0;
  if (name == "depolarizing") {
    double d2 = double(1 << (2 * total_qubits));
    return params.at(0) * (d2 - 1) / d2;
  }
  if (name == "dephasing") return params.at(0);
  if (name == "pauli") {
    double s = 0;
    for (size_t i = 1; i < params.size(); ++i) s += params[i];
    return s;
  }
  if (name == "unitary_mixture") {
    double fire = 0;
    for (size_t i = 0; i < matrices.size(); ++i) {
      const Mat& u = matrices[i];
      cxd tr = u.trace() / double(u.rows());
      bool is_id = (u - tr * Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < 1e-12 &&
                   std::abs(std::abs(tr) - 1.0) < 1e-12;
      if (!is_id) fire += params[i];
    }
    return fire;
  }
  return std::nullopt;
}

bool ChannelSpec::operator==(const ChannelSpec& o) const {
  if (name != o.name || params != o.params || ancillas != o.ancillas) return false;
  if (matrices.size() != o.matrices.size()) return false;
  for (size_t i = 0; i < matrices.size(); ++i)
    if (matrices[i].rows() != o.matrices[i].rows() || (matrices[i] - o.matrices[i]).cwiseAbs().maxCoeff() > 0)
      return false;
  return true;
}

bool NoiseRule::matches(const NoiseSite& s) const {
  if (kind != s.kind) return false;
  if (ordinal && *ordinal != s.ordinal) return false;
  if (qubits && *qubits != s.qubits) return false;
  return true;
}

const NoiseRule* NoiseModel::match(const NoiseSite& s) const {
  for (auto it = rules.rbegin(); it != rules.rend(); ++it)
    if (it->matches(s)) return &*it;
  return nullptr;
}

void NoiseModel::validate_against(const Circuit& c) const {
  auto sites = enumerate_sites(c);
  for (size_t r = 0; r < rules.size(); ++r) {
    const NoiseRule& rule = rules[r];
    bool any = false;
    for (const NoiseSite& s : sites) {
      if (!rule.matches(s)) continue;
      any = true;
      rule.channel.build(int(s.qubits.size()));  // throws on dimension problems
    }
    if (!any) {
      std::string where = site_kind_name(rule.kind);
      if (rule.ordinal) where += "[" + std::to_string(*rule.ordinal) + "]";
      throw std::invalid_argument("noise rule " + std::to_string(r) + " (" + where +
                                  ") matches no site in the circuit");
    }
  }
  int gate_sites = 0;
  for (const NoiseSite& s : sites)
    if (s.kind == SiteKind::gate2q) ++gate_sites;
  for (const auto& group : n3_groups) {
    const ChannelSpec* ref = nullptr;
    static const ChannelSpec kIdentity{};
    for (int ordinal : group) {
      if (ordinal < 0 || ordinal >= gate_sites)
        throw std::invalid_argument("n3 group names gate2q[" + std::to_string(ordinal) +
                                    "] which does not exist in the circuit");
      NoiseSite probe{SiteKind::gate2q, ordinal, {}, -1};
      const NoiseRule* rule = nullptr;
      for (auto it = rules.rbegin(); it != rules.rend(); ++it)
        if (it->kind == SiteKind::gate2q && (!it->ordinal || *it->ordinal == ordinal) && !it->qubits) {
          rule = &*it;
          break;
        }
      const ChannelSpec& spec = rule ? rule->channel : kIdentity;
      if (!ref)
        ref = &spec;
      else if (!(*ref == spec))
        throw std::invalid_argument("n3 group members resolve to different channels at gate2q[" +
                                    std::to_string(ordinal) + "]");
      (void)probe;
    }
  }
}

}  // namespace qacc
