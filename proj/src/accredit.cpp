#include "qacc/accredit.hpp"

#include <algorithm>
#include <cmath>

#include "qacc/oracle.hpp"

namespace qacc {

std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::tau: return "tau";
    case Protocol::xy: return "xy";
    case Protocol::xy_strong: return "xy-strong";
  }
  throw std::logic_error("bad Protocol");
}

Protocol protocol_from_name(const std::string& s) {
  for (Protocol p : {Protocol::tau, Protocol::xy, Protocol::xy_strong})
    if (protocol_name(p) == s) return p;
  throw std::invalid_argument("unknown protocol: " + s);
}

void AccreditationConfig::validate() const {
  if (!(theta > 0 && theta <= 1)) throw std::invalid_argument("theta must be in (0, 1]");
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must be in (0, 1)");
  if (!(k > 0 && k <= 1)) throw std::invalid_argument("k must be in (0, 1]");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

int trap_count(double theta, double alpha) {
  if (!(theta > 0 && theta <= 1)) throw std::invalid_argument("theta must be in (0, 1]");
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must be in (0, 1)");
  return int(std::ceil(2.0 / (theta * theta) * std::log(2.0 / (1.0 - alpha)))) + 1;
}

ProtocolContext ProtocolContext::resolve(const Circuit& c, Protocol p, const NoiseModel& nm,
                                         uint64_t search_seed) {
  ProtocolContext ctx;
  ctx.protocol = p;
  if (p == Protocol::tau) {
    Circuit std_c = standard_form(c);
    auto two = std_c.two_qubit_ops();
    if (two.empty()) throw std::invalid_argument("tau protocol: circuit has no two-qubit gate to decompose");
    DecompositionSearchResult res = search_tau_decomposition(std_c.ops[two[0]].matrix, 1e-6, search_seed);
    if (!res.dec)
      throw std::invalid_argument("tau protocol: two-qubit gate admits no decomposition (best residual " +
                                  std::to_string(res.best_residual) + ")");
    ctx.dec = res.dec;
    ctx.trap_ensemble = make_tau_trap(c, *ctx.dec);
    ctx.target_ensemble = make_tau_target(c, *ctx.dec);
  } else {
    bool strong = (p == Protocol::xy_strong);
    if (strong && !nm.n3_declared)
      throw std::invalid_argument(
          "xy-strong protocol requires the noise model to declare sign-variant-identical error (n3)");
    ctx.trap_ensemble = make_xy_trap(c, strong);
    ctx.target_ensemble = make_xy_target(c, strong);
  }
  return ctx;
}

ProtocolContext ProtocolContext::with_decomposition(const Circuit& c, const TauDecomposition& dec) {
  ProtocolContext ctx;
  ctx.protocol = Protocol::tau;
  ctx.dec = dec;
  ctx.trap_ensemble = make_tau_trap(c, dec);
  ctx.target_ensemble = make_tau_target(c, dec);
  return ctx;
}

AccreditationReport run_accreditation(const Circuit& c, const NoiseModel& nm, const AccreditationConfig& cfg) {
  cfg.validate();
  ProtocolContext ctx = ProtocolContext::resolve(c, cfg.protocol, nm);
  return run_accreditation(ctx, nm, cfg);
}

AccreditationReport run_accreditation(const ProtocolContext& ctx, const NoiseModel& nm,
                                      const AccreditationConfig& cfg) {
  cfg.validate();
  if (ctx.protocol == Protocol::xy_strong && !nm.n3_declared)
    throw std::invalid_argument(
        "xy-strong protocol requires the noise model to declare sign-variant-identical error (n3)");
  nm.validate_against(ctx.trap_ensemble.skeleton);

  AccreditationReport rep;
  rep.config = cfg;
  rep.n_traps = trap_count(cfg.theta, cfg.alpha);
  Rng root(cfg.seed);

  int total = rep.n_traps + 1;
  rep.order.resize(size_t(total));
  for (int i = 0; i < total; ++i) rep.order[size_t(i)] = i;
  Rng shuffle_rng = root.derive(0x0bde7);
  for (int i = total - 1; i > 0; --i)
    std::swap(rep.order[size_t(i)], rep.order[size_t(shuffle_rng.uniform_int(i + 1))]);

  rep.traps.resize(size_t(rep.n_traps));
  for (int pos = 0; pos < total; ++pos) {
    int id = rep.order[size_t(pos)];
    if (id == rep.n_traps) {
      Circuit target = ctx.target_ensemble.draw(root.derive(0x7a9e70).seed());
      auto shots = sample(target, nm, 1, root.derive(0x5a3b1e).seed());
      rep.target_sample = outcome_bits(shots[0], target.qubits);
    } else {
      Circuit trap = ctx.trap_ensemble.draw(root.derive(0x7a0000 + uint64_t(id)).seed());
      Distribution ideal = ideal_distribution(trap);
      uint64_t expected = ideal.argmax();
      if (ideal.prob(expected) < 1.0 - 1e-9)
        throw std::runtime_error("generated trap is not deterministic");
      auto shots = sample(trap, nm, 1, root.derive(0x5a0000 + uint64_t(id)).seed());
      TrapRecord& rec = rep.traps[size_t(id)];
      rec.index = id;
      rec.order_pos = pos;
      rec.outcome = outcome_bits(shots[0], trap.qubits);
      rec.expected = outcome_bits(expected, trap.qubits);
      rec.pass = (shots[0] == expected);
      if (!rec.pass) ++rep.trap_failures;
    }
  }

  rep.trap_result = double(rep.trap_failures) / double(rep.n_traps);
  rep.bound = (rep.trap_result + cfg.theta) / cfg.k;
  return rep;
}

}  // namespace qacc
