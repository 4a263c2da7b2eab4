#include "qacc/oracle.hpp"

#include <cmath>
#include <future>

namespace qacc {

namespace {

// Full 2^n embedding of a 1- or 2-qubit operator; deliberately naive, this is
// the oracle path checked against the density simulator.
Mat embed_full(const Mat& u, const std::vector<int>& qubits, int n) {
  size_t dim = size_t(1) << n;
  size_t k = qubits.size();
  Mat full = Mat::Zero(Eigen::Index(dim), Eigen::Index(dim));
  auto sub_index = [&](size_t idx) {
    size_t s = 0;
    for (size_t i = 0; i < k; ++i) s = s << 1 | ((idx >> (n - 1 - qubits[i])) & 1);
    return s;
  };
  auto rest_bits = [&](size_t idx) {
    size_t mask = 0;
    for (size_t i = 0; i < k; ++i) mask |= size_t(1) << (n - 1 - qubits[i]);
    return idx & ~mask;
  };
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) {
      if (rest_bits(r) != rest_bits(c)) continue;
      full(Eigen::Index(r), Eigen::Index(c)) = u(Eigen::Index(sub_index(r)), Eigen::Index(sub_index(c)));
    }
  return full;
}

}  // namespace

Distribution ideal_distribution(const Circuit& c) {
  c.validate();
  if (c.qubits > kOracleQubitLimit)
    throw std::invalid_argument("ideal_distribution: circuit exceeds the oracle size limit");
  size_t dim = size_t(1) << c.qubits;
  Vec psi = Vec::Ones(1);
  for (int q = 0; q < c.qubits; ++q) {
    Vec s = c.preps[size_t(q)].state();
    Vec next(psi.size() * 2);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      next(2 * i) = psi(i) * s(0);
      next(2 * i + 1) = psi(i) * s(1);
    }
    psi = next;
  }
  for (const PlacedGate& g : c.ops) {
    if (g.is_identity_marker()) continue;
    psi = embed_full(g.matrix, g.qubits, c.qubits) * psi;
  }
  for (int q = 0; q < c.qubits; ++q) {
    Mat rot = c.measurements[size_t(q)].rotation();
    if ((rot - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() > 0) psi = embed_full(rot, {q}, c.qubits) * psi;
  }
  std::vector<double> probs(dim);
  for (size_t i = 0; i < dim; ++i) probs[i] = std::norm(psi(Eigen::Index(i)));
  return Distribution(c.qubits, std::move(probs));
}

double ideal_actual_vd(const Circuit& c, const NoiseModel& nm) {
  return tvd(ideal_distribution(c), execute_exact(c, nm).dist);
}

double averaged_ideal_actual_vd(const Circuit& input, const ProtocolEnsemble& e, const NoiseModel& nm) {
  return tvd(ideal_distribution(standard_form(input)), averaged_distribution(e, nm));
}

SoundnessVerdict verify_soundness(const Circuit& c, const NoiseModel& nm, const AccreditationConfig& cfg,
                                  int runs, uint64_t seed) {
  cfg.validate();
  ProtocolContext ctx = ProtocolContext::resolve(c, cfg.protocol, nm);
  SoundnessVerdict v;
  v.runs = runs;
  v.alpha = cfg.alpha;
  v.true_nu = averaged_ideal_actual_vd(c, ctx.target_ensemble, nm);
  v.records.resize(size_t(runs));

  Rng root(seed);
  std::vector<uint64_t> run_seeds(size_t(runs), 0);
  for (int r = 0; r < runs; ++r) run_seeds[size_t(r)] = root.derive(uint64_t(r)).seed();

  auto work = [&](int lo, int hi) {
    for (int r = lo; r < hi; ++r) {
      AccreditationConfig rc = cfg;
      rc.seed = run_seeds[size_t(r)];
      AccreditationReport rep = run_accreditation(ctx, nm, rc);
      v.records[size_t(r)] = {rep.bound, v.true_nu};
    }
  };
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    work(0, runs);
  } else {
    std::vector<std::future<void>> futs;
    int chunk = (runs + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      int lo = j * chunk, hi = std::min(runs, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, work, lo, hi));
    }
    for (auto& f : futs) f.get();
  }

  for (auto& [bound, nu] : v.records) {
    v.mean_bound += bound / double(runs);
    if (bound < nu - 1e-9) ++v.violations;
  }
  return v;
}

RobustnessCheck verify_robustness(const Circuit& c, const NoiseModel& a, const NoiseModel& b,
                                  int restarts, uint64_t seed) {
  a.validate_against(c);
  b.validate_against(c);
  RobustnessCheck out;
  Rng root(seed);
  size_t site_no = 0;
  for (const NoiseSite& s : enumerate_sites(c)) {
    ++site_no;
    const NoiseRule* ra = a.match(s);
    const NoiseRule* rb = b.match(s);
    if ((!ra || ra->channel.is_identity()) && (!rb || rb->channel.is_identity())) continue;
    Channel ca = ra ? ra->channel.build(int(s.qubits.size())) : Channel::identity(1 << s.qubits.size());
    Channel cb = rb ? rb->channel.build(int(s.qubits.size())) : Channel::identity(1 << s.qubits.size());
    ++out.noisy_sites;
    double d = diamond_distance_estimate(ca, cb, restarts, root.derive(site_no).seed());
    out.max_site_distance = std::max(out.max_site_distance, d);
  }
  out.lhs = tvd(execute_exact(c, a).dist, execute_exact(c, b).dist);
  out.rhs = double(out.noisy_sites) * out.max_site_distance;
  out.ok = out.lhs <= out.rhs + 1e-9;
  return out;
}

double stochastic_fire_probability(const Circuit& c, const NoiseModel& nm) {
  nm.validate_against(c);
  double survive = 1.0;
  for (const NoiseSite& s : enumerate_sites(c)) {
    const NoiseRule* rule = nm.match(s);
    if (!rule || rule->channel.is_identity()) continue;
    auto p = rule->channel.fire_probability(int(s.qubits.size()));
    if (!p) throw std::invalid_argument("site " + s.describe() + " has no probabilistic-unitary form");
    survive *= 1.0 - *p;
  }
  return 1.0 - survive;
}

std::optional<std::vector<int>> find_equivalent_end_fault(const Circuit& c, const NoiseModel& nm,
                                                          const Injection& fault,
                                                          const std::array<Mat, 4>& wire_frame,
                                                          double tol) {
  Distribution target = execute_exact(c, nm, {fault}).dist;
  int n = c.qubits;
  size_t combos = 1;
  for (int q = 0; q < n; ++q) combos *= 4;
  std::vector<int> pick(size_t(n), 0);
  for (size_t code = 0; code < combos; ++code) {
    size_t rem = code;
    for (int q = 0; q < n; ++q) {
      pick[size_t(q)] = int(rem % 4);
      rem /= 4;
    }
    std::vector<Injection> end;
    for (int q = 0; q < n; ++q)
      if (pick[size_t(q)] != 0) end.push_back(Injection::before_meas(q, wire_frame[size_t(pick[size_t(q)])]));
    Distribution d = execute_exact(c, nm, end).dist;
    if (tvd(d, target) <= tol) return pick;
  }
  return std::nullopt;
}

}  // namespace qacc
