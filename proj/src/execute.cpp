#include "qacc/execute.hpp"

#include <algorithm>
#include <cmath>

#include "qacc/twirl.hpp"

namespace qacc {

Injection Injection::after_op(int op_index, std::vector<int> qubits, Mat u) {
  return {Where::after_op, op_index, std::move(qubits), std::move(u)};
}
Injection Injection::after_prep(int qubit, Mat u) { return {Where::after_prep, -1, {qubit}, std::move(u)}; }
Injection Injection::before_meas(int qubit, Mat u) { return {Where::before_meas, -1, {qubit}, std::move(u)}; }

namespace {

// Dense density matrix over system qubits plus lazily allocated environment
// qubits; qubit 0 is the most significant index bit, ancillas sit below the
// system block.
class DensityState {
 public:
  explicit DensityState(const Circuit& c) : sys_(c.qubits), total_(c.qubits) {
    Vec psi = Vec::Ones(1);
    for (int q = 0; q < c.qubits; ++q) {
      Vec s = c.preps[size_t(q)].state();
      Vec next(psi.size() * 2);
      next << psi * s(0), psi * s(1);
      // interleave so qubit order matches bit order
      Vec fixed(psi.size() * 2);
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        fixed(2 * i) = psi(i) * s(0);
        fixed(2 * i + 1) = psi(i) * s(1);
      }
      psi = fixed;
    }
    rho_ = psi * psi.adjoint();
  }

  int system_qubits() const { return sys_; }

  void apply_unitary(const Mat& u, const std::vector<int>& qubits) {
    apply_left(u, qubits);
    apply_right(u.adjoint(), qubits);
  }

  void apply_channel(const Channel& ch, std::vector<int> qubits, int ancillas) {
    for (int a = 0; a < ancillas; ++a) {
      grow();
      qubits.push_back(total_ - 1);
    }
    if (int(1) << qubits.size() != ch.dim()) throw std::invalid_argument("channel dimension mismatch at site");
    Mat acc = Mat::Zero(rho_.rows(), rho_.cols());
    Mat base = rho_;
    for (const Mat& k : ch.kraus()) {
      rho_ = base;
      apply_left(k, qubits);
      apply_right(k.adjoint(), qubits);
      acc += rho_;
    }
    rho_ = std::move(acc);
  }

  // Outcome probabilities over the system qubits (environment traced out).
  std::vector<double> diagonal_probs() const {
    size_t sys_dim = size_t(1) << sys_;
    size_t anc_dim = size_t(1) << (total_ - sys_);
    std::vector<double> p(sys_dim, 0.0);
    for (size_t s = 0; s < sys_dim; ++s)
      for (size_t a = 0; a < anc_dim; ++a) p[s] += std::real(rho_(Eigen::Index(s * anc_dim + a), Eigen::Index(s * anc_dim + a)));
    return p;
  }

  double trace() const { return std::real(rho_.trace()); }

  const Mat& rho() const { return rho_; }
  void set_rho(Mat rho) {
    if (rho.rows() != rho_.rows()) throw std::invalid_argument("set_rho: dimension changed");
    rho_ = std::move(rho);
  }

 private:
  void grow() {
    Mat next = Mat::Zero(rho_.rows() * 2, rho_.cols() * 2);
    for (Eigen::Index r = 0; r < rho_.rows(); ++r)
      for (Eigen::Index c = 0; c < rho_.cols(); ++c) next(2 * r, 2 * c) = rho_(r, c);
    rho_ = std::move(next);
    ++total_;
    if (total_ > 14) throw std::runtime_error("too many environment qubits for dense simulation");
  }

  struct IndexPlan {
    std::vector<uint64_t> offsets;  // sub-index -> OR of qubit bits
    std::vector<uint64_t> rest;     // base indices with gate bits clear
  };

  IndexPlan plan(const std::vector<int>& qubits) const {
    IndexPlan p;
    size_t k = qubits.size();
    uint64_t mask = 0;
    std::vector<uint64_t> bits(k);
    for (size_t i = 0; i < k; ++i) {
      bits[i] = uint64_t(1) << (total_ - 1 - qubits[i]);
      mask |= bits[i];
    }
    p.offsets.assign(size_t(1) << k, 0);
    for (size_t a = 0; a < p.offsets.size(); ++a)
      for (size_t i = 0; i < k; ++i)
        if (a & (size_t(1) << (k - 1 - i))) p.offsets[a] |= bits[i];
    uint64_t dim = uint64_t(1) << total_;
    for (uint64_t r = 0; r < dim; ++r)
      if (!(r & mask)) p.rest.push_back(r);
    return p;
  }

  void apply_left(const Mat& u, const std::vector<int>& qubits) {
    IndexPlan p = plan(qubits);
    size_t m = p.offsets.size();
    Vec in(m), out(m);
    for (Eigen::Index col = 0; col < rho_.cols(); ++col) {
      for (uint64_t r : p.rest) {
        for (size_t a = 0; a < m; ++a) in(Eigen::Index(a)) = rho_(Eigen::Index(r | p.offsets[a]), col);
        out = u * in;
        for (size_t a = 0; a < m; ++a) rho_(Eigen::Index(r | p.offsets[a]), col) = out(Eigen::Index(a));
      }
    }
  }

  void apply_right(const Mat& v, const std::vector<int>& qubits) {
    IndexPlan p = plan(qubits);
    size_t m = p.offsets.size();
    Eigen::RowVectorXcd in(m), out(m);
    for (Eigen::Index row = 0; row < rho_.rows(); ++row) {
      for (uint64_t r : p.rest) {
        for (size_t a = 0; a < m; ++a) in(Eigen::Index(a)) = rho_(row, Eigen::Index(r | p.offsets[a]));
        out = in * v;
        for (size_t a = 0; a < m; ++a) rho_(row, Eigen::Index(r | p.offsets[a])) = out(Eigen::Index(a));
      }
    }
  }

  int sys_;
  int total_;
  Mat rho_;
};

struct SitePlan {
  std::vector<const NoiseRule*> prep_rules;            // per qubit
  std::vector<const NoiseRule*> meas_rules;            // per qubit
  std::vector<const NoiseRule*> op_rules;              // per op index (may be null)
  std::vector<Channel> prep_ch, meas_ch;               // built, identity skipped via null rule
  std::vector<std::optional<Channel>> op_ch;
};

SitePlan plan_sites(const Circuit& c, const NoiseModel& nm) {
  SitePlan sp;
  sp.prep_rules.assign(size_t(c.qubits), nullptr);
  sp.meas_rules.assign(size_t(c.qubits), nullptr);
  sp.op_rules.assign(c.ops.size(), nullptr);
  sp.op_ch.resize(c.ops.size());
  for (const NoiseSite& s : enumerate_sites(c)) {
    const NoiseRule* rule = nm.match(s);
    if (!rule || rule->channel.is_identity()) continue;
    Channel ch = rule->channel.build(int(s.qubits.size()));
    switch (s.kind) {
      case SiteKind::prep:
        sp.prep_rules[size_t(s.ordinal)] = rule;
        sp.prep_ch.push_back(std::move(ch));
        break;
      case SiteKind::meas:
        sp.meas_rules[size_t(s.ordinal)] = rule;
        sp.meas_ch.push_back(std::move(ch));
        break;
      default:
        sp.op_rules[size_t(s.op_index)] = rule;
        sp.op_ch[size_t(s.op_index)] = std::move(ch);
        break;
    }
  }
  // rebuild prep/meas channels aligned by qubit for direct lookup
  sp.prep_ch.clear();
  sp.meas_ch.clear();
  for (int q = 0; q < c.qubits; ++q) {
    sp.prep_ch.push_back(sp.prep_rules[size_t(q)] ? sp.prep_rules[size_t(q)]->channel.build(1)
                                                  : Channel::identity(2));
    sp.meas_ch.push_back(sp.meas_rules[size_t(q)] ? sp.meas_rules[size_t(q)]->channel.build(1)
                                                  : Channel::identity(2));
  }
  return sp;
}

void apply_injections(DensityState& st, const std::vector<Injection>& injections, Injection::Where where,
                      int op_index, int qubit) {
  for (const Injection& inj : injections) {
    if (inj.where != where) continue;
    if (where == Injection::Where::after_op && inj.op_index != op_index) continue;
    if (where != Injection::Where::after_op && inj.qubits.size() == 1 && inj.qubits[0] != qubit) continue;
    st.apply_unitary(inj.u, inj.qubits);
  }
}

}  // namespace

ExecutionResult execute_exact(const Circuit& c, const NoiseModel& nm, const std::vector<Injection>& injections) {
  c.validate();
  nm.validate_against(c);
  SitePlan sp = plan_sites(c, nm);
  DensityState st(c);
  std::vector<std::string> transcript;

  for (int q = 0; q < c.qubits; ++q) {
    const NoiseRule* rule = sp.prep_rules[size_t(q)];
    if (rule) {
      st.apply_channel(sp.prep_ch[size_t(q)], {q}, rule->channel.ancillas);
      transcript.push_back("prep[" + std::to_string(q) + "] <- " + rule->channel.name);
    }
    apply_injections(st, injections, Injection::Where::after_prep, -1, q);
  }

  for (size_t i = 0; i < c.ops.size(); ++i) {
    const PlacedGate& g = c.ops[i];
    st.apply_unitary(g.matrix, g.qubits);
    const NoiseRule* rule = sp.op_rules[i];
    if (rule) {
      st.apply_channel(*sp.op_ch[i], g.qubits, rule->channel.ancillas);
      transcript.push_back((g.is_two_qubit() ? "gate2q@op" : "slot1q@op") + std::to_string(i) + " <- " +
                           rule->channel.name);
    }
    apply_injections(st, injections, Injection::Where::after_op, int(i), -1);
  }

  for (int q = 0; q < c.qubits; ++q) apply_injections(st, injections, Injection::Where::before_meas, -1, q);

  for (int q = 0; q < c.qubits; ++q) {
    const NoiseRule* rule = sp.meas_rules[size_t(q)];
    if (rule) {
      st.apply_channel(sp.meas_ch[size_t(q)], {q}, rule->channel.ancillas);
      transcript.push_back("meas[" + std::to_string(q) + "] <- " + rule->channel.name);
    }
  }
  for (int q = 0; q < c.qubits; ++q) {
    Mat rot = c.measurements[size_t(q)].rotation();
    if ((rot - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() > 0) st.apply_unitary(rot, {q});
  }

  double tr = st.trace();
  if (std::abs(tr - 1.0) > 1e-9) throw std::runtime_error("execution lost trace: " + std::to_string(tr));
  std::vector<double> probs = st.diagonal_probs();
  for (double& p : probs) p = std::max(p, 0.0);
  return {Distribution(c.qubits, std::move(probs)), std::move(transcript)};
}

std::vector<uint64_t> sample(const Circuit& c, const NoiseModel& nm, int shots, uint64_t seed) {
  ExecutionResult res = execute_exact(c, nm);
  Rng rng(seed);
  std::vector<uint64_t> out;
  out.reserve(size_t(shots));
  for (int s = 0; s < shots; ++s) out.push_back(sample_outcome(res.dist, rng));
  return out;
}

namespace {

// Walks the ensemble once per branch assignment, averaging contiguous draw
// variables segment by segment; exact by linearity of the evolution in each
// factor. Environment (ancilla) sites are not supported here.
class AveragedWalker {
 public:
  AveragedWalker(const ProtocolEnsemble& e, const NoiseModel& nm) : e_(e), sp_(plan_sites(e.skeleton, nm)) {
    for (const NoiseRule& r : nm.rules)
      if (r.channel.ancillas > 0)
        throw std::invalid_argument("averaged execution does not support environment sites");
    for (size_t v = 0; v < e.vars.size(); ++v)
      if (e.vars[v].branching) branch_vars_.push_back(int(v));
  }

  Distribution run() {
    size_t branches = 1;
    for (int v : branch_vars_) branches *= size_t(e_.vars[size_t(v)].outcomes);
    const Circuit& skel = e_.skeleton;
    size_t dim = size_t(1) << skel.qubits;
    Mat acc = Mat::Zero(Eigen::Index(dim), Eigen::Index(dim));

    std::vector<int> assignment(e_.vars.size(), 0);
    for (size_t b = 0; b < branches; ++b) {
      size_t rem = b;
      for (int v : branch_vars_) {
        assignment[size_t(v)] = int(rem % size_t(e_.vars[size_t(v)].outcomes));
        rem /= size_t(e_.vars[size_t(v)].outcomes);
      }
      acc += run_branch(assignment) / double(branches);
    }

    // measurement-side noise and rotations on the averaged state
    DensityState st(skel);
    st.set_rho(std::move(acc));
    for (int q = 0; q < skel.qubits; ++q) {
      const NoiseRule* rule = sp_.meas_rules[size_t(q)];
      if (rule) st.apply_channel(sp_.meas_ch[size_t(q)], {q}, 0);
    }
    for (int q = 0; q < skel.qubits; ++q) {
      Mat rot = skel.measurements[size_t(q)].rotation();
      if ((rot - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() > 0) st.apply_unitary(rot, {q});
    }
    std::vector<double> probs = st.diagonal_probs();
    for (double& p : probs) p = std::max(p, 0.0);
    return Distribution(skel.qubits, std::move(probs));
  }

 private:
  Mat run_branch(std::vector<int>& assignment) {
    const Circuit& skel = e_.skeleton;
    DensityState st(skel);
    for (int q = 0; q < skel.qubits; ++q) {
      const NoiseRule* rule = sp_.prep_rules[size_t(q)];
      if (rule) st.apply_channel(sp_.prep_ch[size_t(q)], {q}, 0);
    }
    size_t i = 0;
    while (i < e_.slots.size()) {
      int v = e_.slots[i].var;
      if (v >= 0 && !e_.vars[size_t(v)].branching) {
        const EnsembleVar& var = e_.vars[size_t(v)];
        int n = var.outcomes;
        Mat base = st.rho();
        Mat sum = Mat::Zero(base.rows(), base.cols());
        for (int o = 0; o < n; ++o) {
          assignment[size_t(v)] = o;
          st.set_rho(base);
          for (int j = var.lo; j <= var.hi; ++j) apply_slot(st, size_t(j), assignment);
          sum += st.rho();
        }
        assignment[size_t(v)] = 0;
        st.set_rho(sum / double(n));
        i = size_t(var.hi) + 1;
      } else {
        apply_slot(st, i, assignment);
        ++i;
      }
    }
    return st.rho();
  }

  void apply_slot(DensityState& st, size_t i, const std::vector<int>& assignment) {
    const PlacedGate& g = e_.slots[i].resolve(assignment);
    st.apply_unitary(g.matrix, g.qubits);
    const NoiseRule* rule = sp_.op_rules[i];
    if (rule) st.apply_channel(*sp_.op_ch[i], g.qubits, 0);
  }

  const ProtocolEnsemble& e_;
  SitePlan sp_;
  std::vector<int> branch_vars_;
};

}  // namespace

Distribution averaged_distribution(const ProtocolEnsemble& e, const NoiseModel& nm) {
  nm.validate_against(e.skeleton);
  AveragedWalker walker(e, nm);
  return walker.run();
}

Distribution averaged_distribution_enumerated(const ProtocolEnsemble& e, const NoiseModel& nm,
                                              size_t max_assignments) {
  size_t total = 1;
  for (const EnsembleVar& v : e.vars) {
    total *= size_t(v.outcomes);
    if (total > max_assignments)
      throw std::invalid_argument("averaged_distribution_enumerated: too many draw combinations");
  }
  size_t dim = size_t(1) << e.skeleton.qubits;
  std::vector<double> acc(dim, 0.0);
  std::vector<int> assignment(e.vars.size(), 0);
  for (size_t code = 0; code < total; ++code) {
    size_t rem = code;
    for (size_t v = 0; v < e.vars.size(); ++v) {
      assignment[v] = int(rem % size_t(e.vars[v].outcomes));
      rem /= size_t(e.vars[v].outcomes);
    }
    ExecutionResult res = execute_exact(e.realize(assignment), nm);
    for (size_t i = 0; i < dim; ++i) acc[i] += res.dist.probs()[i] / double(total);
  }
  return Distribution(e.skeleton.qubits, std::move(acc));
}

StochasticEquivalent stochastic_pauli_equivalent(const ProtocolEnsemble& e, const NoiseModel& nm,
                                                 const std::vector<Mat>& frame) {
  if (e.gate_dressing_frame.empty())
    throw std::invalid_argument("stochastic_pauli_equivalent: ensemble has no dressing frame");
  StochasticEquivalent out{averaged_distribution(e, nm), Distribution(e.skeleton.qubits, {}), {}, true, 0.0};

  // Twirl each two-qubit site's channel by the dressing family, project onto
  // the requested conjugation frame, and rebuild a noise model that carries
  // the twirled channels with the dressings switched off.
  NoiseModel replaced = nm;
  auto sites = enumerate_sites(e.skeleton);
  for (const NoiseSite& s : sites) {
    if (s.kind != SiteKind::gate2q) continue;
    const NoiseRule* rule = nm.match(s);
    Channel raw = rule ? rule->channel.build(int(s.qubits.size())) : Channel::identity(4);
    if (rule && rule->channel.ancillas > 0)
      throw std::invalid_argument("stochastic extraction does not support environment sites");
    Channel twirled = generalized_twirl(raw, e.gate_dressing_frame);
    out.site_fits.push_back(project_onto_conjugations(twirled, frame));
    if (!out.site_fits.back().stochastic()) out.extraction_ok = false;
    NoiseRule nr;
    nr.kind = SiteKind::gate2q;
    nr.ordinal = s.ordinal;
    nr.channel.name = "kraus";
    nr.channel.matrices = twirled.kraus();
    replaced.rules.push_back(std::move(nr));
  }

  ProtocolEnsemble undressed = e;
  for (EnsembleVar& v : undressed.vars)
    if (v.role == VarRole::gate_twirl && !v.branching) v.outcomes = 1;  // pin dressings to the identity draw
  out.stochastic_model = averaged_distribution(undressed, replaced);
  out.distribution_gap = tvd(out.averaged, out.stochastic_model);
  return out;
}

}  // namespace qacc
