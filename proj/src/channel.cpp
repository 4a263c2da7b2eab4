#include "qacc/channel.hpp"

#include <cmath>

#include "qacc/optimize.hpp"

namespace qacc {

bool is_density_matrix(const Mat& rho, double tol_herm, double tol_trace, double tol_psd) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol_herm) return false;
  if (std::abs(rho.trace() - cxd(1, 0)) > tol_trace) return false;
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  return es.eigenvalues().minCoeff() >= -tol_psd;
}

DensityMatrix DensityMatrix::checked(Mat m) {
  if (!is_density_matrix(m)) throw std::invalid_argument("not a density matrix");
  return DensityMatrix{std::move(m)};
}

int Superoperator::dim() const { return int(std::lround(std::sqrt(double(m.rows())))); }

Mat Superoperator::apply(const Mat& rho) const {
  int d = dim();
  Vec v = Eigen::Map<const Vec>(rho.data(), d * d);
  Vec w = m * v;
  return Eigen::Map<const Mat>(w.data(), d, d);
}

Superoperator Superoperator::conjugation(const Mat& u) { return {kron(u.conjugate(), u)}; }

Channel::Channel(std::vector<Mat> kraus, bool validate) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("Channel: empty Kraus list");
  dim_ = int(kraus_[0].rows());
  for (const Mat& k : kraus_)
    if (k.rows() != dim_ || k.cols() != dim_) throw std::invalid_argument("Channel: inconsistent Kraus shapes");
  if (validate) {
    Mat s = Mat::Zero(dim_, dim_);
    for (const Mat& k : kraus_) s += k.adjoint() * k;
    if ((s - Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff() > kTolAlg)
      throw std::invalid_argument("Channel: Kraus operators are not trace preserving");
  }
}

Channel Channel::identity(int dim) { return Channel({Mat::Identity(dim, dim)}, false); }

Channel Channel::unitary(const Mat& u) {
  if (!is_unitary(u)) throw std::invalid_argument("Channel::unitary: matrix is not unitary");
  return Channel({u}, false);
}

Channel Channel::depolarizing(int qubits, double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("depolarizing: p out of range");
  auto strings = all_pauli_strings(qubits);
  std::vector<Mat> ks;
  ks.reserve(strings.size());
  double d2 = double(strings.size());
  for (size_t i = 0; i < strings.size(); ++i) {
    double w = (i == 0) ? 1.0 - p * (d2 - 1) / d2 : p / d2;
    ks.push_back(std::sqrt(w) * strings[i].matrix());
  }
  return Channel(std::move(ks));
}

Channel Channel::dephasing(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("dephasing: p out of range");
  return Channel({std::sqrt(1 - p) * gate_id2(), std::sqrt(p) * gate_z()});
}

Channel Channel::amplitude_damping(double gamma) {
  if (gamma < 0 || gamma > 1) throw std::invalid_argument("amplitude_damping: gamma out of range");
  Mat k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return Channel({k0, k1});
}

Channel Channel::pauli_probs(const std::vector<double>& probs) {
  if (probs.size() != 4) throw std::invalid_argument("pauli_probs: expected 4 probabilities");
  std::vector<Mat> us = {gate_id2(), gate_x(), gate_y(), gate_z()};
  return mixture_of_unitaries(probs, us);
}

Channel Channel::mixture_of_unitaries(const std::vector<double>& w, const std::vector<Mat>& us) {
  if (w.size() != us.size()) throw std::invalid_argument("mixture_of_unitaries: size mismatch");
  double sum = 0;
  std::vector<Mat> ks;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < -1e-12) throw std::invalid_argument("mixture_of_unitaries: negative weight");
    sum += w[i];
    if (w[i] > 0) ks.push_back(std::sqrt(w[i]) * us[i]);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("mixture_of_unitaries: weights must sum to 1");
  return Channel(std::move(ks));
}

Channel Channel::random_cptp(int dim, int n_kraus, Rng& rng) {
  std::vector<Mat> gs{size_t(n_kraus), Mat()};
  Mat s = Mat::Zero(dim, dim);
  for (Mat& g : gs) {
    g = Mat(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) g(r, c) = cxd(rng.normal(), rng.normal());
    s += g.adjoint() * g;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  Mat inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                 es.eigenvectors().adjoint();
  for (Mat& g : gs) g = g * inv_sqrt;
  return Channel(std::move(gs));
}

Mat Channel::apply(const Mat& rho) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (const Mat& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

Superoperator Channel::superoperator() const {
  Mat s = Mat::Zero(dim_ * dim_, dim_ * dim_);
  for (const Mat& k : kraus_) s += kron(k.conjugate(), k);
  return {s};
}

Mat Channel::choi() const {
  // Choi = sum_k vec(K) vec(K)^dag with column-major vectorization.
  Mat c = Mat::Zero(dim_ * dim_, dim_ * dim_);
  for (const Mat& k : kraus_) {
    Vec v = Eigen::Map<const Vec>(k.data(), dim_ * dim_);
    c += v * v.adjoint();
  }
  return c;
}

Channel Channel::conjugated(const Mat& u) const {
  if (u.rows() != dim_) throw std::invalid_argument("conjugated: dimension mismatch");
  if (!is_unitary(u)) throw std::invalid_argument("conjugated: not unitary");
  std::vector<Mat> ks;
  ks.reserve(kraus_.size());
  for (const Mat& k : kraus_) ks.push_back(u * k * u.adjoint());
  return Channel(std::move(ks), false);
}

Channel Channel::compose_after(const Channel& first) const {
  if (first.dim_ != dim_) throw std::invalid_argument("compose_after: dimension mismatch");
  std::vector<Mat> ks;
  ks.reserve(kraus_.size() * first.kraus_.size());
  for (const Mat& a : kraus_)
    for (const Mat& b : first.kraus_) ks.push_back(a * b);
  return Channel(std::move(ks), false);
}

Channel mix_channels(const std::vector<double>& weights, const std::vector<Channel>& channels) {
  if (weights.size() != channels.size() || channels.empty())
    throw std::invalid_argument("mix_channels: size mismatch");
  int dim = channels[0].dim();
  double sum = 0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("mix_channels: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("mix_channels: weights must sum to 1");
  std::vector<Mat> ks;
  for (size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].dim() != dim) throw std::invalid_argument("mix_channels: dimension mismatch");
    if (weights[i] == 0) continue;
    for (const Mat& k : channels[i].kraus()) ks.push_back(std::sqrt(weights[i]) * k);
  }
  return Channel(std::move(ks));
}

double superoperator_inner(const Superoperator& a, const Superoperator& b) {
  return std::real((a.m.adjoint() * b.m).trace());
}

MixtureFit project_onto_conjugations(const Superoperator& target, const std::vector<Mat>& frame) {
  MixtureFit fit;
  Mat rem = target.m;
  fit.min_weight = std::numeric_limits<double>::infinity();
  for (const Mat& f : frame) {
    Superoperator sf = Superoperator::conjugation(f);
    double denom = std::real((sf.m.adjoint() * sf.m).trace());
    double w = std::real((sf.m.adjoint() * target.m).trace()) / denom;
    fit.weights.push_back(w);
    fit.weight_sum += w;
    fit.min_weight = std::min(fit.min_weight, w);
    rem -= w * sf.m;
  }
  fit.residual = rem.norm() / double(target.dim());
  return fit;
}

MixtureFit project_onto_conjugations(const Channel& target, const std::vector<Mat>& frame) {
  return project_onto_conjugations(target.superoperator(), frame);
}

double trace_norm(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
  return es.eigenvalues().cwiseAbs().sum();
}

namespace {

// ||sum_k A_k |psi><psi| A_k^dag - sum_k B_k |psi><psi| B_k^dag||_1 for a pure
// state given as 2*d^2 reals; the A/B lists are the channel Kraus operators
// already extended by an identity ancilla.
double diamond_objective(const std::vector<Mat>& ka, const std::vector<Mat>& kb, int n,
                         const std::vector<double>& x) {
  Vec psi(n);
  double nrm = 0;
  for (int i = 0; i < n; ++i) {
    psi(i) = cxd(x[size_t(2 * i)], x[size_t(2 * i + 1)]);
    nrm += std::norm(psi(i));
  }
  if (nrm < 1e-12) return 0.0;
  psi /= std::sqrt(nrm);
  Mat out = Mat::Zero(n, n);
  for (const Mat& k : ka) {
    Vec v = k * psi;
    out += v * v.adjoint();
  }
  for (const Mat& k : kb) {
    Vec v = k * psi;
    out -= v * v.adjoint();
  }
  return trace_norm(out);
}

}  // namespace

double diamond_distance_estimate(const Channel& a, const Channel& b, int restarts, uint64_t seed) {
  if (a.dim() != b.dim()) throw std::invalid_argument("diamond_distance_estimate: dimension mismatch");
  int d = a.dim();
  int n = d * d;
  Mat eye = Mat::Identity(d, d);
  std::vector<Mat> ka, kb;
  for (const Mat& k : a.kraus()) ka.push_back(kron(k, eye));
  for (const Mat& k : b.kraus()) kb.push_back(kron(k, eye));
  size_t nparam = size_t(2 * n);
  double best = 0.0;
  Rng root(seed);
  for (int r = 0; r < restarts; ++r) {
    Rng rng = root.derive(uint64_t(r));
    std::vector<double> x0(nparam);
    if (r == 0) {
      // maximally entangled start
      for (int i = 0; i < d; ++i) x0[size_t(2 * (i * d + i))] = 1.0;
    } else {
      for (double& v : x0) v = rng.normal();
    }
    auto f = [&](const std::vector<double>& x) { return -diamond_objective(ka, kb, n, x); };
    NelderMeadResult res = nelder_mead(f, x0, 0.35, 420);
    best = std::max(best, -res.value);
  }
  return best;
}

double pauli_channel_diamond_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("pauli_channel_diamond_distance: size mismatch");
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return s;
}

}  // namespace qacc
