#pragma once

#include <optional>

#include "qacc/gates.hpp"
#include "qacc/pauli.hpp"

namespace qacc {

bool is_density_matrix(const Mat& rho, double tol_herm = kTolAlg, double tol_trace = kTolAlg,
                       double tol_psd = 1e-9);

struct DensityMatrix {
  Mat rho;
  static DensityMatrix checked(Mat m);
  int dim() const { return int(rho.rows()); }
};

// A superoperator on column-major vectorized density matrices:
// vec(K rho K^dag) = (conj(K) (x) K) vec(rho).
struct Superoperator {
  Mat m;
  int dim() const;
  Mat apply(const Mat& rho) const;
  static Superoperator conjugation(const Mat& u);
};

double superoperator_inner(const Superoperator& a, const Superoperator& b);

// CPTP map as a list of Kraus operators.
class Channel {
 public:
  explicit Channel(std::vector<Mat> kraus, bool validate = true);

  static Channel identity(int dim);
  static Channel unitary(const Mat& u);
  // (1-p) rho + p * uniform Pauli noise over the 4^n - 1 non-identity strings
  static Channel depolarizing(int qubits, double p);
  static Channel dephasing(double p);
  static Channel amplitude_damping(double gamma);
  static Channel pauli_probs(const std::vector<double>& probs_ixyz);  // single qubit
  // probabilistic mixture of unitaries (weights >= 0, summing to 1)
  static Channel mixture_of_unitaries(const std::vector<double>& w, const std::vector<Mat>& us);
  static Channel random_cptp(int dim, int n_kraus, Rng& rng);

  int dim() const { return dim_; }
  const std::vector<Mat>& kraus() const { return kraus_; }
  Mat apply(const Mat& rho) const;
  Superoperator superoperator() const;
  Mat choi() const;
  Channel conjugated(const Mat& u) const;  // Kraus -> u K u^dag
  Channel compose_after(const Channel& first) const;  // this ∘ first

 private:
  int dim_;
  std::vector<Mat> kraus_;
};

Channel mix_channels(const std::vector<double>& weights, const std::vector<Channel>& channels);

// Least-squares projection of a channel onto an orthogonal frame of unitary
// conjugations. The frame elements must be pairwise trace-orthogonal.
struct MixtureFit {
  std::vector<double> weights;
  double residual = 0.0;   // Frobenius norm of the unexplained part, normalized by dim
  double weight_sum = 0.0;
  double min_weight = 0.0;
  bool stochastic(double tol_neg = 1e-8, double tol_res = 1e-8) const {
    return min_weight >= -tol_neg && residual <= tol_res;
  }
};
MixtureFit project_onto_conjugations(const Superoperator& target, const std::vector<Mat>& frame);
MixtureFit project_onto_conjugations(const Channel& target, const std::vector<Mat>& frame);

double trace_norm(const Mat& hermitian);

// Empirical lower bound on the diamond norm ||a - b||_diamond via ascent over
// pure states on dim (x) dim; deterministic per seed, nondecreasing in restarts.
double diamond_distance_estimate(const Channel& a, const Channel& b, int restarts, uint64_t seed);

// Closed form for two Pauli channels with probability vectors p, q.
double pauli_channel_diamond_distance(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace qacc
