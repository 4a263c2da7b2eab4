#include "qacc/twirl.hpp"

#include <cmath>

namespace qacc {

namespace {

// Decomposes a 4x4 matrix proportional to a Pauli string: w = coeff * (sa (x) sb).
struct PauliFactor {
  Pauli a, b;
  cxd coeff;
  double residual;
};

PauliFactor factor_two_qubit_pauli(const Mat& w) {
  PauliFactor best{Pauli::I, Pauli::I, 0.0, std::numeric_limits<double>::infinity()};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Mat s = kron(pauli_matrix(Pauli(a)), pauli_matrix(Pauli(b)));
      cxd coeff = (s.adjoint() * w).trace() / 4.0;
      double res = (w - coeff * s).cwiseAbs().maxCoeff();
      if (res < best.residual) best = {Pauli(a), Pauli(b), coeff, res};
    }
  }
  return best;
}

}  // namespace

bool is_clifford(const Mat& u4, double tol) {
  if (u4.rows() != 4 || u4.cols() != 4 || !is_unitary(u4, 1e-9)) return false;
  for (const PauliString& p : all_pauli_strings(2)) {
    Mat w = u4.adjoint() * p.matrix() * u4;
    PauliFactor f = factor_two_qubit_pauli(w);
    if (f.residual > tol || std::abs(std::abs(f.coeff) - 1.0) > tol) return false;
  }
  return true;
}

Mat TauDecomposition::gate() const {
  Mat tt = kron(tau1, tau2);
  return tt.adjoint() * m * tt;
}

Mat TauDecomposition::delta() const { return tau1.adjoint() * tau2; }

void TauDecomposition::validate(double tol) const {
  if (!is_unitary(tau1, 1e-9) || !is_unitary(tau2, 1e-9) || !is_unitary(m, 1e-9))
    throw std::invalid_argument("TauDecomposition: factors must be unitary");
  if (!is_clifford(m, tol)) throw std::invalid_argument("TauDecomposition: m is not Clifford");
  Vec zz = Vec::Zero(4);
  zz(0) = 1;
  Vec pp = Vec::Constant(4, cxd(0.5, 0));
  if (std::abs(std::abs((zz.adjoint() * m * zz)(0)) - 1.0) > tol)
    throw std::invalid_argument("TauDecomposition: m does not fix |00> up to phase");
  if (std::abs(std::abs((pp.adjoint() * m * pp)(0)) - 1.0) > tol)
    throw std::invalid_argument("TauDecomposition: m does not fix |++> up to phase");
}

std::array<Mat, 4> conjugated_paulis(const Mat& tau) {
  std::array<Mat, 4> out;
  for (int i = 0; i < 4; ++i) out[size_t(i)] = tau.adjoint() * pauli_matrix(Pauli(i)) * tau;
  return out;
}

std::vector<Mat> twirl_frame(const TauDecomposition& dec) {
  auto g1 = conjugated_paulis(dec.tau1);
  auto g2 = conjugated_paulis(dec.tau2);
  std::vector<Mat> frame;
  frame.reserve(16);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) frame.push_back(kron(g1[size_t(j)], g2[size_t(k)]));
  return frame;
}

PauliString push_pauli_through_clifford(const PauliString& p, const Mat& m, double tol) {
  if (p.size() != 2 || m.rows() != 4) throw std::invalid_argument("push: expects a two-qubit Pauli and a 4x4 gate");
  Mat w = m.adjoint() * p.matrix() * m;
  PauliFactor f = factor_two_qubit_pauli(w);
  if (f.residual > tol) throw std::invalid_argument("push: gate is not Clifford (no Pauli image)");
  PauliString out;
  out.letters = {f.a, f.b};
  cxd c = f.coeff;
  int pow = int(std::lround(std::arg(c) / (M_PI / 2)));
  out.phase_pow = ((pow % 4) + 4) % 4;
  if (std::abs(c - out.phase()) > tol) throw std::invalid_argument("push: image phase is not a fourth root of unity");
  return out;
}

std::pair<Mat, Mat> pushed_pair(Pauli j, Pauli k, const TauDecomposition& dec) {
  PauliString pjk;
  pjk.letters = {j, k};
  PauliString image = push_pauli_through_clifford(pjk, dec.m);
  Mat p_prime = dec.tau1.adjoint() * pauli_matrix(image.letters[0]) * dec.tau1;
  Mat q_prime = dec.tau2.adjoint() * pauli_matrix(image.letters[1]) * dec.tau2;
  return {p_prime, q_prime};
}

Channel generalized_twirl(const Channel& e, const std::vector<Mat>& lambda, double tol) {
  if (lambda.empty()) throw std::invalid_argument("generalized_twirl: empty frame");
  std::vector<Mat> ks;
  double w = 1.0 / double(lambda.size());
  for (const Mat& l : lambda) {
    if (l.rows() != e.dim()) throw std::invalid_argument("generalized_twirl: dimension mismatch");
    if ((l - l.adjoint()).cwiseAbs().maxCoeff() > tol)
      throw std::invalid_argument("generalized_twirl: frame element is not self-adjoint");
    for (const Mat& k : e.kraus()) ks.push_back(std::sqrt(w) * (l * k * l.adjoint()));
  }
  return Channel(std::move(ks));
}

bool check_lambda_summation(const std::vector<PauliString>& q, const std::vector<PauliString>& lambda) {
  for (const PauliString& g1 : q) {
    for (const PauliString& g2 : q) {
      int sum = 0;
      PauliString prod = g1 * g2;
      for (const PauliString& l : lambda) sum += pauli_commutator(prod, l);
      int expected = g1.same_letters(g2) ? int(lambda.size()) : 0;
      if (sum != expected) return false;
    }
  }
  return true;
}

bool is_unflippable(const std::vector<PauliString>& s) {
  for (const PauliString& p : s) {
    if (p.size() != 2) return false;
    if (p.is_identity()) continue;
    PauliString flipped;
    flipped.letters = {p.letters[1], p.letters[0]};
    for (const PauliString& q : s)
      if (q.same_letters(flipped)) return false;
  }
  return true;
}

const std::vector<PauliString>& flip_asymmetric_closure() {
  static const std::vector<PauliString> d = [] {
    std::vector<PauliString> out;
    for (const PauliString& p : all_pauli_strings(2))
      if (p.letters[0] != p.letters[1] || p.is_identity()) out.push_back(p);
    return out;
  }();
  return d;
}

TwirlInstruction tau_twirl_instruction(const TauDecomposition& dec, Pauli j, Pauli k) {
  TwirlInstruction ins;
  auto [p_prime, q_prime] = pushed_pair(j, k, dec);
  ins.before1 = p_prime;
  ins.before2 = q_prime;
  ins.after1 = dec.tau1.adjoint() * pauli_matrix(j) * dec.tau1;
  ins.after2 = dec.tau2.adjoint() * pauli_matrix(k) * dec.tau2;
  return ins;
}

TwirlInstruction tau_twirl_instruction(const TauDecomposition& dec, Rng& rng) {
  return tau_twirl_instruction(dec, Pauli(rng.uniform_int(4)), Pauli(rng.uniform_int(4)));
}

TwirlInstruction xy_twirl_instruction(Pauli p) {
  TwirlInstruction ins;
  const Mat& s = pauli_matrix(p);
  ins.before1 = s;
  ins.before2 = s;
  ins.after1 = s;
  ins.after2 = s;
  return ins;
}

TwirlInstruction xy_twirl_instruction(Rng& rng) { return xy_twirl_instruction(Pauli(rng.uniform_int(4))); }

std::pair<int, int> xy_conjugation_signs(const PauliString& p) {
  if (p.size() != 2) throw std::invalid_argument("xy_conjugation_signs: expects a two-qubit Pauli");
  int s1 = pauli_commutator(Pauli::X, p.letters[0]) * pauli_commutator(Pauli::X, p.letters[1]);
  int s2 = pauli_commutator(Pauli::Y, p.letters[0]) * pauli_commutator(Pauli::Y, p.letters[1]);
  return {s1, s2};
}

TwirlInstruction strong_xy_twirl_instruction(const PauliString& p, double t) {
  auto [s1, s2] = xy_conjugation_signs(p);
  TwirlInstruction ins;
  ins.before1 = pauli_matrix(p.letters[0]);
  ins.before2 = pauli_matrix(p.letters[1]);
  ins.after1 = ins.before1;
  ins.after2 = ins.before2;
  ins.replaced_gate = xy_gate(t, double(s1), double(s2));
  return ins;
}

std::pair<Mat, Mat> spam_twirl_layers(const Mat& tau, Rng& rng) {
  Mat z = tau.adjoint() * gate_z() * tau;
  Mat prep = rng.coin() ? z : Mat(gate_id2());
  Mat meas = rng.coin() ? z : Mat(gate_id2());
  return {prep, meas};
}

}  // namespace qacc
