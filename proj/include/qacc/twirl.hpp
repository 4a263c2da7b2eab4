#pragma once

#include <optional>

#include "qacc/channel.hpp"

namespace qacc {

// True iff all 16 two-qubit Pauli conjugations u^dag p u land on Pauli strings
// up to phase.
bool is_clifford(const Mat& u4, double tol = 1e-9);

// Decomposition of a two-qubit gate as (tau1 (x) tau2)^dag M (tau1 (x) tau2)
// with M a Clifford fixing |00> and |++> up to phase.
struct TauDecomposition {
  Mat tau1;  // 2x2
  Mat tau2;  // 2x2
  Mat m;     // 4x4 Clifford

  Mat gate() const;            // the reconstructed two-qubit gate
  Mat delta() const;           // tau1^dag tau2
  void validate(double tol = 1e-9) const;  // throws on invariant failure
};

// {tau^dag P tau : P in {I,X,Y,Z}}, indexed by the Pauli letter.
std::array<Mat, 4> conjugated_paulis(const Mat& tau);

// The 16-element conjugated two-qubit frame of a decomposition, index j*4+k.
std::vector<Mat> twirl_frame(const TauDecomposition& dec);

// Pushes a two-qubit Pauli string through a Clifford: m^dag p m = phase * result.
PauliString push_pauli_through_clifford(const PauliString& p, const Mat& m, double tol = 1e-9);

// The pair of single-qubit gates that a frame element (indexed by Pauli
// letters j, k) maps to when pushed through the decomposed gate.
std::pair<Mat, Mat> pushed_pair(Pauli j, Pauli k, const TauDecomposition& dec);

// (1/|Lambda|) sum_l l e l^dag for self-adjoint unitaries l.
Channel generalized_twirl(const Channel& e, const std::vector<Mat>& lambda, double tol = kTolAlg);

// sum_{l in Lambda} xi(g1 g2, l) == delta_{g1,g2} |Lambda| for all pairs in q.
bool check_lambda_summation(const std::vector<PauliString>& q, const std::vector<PauliString>& lambda);

// No element's qubit-swapped partner may also be present (I(x)I exempted).
bool is_unflippable(const std::vector<PauliString>& s);

// The 13 two-qubit strings closed over products of unflippable-set pairs:
// everything except XX, YY, ZZ.
const std::vector<PauliString>& flip_asymmetric_closure();

// Gates wrapped around (or substituted for) one instance of a two-qubit gate.
// `before` is applied first, then the (possibly replaced) gate, then `after`.
struct TwirlInstruction {
  Mat before1, before2;  // single-qubit gates, by gate qubit slot
  Mat after1, after2;
  std::optional<Mat> replaced_gate;  // 4x4; used only by the strong XY twirl
};

TwirlInstruction tau_twirl_instruction(const TauDecomposition& dec, Pauli j, Pauli k);
TwirlInstruction tau_twirl_instruction(const TauDecomposition& dec, Rng& rng);

TwirlInstruction xy_twirl_instruction(Pauli p);
TwirlInstruction xy_twirl_instruction(Rng& rng);

// Sign pair (s1, s2) such that p (s1 XX + s2 YY) p = XX + YY for a two-qubit
// Pauli p; component-wise commutator signs.
std::pair<int, int> xy_conjugation_signs(const PauliString& p);
TwirlInstruction strong_xy_twirl_instruction(const PauliString& p, double t);

// Prep- and measurement-side dressing for SPAM twirling of a qubit prepared
// in tau^dag|0> and measured in the {tau^dag|0>, tau^dag|1>} basis: each layer
// is tau^dag Z tau with probability 0.5, else identity.
std::pair<Mat, Mat> spam_twirl_layers(const Mat& tau, Rng& rng);

}  // namespace qacc
