#pragma once

#include "qacc/common.hpp"

namespace qacc {

Mat kron(const Mat& a, const Mat& b);

const Mat& gate_id2();
const Mat& gate_x();
const Mat& gate_y();
const Mat& gate_z();
const Mat& gate_h();
const Mat& gate_s();
const Mat& gate_sdg();
const Mat& gate_t();
const Mat& gate_tdg();
const Mat& gate_cnot();  // control on qubit 0
const Mat& gate_cz();
const Mat& gate_swap();
const Mat& gate_iswap();
const Mat& gate_sqrt_iswap();
const Mat& gate_fswap();

// s1 * X(x)X + s2 * Y(x)Y
Mat xy_hamiltonian(double s1, double s2);
// exp(-i t (s1 XX + s2 YY)), closed form
Mat xy_gate(double t, double s1 = 1.0, double s2 = 1.0);

bool is_unitary(const Mat& u, double tol = kTolAlg);

// min over a global phase of the max entrywise difference |a - e^{i phi} b|
double dist_up_to_phase(const Mat& a, const Mat& b);
bool equal_up_to_phase(const Mat& a, const Mat& b, double tol = 1e-9);

Mat random_unitary(int dim, Rng& rng);

}  // namespace qacc
