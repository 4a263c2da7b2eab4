#include "qacc/gates.hpp"

#include <cmath>

namespace qacc {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

namespace {
const cxd kI(0.0, 1.0);
Mat make(std::initializer_list<cxd> vals, int d) {
  Mat m(d, d);
  int i = 0;
  for (cxd v : vals) {
    m(i / d, i % d) = v;
    ++i;
  }
  return m;
}
}  // namespace

const Mat& gate_id2() { static const Mat m = make({1, 0, 0, 1}, 2); return m; }
const Mat& gate_x() { static const Mat m = make({0, 1, 1, 0}, 2); return m; }
const Mat& gate_y() { static const Mat m = make({0, -kI, kI, 0}, 2); return m; }
const Mat& gate_z() { static const Mat m = make({1, 0, 0, -1}, 2); return m; }
const Mat& gate_h() { static const Mat m = make({1, 1, 1, -1}, 2) / std::sqrt(2.0); return m; }
const Mat& gate_s() { static const Mat m = make({1, 0, 0, kI}, 2); return m; }
const Mat& gate_sdg() { static const Mat m = make({1, 0, 0, -kI}, 2); return m; }
const Mat& gate_t() { static const Mat m = make({1, 0, 0, std::polar(1.0, M_PI / 4)}, 2); return m; }
const Mat& gate_tdg() { static const Mat m = make({1, 0, 0, std::polar(1.0, -M_PI / 4)}, 2); return m; }

const Mat& gate_cnot() {
  static const Mat m = make({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}, 4);
  return m;
}
const Mat& gate_cz() {
  static const Mat m = make({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}, 4);
  return m;
}
const Mat& gate_swap() {
  static const Mat m = make({1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}, 4);
  return m;
}
const Mat& gate_iswap() { static const Mat m = xy_gate(-M_PI / 4); return m; }
const Mat& gate_sqrt_iswap() { static const Mat m = xy_gate(-M_PI / 8); return m; }
const Mat& gate_fswap() {
  static const Mat m = make({1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1}, 4);
  return m;
}

Mat xy_hamiltonian(double s1, double s2) {
  Mat h = Mat::Zero(4, 4);
  // XX is the anti-diagonal; YY is the anti-diagonal with signs (-,+,+,-).
  h(0, 3) = s1 - s2;
  h(3, 0) = s1 - s2;
  h(1, 2) = s1 + s2;
  h(2, 1) = s1 + s2;
  return h;
}

Mat xy_gate(double t, double s1, double s2) {
  // The Hamiltonian splits into two 2x2 X-type blocks: span{|00>,|11>} with
  // coupling (s1-s2) and span{|01>,|10>} with coupling (s1+s2).
  Mat u = Mat::Zero(4, 4);
  double a = (s1 - s2) * t;
  double b = (s1 + s2) * t;
  u(0, 0) = std::cos(a);
  u(3, 3) = std::cos(a);
  u(0, 3) = -kI * std::sin(a);
  u(3, 0) = -kI * std::sin(a);
  u(1, 1) = std::cos(b);
  u(2, 2) = std::cos(b);
  u(1, 2) = -kI * std::sin(b);
  u(2, 1) = -kI * std::sin(b);
  return u;
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Mat d = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

double dist_up_to_phase(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dist_up_to_phase: shape mismatch");
  auto residual = [&](cxd phase) { return (a - phase * b).cwiseAbs().maxCoeff(); };
  double best = residual(cxd(1, 0));
  cxd tr = (a.adjoint() * b).trace();
  if (std::abs(tr) > 1e-14) best = std::min(best, residual(std::conj(tr) / std::abs(tr)));
  // Align on the largest entry of b as a fallback anchor.
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) > 1e-14 && std::abs(a(r, c)) > 1e-14) {
    cxd ph = (a(r, c) / b(r, c));
    if (std::abs(ph) > 1e-14) best = std::min(best, residual(ph / std::abs(ph)));
  }
  return best;
}

bool equal_up_to_phase(const Mat& a, const Mat& b, double tol) { return dist_up_to_phase(a, b) <= tol; }

Mat random_unitary(int dim, Rng& rng) {
  Mat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cxd(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat rm = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    cxd d = rm(i, i);
    q.col(i) *= (std::abs(d) > 1e-14) ? d / std::abs(d) : cxd(1, 0);
  }
  return q;
}

}  // namespace qacc
