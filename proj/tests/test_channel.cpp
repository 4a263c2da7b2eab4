#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qacc/channel.hpp"
#include "qacc/distribution.hpp"

using namespace qacc;

namespace {

Mat random_density(int dim, Rng& rng) {
  Mat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cxd(rng.normal(), rng.normal());
  Mat rho = g * g.adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST_CASE("channel construction validates trace preservation") {
  CHECK_NOTHROW(Channel({gate_x()}));
  CHECK_THROWS_AS(Channel({0.5 * gate_x()}), std::invalid_argument);
  CHECK_THROWS_AS(Channel(std::vector<Mat>{}), std::invalid_argument);
}

TEST_CASE("conjugating the identity channel is a no-op") {
  Channel id = Channel::identity(2);
  Channel conj = id.conjugated(gate_h());
  Rng rng(3);
  Mat rho = random_density(2, rng);
  CHECK((conj.apply(rho) - rho).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("X flips conjugated by H become Z flips") {
  Channel xflip = Channel::pauli_probs({0.7, 0.3, 0, 0});
  Channel conj = xflip.conjugated(gate_h());
  Channel zflip = Channel::pauli_probs({0.7, 0, 0, 0.3});
  CHECK((conj.superoperator().m - zflip.superoperator().m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Kraus conjugation agrees with superoperator conjugation") {
  Rng rng(11);
  Channel e = Channel::random_cptp(4, 3, rng);
  Mat u = kron(gate_t(), gate_s());
  Mat su = Superoperator::conjugation(u).m;
  Mat expected = su * e.superoperator().m * su.adjoint();
  CHECK((e.conjugated(u).superoperator().m - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("mixing with weight one returns the first channel") {
  Rng rng(5);
  Channel a = Channel::random_cptp(2, 2, rng);
  Channel b = Channel::random_cptp(2, 2, rng);
  Channel m = mix_channels({1.0, 0.0}, {a, b});
  CHECK((m.superoperator().m - a.superoperator().m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("equal mix matches the superoperator average") {
  Channel xconj = Channel::unitary(gate_x());
  Channel id = Channel::identity(2);
  Channel m = mix_channels({0.5, 0.5}, {xconj, id});
  Mat expected = 0.5 * xconj.superoperator().m + 0.5 * id.superoperator().m;
  CHECK((m.superoperator().m - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("mixing rejects bad weights") {
  Channel id = Channel::identity(2);
  CHECK_THROWS_AS(mix_channels({-0.1, 1.1}, {id, id}), std::invalid_argument);
  CHECK_THROWS_AS(mix_channels({0.6, 0.6}, {id, id}), std::invalid_argument);
}

TEST_CASE("stochastic combination with zero rates is the identity error") {
  // two arbitrary 'error branches' mixed with rates R1 = R2 = 0
  Rng rng(7);
  Channel e1 = Channel::random_cptp(4, 2, rng);
  Channel e2 = Channel::random_cptp(4, 2, rng);
  Channel m = mix_channels({1.0, 0.0, 0.0}, {Channel::identity(4), e1, e2});
  CHECK((m.superoperator().m - Mat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("channel sanity: completeness and Choi positivity on random channels") {
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    int dim = (i % 2) ? 2 : 4;
    Channel e = Channel::random_cptp(dim, 1 + rng.uniform_int(4), rng);
    Mat s = Mat::Zero(dim, dim);
    for (const Mat& k : e.kraus()) s += k.adjoint() * k;
    CHECK((s - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::SelfAdjointEigenSolver<Mat> es(e.choi());
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("superoperator and Kraus application agree on random densities") {
  Rng rng(29);
  Channel e = Channel::random_cptp(4, 3, rng);
  Superoperator s = e.superoperator();
  for (int i = 0; i < 100; ++i) {
    Mat rho = random_density(4, rng);
    CHECK((e.apply(rho) - s.apply(rho)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("density matrix validation") {
  Mat ok(2, 2);
  ok << 0.5, 0, 0, 0.5;
  CHECK_NOTHROW(DensityMatrix::checked(ok));
  Mat bad(2, 2);
  bad << 0.9, 0.8, 0.8, 0.1;  // not positive semidefinite
  CHECK_THROWS_AS(DensityMatrix::checked(bad), std::invalid_argument);
}

TEST_CASE("tvd basics") {
  Distribution a(1, {1.0, 0.0});
  Distribution b(1, {0.0, 1.0});
  CHECK(tvd(a, a) == 0.0);
  CHECK(tvd(a, b) == 1.0);
  Distribution c(1, {0.75, 0.25});
  Distribution d(1, {0.5, 0.5});
  CHECK(tvd(c, d) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("tvd is a metric on random triples") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto random_dist = [&] {
      std::vector<double> p(8);
      double s = 0;
      for (double& v : p) {
        v = rng.uniform();
        s += v;
      }
      for (double& v : p) v /= s;
      return Distribution(3, p);
    };
    Distribution a = random_dist(), b = random_dist(), c = random_dist();
    CHECK(std::abs(tvd(a, b) - tvd(b, a)) < 1e-12);
    CHECK(tvd(a, c) <= tvd(a, b) + tvd(b, c) + 1e-12);
    CHECK(tvd(a, a) < 1e-12);
  }
}

TEST_CASE("diamond estimate is zero for equal channels") {
  Rng rng(37);
  Channel e = Channel::random_cptp(2, 2, rng);
  CHECK(diamond_distance_estimate(e, e, 3, 1) < 1e-9);
}

TEST_CASE("diamond estimate reaches the closed form for Pauli channels") {
  std::vector<double> p = {0.85, 0.1, 0.03, 0.02};
  std::vector<double> q = {0.9, 0.02, 0.05, 0.03};
  Channel a = Channel::pauli_probs(p);
  Channel b = Channel::pauli_probs(q);
  double exact = pauli_channel_diamond_distance(p, q);
  CHECK(exact == doctest::Approx(0.16).epsilon(1e-12));
  double est = diamond_distance_estimate(a, b, 8, 5);
  CHECK(est <= exact + 1e-7);
  CHECK(est >= exact - 1e-5);

  // dense-grid validation at d=2: the estimate dominates every grid state
  Rng rng(101);
  double grid_best = 0;
  for (int i = 0; i < 400; ++i) {
    Vec psi(4);
    for (int j = 0; j < 4; ++j) psi(j) = cxd(rng.normal(), rng.normal());
    psi.normalize();
    Mat rho = psi * psi.adjoint();
    Mat out = Mat::Zero(4, 4);
    for (const Mat& k : a.kraus()) {
      Mat ke = kron(k, Mat::Identity(2, 2));
      out += ke * rho * ke.adjoint();
    }
    for (const Mat& k : b.kraus()) {
      Mat ke = kron(k, Mat::Identity(2, 2));
      out -= ke * rho * ke.adjoint();
    }
    grid_best = std::max(grid_best, trace_norm(out));
  }
  CHECK(est >= grid_best - 1e-9);
}

TEST_CASE("depolarizing against itself composed with identity is zero") {
  Channel d = Channel::depolarizing(1, 0.1);
  Channel composed = Channel::identity(2).compose_after(d);
  CHECK(diamond_distance_estimate(d, composed, 4, 9) < 1e-9);
}

TEST_CASE("diamond estimate is nondecreasing in restarts") {
  Rng rng(43);
  Channel a = Channel::random_cptp(2, 3, rng);
  Channel b = Channel::random_cptp(2, 3, rng);
  double e1 = diamond_distance_estimate(a, b, 2, 7);
  double e2 = diamond_distance_estimate(a, b, 6, 7);
  CHECK(e2 >= e1 - 1e-15);
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(diamond_distance_estimate(Channel::identity(2), Channel::identity(4), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(Channel::identity(2).conjugated(gate_cnot()), std::invalid_argument);
}

TEST_CASE("sampling determinism and frequency") {
  Distribution d(1, {0.7, 0.3});
  Rng r1(99), r2(99);
  std::vector<uint64_t> s1, s2;
  int ones = 0;
  for (int i = 0; i < 10000; ++i) {
    s1.push_back(sample_outcome(d, r1));
    s2.push_back(sample_outcome(d, r2));
    ones += int(s1.back());
  }
  CHECK(s1 == s2);
  // 3 sigma Wilson-style band around 0.3
  double f = ones / 10000.0;
  CHECK(std::abs(f - 0.3) < 3 * std::sqrt(0.3 * 0.7 / 10000.0) + 1e-9);
}
