#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qacc/pauli.hpp"

using namespace qacc;

TEST_CASE("single letter products carry the right phases") {
  auto xy = PauliString::from_label("X") * PauliString::from_label("Y");
  CHECK(xy.label() == "iZ");
  auto yx = PauliString::from_label("Y") * PauliString::from_label("X");
  CHECK(yx.label() == "-iZ");
  auto zz = PauliString::from_label("Z") * PauliString::from_label("Z");
  CHECK(zz.label() == "I");
}

TEST_CASE("anticommuting single-qubit pair") { CHECK(pauli_commutator(Pauli::X, Pauli::Z) == -1); }

TEST_CASE("two anticommutations compose to +1") {
  CHECK(pauli_commutator(PauliString::from_label("XX"), PauliString::from_label("ZZ")) == 1);
}

TEST_CASE("commutator table matches the matrix-level check on two qubits") {
  auto strings = all_pauli_strings(2);
  for (const PauliString& a : strings) {
    for (const PauliString& b : strings) {
      Mat am = a.matrix(), bm = b.matrix();
      Mat lhs = am * bm * am.inverse() * bm.inverse();
      // a b a^-1 b^-1 must be +-I; the sign is the commutator
      double to_plus = (lhs - Mat::Identity(4, 4)).cwiseAbs().maxCoeff();
      double to_minus = (lhs + Mat::Identity(4, 4)).cwiseAbs().maxCoeff();
      int sign = to_plus < 1e-12 ? 1 : (to_minus < 1e-12 ? -1 : 0);
      REQUIRE(sign != 0);
      CHECK(pauli_commutator(a, b) == sign);
    }
  }
}

TEST_CASE("closure: products stay Pauli strings with fourth-root phases") {
  for (int n : {1, 2}) {
    auto strings = all_pauli_strings(n);
    for (const PauliString& a : strings)
      for (const PauliString& b : strings) {
        PauliString p = a * b;
        CHECK(p.size() == n);
        CHECK((p.matrix() - a.matrix() * b.matrix()).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
}

TEST_CASE("product rule of the commutator function") {
  auto strings = all_pauli_strings(2);
  for (const PauliString& g : strings)
    for (const PauliString& g1 : strings)
      for (const PauliString& g2 : strings)
        CHECK(pauli_commutator(g, g1) * pauli_commutator(g, g2) == pauli_commutator(g, g1 * g2));
}

TEST_CASE("commutator symmetry") {
  auto strings = all_pauli_strings(2);
  for (const PauliString& a : strings)
    for (const PauliString& b : strings) CHECK(pauli_commutator(a, b) == pauli_commutator(b, a));
}

TEST_CASE("mismatched qubit counts are rejected") {
  CHECK_THROWS_AS(pauli_commutator(PauliString::from_label("X"), PauliString::from_label("XX")),
                  std::invalid_argument);
}

TEST_CASE("labels round-trip") {
  for (const char* label : {"XX", "-YZ", "iIX", "-iZY"}) {
    PauliString p = PauliString::from_label(label);
    CHECK(p.label() == label);
  }
}
