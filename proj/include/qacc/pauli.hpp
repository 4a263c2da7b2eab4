#pragma once

#include <array>
#include <string>
#include <string_view>

#include "qacc/common.hpp"

namespace qacc {

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
const Mat& pauli_matrix(Pauli p);

// Single-qubit commutator sign: a b = sign * b a.
int pauli_commutator(Pauli a, Pauli b);

// An N-qubit Pauli string with an overall phase i^phase_pow. Qubit 0 is the
// first (most significant) tensor factor.
struct PauliString {
  std::vector<Pauli> letters;
  int phase_pow = 0;  // phase = i^phase_pow, taken modulo 4

  static PauliString identity(int n);
  static PauliString from_label(std::string_view label);  // e.g. "XZ", "-IY", "iXX"
  static PauliString single(int n, int qubit, Pauli p);

  int size() const { return int(letters.size()); }
  cxd phase() const;
  std::string label() const;
  Mat matrix() const;
  bool is_identity() const;  // letters all I, phase ignored
  PauliString unsigned_rep() const;
  bool same_letters(const PauliString& other) const;

  bool operator==(const PauliString&) const = default;
};

PauliString operator*(const PauliString& a, const PauliString& b);

// Commutator sign for strings: a b = sign * b a, sign in {+1, -1}.
int pauli_commutator(const PauliString& a, const PauliString& b);

// All 4^n strings with phase +1, in base-4 lexicographic order (qubit 0 major).
std::vector<PauliString> all_pauli_strings(int n);

}  // namespace qacc
