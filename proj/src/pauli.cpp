#include "qacc/pauli.hpp"

#include <algorithm>

namespace qacc {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("bad Pauli value");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
  }
  throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
}

const Mat& pauli_matrix(Pauli p) {
  static const Mat mats[4] = {
      (Mat(2, 2) << 1, 0, 0, 1).finished(),
      (Mat(2, 2) << 0, 1, 1, 0).finished(),
      (Mat(2, 2) << 0, cxd(0, -1), cxd(0, 1), 0).finished(),
      (Mat(2, 2) << 1, 0, 0, -1).finished(),
  };
  return mats[int(p)];
}

int pauli_commutator(Pauli a, Pauli b) {
  if (a == Pauli::I || b == Pauli::I || a == b) return 1;
  return -1;
}

namespace {

// Product of single-qubit letters: a*b = i^k * c.
struct LetterProduct {
  Pauli letter;
  int phase_pow;
};

LetterProduct letter_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  int ia = int(a), ib = int(b);
  // XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i.
  int ic = 6 - ia - ib;  // the remaining letter index
  bool forward = (ib - ia + 3) % 3 == 1;  // cyclic X->Y->Z
  return {Pauli(ic), forward ? 1 : 3};
}

}  // namespace

PauliString PauliString::identity(int n) {
  PauliString p;
  p.letters.assign(size_t(n), Pauli::I);
  return p;
}

PauliString PauliString::single(int n, int qubit, Pauli p) {
  PauliString s = identity(n);
  s.letters.at(size_t(qubit)) = p;
  return s;
}

PauliString PauliString::from_label(std::string_view label) {
  PauliString p;
  size_t pos = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    if (label[pos] == '-') p.phase_pow = 2;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i' && label.size() - pos > 1) {
    // leading 'i' only counts as the imaginary unit when more letters follow
    p.phase_pow = (p.phase_pow + 1) % 4;
    ++pos;
  }
  for (; pos < label.size(); ++pos) p.letters.push_back(pauli_from_char(label[pos]));
  if (p.letters.empty()) throw std::invalid_argument("empty Pauli label");
  return p;
}

cxd PauliString::phase() const {
  static const cxd table[4] = {cxd(1, 0), cxd(0, 1), cxd(-1, 0), cxd(0, -1)};
  return table[((phase_pow % 4) + 4) % 4];
}

std::string PauliString::label() const {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[((phase_pow % 4) + 4) % 4];
  for (Pauli p : letters) s += pauli_char(p);
  return s;
}

Mat PauliString::matrix() const {
  Mat m = Mat::Identity(1, 1);
  for (Pauli p : letters) {
    Mat next(m.rows() * 2, m.cols() * 2);
    const Mat& f = pauli_matrix(p);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = f(r, c) * m;
    m = std::move(next);
  }
  return phase() * m;
}

bool PauliString::is_identity() const {
  return std::all_of(letters.begin(), letters.end(), [](Pauli p) { return p == Pauli::I; });
}

PauliString PauliString::unsigned_rep() const {
  PauliString p = *this;
  p.phase_pow = 0;
  return p;
}

bool PauliString::same_letters(const PauliString& other) const { return letters == other.letters; }

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli product: mismatched qubit counts");
  PauliString out;
  out.letters.reserve(a.letters.size());
  int k = a.phase_pow + b.phase_pow;
  for (size_t i = 0; i < a.letters.size(); ++i) {
    LetterProduct lp = letter_product(a.letters[i], b.letters[i]);
    out.letters.push_back(lp.letter);
    k += lp.phase_pow;
  }
  out.phase_pow = ((k % 4) + 4) % 4;
  return out;
}

int pauli_commutator(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("commutator: mismatched qubit counts");
  int sign = 1;
  for (size_t i = 0; i < a.letters.size(); ++i) sign *= pauli_commutator(a.letters[i], b.letters[i]);
  return sign;
}

std::vector<PauliString> all_pauli_strings(int n) {
  std::vector<PauliString> out;
  size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  out.reserve(total);
  for (size_t code = 0; code < total; ++code) {
    PauliString p = PauliString::identity(n);
    size_t c = code;
    for (int q = n - 1; q >= 0; --q) {
      p.letters[size_t(q)] = Pauli(c % 4);
      c /= 4;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qacc
