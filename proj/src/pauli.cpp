#include "qrep/pauli.hpp"

#include <stdexcept>

namespace qrep {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Z: return 'Z';
    case Pauli::Y: return 'Y';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Z': return Pauli::Z;
    case 'Y': return Pauli::Y;
    default: throw std::invalid_argument(std::string("bad Pauli letter: ") + c);
  }
}

PauliString PauliString::from_string(const std::string& s) {
  PauliString p(s.size());
  for (size_t i = 0; i < s.size(); ++i) p.set(i, pauli_from_char(s[i]));
  return p;
}

size_t PauliString::weight() const {
  size_t w = 0;
  for (Pauli p : symbols_) w += (p != Pauli::I);
  return w;
}

bool PauliString::is_identity() const {
  for (Pauli p : symbols_) {
    if (p != Pauli::I) return false;
  }
  return true;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(size());
  for (Pauli p : symbols_) s.push_back(pauli_char(p));
  return s;
}

namespace {

void check_same_length(const PauliString& u, const PauliString& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("Pauli string length mismatch: " +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
  }
}

}  // namespace

PauliString pauli_mul(const PauliString& u, const PauliString& v) {
  check_same_length(u, v);
  PauliString r(u.size());
  for (size_t q = 0; q < u.size(); ++q) r.set(q, pauli_mul(u.get(q), v.get(q)));
  return r;
}

int trace_inner_product(const PauliString& u, const PauliString& v) {
  check_same_length(u, v);
  int acc = 0;
  for (size_t q = 0; q < u.size(); ++q) acc ^= pauli_anticommute(u.get(q), v.get(q));
  return acc;
}

PauliString sample_werner_error(Fidelity f, size_t n, Rng& rng) {
  const double F = f.value();
  if (F < 0.25) {
    throw std::invalid_argument("Werner channel needs fidelity >= 1/4");
  }
  PauliString e(n);
  const double p_err = 1.0 - F;
  for (size_t q = 0; q < n; ++q) {
    const double u = rng.uniform();
    if (u < p_err) {
      // Equal thirds over X, Y, Z.
      const double t = u / p_err;
      e.set(q, t < 1.0 / 3.0 ? Pauli::X : (t < 2.0 / 3.0 ? Pauli::Y : Pauli::Z));
    }
  }
  return e;
}

}  // namespace qrep
