#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrep/rng.hpp"
#include "qrep/werner.hpp"

namespace qrep {

// Single-qubit Pauli, phases dropped. The two bits are the symplectic
// (x, z) pair: bit 0 set for an X component, bit 1 for a Z component.
// Under the fixed GF(4) convention 1<->X, w<->Z, wbar<->Y, GF(4) addition
// is exactly the XOR of these bit pairs.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline Pauli pauli_mul(Pauli a, Pauli b) {
  return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

inline bool has_x(Pauli p) { return static_cast<uint8_t>(p) & 1u; }
inline bool has_z(Pauli p) { return static_cast<uint8_t>(p) & 2u; }

// 0 if the two single-qubit Paulis commute, 1 otherwise.
inline int pauli_anticommute(Pauli a, Pauli b) {
  return (has_x(a) && has_z(b)) ^ (has_z(a) && has_x(b));
}

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

// An n-qubit Pauli operator modulo phase, one symbol per qubit.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(size_t n) : symbols_(n, Pauli::I) {}
  static PauliString from_string(const std::string& s);  // e.g. "IXZY"

  size_t size() const { return symbols_.size(); }
  Pauli get(size_t q) const { return symbols_[q]; }
  void set(size_t q, Pauli p) { symbols_[q] = p; }
  void mul_at(size_t q, Pauli p) { symbols_[q] = pauli_mul(symbols_[q], p); }

  size_t weight() const;
  bool is_identity() const;
  std::string str() const;

  bool operator==(const PauliString& o) const = default;

 private:
  std::vector<Pauli> symbols_;
};

// Symbol-wise product (phases dropped); involutive. Lengths must match.
PauliString pauli_mul(const PauliString& u, const PauliString& v);

// Symplectic / Hermitian-trace inner product: 0 iff the operators commute.
// Bilinear over GF(2). Lengths must match.
int trace_inner_product(const PauliString& u, const PauliString& v);

// One i.i.d. Werner-channel draw per qubit: identity with probability f,
// each of X, Y, Z with probability (1-f)/3. Requires f in [1/4, 1].
PauliString sample_werner_error(Fidelity f, size_t n, Rng& rng);

}  // namespace qrep
