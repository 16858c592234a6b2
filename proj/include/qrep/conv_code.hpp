#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "qrep/pauli.hpp"

namespace qrep {

// Rate-1/3 quantum convolutional code over GF(4) with memory 1 and free
// distance 3. The stabilizer is generated by all 3-qubit shifts of a single
// quaternary generator whose two 3-symbol halves map, under the fixed
// GF(4)<->Pauli convention, to the Pauli pair
//     s1       = [X X X | X Z Y]
//     omega*s1 = [Z Z Z | Z Y X]
// A stream of B blocks carries 2 syndrome bits per block; generators that
// overhang the end of the stream are evaluated against identity padding.
class ConvCode313 {
 public:
  static constexpr int kBlockQubits = 3;
  static constexpr int kMemory = 1;

  ConvCode313();

  // Stabilizer generator `which` (0 or 1) starting at block t, truncated to
  // a B-block stream.
  PauliString stabilizer(int blocks, int t, int which) const;

  // Two bits per block, packed in the low bits of each entry: bit 0 from the
  // X-type generator, bit 1 from the Z-type one. Length must divide by 3.
  std::vector<uint8_t> syndrome(const PauliString& e) const;

  // Minimum-weight error consistent with the syndrome (maximum likelihood
  // for the Werner channel), via a 64-state trellis terminated in the zero
  // state. traceback_depth = 0 decodes the full sequence; a positive depth
  // runs the fixed-lag window decoder instead.
  PauliString viterbi_decode(std::span<const uint8_t> syndrome,
                             int traceback_depth = 0) const;

  // Per-block logical action of a zero-syndrome residual, one symbol per
  // block, measured against a cached symplectic basis completing the
  // windowed stabilizer span. All-stabilizer residuals map to all-identity.
  std::vector<Pauli> logical_class(const PauliString& residual) const;

  // Pauli weight of the minimum-weight error consistent with the syndrome.
  size_t decoded_weight(std::span<const uint8_t> syndrome) const;

 private:
  struct LogicalBasis;

  const LogicalBasis& basis_for(int blocks) const;

  // Per-64-state tables: Pauli weight of a block and the two syndrome bits a
  // block contributes in generator position 0 / position 1.
  std::array<uint8_t, 64> block_weight_{};
  std::array<uint8_t, 64> syn_g0_{};
  std::array<uint8_t, 64> syn_g1_{};
  // States grouped by their g0 signature, 16 per class.
  std::array<std::array<uint8_t, 16>, 4> g0_class_{};

  mutable std::mutex basis_mutex_;
  mutable std::map<int, std::unique_ptr<LogicalBasis>> basis_cache_;
};

// Block encoding helpers (3 symbols <-> 6-bit state index, symbol 0 in the
// high bits so ascending indices are lexicographic in the block symbols).
int conv_block_index(Pauli a, Pauli b, Pauli c);
std::array<Pauli, 3> conv_block_symbols(int index);

}  // namespace qrep
