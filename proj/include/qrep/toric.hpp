#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qrep/pauli.hpp"

namespace qrep {

// Syndrome of a toric-code error: indices of flipped checks.
// Vertex checks (X-type) light up on the Z/Y components of an error,
// plaquette checks (Z-type) on the X/Y components.
struct ToricSyndrome {
  std::vector<int> vertex_defects;     // r * d + c, sorted ascending
  std::vector<int> plaquette_defects;  // r * d + c, sorted ascending

  bool empty() const { return vertex_defects.empty() && plaquette_defects.empty(); }
  bool operator==(const ToricSyndrome&) const = default;
};

// Logical action of a zero-syndrome residual on the two encoded pairs.
using ToricLogicalClass = std::array<Pauli, 2>;

// Toric code on a d x d periodic lattice: 2d^2 qubits on edges, d^2 weight-4
// X-type vertex checks, d^2 weight-4 Z-type plaquette checks, k = 2.
//
// Qubit layout: horizontal edge (r,c) -- from vertex (r,c) to (r,c+1) -- has
// index r*d + c; vertical edge (r,c) -- from (r,c) to (r+1,c) -- has index
// d^2 + r*d + c. All coordinates wrap mod d.
class ToricCode {
 public:
  explicit ToricCode(int d);

  int d() const { return d_; }
  int num_qubits() const { return 2 * d_ * d_; }

  int horizontal_edge(int r, int c) const { return wrap(r) * d_ + wrap(c); }
  int vertical_edge(int r, int c) const { return d_ * d_ + wrap(r) * d_ + wrap(c); }

  const std::vector<std::array<int, 4>>& vertex_supports() const { return vertex_supports_; }
  const std::vector<std::array<int, 4>>& plaquette_supports() const { return plaquette_supports_; }

  // Check operators and homology-cycle logical representatives as Pauli
  // strings (for commutation tests and coset oracles).
  PauliString vertex_check(int index) const;
  PauliString plaquette_check(int index) const;
  const PauliString& logical_x(int pair) const { return logical_x_[pair]; }
  const PauliString& logical_z(int pair) const { return logical_z_[pair]; }

  ToricSyndrome syndrome(const PauliString& e) const;

  // Minimum-weight perfect matching decoder. The X and Z sectors are decoded
  // independently; defects are matched under toroidal Manhattan distance and
  // corrections follow shortest paths (horizontal moves first). The returned
  // correction reproduces the input defects exactly.
  PauliString mwpm_decode(const ToricSyndrome& syndrome) const;

  // Logical class of a zero-syndrome residual, one symbol per encoded pair,
  // from the winding parity against the stored logical representatives.
  // Identity on both pairs iff the residual is in the stabilizer group.
  // Throws if the residual has a nonzero syndrome.
  ToricLogicalClass logical_class(const PauliString& residual) const;

 private:
  int wrap(int x) const { return ((x % d_) + d_) % d_; }
  void build_checks();
  void build_logicals();
  void verify_construction() const;

  // Pairs up matched defects and applies the sector correction.
  void apply_matched_paths(const std::vector<int>& defects,
                           const std::vector<int>& mate, bool x_sector,
                           PauliString& correction) const;

  int d_;
  std::vector<std::array<int, 4>> vertex_supports_;
  std::vector<std::array<int, 4>> plaquette_supports_;
  std::array<PauliString, 2> logical_x_;
  std::array<PauliString, 2> logical_z_;
};

// Toroidal Manhattan distance between lattice sites a and b (r*d + c).
int toric_distance(int d, int a, int b);

}  // namespace qrep
