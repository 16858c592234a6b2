#pragma once

#include <span>
#include <vector>

namespace qrep {

// Werner parameter W of a depolarized Bell pair, W in [0, 1].
class WernerParam {
 public:
  explicit WernerParam(double w);
  double value() const { return w_; }

 private:
  double w_;
};

// Bell-pair fidelity F = <phi+|rho|phi+>. The general constructor accepts
// [0, 1]; values derived from a Werner parameter land in [1/4, 1].
class Fidelity {
 public:
  explicit Fidelity(double f);
  double value() const { return f_; }

 private:
  double f_;
};

// F = (3W + 1) / 4.
Fidelity fidelity_from_werner(WernerParam w);

// Inverse of the above; requires f >= 1/4.
WernerParam werner_from_fidelity(Fidelity f);

// Fidelity after a BSM connects two Werner pairs: the Werner parameters
// multiply, i.e. F = 1/4 + (3/4) * ((4F1-1)/3) * ((4F2-1)/3).
// Both inputs must lie in [1/4, 1].
Fidelity bsm_combine(Fidelity f1, Fidelity f2);

// End-to-end fidelity of a chain of links connected by BSMs:
// F = 1/4 + (3/4) * prod_i (4F_i - 1)/3. Rejects an empty chain.
Fidelity chain_fidelity(std::span<const Fidelity> links);

// Convenience for uniform chains.
Fidelity chain_fidelity(Fidelity link, int count);

// Distillable entanglement (hashing bound) of a Werner pair:
//   D(F) = 1 + F log2 F + (1-F) log2((1-F)/3)  if F > 0.8107, else 0.
// The threshold is applied as a strict inequality on the printed constant;
// 0*log2(0) is taken as 0.
double distillable_entanglement(Fidelity f);

inline constexpr double kDistillableThreshold = 0.8107;

}  // namespace qrep
