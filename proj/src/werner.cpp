#include "qrep/werner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrep {

namespace {

void check_range(double x, double lo, double hi, const char* what) {
  if (!(x >= lo && x <= hi)) {
    throw std::invalid_argument(std::string(what) + " out of range: " +
                                std::to_string(x));
  }
}

}  // namespace

WernerParam::WernerParam(double w) : w_(w) {
  check_range(w, 0.0, 1.0, "Werner parameter");
}

Fidelity::Fidelity(double f) : f_(f) { check_range(f, 0.0, 1.0, "fidelity"); }

Fidelity fidelity_from_werner(WernerParam w) {
  return Fidelity((3.0 * w.value() + 1.0) / 4.0);
}

WernerParam werner_from_fidelity(Fidelity f) {
  if (f.value() < 0.25) {
    throw std::invalid_argument(
        "fidelity below 1/4 has no Werner parameter: " +
        std::to_string(f.value()));
  }
  return WernerParam((4.0 * f.value() - 1.0) / 3.0);
}

Fidelity bsm_combine(Fidelity f1, Fidelity f2) {
  const double w1 = werner_from_fidelity(f1).value();
  const double w2 = werner_from_fidelity(f2).value();
  return Fidelity(0.25 + 0.75 * w1 * w2);
}

Fidelity chain_fidelity(std::span<const Fidelity> links) {
  if (links.empty()) {
    throw std::invalid_argument("chain_fidelity: empty chain");
  }
  double w = 1.0;
  for (const Fidelity& f : links) w *= werner_from_fidelity(f).value();
  return Fidelity(0.25 + 0.75 * w);
}

Fidelity chain_fidelity(Fidelity link, int count) {
  if (count < 1) throw std::invalid_argument("chain_fidelity: empty chain");
  const std::vector<Fidelity> links(static_cast<size_t>(count), link);
  return chain_fidelity(std::span<const Fidelity>(links));
}

double distillable_entanglement(Fidelity f) {
  const double F = f.value();
  if (!(F > kDistillableThreshold)) return 0.0;
  const double t1 = (F > 0.0) ? F * std::log2(F) : 0.0;
  const double t2 = (F < 1.0) ? (1.0 - F) * std::log2((1.0 - F) / 3.0) : 0.0;
  return 1.0 + t1 + t2;
}

}  // namespace qrep
