#include "qrep/toric.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrep/matching.hpp"

namespace qrep {

int toric_distance(int d, int a, int b) {
  const int ra = a / d, ca = a % d;
  const int rb = b / d, cb = b % d;
  const int dr = std::abs(ra - rb);
  const int dc = std::abs(ca - cb);
  return std::min(dr, d - dr) + std::min(dc, d - dc);
}

ToricCode::ToricCode(int d) : d_(d) {
  if (d < 2) throw std::invalid_argument("toric code needs d >= 2");
  build_checks();
  build_logicals();
  verify_construction();
}

void ToricCode::build_checks() {
  vertex_supports_.resize(d_ * d_);
  plaquette_supports_.resize(d_ * d_);
  for (int r = 0; r < d_; ++r) {
    for (int c = 0; c < d_; ++c) {
      const int i = r * d_ + c;
      vertex_supports_[i] = {horizontal_edge(r, c), horizontal_edge(r, c - 1),
                             vertical_edge(r, c), vertical_edge(r - 1, c)};
      plaquette_supports_[i] = {horizontal_edge(r, c), horizontal_edge(r + 1, c),
                                vertical_edge(r, c), vertical_edge(r, c + 1)};
    }
  }
}

void ToricCode::build_logicals() {
  for (int pair = 0; pair < 2; ++pair) {
    logical_x_[pair] = PauliString(num_qubits());
    logical_z_[pair] = PauliString(num_qubits());
  }
  for (int i = 0; i < d_; ++i) {
    // Pair 0: X along a dual loop of vertical edges, Z along a primal
    // vertical loop. Pair 1: the partner loops on horizontal edges.
    logical_x_[0].set(vertical_edge(0, i), Pauli::X);
    logical_z_[0].set(vertical_edge(i, 0), Pauli::Z);
    logical_x_[1].set(horizontal_edge(i, 0), Pauli::X);
    logical_z_[1].set(horizontal_edge(0, i), Pauli::Z);
  }
}

PauliString ToricCode::vertex_check(int index) const {
  PauliString p(num_qubits());
  for (int q : vertex_supports_[index]) p.mul_at(q, Pauli::X);
  return p;
}

PauliString ToricCode::plaquette_check(int index) const {
  PauliString p(num_qubits());
  for (int q : plaquette_supports_[index]) p.mul_at(q, Pauli::Z);
  return p;
}

void ToricCode::verify_construction() const {
  const int nchecks = d_ * d_;
  std::vector<PauliString> checks;
  checks.reserve(2 * nchecks);
  for (int i = 0; i < nchecks; ++i) checks.push_back(vertex_check(i));
  for (int i = 0; i < nchecks; ++i) checks.push_back(plaquette_check(i));
  for (size_t a = 0; a < checks.size(); ++a) {
    for (size_t b = a + 1; b < checks.size(); ++b) {
      if (trace_inner_product(checks[a], checks[b]) != 0) {
        throw std::logic_error("toric checks do not commute");
      }
    }
  }
  for (int pair = 0; pair < 2; ++pair) {
    for (const auto& check : checks) {
      if (trace_inner_product(logical_x_[pair], check) != 0 ||
          trace_inner_product(logical_z_[pair], check) != 0) {
        throw std::logic_error("toric logical fails to commute with checks");
      }
    }
    for (int other = 0; other < 2; ++other) {
      const int expected = (pair == other) ? 1 : 0;
      if (trace_inner_product(logical_x_[pair], logical_z_[other]) != expected) {
        throw std::logic_error("toric logical pairing is wrong");
      }
    }
    if (trace_inner_product(logical_x_[0], logical_x_[1]) != 0 ||
        trace_inner_product(logical_z_[0], logical_z_[1]) != 0) {
      throw std::logic_error("toric logical pairing is wrong");
    }
    if (logical_x_[pair].weight() != static_cast<size_t>(d_) ||
        logical_z_[pair].weight() != static_cast<size_t>(d_)) {
      throw std::logic_error("toric logical has wrong weight");
    }
  }
}

ToricSyndrome ToricCode::syndrome(const PauliString& e) const {
  if (e.size() != static_cast<size_t>(num_qubits())) {
    throw std::invalid_argument("toric syndrome: wrong error length");
  }
  ToricSyndrome s;
  for (int i = 0; i < d_ * d_; ++i) {
    int parity = 0;
    for (int q : vertex_supports_[i]) parity ^= has_z(e.get(q));
    if (parity) s.vertex_defects.push_back(i);
    parity = 0;
    for (int q : plaquette_supports_[i]) parity ^= has_x(e.get(q));
    if (parity) s.plaquette_defects.push_back(i);
  }
  return s;
}

namespace {

std::vector<int> match_defects(int d, const std::vector<int>& defects) {
  const int m = static_cast<int>(defects.size());
  std::vector<int64_t> w(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const int64_t dist = toric_distance(d, defects[a], defects[b]);
      w[static_cast<size_t>(a) * m + b] = dist;
      w[static_cast<size_t>(b) * m + a] = dist;
    }
  }
  return min_weight_perfect_matching(m, w);
}

}  // namespace

void ToricCode::apply_matched_paths(const std::vector<int>& defects,
                                    const std::vector<int>& mate, bool x_sector,
                                    PauliString& correction) const {
  const Pauli letter = x_sector ? Pauli::X : Pauli::Z;
  for (size_t a = 0; a < defects.size(); ++a) {
    if (mate[a] < static_cast<int>(a)) continue;
    const int from = defects[a];
    const int to = defects[mate[a]];
    int r = from / d_, c = from % d_;
    const int tr = to / d_, tc = to % d_;
    // Horizontal moves first; pick the shorter wrap direction, preferring
    // +1 on a tie. For the X sector the sites are plaquettes and each step
    // crosses the shared edge of two adjacent faces.
    int dc = wrap(tc - c);
    const int cstep = (dc <= d_ - dc) ? 1 : -1;
    while (c != tc) {
      int q;
      if (x_sector) {
        q = (cstep == 1) ? vertical_edge(r, c + 1) : vertical_edge(r, c);
      } else {
        q = (cstep == 1) ? horizontal_edge(r, c) : horizontal_edge(r, c - 1);
      }
      correction.mul_at(q, letter);
      c = wrap(c + cstep);
    }
    int dr = wrap(tr - r);
    const int rstep = (dr <= d_ - dr) ? 1 : -1;
    while (r != tr) {
      int q;
      if (x_sector) {
        q = (rstep == 1) ? horizontal_edge(r + 1, c) : horizontal_edge(r, c);
      } else {
        q = (rstep == 1) ? vertical_edge(r, c) : vertical_edge(r - 1, c);
      }
      correction.mul_at(q, letter);
      r = wrap(r + rstep);
    }
  }
}

PauliString ToricCode::mwpm_decode(const ToricSyndrome& syn) const {
  if (syn.vertex_defects.size() % 2 != 0 || syn.plaquette_defects.size() % 2 != 0) {
    throw std::logic_error("toric decoder: odd defect cardinality");
  }
  PauliString correction(num_qubits());
  if (!syn.plaquette_defects.empty()) {
    const auto mate = match_defects(d_, syn.plaquette_defects);
    apply_matched_paths(syn.plaquette_defects, mate, /*x_sector=*/true, correction);
  }
  if (!syn.vertex_defects.empty()) {
    const auto mate = match_defects(d_, syn.vertex_defects);
    apply_matched_paths(syn.vertex_defects, mate, /*x_sector=*/false, correction);
  }
  return correction;
}

ToricLogicalClass ToricCode::logical_class(const PauliString& residual) const {
  if (!syndrome(residual).empty()) {
    throw std::invalid_argument("logical_class: residual has nonzero syndrome");
  }
  ToricLogicalClass cls;
  for (int pair = 0; pair < 2; ++pair) {
    const int xbit = trace_inner_product(residual, logical_z_[pair]);
    const int zbit = trace_inner_product(residual, logical_x_[pair]);
    cls[pair] = static_cast<Pauli>(xbit | (zbit << 1));
  }
  return cls;
}

}  // namespace qrep
