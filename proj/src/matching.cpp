#include "qrep/matching.hpp"

#include <list>
#include <stdexcept>

namespace qrep {

namespace {

// Primal-dual blossom algorithm for minimum-weight perfect matching,
// following the classic O(n^3)-style formulation: grow alternating forests
// over tight edges, contract odd cycles into pseudo-vertices, adjust duals
// when no tight edge is available. Slots [n, 2n) hold contracted blossoms.
//
// Invariants maintained throughout:
//  - slack(e) >= 0 for every edge between distinct outer nodes;
//  - matched edges are tight (slack 0);
//  - a blossom with positive dual stays contracted ("blocked").
class Matcher {
 public:
  Matcher(int n, const std::vector<int64_t>& weights) : n_(n) {
    if (n % 2 != 0) throw std::invalid_argument("matching needs an even vertex count");
    slack_.resize(static_cast<size_t>(n_) * (n_ - 1) / 2);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        // Doubled so that half-integral dual steps stay integral.
        slack_[edge_index(u, v)] = 2 * weights[static_cast<size_t>(u) * n_ + v];
      }
    }
    const int slots = 2 * n_;
    deep_.resize(slots);
    shallow_.resize(slots);
    tip_.resize(slots);
    mate_.resize(slots);
    type_.resize(slots);
    forest_.resize(slots);
    root_.resize(slots);
    outer_.resize(slots);
    active_.resize(slots);
    blocked_.resize(slots);
    visited_.resize(slots);
    dual_.resize(slots);
    for (int i = 0; i < slots; ++i) {
      outer_[i] = i;
      tip_[i] = i;
      mate_[i] = -1;
      type_[i] = kUnlabeled;
      forest_[i] = -1;
      root_[i] = i;
      active_[i] = i < n_;
      blocked_[i] = false;
      dual_[i] = 0;
      if (i < n_) deep_[i].push_back(i);
      if (i >= n_) free_slots_.push_back(i);
    }
  }

  std::vector<int> solve() {
    bool perfect = false;
    while (!perfect) {
      greedy_init();
      perfect = grow_forest();
      if (!perfect) {
        update_duals();
        reset();
      }
    }
    // Force-expand blocked blossoms to read off the matching on original
    // vertices.
    for (int i = 0; i < 2 * n_; ++i) {
      if (active_[i] && mate_[i] != -1 && outer_[i] == i) expand(i, true);
    }
    std::vector<int> mate(n_);
    for (int v = 0; v < n_; ++v) mate[v] = mate_[v];
    return mate;
  }

 private:
  static constexpr int kUnlabeled = 0;
  static constexpr int kOdd = 1;
  static constexpr int kEven = 2;

  size_t edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<size_t>(u) * n_ - static_cast<size_t>(u + 1) * (u + 2) / 2 + v;
  }

  bool tight(int u, int v) const { return slack_[edge_index(u, v)] == 0; }

  // Greedy matching over tight edges; keeps augmentation phases short.
  void greedy_init() {
    for (int u = 0; u < n_; ++u) {
      if (mate_[outer_[u]] != -1) continue;
      for (int v = 0; v < n_; ++v) {
        if (u == v || !tight(u, v)) continue;
        if (outer_[u] == outer_[v] || mate_[outer_[v]] != -1) continue;
        mate_[outer_[u]] = v;
        mate_[outer_[v]] = u;
        break;
      }
    }
  }

  // Grows alternating forests from every unmatched outer node over tight
  // edges, augmenting and contracting blossoms as they appear. Returns true
  // once the matching is perfect.
  bool grow_forest() {
    reset();
    while (!bfs_.empty()) {
      const int w = outer_[bfs_.back()];
      bfs_.pop_back();
      bool restart = false;
      for (size_t di = 0; di < deep_[w].size() && !restart; ++di) {
        const int u = deep_[w][di];
        for (int v = 0; v < n_; ++v) {
          if (u == v || !tight(u, v)) continue;
          const int ov = outer_[v];
          if (type_[ov] == kOdd) continue;
          if (type_[ov] != kEven) {
            // Extend the tree through the matched edge behind v.
            const int vm = mate_[ov];
            forest_[ov] = u;
            type_[ov] = kOdd;
            root_[ov] = root_[outer_[u]];
            const int ovm = outer_[vm];
            forest_[ovm] = v;
            type_[ovm] = kEven;
            root_[ovm] = root_[ov];
            if (!visited_[ovm]) {
              visited_[ovm] = true;
              bfs_.push_back(vm);
            }
          } else if (root_[ov] != root_[outer_[u]]) {
            augment(u, v);
            reset();
            restart = true;
            break;
          } else if (outer_[u] != ov) {
            const int b = contract_blossom(u, v);
            visited_[b] = true;
            bfs_.push_back(b);
            restart = true;
            break;
          }
        }
      }
    }
    for (int i = 0; i < n_; ++i) {
      if (mate_[outer_[i]] == -1) return false;
    }
    return true;
  }

  // Clears the forest, destroys unblocked blossoms and re-seeds the BFS
  // queue with the unmatched outer nodes.
  void reset() {
    for (int i = 0; i < 2 * n_; ++i) {
      forest_[i] = -1;
      root_[i] = i;
      if (i >= n_ && active_[i] && outer_[i] == i) destroy_blossom(i);
    }
    std::fill(visited_.begin(), visited_.end(), false);
    bfs_.clear();
    for (int i = 0; i < n_; ++i) {
      if (mate_[outer_[i]] == -1) {
        type_[outer_[i]] = kEven;
        if (!visited_[outer_[i]]) {
          visited_[outer_[i]] = true;
          bfs_.push_back(i);
        }
      } else {
        type_[outer_[i]] = kUnlabeled;
      }
    }
  }

  // Dissolves a blossom whose dual has returned to zero (recursively).
  void destroy_blossom(int t) {
    if (t < n_ || (blocked_[t] && dual_[t] > 0)) return;
    for (int s : shallow_[t]) {
      outer_[s] = s;
      for (int d : deep_[s]) outer_[d] = s;
      destroy_blossom(s);
    }
    active_[t] = false;
    blocked_[t] = false;
    mate_[t] = -1;
    free_slots_.push_back(t);
  }

  // Rewrites the matching of u (a blossom or vertex) against its mated outer
  // node using the minimum-index tight edge, then unrolls the odd circuit.
  // Blocked blossoms are left contracted unless force is set.
  void expand(int u, bool force = false) {
    const int v = outer_[mate_[u]];
    // Minimum edge index so both sides independently settle on the same edge.
    size_t best = slack_.size();
    int p = -1, q = -1;
    for (int du : deep_[u]) {
      for (int dv : deep_[v]) {
        if (tight(du, dv) && edge_index(du, dv) < best) {
          best = edge_index(du, dv);
          p = du;
          q = dv;
        }
      }
    }
    if (p < 0) throw std::logic_error("matched pair without a tight edge");
    mate_[u] = q;
    mate_[v] = p;
    if (u < n_ || (blocked_[u] && !force)) return;

    // Rotate the circuit so the child containing the new entry vertex p
    // becomes the tip.
    bool found = false;
    for (auto it = shallow_[u].begin(); it != shallow_[u].end() && !found;) {
      const int si = *it;
      for (int d : deep_[si]) {
        if (d == p) {
          found = true;
          break;
        }
      }
      ++it;
      if (!found) {
        shallow_[u].push_back(shallow_[u].front());
        shallow_[u].pop_front();
      }
    }
    auto it = shallow_[u].begin();
    mate_[*it] = mate_[u];
    ++it;
    // The remaining even number of children pair up around the circuit.
    while (it != shallow_[u].end()) {
      auto next = std::next(it);
      mate_[*it] = *next;
      mate_[*next] = *it;
      it = std::next(next);
    }
    for (int s : shallow_[u]) {
      outer_[s] = s;
      for (int d : deep_[s]) outer_[d] = s;
    }
    active_[u] = false;
    free_slots_.push_back(u);
    for (int s : shallow_[u]) expand(s, force);
  }

  // Flips matched/unmatched along the alternating paths from u and v up to
  // their respective roots.
  void augment(int u, int v) {
    int p = outer_[u];
    int q = outer_[v];
    const int outv = q;
    int fp = forest_[p];
    mate_[p] = q;
    mate_[q] = p;
    expand(p);
    expand(q);
    while (fp != -1) {
      q = outer_[forest_[p]];
      p = outer_[forest_[q]];
      fp = forest_[p];
      mate_[p] = q;
      mate_[q] = p;
      expand(p);
      expand(q);
    }
    p = outv;
    fp = forest_[p];
    while (fp != -1) {
      q = outer_[forest_[p]];
      p = outer_[forest_[q]];
      fp = forest_[p];
      mate_[p] = q;
      mate_[q] = p;
      expand(p);
      expand(q);
    }
  }

  // Contracts the odd cycle through u and v (EVEN nodes of one tree) into a
  // fresh pseudo-vertex.
  int contract_blossom(int u, int v) {
    const int t = free_slots_.back();
    free_slots_.pop_back();

    std::vector<char> in_path(2 * n_, false);
    for (int x = u; x != -1; x = forest_[outer_[x]]) in_path[outer_[x]] = true;
    int cursor = outer_[v];
    while (!in_path[cursor]) cursor = outer_[forest_[cursor]];
    tip_[t] = cursor;

    std::list<int> circuit;
    circuit.push_front(outer_[u]);
    for (int x = outer_[u]; x != tip_[t];) {
      x = outer_[forest_[x]];
      circuit.push_front(x);
    }
    shallow_[t].assign(circuit.begin(), circuit.end());
    deep_[t].clear();
    for (int x = outer_[v]; x != tip_[t]; x = outer_[forest_[x]]) {
      shallow_[t].push_back(x);
    }
    for (int s : shallow_[t]) {
      outer_[s] = t;
      for (int d : deep_[s]) {
        deep_[t].push_back(d);
        outer_[d] = t;
      }
    }
    forest_[t] = forest_[tip_[t]];
    type_[t] = kEven;
    root_[t] = root_[tip_[t]];
    active_[t] = true;
    outer_[t] = t;
    mate_[t] = mate_[tip_[t]];
    return t;
  }

  // No tight edge left to grow with: shift duals by the largest feasible
  // step. Slacks are maintained directly; intra-blossom edges stay frozen.
  void update_duals() {
    constexpr int64_t kNone = -1;
    int64_t e_grow = kNone;   // EVEN -- UNLABELED
    int64_t e_even = kNone;   // EVEN -- EVEN (distinct outers)
    int64_t e_blossom = kNone;  // smallest ODD blossom dual
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        const int tu = type_[outer_[u]];
        const int tv = type_[outer_[v]];
        const int64_t s = slack_[edge_index(u, v)];
        if ((tu == kEven && tv == kUnlabeled) || (tv == kEven && tu == kUnlabeled)) {
          if (e_grow == kNone || s < e_grow) e_grow = s;
        } else if (outer_[u] != outer_[v] && tu == kEven && tv == kEven) {
          if (e_even == kNone || s < e_even) e_even = s;
        }
      }
    }
    for (int i = n_; i < 2 * n_; ++i) {
      if (active_[i] && outer_[i] == i && type_[i] == kOdd) {
        if (e_blossom == kNone || dual_[i] < e_blossom) e_blossom = dual_[i];
      }
    }
    int64_t delta = kNone;
    if (e_grow != kNone) delta = e_grow;
    if (e_even != kNone && (delta == kNone || e_even / 2 < delta)) delta = e_even / 2;
    if (e_blossom != kNone && (delta == kNone || e_blossom < delta)) delta = e_blossom;
    if (delta == kNone) throw std::logic_error("dual update stalled");

    for (int i = 0; i < 2 * n_; ++i) {
      if (i != outer_[i] || !active_[i]) continue;
      if (type_[i] == kEven) dual_[i] += delta;
      else if (type_[i] == kOdd) dual_[i] -= delta;
    }
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (outer_[u] == outer_[v]) continue;
        const int tu = type_[outer_[u]];
        const int tv = type_[outer_[v]];
        int64_t& s = slack_[edge_index(u, v)];
        if (tu == kEven && tv == kEven) s -= 2 * delta;
        else if (tu == kOdd && tv == kOdd) s += 2 * delta;
        else if ((tu == kEven && tv == kUnlabeled) || (tv == kEven && tu == kUnlabeled)) s -= delta;
        else if ((tu == kOdd && tv == kUnlabeled) || (tv == kOdd && tu == kUnlabeled)) s += delta;
      }
    }
    for (int i = n_; i < 2 * n_; ++i) {
      if (dual_[i] > 0) {
        blocked_[i] = true;
      } else if (active_[i] && blocked_[i]) {
        if (mate_[i] == -1) {
          destroy_blossom(i);
        } else {
          blocked_[i] = false;
          expand(i);
        }
      }
    }
  }

  int n_;
  std::vector<int64_t> slack_;
  std::vector<std::vector<int>> deep_;
  std::vector<std::list<int>> shallow_;
  std::vector<int> tip_, mate_, type_, forest_, root_, outer_;
  std::vector<char> active_, blocked_, visited_;
  std::vector<int64_t> dual_;
  std::vector<int> free_slots_;
  std::vector<int> bfs_;
};

}  // namespace

std::vector<int> min_weight_perfect_matching(int n,
                                             const std::vector<int64_t>& weights) {
  if (n == 0) return {};
  if (n == 2) return {1, 0};
  Matcher matcher(n, weights);
  return matcher.solve();
}

int64_t matching_weight(const std::vector<int>& mate,
                        const std::vector<int64_t>& weights) {
  const int n = static_cast<int>(mate.size());
  int64_t total = 0;
  for (int u = 0; u < n; ++u) {
    if (mate[u] > u) total += weights[static_cast<size_t>(u) * n + mate[u]];
  }
  return total;
}

}  // namespace qrep
