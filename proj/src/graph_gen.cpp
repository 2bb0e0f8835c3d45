// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/graph_gen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "falqon/rng.hpp"

namespace falqon {

namespace {

using AdjMask = std::vector<std::uint32_t>;  // adj[v] bitmask over <= 26 vertices

AdjMask adjacency_masks(const Graph& g) {
  if (g.n > 32) {
    throw std::invalid_argument("canonical labeling supports at most 32 vertices");
  }
  AdjMask adj(g.n, 0);
  for (const Edge& e : g.edges) {
    adj[e.i] |= 1u << e.j;
    adj[e.j] |= 1u << e.i;
  }
  return adj;
}

bool masks_connected(const AdjMask& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 1) return true;
  std::uint32_t visited = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier & (1u << v)) next |= adj[v];
    }
    frontier = next & ~visited;
    visited |= next;
  }
  return std::popcount(visited) == n;
}

// Vertex invariants: BFS distance profile seeds the colors (plain degree
// refinement is blind on regular graphs), then rounds of
// (color, sorted neighbor colors) splitting until the partition stabilizes.
// Colors are ranks of sorted signatures, so they are isomorphism-invariant.
std::vector<int> refine_colors(const AdjMask& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> profiles(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> dist(n, -1);
    dist[v] = 0;
    std::uint32_t frontier = 1u << v;
    int depth = 0;
    while (frontier != 0) {
      ++depth;
      std::uint32_t next = 0;
      for (int u = 0; u < n; ++u) {
        if (frontier & (1u << u)) next |= adj[u];
      }
      frontier = 0;
      for (int u = 0; u < n; ++u) {
        if ((next & (1u << u)) && dist[u] < 0) {
          dist[u] = depth;
          frontier |= 1u << u;
        }
      }
    }
    profiles[v] = dist;
    std::sort(profiles[v].begin(), profiles[v].end());
  }

  std::vector<int> color(n);
  {
    std::vector<std::vector<int>> sorted = profiles;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), profiles[v]) -
                                  sorted.begin());
    }
  }

  int classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      for (int u = 0; u < n; ++u) {
        if (adj[v] & (1u << u)) sig[v].push_back(color[u]);
      }
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                  sorted.begin());
    }
    const int new_classes = static_cast<int>(sorted.size());
    if (new_classes == classes) break;  // refinement only splits, so stable
    classes = new_classes;
  }
  return color;
}

// Branch-and-bound search for the lexicographically smallest upper-triangle
// adjacency bit string over all vertex orderings compatible with the refined
// colors. Positions are filled one vertex at a time; a candidate's new bits
// are its adjacencies to the already placed vertices.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const AdjMask& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {
    color_ = refine_colors(adj);
    perm_.reserve(n_);
    used_.assign(n_, false);
    cur_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  }

  std::vector<std::uint8_t> run() {
    descend(/*strictly_better=*/false);
    return best_;
  }

 private:
  // Returns true when best_ was replaced somewhere in this subtree. A branch
  // that went strictly below the incumbent stops comparing, but only until
  // its first completion: that completion becomes the incumbent, whose prefix
  // equals the current path again, so comparisons resume from there.
  bool descend(bool strictly_better) {
    const int pos = static_cast<int>(perm_.size());
    if (pos == n_) {
      if (strictly_better || best_.empty()) {
        best_ = cur_;
        return true;
      }
      return false;
    }
    // The next position must take a vertex from the lowest unplaced color
    // class; any isomorphism maps color classes onto each other.
    int want = -1;
    for (int v = 0; v < n_; ++v) {
      if (!used_[v] && (want < 0 || color_[v] < want)) want = color_[v];
    }

    struct Candidate {
      std::vector<std::uint8_t> bits;
      int vertex;
      bool operator<(const Candidate& o) const { return bits < o.bits; }
    };
    std::vector<Candidate> cands;
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != want) continue;
      Candidate c;
      c.vertex = v;
      c.bits.resize(pos);
      for (int p = 0; p < pos; ++p) {
        c.bits[p] = (adj_[v] >> perm_[p]) & 1;
      }
      cands.push_back(std::move(c));
    }
    std::sort(cands.begin(), cands.end());

    const std::size_t offset = cur_.size();
    bool replaced = false;
    for (const Candidate& c : cands) {
      bool better = strictly_better;
      if (!better && !best_.empty()) {
        // Compare against the incumbent at the same offset.
        int cmp = 0;
        for (int p = 0; p < pos && cmp == 0; ++p) {
          cmp = static_cast<int>(c.bits[p]) - static_cast<int>(best_[offset + p]);
        }
        if (cmp > 0) break;  // candidates are sorted; the rest are worse too
        if (cmp < 0) better = true;
      }
      cur_.insert(cur_.end(), c.bits.begin(), c.bits.end());
      used_[c.vertex] = true;
      perm_.push_back(c.vertex);
      if (descend(better)) {
        replaced = true;
        strictly_better = false;
      }
      perm_.pop_back();
      used_[c.vertex] = false;
      cur_.resize(offset);
    }
    return replaced;
  }

  const AdjMask& adj_;
  int n_;
  std::vector<int> color_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
};

std::vector<std::uint64_t> pack_form(int n, const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint64_t> out{static_cast<std::uint64_t>(n)};
  std::uint64_t word = 0;
  int filled = 0;
  for (std::uint8_t b : bits) {
    word = (word << 1) | b;
    if (++filled == 64) {
      out.push_back(word);
      word = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(word << (64 - filled));
  return out;
}

std::vector<std::uint64_t> canonical_form_masks(const AdjMask& adj) {
  CanonicalSearch search(adj);
  return pack_form(static_cast<int>(adj.size()), search.run());
}

std::optional<std::vector<Edge>> sample_pairing(int n, int d, std::mt19937_64& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < d; ++k) stubs.push_back(v);
  }
  shuffle_vector(stubs, rng);

  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  for (std::size_t p = 0; p + 1 < stubs.size(); p += 2) {
    int a = stubs[p];
    int b = stubs[p + 1];
    if (a == b) return std::nullopt;
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) return std::nullopt;
    edges.push_back(Edge{a, b, 1.0});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
  return edges;
}

void check_regular_params(int n, int d) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (d < 0 || d >= n) {
    throw std::invalid_argument("degree " + std::to_string(d) + " infeasible for n = " +
                                std::to_string(n) + " (need 0 <= d < n)");
  }
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw std::invalid_argument("no " + std::to_string(d) + "-regular graph on " +
                                std::to_string(n) + " vertices: n * d is odd");
  }
}

}  // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g) {
  g.validate();
  return canonical_form_masks(adjacency_masks(g));
}

GenerateResult generate_regular(const GenerateOptions& opt) {
  check_regular_params(opt.n, opt.d);
  if (opt.count < 1) throw std::invalid_argument("instance count must be >= 1");

  std::mt19937_64 rng(derive_seed(opt.seed, "pairing-model"));
  GenerateResult result;
  std::set<std::vector<std::uint64_t>> forms;

  // Give up once this many consecutive samples fail to produce a new
  // isomorphism class; at that point the class pool is likely exhausted.
  constexpr std::uint64_t kStallLimit = 20000;
  std::uint64_t stall = 0;

  while (static_cast<int>(result.graphs.size()) < opt.count && stall < kStallLimit) {
    ++result.attempts;
    ++stall;
    auto edges = sample_pairing(opt.n, opt.d, rng);
    if (!edges) continue;

    Graph g;
    g.n = opt.n;
    g.edges = std::move(*edges);
    if (!g.is_connected()) continue;
    if (!forms.insert(canonical_form_masks(adjacency_masks(g))).second) continue;

    if (opt.weighted) {
      for (Edge& e : g.edges) e.w = uniform_open_unit(rng);
    }
    const std::size_t idx = result.graphs.size();
    g.name = "reg-n" + std::to_string(opt.n) + "-d" + std::to_string(opt.d) +
             (opt.weighted ? "-w" : "") + "-s" + std::to_string(opt.seed) + "-" +
             std::to_string(idx);
    result.graphs.push_back(std::move(g));
    stall = 0;
  }

  result.complete = static_cast<int>(result.graphs.size()) == opt.count;
  return result;
}

std::vector<Graph> enumerate_regular_all(int n, int d) {
  check_regular_params(n, d);
  if (n > 10 || (n > 8 && d > 3)) {
    throw std::invalid_argument("exhaustive enumeration is limited to n <= 10 (d <= 3) "
                                "or n <= 8; use generate_regular for larger instances");
  }

  std::vector<Graph> classes;
  if (d == 0) {
    if (n == 1) {
      classes.push_back(Graph{1, {}, "enum-n1-d0-0"});
    }
    return classes;  // disconnected for n > 1
  }

  // Enumerate labeled d-regular graphs whose vertex 0 is adjacent to exactly
  // {1, ..., d} (every isomorphism class has such a labeling), then dedupe by
  // canonical form. At each step the smallest unfinished vertex is completed
  // towards higher-indexed vertices, so each labeled graph appears once.
  std::vector<int> deg(n, 0);
  AdjMask adj(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::set<std::vector<std::uint64_t>> forms;

  auto add_edge = [&](int a, int b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
    ++deg[a];
    ++deg[b];
    edges.emplace_back(a, b);
  };
  auto remove_edge = [&](int a, int b) {
    adj[a] &= ~(1u << b);
    adj[b] &= ~(1u << a);
    --deg[a];
    --deg[b];
    edges.pop_back();
  };

  for (int v = 1; v <= d; ++v) add_edge(0, v);

  auto emit = [&]() {
    if (!masks_connected(adj)) return;
    if (!forms.insert(canonical_form_masks(adj)).second) return;
    Graph g;
    g.n = n;
    for (auto [a, b] : edges) g.edges.push_back(Edge{a, b, 1.0});
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
    g.name = "enum-n" + std::to_string(n) + "-d" + std::to_string(d) + "-" +
             std::to_string(classes.size());
    classes.push_back(std::move(g));
  };

  // Chooses the remaining neighbors of the smallest deficient vertex.
  auto complete = [&](auto&& self) -> void {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (deg[u] < d) {
        v = u;
        break;
      }
    }
    if (v < 0) {
      emit();
      return;
    }
    std::vector<int> cands;
    for (int u = v + 1; u < n; ++u) {
      if (deg[u] < d && !(adj[v] & (1u << u))) cands.push_back(u);
    }
    const int need = d - deg[v];
    if (need > static_cast<int>(cands.size())) return;

    // All need-subsets of the candidates, in lexicographic order.
    std::vector<int> pick(need);
    auto choose = [&](auto&& rec, int start, int depth) -> void {
      if (depth == need) {
        for (int k = 0; k < need; ++k) add_edge(v, pick[k]);
        self(self);
        for (int k = need - 1; k >= 0; --k) remove_edge(v, pick[k]);
        return;
      }
      for (int idx = start; idx <= static_cast<int>(cands.size()) - (need - depth); ++idx) {
        pick[depth] = cands[idx];
        rec(rec, idx + 1, depth + 1);
      }
    };
    choose(choose, 0, 0);
  };

  complete(complete);
  return classes;
}

}  // namespace falqon
