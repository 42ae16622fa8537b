#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "roots/complexity.hpp"
#include "roots/reduction_system.hpp"

// Roots and edge equivalence. A root of v is a vertex reachable from v that
// admits no further moves. Two edges with common source are elementary
// equivalent when their endpoints share a root; edge equivalence is the
// transitive closure, and the system has property (EE) when all out-edges of
// every vertex fall into a single class. Together with a complexity function
// this forces every vertex to have exactly one root, which verify_theorem
// checks by brute force rather than assuming.

namespace roots {

struct RootSet {
  VertexId source;
  std::vector<VertexId> roots;  // sorted ascending
};

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = parent[find(b)]; }
  std::vector<std::size_t> parent;
};

inline bool intersects(const std::vector<VertexId>& a,
                       const std::vector<VertexId>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return true;
  }
  return false;
}

}  // namespace detail

// Root sets of every vertex at once, bottom-up over a topological order.
// Indexed by VertexId. Throws CycleError on any directed cycle.
inline std::vector<std::vector<VertexId>> all_root_sets(
    const ReductionSystem& sys) {
  if (auto cycle = find_cycle(sys)) throw CycleError(std::move(*cycle));

  const std::size_t n = sys.vertex_count();
  std::vector<std::vector<VertexId>> sets(n);
  std::vector<std::uint8_t> done(n, 0);

  for (std::uint32_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack;
    stack.emplace_back(VertexId{start}, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = sys.out_edges(v);
      if (next == out.size()) {
        if (out.empty()) {
          sets[v.value] = {v};
        } else {
          std::vector<VertexId> merged;
          for (EdgeId e : out) {
            const auto& succ = sets[sys.edge(e).dst.value];
            std::vector<VertexId> tmp;
            tmp.reserve(merged.size() + succ.size());
            std::set_union(merged.begin(), merged.end(), succ.begin(),
                           succ.end(), std::back_inserter(tmp));
            merged = std::move(tmp);
          }
          sets[v.value] = std::move(merged);
        }
        done[v.value] = 1;
        stack.pop_back();
        continue;
      }
      VertexId w = sys.edge(out[next++]).dst;
      if (!done[w.value]) stack.emplace_back(w, 0);
    }
  }
  return sets;
}

// Exactly the sink vertices reachable from v (v itself when v is a sink).
// Throws CycleError if a cycle is reachable from v.
inline RootSet root_set(const ReductionSystem& sys, VertexId v) {
  sys.name(v);  // validates v
  enum : std::uint8_t { White, Gray, Black };
  std::vector<std::uint8_t> color(sys.vertex_count(), White);
  std::vector<VertexId> path;
  std::vector<VertexId> sinks;

  std::vector<std::pair<VertexId, std::size_t>> stack;
  stack.emplace_back(v, 0);
  color[v.value] = Gray;
  path.push_back(v);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto out = sys.out_edges(u);
    if (out.empty()) sinks.push_back(u);
    if (next == out.size()) {
      color[u.value] = Black;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    VertexId w = sys.edge(out[next++]).dst;
    if (color[w.value] == Gray) {
      auto it = std::find(path.begin(), path.end(), w);
      std::vector<VertexId> cycle(it, path.end());
      cycle.push_back(w);
      throw CycleError(std::move(cycle));
    }
    if (color[w.value] == White) {
      color[w.value] = Gray;
      path.push_back(w);
      stack.emplace_back(w, 0);
    }
  }

  std::sort(sinks.begin(), sinks.end());
  sinks.erase(std::unique(sinks.begin(), sinks.end()), sinks.end());
  return {v, std::move(sinks)};
}

// The single root of v; throws MultipleRootsError when v has several.
inline VertexId unique_root(const ReductionSystem& sys, VertexId v) {
  RootSet rs = root_set(sys, v);
  if (rs.roots.size() != 1) throw MultipleRootsError(v, std::move(rs.roots));
  return rs.roots.front();
}

// Two edges with the same source are elementary equivalent when their
// endpoints have a common root.
inline bool elementary_equivalent(const ReductionSystem& sys, EdgeId e,
                                  EdgeId d) {
  Edge ee = sys.edge(e);
  Edge dd = sys.edge(d);
  if (ee.src != dd.src) throw SourceMismatchError();
  RootSet re = root_set(sys, ee.dst);
  RootSet rd = root_set(sys, dd.dst);
  return detail::intersects(re.roots, rd.roots);
}

struct EdgeEquivalence {
  VertexId vertex;
  // Partition of the out-edges of vertex: connected components of the
  // elementary-equivalence graph. Classes and their members are ordered by
  // EdgeId.
  std::vector<std::vector<EdgeId>> classes;
};

namespace detail {

inline std::vector<std::vector<EdgeId>> partition_out_edges(
    const ReductionSystem& sys, VertexId v,
    const std::vector<std::vector<VertexId>>& root_sets) {
  auto out = sys.out_edges(v);
  const std::size_t k = out.size();
  UnionFind uf(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& ri = root_sets[sys.edge(out[i]).dst.value];
      const auto& rj = root_sets[sys.edge(out[j]).dst.value];
      if (intersects(ri, rj)) uf.unite(i, j);
    }

  std::vector<std::vector<EdgeId>> classes;
  std::vector<int> class_of(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t rep = uf.find(i);
    if (class_of[rep] < 0) {
      class_of[rep] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of[rep]].push_back(out[i]);
  }
  return classes;
}

}  // namespace detail

inline EdgeEquivalence edge_equivalence(const ReductionSystem& sys,
                                        VertexId v) {
  auto out = sys.out_edges(v);
  // Root sets for the targets only; local DFS keeps unrelated parts of the
  // system (including cycles not reachable from v) out of the picture.
  std::vector<std::vector<VertexId>> root_sets(sys.vertex_count());
  for (EdgeId e : out) {
    VertexId w = sys.edge(e).dst;
    if (root_sets[w.value].empty()) root_sets[w.value] = root_set(sys, w).roots;
  }
  return {v, detail::partition_out_edges(sys, v, root_sets)};
}

struct EeWitness {
  VertexId vertex;
  EdgeId first;
  EdgeId second;  // in a different class than first
};

struct EeCheck {
  bool holds = true;
  std::optional<EeWitness> witness;
};

// Property (EE): at every vertex all out-edges are equivalent. On failure
// reports the lexicographically least offending vertex (by name) and its
// least edge pair.
inline EeCheck check_ee(const ReductionSystem& sys) {
  auto root_sets = all_root_sets(sys);
  std::vector<VertexId> by_name;
  by_name.reserve(sys.vertex_count());
  for (std::uint32_t i = 0; i < sys.vertex_count(); ++i)
    by_name.push_back(VertexId{i});
  std::sort(by_name.begin(), by_name.end(), [&](VertexId a, VertexId b) {
    return sys.name(a) < sys.name(b);
  });
  for (VertexId v : by_name) {
    auto classes = detail::partition_out_edges(sys, v, root_sets);
    if (classes.size() <= 1) continue;
    // out_edges are sorted, so classes[0] holds the least edge; the witness
    // partner is the least edge outside that class.
    EdgeId first = sys.out_edges(v).front();
    const auto& first_class = [&]() -> const std::vector<EdgeId>& {
      for (const auto& c : classes)
        if (std::find(c.begin(), c.end(), first) != c.end()) return c;
      return classes.front();
    }();
    EdgeId second{};
    bool found = false;
    for (EdgeId e : sys.out_edges(v)) {
      if (std::find(first_class.begin(), first_class.end(), e) ==
          first_class.end()) {
        second = e;
        found = true;
        break;
      }
    }
    (void)found;
    return {false, EeWitness{v, first, second}};
  }
  return {true, std::nullopt};
}

struct CfStatus {
  bool holds = false;
  std::optional<ComplexityMap> complexity;  // witness when holds
  std::vector<VertexId> cycle;              // witness when it fails
};

struct RootReport {
  CfStatus cf;
  std::optional<EeCheck> ee;  // evaluated only when cf holds
  // Root set per vertex, indexed by VertexId; empty report on cyclic input.
  std::vector<std::vector<VertexId>> root_sets;
  // True would mean cf and ee hold yet some vertex has two roots. Checked,
  // never assumed.
  bool theorem_violation = false;

  bool properties_hold() const {
    return cf.holds && ee && ee->holds && !theorem_violation;
  }
};

inline RootReport verify_theorem(const ReductionSystem& sys) {
  RootReport report;
  if (auto cycle = find_cycle(sys)) {
    report.cf = {false, std::nullopt, std::move(*cycle)};
    return report;
  }
  report.cf = {true, synthesize_complexity(sys), {}};
  report.ee = check_ee(sys);
  report.root_sets = all_root_sets(sys);
  if (report.ee->holds) {
    for (const auto& rs : report.root_sets)
      if (rs.size() > 1) report.theorem_violation = true;
  }
  return report;
}

struct Counterexample {
  VertexId vertex;
  std::vector<VertexId> roots;
};

// The multi-root vertex of least synthesized complexity (ties broken by
// VertexId), mirroring the least-counterexample step of the uniqueness
// argument. nullopt when every vertex has exactly one root.
inline std::optional<Counterexample> find_counterexample(
    const ReductionSystem& sys) {
  ComplexityMap complexity = synthesize_complexity(sys);
  auto root_sets = all_root_sets(sys);
  std::optional<Counterexample> best;
  for (std::uint32_t i = 0; i < sys.vertex_count(); ++i) {
    VertexId v{i};
    if (root_sets[i].size() < 2) continue;
    if (!best || complexity.value(v) < complexity.value(best->vertex))
      best = Counterexample{v, root_sets[i]};
  }
  return best;
}

}  // namespace roots
