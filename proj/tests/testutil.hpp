#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// Everything here recomputes results from first principles, deliberately
// avoiding the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "roots/handle_graph.hpp"
#include "roots/reduction_system.hpp"

namespace testutil {

// Longest directed path from v by exhaustive path enumeration (no memo).
// Exponential; keep inputs small.
inline std::uint64_t longest_path_bruteforce(const roots::ReductionSystem& sys,
                                             roots::VertexId v) {
  std::uint64_t best = 0;
  for (roots::EdgeId e : sys.out_edges(v)) {
    std::uint64_t len = 1 + longest_path_bruteforce(sys, sys.edge(e).dst);
    best = std::max(best, len);
  }
  return best;
}

inline std::vector<roots::VertexId> reachable_set(
    const roots::ReductionSystem& sys, roots::VertexId v) {
  std::vector<bool> seen(sys.vertex_count(), false);
  std::vector<roots::VertexId> stack{v}, out;
  seen[v.value] = true;
  while (!stack.empty()) {
    roots::VertexId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (roots::EdgeId e : sys.out_edges(u)) {
      roots::VertexId w = sys.edge(e).dst;
      if (!seen[w.value]) {
        seen[w.value] = true;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Roots of v computed by descent: take the reachable set, evaluate the
// brute-force longest-path complexity on it, and keep the vertices at the
// least value. An independent route to the same answer as sink reachability.
inline std::vector<roots::VertexId> roots_by_descent(
    const roots::ReductionSystem& sys, roots::VertexId v) {
  auto reachable = reachable_set(sys, v);
  std::vector<std::uint64_t> complexity;
  complexity.reserve(reachable.size());
  for (roots::VertexId u : reachable)
    complexity.push_back(longest_path_bruteforce(sys, u));
  std::uint64_t least = *std::min_element(complexity.begin(), complexity.end());
  std::vector<roots::VertexId> result;
  for (std::size_t i = 0; i < reachable.size(); ++i)
    if (complexity[i] == least) result.push_back(reachable[i]);
  return result;
}

// Edge-equivalence classes at v by pairwise common-root tests (via the
// descent oracle) and an explicit breadth-first transitive closure.
inline std::vector<std::vector<roots::EdgeId>> ee_classes_bruteforce(
    const roots::ReductionSystem& sys, roots::VertexId v) {
  auto out = sys.out_edges(v);
  const std::size_t k = out.size();
  std::vector<std::vector<roots::VertexId>> target_roots(k);
  for (std::size_t i = 0; i < k; ++i)
    target_roots[i] = roots_by_descent(sys, sys.edge(out[i]).dst);

  auto elem = [&](std::size_t i, std::size_t j) {
    for (roots::VertexId r : target_roots[i])
      if (std::binary_search(target_roots[j].begin(), target_roots[j].end(),
                             r))
        return true;
    return false;
  };

  std::vector<int> cls(k, -1);
  int next_class = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next_class;
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      std::size_t a = frontier.back();
      frontier.pop_back();
      for (std::size_t b = 0; b < k; ++b)
        if (cls[b] < 0 && elem(a, b)) {
          cls[b] = next_class;
          frontier.push_back(b);
        }
    }
    ++next_class;
  }

  std::vector<std::vector<roots::EdgeId>> classes(next_class);
  for (std::size_t i = 0; i < k; ++i) classes[cls[i]].push_back(out[i]);
  return classes;
}

// Colored-multigraph isomorphism by exhaustive permutation search.
inline bool isomorphic_bruteforce(const roots::HandleGraph& a,
                                  const roots::HandleGraph& b) {
  if (a.red_count() != b.red_count() || a.green_count() != b.green_count() ||
      a.link_count() != b.link_count())
    return false;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> b_links;
  for (const auto& l : b.links()) b_links.emplace_back(l.green, l.red);
  std::sort(b_links.begin(), b_links.end());

  std::vector<std::uint32_t> gperm(a.green_count()), rperm(a.red_count());
  for (std::uint32_t i = 0; i < gperm.size(); ++i) gperm[i] = i;
  do {
    for (std::uint32_t i = 0; i < rperm.size(); ++i) rperm[i] = i;
    do {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> mapped;
      mapped.reserve(a.link_count());
      for (const auto& l : a.links())
        mapped.emplace_back(gperm[l.green], rperm[l.red]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped == b_links) return true;
    } while (std::next_permutation(rperm.begin(), rperm.end()));
  } while (std::next_permutation(gperm.begin(), gperm.end()));
  return false;
}

// Terminal codes of every maximal cutting sequence, enumerated literally
// (one recursion branch per sequence, no sharing).
inline void collect_terminal_codes_literal(const roots::HandleGraph& g,
                                           std::set<std::string>& out,
                                           std::size_t& sequences) {
  auto moves = roots::enumerate_cuts(g);
  if (moves.empty()) {
    out.insert(g.code().bytes);
    ++sequences;
    return;
  }
  for (const auto& m : moves)
    collect_terminal_codes_literal(roots::cut(g, m), out, sequences);
}

// Same set, with results shared between states that have equal canonical
// codes. Sound because the ends of the maximal sequences from a state depend
// only on its isomorphism class.
inline const std::set<std::string>& terminal_codes_memo(
    const roots::HandleGraph& g,
    std::map<std::string, std::set<std::string>>& cache) {
  auto it = cache.find(g.code().bytes);
  if (it != cache.end()) return it->second;
  std::set<std::string> result;
  auto moves = roots::enumerate_cuts(g);
  if (moves.empty()) {
    result.insert(g.code().bytes);
  } else {
    for (const auto& m : moves) {
      const auto& sub = terminal_codes_memo(roots::cut(g, m), cache);
      result.insert(sub.begin(), sub.end());
    }
  }
  return cache.emplace(g.code().bytes, std::move(result)).first->second;
}

// Trial-division prime factorization, sorted; 1 -> {}.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

// Endpoints of every maximal split sequence of a multiset, independent of
// the reduction-system machinery.
inline void collect_multiset_terminals(
    std::vector<std::uint64_t> multiset,
    std::set<std::vector<std::uint64_t>>& out) {
  std::sort(multiset.begin(), multiset.end());
  bool any = false;
  std::set<std::uint64_t> values(multiset.begin(), multiset.end());
  for (std::uint64_t value : values) {
    for (std::uint64_t a = 2; a * a <= value; ++a) {
      if (value % a != 0) continue;
      any = true;
      std::vector<std::uint64_t> next;
      bool removed = false;
      for (std::uint64_t x : multiset) {
        if (!removed && x == value) {
          removed = true;
          continue;
        }
        next.push_back(x);
      }
      next.push_back(a);
      next.push_back(value / a);
      collect_multiset_terminals(std::move(next), out);
    }
  }
  if (!any) out.insert(multiset);
}

// Random bipartite red/green multigraph: at least one green, every green
// linked at least once, some reds possibly isolated.
inline roots::HandleGraph random_handle_graph(std::mt19937_64& rng,
                                              std::size_t max_vertices,
                                              std::size_t max_links) {
  std::size_t reds = 1 + rng() % (max_vertices - 1);
  std::size_t greens = 1 + rng() % (max_vertices - reds);
  std::size_t links = greens + rng() % (max_links - greens + 1);

  roots::HandleGraph::Builder b;
  for (std::size_t r = 0; r < reds; ++r) b.add_red("r" + std::to_string(r));
  for (std::size_t x = 0; x < greens; ++x)
    b.add_green("x" + std::to_string(x));
  for (std::size_t x = 0; x < greens; ++x)
    b.add_link(static_cast<std::uint32_t>(x),
               static_cast<std::uint32_t>(rng() % reds));
  for (std::size_t i = greens; i < links; ++i)
    b.add_link(static_cast<std::uint32_t>(rng() % greens),
               static_cast<std::uint32_t>(rng() % reds));
  return b.build();
}

inline std::vector<std::string> sorted_names(
    const roots::ReductionSystem& sys, const std::vector<roots::VertexId>& vs) {
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (roots::VertexId v : vs) names.push_back(sys.name(v));
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace testutil
