#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "roots/handle_graph.hpp"
#include "roots/reduction_system.hpp"

// Demo and random systems for exercising the analyses.

namespace roots {

// Multiset of integers rendered as sorted values joined by dots; the empty
// multiset renders as "1" (the empty product).
inline std::string format_multiset(const std::vector<std::uint64_t>& values) {
  if (values.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(values[i]);
  }
  return out;
}

// a -> b, a -> c, b -> d, c -> d: two moves that rejoin. CF and EE hold.
inline ReductionSystem gen_diamond() {
  return build_system({"a", "b", "c", "d"},
                      {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

// a -> b, a -> c with b, c sinks: two moves with disjoint outcomes. EE fails.
inline ReductionSystem gen_fork() {
  return build_system({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
}

// Two reduction paths that never rejoin, failing EE one step below the top:
// s -> u -> p and s -> w -> q.
inline ReductionSystem gen_ee_failure() {
  return build_system(
      {"s", "u", "w", "p", "q"},
      {{"s", "u"}, {"s", "w"}, {"u", "p"}, {"w", "q"}});
}

// A green hub with three separable attachments, one of them shared with a
// second green vertex. Admits two rounds of analysis: x has three edge
// classes, y only one.
inline HandleGraph gen_handle_demo() {
  HandleGraph::Builder b;
  b.add_red("a");
  b.add_red("b");
  b.add_red("c");
  b.add_green("x");
  b.add_green("y");
  b.add_link("x", "a");
  b.add_link("x", "b");
  b.add_link("x", "c");
  b.add_link("y", "c");
  return b.build();
}

// Multiset factorization system: vertices are the multisets of integers >= 2
// reachable from {n} by replacing an element m = a*b (a, b >= 2) with a and
// b. Sinks are exactly the multisets of primes. n = 1 yields the empty
// multiset, already a root.
inline ReductionSystem gen_factor_system(std::uint64_t n) {
  if (n < 1) throw Error("factor systems require n >= 1");

  using Multiset = std::vector<std::uint64_t>;
  Multiset start;
  if (n > 1) start.push_back(n);

  SystemBuilder b;
  std::map<Multiset, VertexId> seen;
  std::deque<Multiset> queue;

  auto intern = [&](const Multiset& m) {
    auto it = seen.find(m);
    if (it != seen.end()) return it->second;
    VertexId v = b.add_vertex(format_multiset(m));
    seen.emplace(m, v);
    queue.push_back(m);
    return v;
  };

  intern(start);
  while (!queue.empty()) {
    Multiset m = std::move(queue.front());
    queue.pop_front();
    VertexId from = seen.at(m);
    std::set<std::uint64_t> values(m.begin(), m.end());
    for (std::uint64_t value : values) {
      for (std::uint64_t a = 2; a * a <= value; ++a) {
        if (value % a != 0) continue;
        Multiset next;
        next.reserve(m.size() + 1);
        bool removed = false;
        for (std::uint64_t x : m) {
          if (!removed && x == value) {
            removed = true;
            continue;
          }
          next.push_back(x);
        }
        next.push_back(a);
        next.push_back(value / a);
        std::sort(next.begin(), next.end());
        b.add_edge(from, intern(next));
      }
    }
  }
  return b.build();
}

// Random DAG on vertex_count vertices: edge i -> j for i < j included
// independently with probability p. Reproducible per seed on any platform
// (raw mt19937_64 draws, no distribution objects).
inline ReductionSystem gen_random_dag(std::size_t vertex_count, double p,
                                      std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw Error("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(p * 4294967296.0);  // p * 2^32

  SystemBuilder b;
  std::size_t width = std::to_string(vertex_count ? vertex_count - 1 : 0).size();
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < vertex_count; ++i) {
    std::string name = std::to_string(i);
    name.insert(0, width - name.size(), '0');
    ids.push_back(b.add_vertex("v" + name));
  }
  for (std::size_t i = 0; i < vertex_count; ++i)
    for (std::size_t j = i + 1; j < vertex_count; ++j)
      if ((rng() & 0xffffffffu) < threshold) b.add_edge(ids[i], ids[j]);
  return b.build();
}

}  // namespace roots
