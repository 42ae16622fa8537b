#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "roots/reduction_system.hpp"

// Complexity functions: maps from vertices into N^k under lexicographic
// order, required to be strictly decreasing along every edge. On a finite
// system such a map exists exactly when the system is acyclic, and the
// longest-path length from each vertex is one.

namespace roots {

// Tuples of equal length compare lexicographically (std::vector's order).
using ComplexityValue = std::vector<std::uint64_t>;

class ComplexityMap {
 public:
  ComplexityMap(std::size_t vertex_count, std::size_t arity)
      : arity_(arity), values_(vertex_count) {}

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }

  bool has(VertexId v) const {
    return v.value < values_.size() && values_[v.value].has_value();
  }

  const ComplexityValue& value(VertexId v) const {
    if (!has(v))
      throw MissingVertexError("#" + std::to_string(v.value));
    return *values_[v.value];
  }

  void set(VertexId v, ComplexityValue value) {
    if (value.size() != arity_)
      throw std::invalid_argument("complexity value arity mismatch");
    if (v.value >= values_.size()) values_.resize(v.value + 1);
    values_[v.value] = std::move(value);
  }

 private:
  std::size_t arity_;
  std::vector<std::optional<ComplexityValue>> values_;
};

// Returns a directed cycle as a closed walk [v, ..., v], or nullopt if the
// system is acyclic.
inline std::optional<std::vector<VertexId>> find_cycle(
    const ReductionSystem& sys) {
  const std::size_t n = sys.vertex_count();
  enum : std::uint8_t { White, Gray, Black };
  std::vector<std::uint8_t> color(n, White);
  std::vector<VertexId> path;

  for (std::uint32_t start = 0; start < n; ++start) {
    if (color[start] != White) continue;
    // (vertex, index into its out-edge list)
    std::vector<std::pair<VertexId, std::size_t>> stack;
    stack.emplace_back(VertexId{start}, 0);
    color[start] = Gray;
    path.push_back(VertexId{start});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = sys.out_edges(v);
      if (next == out.size()) {
        color[v.value] = Black;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      VertexId w = sys.edge(out[next++]).dst;
      if (color[w.value] == Gray) {
        auto it = std::find(path.begin(), path.end(), w);
        std::vector<VertexId> cycle(it, path.end());
        cycle.push_back(w);
        return cycle;
      }
      if (color[w.value] == White) {
        color[w.value] = Gray;
        path.push_back(w);
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

// c(v) = length of the longest directed path starting at v. Value 0 exactly
// at sinks. Throws CycleError when no strictly decreasing map can exist.
inline ComplexityMap synthesize_complexity(const ReductionSystem& sys) {
  if (auto cycle = find_cycle(sys)) throw CycleError(std::move(*cycle));

  const std::size_t n = sys.vertex_count();
  ComplexityMap map(n, 1);
  std::vector<std::uint8_t> done(n, 0);
  std::vector<std::uint64_t> longest(n, 0);

  for (std::uint32_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack;
    stack.emplace_back(VertexId{start}, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = sys.out_edges(v);
      if (next == out.size()) {
        std::uint64_t best = 0;
        for (EdgeId e : out) {
          VertexId w = sys.edge(e).dst;
          best = std::max(best, longest[w.value] + 1);
        }
        longest[v.value] = best;
        done[v.value] = 1;
        stack.pop_back();
        continue;
      }
      VertexId w = sys.edge(out[next++]).dst;
      if (!done[w.value]) stack.emplace_back(w, 0);
    }
  }

  for (std::uint32_t i = 0; i < n; ++i)
    map.set(VertexId{i}, ComplexityValue{longest[i]});
  return map;
}

struct ComplexityCheck {
  std::vector<EdgeId> violations;  // every edge that fails to decrease
  bool valid() const { return violations.empty(); }
};

// Valid iff every edge strictly decreases the map. The map must cover every
// vertex of the system.
inline ComplexityCheck check_complexity(const ReductionSystem& sys,
                                        const ComplexityMap& map) {
  for (std::uint32_t i = 0; i < sys.vertex_count(); ++i)
    if (!map.has(VertexId{i})) throw MissingVertexError(sys.name(VertexId{i}));

  ComplexityCheck result;
  for (std::uint32_t i = 0; i < sys.edge_count(); ++i) {
    Edge e = sys.edge(EdgeId{i});
    if (!(map.value(e.src) > map.value(e.dst)))
      result.violations.push_back(EdgeId{i});
  }
  return result;
}

}  // namespace roots
