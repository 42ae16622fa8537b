#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

// Oriented reduction graphs: finite multigraphs of objects and simplifying
// moves. Vertices and edges are dense handles into an immutable system; a
// built system never changes, so concurrent reads are safe.

namespace roots {

struct VertexId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  VertexId src;
  VertexId dst;
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(const std::string& vertex)
      : Error("self-loop at vertex '" + vertex + "'") {}
};

class DanglingEndpointError : public Error {
 public:
  explicit DanglingEndpointError(const std::string& vertex)
      : Error("edge endpoint '" + vertex + "' is not a declared vertex") {}
};

class DuplicateVertexError : public Error {
 public:
  explicit DuplicateVertexError(const std::string& vertex)
      : Error("duplicate vertex '" + vertex + "'") {}
};

class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& what) : Error(what) {}
};

class MissingVertexError : public Error {
 public:
  explicit MissingVertexError(const std::string& vertex)
      : Error("complexity map has no value for vertex '" + vertex + "'") {}
};

class SourceMismatchError : public Error {
 public:
  SourceMismatchError() : Error("edges do not share a source vertex") {}
};

// A directed cycle, reported as a closed walk v0, v1, ..., v0.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<VertexId> cycle)
      : Error("system contains a directed cycle"), cycle_(std::move(cycle)) {}
  const std::vector<VertexId>& cycle() const { return cycle_; }

 private:
  std::vector<VertexId> cycle_;
};

class MultipleRootsError : public Error {
 public:
  MultipleRootsError(VertexId source, std::vector<VertexId> root_vertices)
      : Error("vertex has more than one root"),
        source_(source),
        roots_(std::move(root_vertices)) {}
  VertexId source() const { return source_; }
  const std::vector<VertexId>& roots() const { return roots_; }

 private:
  VertexId source_;
  std::vector<VertexId> roots_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ReductionSystem {
 public:
  ReductionSystem() = default;

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId v) const {
    require_valid(v);
    return names_[v.value];
  }

  Edge edge(EdgeId e) const {
    if (e.value >= edges_.size())
      throw UnknownVertexError("edge #" + std::to_string(e.value) +
                               " is not part of this system");
    return edges_[e.value];
  }

  std::optional<VertexId> find(std::string_view vertex_name) const {
    auto it = index_.find(std::string(vertex_name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId require(std::string_view vertex_name) const {
    auto v = find(vertex_name);
    if (!v)
      throw UnknownVertexError("unknown vertex '" + std::string(vertex_name) +
                               "'");
    return *v;
  }

  // Out-edges in ascending EdgeId order.
  std::span<const EdgeId> out_edges(VertexId v) const {
    require_valid(v);
    return out_[v.value];
  }

  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
  std::size_t in_degree(VertexId v) const {
    require_valid(v);
    return in_degree_[v.value];
  }
  bool is_sink(VertexId v) const { return out_edges(v).empty(); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> all;
    all.reserve(names_.size());
    for (std::uint32_t i = 0; i < names_.size(); ++i) all.push_back({i});
    return all;
  }

 private:
  friend class SystemBuilder;

  void require_valid(VertexId v) const {
    if (v.value >= names_.size())
      throw UnknownVertexError("vertex #" + std::to_string(v.value) +
                               " is not part of this system");
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::uint32_t> in_degree_;
};

// Single-writer construction; the result is immutable.
class SystemBuilder {
 public:
  VertexId add_vertex(std::string vertex_name) {
    if (sys_.index_.count(vertex_name)) throw DuplicateVertexError(vertex_name);
    VertexId v{static_cast<std::uint32_t>(sys_.names_.size())};
    sys_.index_.emplace(vertex_name, v);
    sys_.names_.push_back(std::move(vertex_name));
    sys_.out_.emplace_back();
    sys_.in_degree_.push_back(0);
    return v;
  }

  bool has_vertex(std::string_view vertex_name) const {
    return sys_.index_.count(std::string(vertex_name)) != 0;
  }

  VertexId vertex(std::string_view vertex_name) const {
    return sys_.require(vertex_name);
  }

  EdgeId add_edge(VertexId src, VertexId dst) {
    sys_.require_valid(src);
    sys_.require_valid(dst);
    if (src == dst) throw SelfLoopError(sys_.names_[src.value]);
    EdgeId e{static_cast<std::uint32_t>(sys_.edges_.size())};
    sys_.edges_.push_back({src, dst});
    sys_.out_[src.value].push_back(e);
    ++sys_.in_degree_[dst.value];
    return e;
  }

  EdgeId add_edge(std::string_view src, std::string_view dst) {
    auto s = sys_.find(src);
    if (!s) throw DanglingEndpointError(std::string(src));
    auto d = sys_.find(dst);
    if (!d) throw DanglingEndpointError(std::string(dst));
    return add_edge(*s, *d);
  }

  ReductionSystem build() { return std::move(sys_); }

 private:
  ReductionSystem sys_;
};

inline ReductionSystem build_system(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  SystemBuilder b;
  for (const auto& v : vertices) b.add_vertex(v);
  for (const auto& [src, dst] : edges) b.add_edge(src, dst);
  return b.build();
}

// Out-edges of v with their targets, ordered by EdgeId.
inline std::vector<std::pair<EdgeId, VertexId>> successors(
    const ReductionSystem& sys, VertexId v) {
  std::vector<std::pair<EdgeId, VertexId>> result;
  for (EdgeId e : sys.out_edges(v)) result.emplace_back(e, sys.edge(e).dst);
  return result;
}

}  // namespace roots
