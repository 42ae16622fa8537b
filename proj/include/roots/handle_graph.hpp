#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roots/reduction_system.hpp"

// Bipartite red/green multigraphs and the cutting calculus on them. Links
// join a green vertex to a red one; parallel links are allowed. A cut splits
// a green vertex in two so that the component count rises by exactly one.
// Graphs are identified up to colored-multigraph isomorphism through a
// canonical code; green vertices of degree zero are trivial and removed on
// construction, while isolated red vertices are kept.

namespace roots {

class NotGreenError : public Error {
 public:
  explicit NotGreenError(const std::string& vertex)
      : Error("vertex '" + vertex + "' is not a green vertex") {}
};

class InvalidCutError : public Error {
 public:
  explicit InvalidCutError(const std::string& what) : Error(what) {}
};

class BoundExceededError : public Error {
 public:
  explicit BoundExceededError(std::size_t bound)
      : Error("reachable set exceeds bound of " + std::to_string(bound) +
              " graphs") {}
};

// Isomorphism-invariant encoding: equal codes exactly when the graphs are
// isomorphic as colored multigraphs. Ordered by plain byte comparison.
struct CanonicalCode {
  std::string bytes;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// Canonical code of one connected component, given local link endpoints
// (green position, red position). Refines vertices by iterated neighborhood
// invariants, then takes the least relabeled link list over all orderings
// consistent with the refinement cells.
inline std::string component_code(int green_count, int red_count,
                                  std::vector<std::pair<int, int>> links) {
  const int n = green_count + red_count;  // greens first, then reds
  std::vector<std::vector<int>> adj(n);
  for (auto [g, r] : links) {
    adj[g].push_back(green_count + r);
    adj[green_count + r].push_back(g);
  }

  std::vector<int> rank(n);
  for (int v = 0; v < n; ++v) rank[v] = v < green_count ? 0 : 1;
  int distinct = n == 0 ? 0 : (green_count > 0 && red_count > 0 ? 2 : 1);
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(rank[v]);
      std::vector<int> nb;
      nb.reserve(adj[v].size());
      for (int u : adj[v]) nb.push_back(rank[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v) {
      auto it = std::lower_bound(uniq.begin(), uniq.end(), sig[v]);
      rank[v] = static_cast<int>(it - uniq.begin());
    }
    int now = static_cast<int>(uniq.size());
    if (now == distinct) break;
    distinct = now;
  }

  // Cells in rank order; color-pure since the initial ranks separate colors.
  std::map<int, std::vector<int>> by_rank;
  for (int v = 0; v < n; ++v) by_rank[rank[v]].push_back(v);
  std::vector<std::vector<int>> cells;
  for (auto& [r, members] : by_rank) cells.push_back(members);

  // Label offsets per cell, counted per color.
  std::vector<int> offset(cells.size());
  int goff = 0, roff = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool is_green = cells[i].front() < green_count;
    offset[i] = is_green ? goff : roff;
    (is_green ? goff : roff) += static_cast<int>(cells[i].size());
  }

  std::vector<int> label(n, 0);
  std::vector<std::pair<int, int>> best;
  bool have_best = false;

  auto evaluate = [&]() {
    std::vector<std::pair<int, int>> relabeled;
    relabeled.reserve(links.size());
    for (auto [g, r] : links)
      relabeled.emplace_back(label[g], label[green_count + r]);
    std::sort(relabeled.begin(), relabeled.end());
    if (!have_best || relabeled < best) {
      best = std::move(relabeled);
      have_best = true;
    }
  };

  auto assign_cell = [&](std::size_t i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j)
      label[cells[i][j]] = offset[i] + static_cast<int>(j);
  };

  // Odometer over per-cell permutations.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      evaluate();
      return;
    }
    std::sort(cells[i].begin(), cells[i].end());
    do {
      assign_cell(i);
      self(self, i + 1);
    } while (std::next_permutation(cells[i].begin(), cells[i].end()));
  };
  rec(rec, 0);

  std::string out = "g" + std::to_string(green_count) + "r" +
                    std::to_string(red_count) + ":";
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(best[i].first) + "-" +
           std::to_string(best[i].second);
  }
  return out;
}

}  // namespace detail

class HandleGraph {
 public:
  struct Link {
    std::uint32_t green;
    std::uint32_t red;
    friend constexpr auto operator<=>(const Link&, const Link&) = default;
  };

  class Builder;

  HandleGraph() { code_.bytes = "empty"; }

  std::size_t red_count() const { return red_names_.size(); }
  std::size_t green_count() const { return green_names_.size(); }
  std::size_t link_count() const { return links_.size(); }

  const std::string& red_name(std::uint32_t r) const { return red_names_[r]; }
  const std::string& green_name(std::uint32_t x) const {
    return green_names_[x];
  }

  std::span<const Link> links() const { return links_; }

  // Indices into links() incident to green x, ascending.
  std::vector<std::uint32_t> links_at(std::uint32_t x) const {
    std::vector<std::uint32_t> result;
    for (std::uint32_t i = 0; i < links_.size(); ++i)
      if (links_[i].green == x) result.push_back(i);
    return result;
  }

  std::size_t green_degree(std::uint32_t x) const { return links_at(x).size(); }

  std::optional<std::uint32_t> find_green(std::string_view name) const {
    for (std::uint32_t i = 0; i < green_names_.size(); ++i)
      if (green_names_[i] == name) return i;
    return std::nullopt;
  }

  std::optional<std::uint32_t> find_red(std::string_view name) const {
    for (std::uint32_t i = 0; i < red_names_.size(); ++i)
      if (red_names_[i] == name) return i;
    return std::nullopt;
  }

  std::uint32_t require_green(std::string_view name) const {
    if (auto x = find_green(name)) return *x;
    if (find_red(name)) throw NotGreenError(std::string(name));
    throw UnknownVertexError("unknown vertex '" + std::string(name) + "'");
  }

  const CanonicalCode& code() const { return code_; }

  std::size_t component_count() const {
    const std::size_t n = red_count() + green_count();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Link& l : links_)
      parent[find(l.red)] = find(red_count() + l.green);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (find(i) == i) ++count;
    return count;
  }

  bool operator==(const HandleGraph& other) const {
    return code_ == other.code_;
  }

 private:
  std::vector<std::string> red_names_;
  std::vector<std::string> green_names_;
  std::vector<Link> links_;  // sorted by (green, red)
  CanonicalCode code_;

  void canonicalize() {
    // Component decomposition: reds 0..R-1, greens R..R+G-1.
    const std::size_t r_count = red_names_.size();
    const std::size_t n = r_count + green_names_.size();
    if (n == 0) {
      code_.bytes = "empty";
      return;
    }
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Link& l : links_) parent[find(l.red)] = find(r_count + l.green);

    std::map<std::size_t, std::size_t> component_of;  // representative -> index
    struct Component {
      std::vector<std::uint32_t> greens, reds;
      std::vector<std::pair<int, int>> links;
    };
    std::vector<Component> comps;
    auto comp_index = [&](std::size_t rep) {
      auto it = component_of.find(rep);
      if (it != component_of.end()) return it->second;
      component_of.emplace(rep, comps.size());
      comps.emplace_back();
      return comps.size() - 1;
    };
    std::vector<int> green_pos(green_names_.size(), -1);
    std::vector<int> red_pos(r_count, -1);
    for (std::uint32_t x = 0; x < green_names_.size(); ++x) {
      auto& c = comps[comp_index(find(r_count + x))];
      green_pos[x] = static_cast<int>(c.greens.size());
      c.greens.push_back(x);
    }
    for (std::uint32_t r = 0; r < r_count; ++r) {
      auto& c = comps[comp_index(find(r))];
      red_pos[r] = static_cast<int>(c.reds.size());
      c.reds.push_back(r);
    }
    for (const Link& l : links_)
      comps[comp_index(find(l.red))].links.emplace_back(green_pos[l.green],
                                                        red_pos[l.red]);

    std::vector<std::string> codes;
    codes.reserve(comps.size());
    for (auto& c : comps)
      codes.push_back(detail::component_code(static_cast<int>(c.greens.size()),
                                             static_cast<int>(c.reds.size()),
                                             std::move(c.links)));
    std::sort(codes.begin(), codes.end());
    std::string joined;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (i) joined += ';';
      joined += codes[i];
    }
    code_.bytes = std::move(joined);
  }

  friend class Builder;
};

class HandleGraph::Builder {
 public:
  std::uint32_t add_red(std::string name) {
    claim_name(name);
    reds_.push_back(std::move(name));
    return static_cast<std::uint32_t>(reds_.size() - 1);
  }

  std::uint32_t add_green(std::string name) {
    claim_name(name);
    greens_.push_back(std::move(name));
    return static_cast<std::uint32_t>(greens_.size() - 1);
  }

  bool has_name(std::string_view name) const {
    return names_.count(std::string(name)) != 0;
  }

  void add_link(std::uint32_t green, std::uint32_t red) {
    if (green >= greens_.size())
      throw UnknownVertexError("green vertex #" + std::to_string(green) +
                               " is not declared");
    if (red >= reds_.size())
      throw UnknownVertexError("red vertex #" + std::to_string(red) +
                               " is not declared");
    links_.push_back({green, red});
  }

  void add_link(std::string_view green, std::string_view red) {
    add_link(require_of(greens_, green, /*want_green=*/true),
             require_of(reds_, red, /*want_green=*/false));
  }

  HandleGraph build() {
    HandleGraph g;
    g.red_names_ = std::move(reds_);

    // Drop trivial (degree-zero) green vertices, compacting indices.
    std::vector<std::size_t> degree(greens_.size(), 0);
    for (const auto& l : links_) ++degree[l.green];
    std::vector<std::uint32_t> remap(greens_.size());
    for (std::uint32_t x = 0; x < greens_.size(); ++x) {
      if (degree[x] == 0) continue;
      remap[x] = static_cast<std::uint32_t>(g.green_names_.size());
      g.green_names_.push_back(std::move(greens_[x]));
    }
    for (auto& l : links_) l.green = remap[l.green];
    std::sort(links_.begin(), links_.end());
    g.links_ = std::move(links_);

    g.canonicalize();
    return g;
  }

 private:
  void claim_name(const std::string& name) {
    if (!names_.insert(name).second) throw DuplicateVertexError(name);
  }

  std::uint32_t require_of(const std::vector<std::string>& pool,
                           std::string_view name, bool want_green) const {
    for (std::uint32_t i = 0; i < pool.size(); ++i)
      if (pool[i] == name) return i;
    if (want_green && std::find(reds_.begin(), reds_.end(), name) != reds_.end())
      throw NotGreenError(std::string(name));
    if (!want_green &&
        std::find(greens_.begin(), greens_.end(), name) != greens_.end())
      throw Error("vertex '" + std::string(name) + "' is not a red vertex");
    throw UnknownVertexError("unknown vertex '" + std::string(name) + "'");
  }

  std::vector<std::string> reds_, greens_;
  std::vector<HandleGraph::Link> links_;
  std::set<std::string> names_;
};

inline const CanonicalCode& canonical_form(const HandleGraph& g) {
  return g.code();
}

// Links at green x grouped by the connected component of the rest of the
// graph containing their red endpoint. Classes and members ordered by link
// index.
inline std::vector<std::vector<std::uint32_t>> edge_classes_at(
    const HandleGraph& g, std::uint32_t x) {
  if (x >= g.green_count())
    throw NotGreenError("#" + std::to_string(x));
  const std::size_t r_count = g.red_count();
  const std::size_t n = r_count + g.green_count();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& l : g.links())
    if (l.green != x) parent[find(l.red)] = find(r_count + l.green);

  std::vector<std::vector<std::uint32_t>> classes;
  std::map<std::size_t, std::size_t> class_of;  // component rep -> class index
  for (std::uint32_t i : g.links_at(x)) {
    std::size_t rep = find(g.links()[i].red);
    auto it = class_of.find(rep);
    if (it == class_of.end()) {
      it = class_of.emplace(rep, classes.size()).first;
      classes.emplace_back();
    }
    classes[it->second].push_back(i);
  }
  return classes;
}

inline std::vector<std::vector<std::uint32_t>> edge_classes_at(
    const HandleGraph& g, std::string_view green_name) {
  return edge_classes_at(g, g.require_green(green_name));
}

inline bool admits_cutting(const HandleGraph& g, std::uint32_t x) {
  return edge_classes_at(g, x).size() >= 2;
}

inline bool admits_cutting(const HandleGraph& g, std::string_view green_name) {
  return admits_cutting(g, g.require_green(green_name));
}

// One side of a split of green vertex's links; the other side is the
// complement. Valid only when both sides are unions of whole edge classes,
// which is exactly when the cut raises the component count by one.
struct CutMove {
  std::uint32_t green;
  std::vector<std::uint32_t> part;  // link indices at green
};

namespace detail {

inline std::string fresh_name(const std::string& base,
                              const std::vector<std::string>& taken_a,
                              const std::vector<std::string>& taken_b) {
  std::string candidate = base;
  auto taken = [&](const std::string& s) {
    return std::find(taken_a.begin(), taken_a.end(), s) != taken_a.end() ||
           std::find(taken_b.begin(), taken_b.end(), s) != taken_b.end();
  };
  while (taken(candidate)) candidate += "'";
  return candidate;
}

}  // namespace detail

inline HandleGraph cut(const HandleGraph& g, const CutMove& move) {
  if (move.green >= g.green_count())
    throw NotGreenError("#" + std::to_string(move.green));
  auto at = g.links_at(move.green);
  std::vector<std::uint32_t> part = move.part;
  std::sort(part.begin(), part.end());
  part.erase(std::unique(part.begin(), part.end()), part.end());
  for (std::uint32_t i : part)
    if (!std::binary_search(at.begin(), at.end(), i))
      throw InvalidCutError("cut part references a link not at the vertex");
  if (part.empty() || part.size() == at.size())
    throw InvalidCutError("both sides of a cut must be non-empty");

  // The component count rises iff every class stays on one side.
  for (const auto& cls : edge_classes_at(g, move.green)) {
    std::size_t inside = 0;
    for (std::uint32_t i : cls)
      if (std::binary_search(part.begin(), part.end(), i)) ++inside;
    if (inside != 0 && inside != cls.size())
      throw InvalidCutError(
          "cut does not increase the component count (splits an edge class)");
  }

  HandleGraph::Builder b;
  std::vector<std::string> red_names, green_names;
  for (std::uint32_t r = 0; r < g.red_count(); ++r)
    red_names.push_back(g.red_name(r));
  for (std::uint32_t x = 0; x < g.green_count(); ++x)
    green_names.push_back(g.green_name(x));
  std::string other =
      detail::fresh_name(g.green_name(move.green) + "'", red_names, green_names);

  for (auto& name : red_names) b.add_red(name);
  std::vector<std::uint32_t> green_index(g.green_count());
  for (std::uint32_t x = 0; x < g.green_count(); ++x)
    green_index[x] = b.add_green(green_names[x]);
  std::uint32_t split_off = b.add_green(other);

  for (std::uint32_t i = 0; i < g.links().size(); ++i) {
    const auto& l = g.links()[i];
    if (l.green == move.green &&
        !std::binary_search(part.begin(), part.end(), i))
      b.add_link(split_off, l.red);
    else
      b.add_link(green_index[l.green], l.red);
  }
  return b.build();
}

// Every (unordered, class-respecting) single cut available anywhere in g.
// Deterministic order: greens ascending, then split pattern.
inline std::vector<CutMove> enumerate_cuts(const HandleGraph& g) {
  std::vector<CutMove> moves;
  for (std::uint32_t x = 0; x < g.green_count(); ++x) {
    auto classes = edge_classes_at(g, x);
    const std::size_t k = classes.size();
    if (k < 2) continue;
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t mask = 1; mask < full; mask += 2) {  // class 0 inside
      CutMove m{x, {}};
      for (std::size_t c = 0; c < k; ++c)
        if (mask & (1u << c))
          m.part.insert(m.part.end(), classes[c].begin(), classes[c].end());
      std::sort(m.part.begin(), m.part.end());
      moves.push_back(std::move(m));
    }
  }
  return moves;
}

// Split every green vertex into one vertex per edge class, repeating until
// no vertex admits cutting. Equal to the outcome of any maximal sequence of
// single cuts.
inline HandleGraph full_cut(const HandleGraph& g) {
  HandleGraph current = g;
  while (true) {
    std::vector<std::vector<std::vector<std::uint32_t>>> classes_by_green;
    bool cuttable = false;
    for (std::uint32_t x = 0; x < current.green_count(); ++x) {
      classes_by_green.push_back(edge_classes_at(current, x));
      if (classes_by_green.back().size() >= 2) cuttable = true;
    }
    if (!cuttable) return current;

    HandleGraph::Builder b;
    std::vector<std::string> used_red, used_green;
    for (std::uint32_t r = 0; r < current.red_count(); ++r) {
      used_red.push_back(current.red_name(r));
      b.add_red(used_red.back());
    }
    // Pre-reserve existing green names so fresh ones never collide.
    for (std::uint32_t x = 0; x < current.green_count(); ++x)
      used_green.push_back(current.green_name(x));

    std::vector<std::uint32_t> owner(current.link_count());
    for (std::uint32_t x = 0; x < current.green_count(); ++x) {
      const auto& classes = classes_by_green[x];
      for (std::size_t c = 0; c < classes.size(); ++c) {
        std::string name = current.green_name(x);
        if (classes.size() > 1) {
          name = detail::fresh_name(name + "." + std::to_string(c), used_red,
                                    used_green);
          used_green.push_back(name);
        }
        std::uint32_t id = b.add_green(name);
        for (std::uint32_t i : classes[c]) owner[i] = id;
      }
    }
    for (std::uint32_t i = 0; i < current.link_count(); ++i)
      b.add_link(owner[i], current.links()[i].red);
    current = b.build();
  }
}

// The reachable cut space as a reduction system: vertices are canonical
// codes, edges are single cut moves. Suitable for verify_theorem.
inline ReductionSystem to_reduction_system(const HandleGraph& g,
                                           std::size_t bound) {
  SystemBuilder b;
  std::map<std::string, VertexId> seen;
  std::deque<HandleGraph> queue;

  auto intern = [&](const HandleGraph& h) {
    auto it = seen.find(h.code().bytes);
    if (it != seen.end()) return it->second;
    if (seen.size() >= bound) throw BoundExceededError(bound);
    VertexId v = b.add_vertex(h.code().bytes);
    seen.emplace(h.code().bytes, v);
    queue.push_back(h);
    return v;
  };

  intern(g);
  while (!queue.empty()) {
    HandleGraph state = std::move(queue.front());
    queue.pop_front();
    VertexId from = seen.at(state.code().bytes);
    for (const CutMove& move : enumerate_cuts(state))
      b.add_edge(from, intern(cut(state, move)));
  }
  return b.build();
}

}  // namespace roots
