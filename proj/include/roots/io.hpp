#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "roots/handle_graph.hpp"
#include "roots/reduction_system.hpp"
#include "roots/root_engine.hpp"

// Line-oriented text formats.
//
// Reduction system files:   `v <name>` vertex, `e <src> <dst>` edge (repeat
// for parallel edges), `#` comments. Handle graph files: `r <name>` red,
// `g <name>` green, `l <green> <red>` link (repeat for multiplicity).
// Writers emit records sorted by name so output is canonical.

namespace roots {

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

inline bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;
}

}  // namespace detail

inline ReductionSystem parse_system(std::istream& in) {
  SystemBuilder b;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::is_comment_or_blank(line)) continue;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() != 2)
        throw ParseError(lineno, "expected 'v <name>'");
      if (b.has_vertex(tokens[1]))
        throw ParseError(lineno, "duplicate vertex '" + tokens[1] + "'");
      b.add_vertex(tokens[1]);
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3)
        throw ParseError(lineno, "expected 'e <src> <dst>'");
      if (!b.has_vertex(tokens[1]))
        throw ParseError(lineno, "unknown vertex '" + tokens[1] + "'");
      if (!b.has_vertex(tokens[2]))
        throw ParseError(lineno, "unknown vertex '" + tokens[2] + "'");
      if (tokens[1] == tokens[2])
        throw ParseError(lineno, "self-loop at '" + tokens[1] + "'");
      b.add_edge(tokens[1], tokens[2]);
    } else {
      throw ParseError(lineno, "unknown record '" + tokens[0] + "'");
    }
  }
  return b.build();
}

inline ReductionSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_system(in);
}

inline void write_system(const ReductionSystem& sys, std::ostream& out) {
  std::vector<std::string> names;
  names.reserve(sys.vertex_count());
  for (VertexId v : sys.vertices()) names.push_back(sys.name(v));
  std::sort(names.begin(), names.end());
  for (const auto& n : names) out << "v " << n << "\n";

  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(sys.edge_count());
  for (std::uint32_t i = 0; i < sys.edge_count(); ++i) {
    Edge e = sys.edge(EdgeId{i});
    edges.emplace_back(sys.name(e.src), sys.name(e.dst));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [src, dst] : edges) out << "e " << src << " " << dst << "\n";
}

inline HandleGraph parse_handle_graph(std::istream& in) {
  HandleGraph::Builder b;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> reds, greens;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::is_comment_or_blank(line)) continue;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "r" || tokens[0] == "g") {
      if (tokens.size() != 2)
        throw ParseError(lineno, "expected '" + tokens[0] + " <name>'");
      if (b.has_name(tokens[1]))
        throw ParseError(lineno, "duplicate vertex '" + tokens[1] + "'");
      if (tokens[0] == "r")
        b.add_red(tokens[1]);
      else
        b.add_green(tokens[1]);
      (tokens[0] == "r" ? reds : greens).push_back(tokens[1]);
    } else if (tokens[0] == "l") {
      if (tokens.size() != 3)
        throw ParseError(lineno, "expected 'l <green> <red>'");
      try {
        b.add_link(tokens[1], tokens[2]);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
    } else {
      throw ParseError(lineno, "unknown record '" + tokens[0] + "'");
    }
  }
  return b.build();
}

inline HandleGraph load_handle_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_handle_graph(in);
}

enum class InputKind { system, handle_graph };

// A file is a handle graph when its first record is r/g/l, and a reduction
// system otherwise (v/e). Empty files count as empty systems.
inline InputKind detect_input_kind(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (detail::is_comment_or_blank(line)) continue;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "r" || tokens[0] == "g" || tokens[0] == "l")
      return InputKind::handle_graph;
    return InputKind::system;
  }
  return InputKind::system;
}

// Loads either file kind as a reduction system. Handle graphs are expanded
// into their cut space: vertices are canonical codes, edges are cut moves,
// explored up to `bound` distinct graphs.
inline ReductionSystem load_any_system(const std::filesystem::path& path,
                                       std::size_t bound) {
  {
    std::ifstream probe(path);
    if (!probe) throw Error("cannot open '" + path.string() + "'");
    if (detect_input_kind(probe) == InputKind::system)
      return load_system(path);
  }
  return to_reduction_system(load_handle_graph(path), bound);
}

inline void write_handle_graph(const HandleGraph& g, std::ostream& out) {
  std::vector<std::string> reds, greens;
  for (std::uint32_t r = 0; r < g.red_count(); ++r)
    reds.push_back(g.red_name(r));
  for (std::uint32_t x = 0; x < g.green_count(); ++x)
    greens.push_back(g.green_name(x));
  std::sort(reds.begin(), reds.end());
  std::sort(greens.begin(), greens.end());
  for (const auto& n : reds) out << "r " << n << "\n";
  for (const auto& n : greens) out << "g " << n << "\n";

  std::vector<std::pair<std::string, std::string>> links;
  for (const auto& l : g.links())
    links.emplace_back(g.green_name(l.green), g.red_name(l.red));
  std::sort(links.begin(), links.end());
  for (const auto& [green, red] : links)
    out << "l " << green << " " << red << "\n";
}

enum class ReportFormat { text, machine };

inline std::string format_edge(const ReductionSystem& sys, EdgeId e) {
  Edge edge = sys.edge(e);
  return sys.name(edge.src) + "->" + sys.name(edge.dst);
}

inline std::string format_vertex_set(const ReductionSystem& sys,
                                     const std::vector<VertexId>& set,
                                     const char* separator) {
  std::vector<std::string> names;
  names.reserve(set.size());
  for (VertexId v : set) names.push_back(sys.name(v));
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += separator;
    out += names[i];
  }
  return out;
}

inline std::string format_cycle(const ReductionSystem& sys,
                                const std::vector<VertexId>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " -> ";
    out += sys.name(cycle[i]);
  }
  return out;
}

// Per-vertex table of the verification outcome. Machine format is one
// tab-separated record per vertex: vertex, comma-joined sorted roots, number
// of edge-equivalence classes.
inline void render_report(const ReductionSystem& sys, const RootReport& report,
                          ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::text) {
    if (!report.cf.holds) {
      out << "CF: fails\n  cycle: " << format_cycle(sys, report.cf.cycle)
          << "\n";
      return;
    }
    out << "CF: holds\n";
    if (report.ee->holds) {
      out << "EE: holds\n";
    } else {
      const EeWitness& w = *report.ee->witness;
      out << "EE: fails\n  witness: vertex " << sys.name(w.vertex)
          << ", edges " << format_edge(sys, w.first) << " and "
          << format_edge(sys, w.second) << "\n";
    }
  }

  if (!report.cf.holds) return;

  // Rows sorted by vertex name.
  std::vector<std::pair<std::string, VertexId>> rows;
  for (VertexId v : sys.vertices()) rows.emplace_back(sys.name(v), v);
  std::sort(rows.begin(), rows.end());
  for (const auto& [name, v] : rows) {
    const auto& rs = report.root_sets[v.value];
    std::size_t classes = edge_equivalence(sys, v).classes.size();
    if (format == ReportFormat::machine) {
      out << name << "\t" << format_vertex_set(sys, rs, ",") << "\t" << classes
          << "\n";
    } else if (rs.size() == 1) {
      out << name << ": root " << sys.name(rs.front()) << "\n";
    } else {
      out << name << ": roots {" << format_vertex_set(sys, rs, ", ") << "}\n";
    }
  }
  if (format == ReportFormat::text) {
    if (!report.ee->holds)
      out << "theorem: not applicable (EE fails)\n";
    else if (report.theorem_violation)
      out << "theorem: VIOLATED\n";
    else
      out << "theorem: verified\n";
  }
}

}  // namespace roots
