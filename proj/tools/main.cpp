// roots: analyze oriented reduction graphs, handle graphs, and color
// profiles from line-oriented text files.
//
// Exit codes: 0 success, 1 property failure (EE fails, multiple roots,
// cycle, inadmissible profile, uncuttable vertex), 2 input error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "roots/roots.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct Options {
  roots::ReportFormat format = roots::ReportFormat::text;
  std::uint64_t seed = 0;
  std::size_t bound = 100000;
  std::size_t cut_class = 0;
  std::optional<std::string> out;
  std::vector<std::string> args;  // subcommand + positionals
};

void usage(std::ostream& os) {
  os << "Usage: roots <command> [args] [flags]\n"
        "\n"
        "Commands (analysis commands accept reduction-system files or handle-\n"
        "graph files; the latter are expanded into their cut space first):\n"
        "  check <file>              complexity (CF) and edge-equivalence (EE) verdicts\n"
        "  root <file> <vertex>      unique root of a vertex, or its full root set\n"
        "  verify <file>             full report: CF, EE, roots of every vertex\n"
        "  counterexample <file>     least-complexity vertex with several roots\n"
        "  cut <file> <green>        cut a handle graph at a green vertex\n"
        "  fullcut <file>            cut a handle graph until no cut applies\n"
        "  color-check <c1> [c2 c3]  admissibility of an intersection profile\n"
        "  gen <kind> [params]       write a demo or random system\n"
        "                            kinds: diamond, fork, ee-failure, handle-demo,\n"
        "                                   factor <n>, random <vertices> <p>\n"
        "\n"
        "Flags:\n"
        "  --format text|machine     report format (default text)\n"
        "  --seed <int>              seed for gen random (default 0)\n"
        "  --bound <int>             state bound for cut-space exploration\n"
        "  --class <k>               edge class split off by cut (default 0)\n"
        "  --out <path>              write output to a file instead of stdout\n"
        "\n"
        "Exit codes: 0 ok, 1 property failure, 2 input error.\n";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_uint(const std::string& text, const char* what) {
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " '" + text + "' is not a number");
  }
  if (pos != text.size() || text[0] == '-')
    throw UsageError(std::string(what) + " '" + text + "' is not a number");
  return value;
}

double parse_probability(const std::string& text) {
  std::size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("probability '" + text + "' is not a number");
  }
  if (pos != text.size() || value < 0.0 || value > 1.0)
    throw UsageError("probability '" + text + "' is not in [0, 1]");
  return value;
}

Options parse_options(int argc, char** argv) {
  Options opt;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto value = [&](const char* flag) -> std::string {
      if (i + 1 >= argc)
        throw UsageError(std::string(flag) + " requires a value");
      return argv[++i];
    };
    if (arg == "--format") {
      std::string v = value("--format");
      if (v == "text")
        opt.format = roots::ReportFormat::text;
      else if (v == "machine")
        opt.format = roots::ReportFormat::machine;
      else
        throw UsageError("unknown format '" + v + "'");
    } else if (arg == "--seed") {
      opt.seed = parse_uint(value("--seed"), "seed");
    } else if (arg == "--bound") {
      opt.bound = parse_uint(value("--bound"), "bound");
    } else if (arg == "--class") {
      opt.cut_class = parse_uint(value("--class"), "class");
    } else if (arg == "--out") {
      opt.out = value("--out");
    } else if (arg == "-h" || arg == "--help") {
      usage(std::cout);
      std::exit(kOk);
    } else if (arg.rfind("--", 0) == 0) {
      throw UsageError("unknown flag '" + arg + "'");
    } else {
      opt.args.push_back(arg);
    }
  }
  return opt;
}

const std::string& positional(const Options& opt, std::size_t i,
                              const char* what) {
  if (i >= opt.args.size())
    throw UsageError("missing " + std::string(what));
  return opt.args[i];
}

// Buffers the whole report, then writes it in one piece to --out or stdout.
int with_output(const Options& opt, auto&& fn) {
  std::ostringstream buffer;
  int rc = fn(buffer);
  if (!opt.out) {
    std::cout << buffer.str();
    return rc;
  }
  std::ofstream out(*opt.out);
  if (!out) throw roots::Error("cannot write '" + *opt.out + "'");
  out << buffer.str();
  return rc;
}

int cmd_check(const Options& opt) {
  auto sys =
      roots::load_any_system(positional(opt, 1, "input file"), opt.bound);
  auto report = roots::verify_theorem(sys);
  if (opt.format == roots::ReportFormat::machine) {
    std::cout << "cf\t" << (report.cf.holds ? "holds" : "fails") << "\n";
    std::cout << "ee\t"
              << (!report.ee ? "skipped"
                             : (report.ee->holds ? "holds" : "fails"))
              << "\n";
  } else if (!report.cf.holds) {
    std::cout << "CF: fails\n  cycle: "
              << roots::format_cycle(sys, report.cf.cycle) << "\n";
  } else {
    std::cout << "CF: holds\n";
    auto vertices = sys.vertices();
    std::sort(vertices.begin(), vertices.end(),
              [&](roots::VertexId a, roots::VertexId b) {
                return sys.name(a) < sys.name(b);
              });
    for (roots::VertexId v : vertices)
      std::cout << "  c(" << sys.name(v) << ") = "
                << report.cf.complexity->value(v).front() << "\n";
    if (report.ee->holds) {
      std::cout << "EE: holds\n";
    } else {
      const auto& w = *report.ee->witness;
      std::cout << "EE: fails\n  witness: vertex " << sys.name(w.vertex)
                << ", edges " << roots::format_edge(sys, w.first) << " and "
                << roots::format_edge(sys, w.second) << "\n";
    }
  }
  return report.properties_hold() ? kOk : kPropertyFailure;
}

int cmd_root(const Options& opt) {
  auto sys =
      roots::load_any_system(positional(opt, 1, "input file"), opt.bound);
  auto v = sys.require(positional(opt, 2, "vertex name"));
  try {
    auto rs = roots::root_set(sys, v);
    if (rs.roots.size() == 1) {
      std::cout << sys.name(rs.roots.front()) << "\n";
      return kOk;
    }
    std::cout << "{" << roots::format_vertex_set(sys, rs.roots, ", ") << "}\n";
  } catch (const roots::CycleError& e) {
    std::cout << "no root: cycle " << roots::format_cycle(sys, e.cycle())
              << "\n";
  }
  return kPropertyFailure;
}

int cmd_verify(const Options& opt) {
  auto sys =
      roots::load_any_system(positional(opt, 1, "input file"), opt.bound);
  auto report = roots::verify_theorem(sys);
  roots::render_report(sys, report, opt.format, std::cout);
  return report.properties_hold() ? kOk : kPropertyFailure;
}

int cmd_counterexample(const Options& opt) {
  auto sys =
      roots::load_any_system(positional(opt, 1, "input file"), opt.bound);
  std::optional<roots::Counterexample> cex;
  try {
    cex = roots::find_counterexample(sys);
  } catch (const roots::CycleError& e) {
    std::cout << "CF fails: cycle " << roots::format_cycle(sys, e.cycle())
              << "\n";
    return kPropertyFailure;
  }
  if (!cex) {
    std::cout << "none\n";
    return kOk;
  }
  if (opt.format == roots::ReportFormat::machine)
    std::cout << sys.name(cex->vertex) << "\t"
              << roots::format_vertex_set(sys, cex->roots, ",") << "\n";
  else
    std::cout << sys.name(cex->vertex) << ": roots {"
              << roots::format_vertex_set(sys, cex->roots, ", ") << "}\n";
  return kPropertyFailure;
}

int cmd_cut(const Options& opt) {
  auto g = roots::load_handle_graph(positional(opt, 1, "input file"));
  std::uint32_t x = g.require_green(positional(opt, 2, "green vertex name"));
  auto classes = roots::edge_classes_at(g, x);
  if (classes.size() < 2) {
    std::cerr << "vertex '" << g.green_name(x) << "' does not admit cutting\n";
    return kPropertyFailure;
  }
  if (opt.cut_class >= classes.size())
    throw UsageError("--class " + std::to_string(opt.cut_class) +
                     " out of range; vertex has " +
                     std::to_string(classes.size()) + " classes");
  roots::CutMove move{x, classes[opt.cut_class]};
  auto result = roots::cut(g, move);
  return with_output(opt, [&](std::ostream& os) {
    os << "# code: " << result.code().bytes << "\n";
    roots::write_handle_graph(result, os);
    return kOk;
  });
}

int cmd_fullcut(const Options& opt) {
  auto g = roots::load_handle_graph(positional(opt, 1, "input file"));
  auto result = roots::full_cut(g);
  return with_output(opt, [&](std::ostream& os) {
    os << "# code: " << result.code().bytes << "\n";
    roots::write_handle_graph(result, os);
    return kOk;
  });
}

int cmd_color_check(const Options& opt) {
  std::vector<int> colors;
  for (std::size_t i = 1; i < opt.args.size(); ++i) {
    std::size_t pos = 0;
    int value = std::stoi(opt.args[i], &pos);
    if (pos != opt.args[i].size())
      throw UsageError("color '" + opt.args[i] + "' is not an integer");
    colors.push_back(value);
  }
  // Bad colors and oversized profiles are input errors, not verdicts.
  roots::IntersectionProfile profile(colors);
  if (profile.size() > 3) throw roots::ProfileTooLargeError(profile.size());
  bool ok = roots::profile_admissible(profile);
  std::cout << (ok ? "admissible" : "inadmissible") << "\n";
  return ok ? kOk : kPropertyFailure;
}

int cmd_gen(const Options& opt) {
  const std::string& kind = positional(opt, 1, "system kind");
  auto write_sys = [&](const roots::ReductionSystem& sys) {
    return with_output(opt, [&](std::ostream& os) {
      roots::write_system(sys, os);
      return kOk;
    });
  };
  if (kind == "diamond") return write_sys(roots::gen_diamond());
  if (kind == "fork") return write_sys(roots::gen_fork());
  if (kind == "ee-failure") return write_sys(roots::gen_ee_failure());
  if (kind == "handle-demo")
    return with_output(opt, [&](std::ostream& os) {
      roots::write_handle_graph(roots::gen_handle_demo(), os);
      return kOk;
    });
  if (kind == "factor") {
    std::uint64_t n = parse_uint(positional(opt, 2, "factor parameter n"), "n");
    if (n < 1) throw UsageError("factor requires n >= 1");
    return write_sys(roots::gen_factor_system(n));
  }
  if (kind == "random") {
    std::size_t v = parse_uint(positional(opt, 2, "vertex count"), "vertices");
    double p = parse_probability(positional(opt, 3, "edge probability"));
    return write_sys(roots::gen_random_dag(v, p, opt.seed));
  }
  throw UsageError("unknown kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    Options opt = parse_options(argc, argv);
    if (opt.args.empty()) {
      usage(std::cerr);
      return kInputError;
    }
    const std::string& command = opt.args[0];
    if (command == "check") return cmd_check(opt);
    if (command == "root") return cmd_root(opt);
    if (command == "verify") return cmd_verify(opt);
    if (command == "counterexample") return cmd_counterexample(opt);
    if (command == "cut") return cmd_cut(opt);
    if (command == "fullcut") return cmd_fullcut(opt);
    if (command == "color-check") return cmd_color_check(opt);
    if (command == "gen") return cmd_gen(opt);
    throw UsageError("unknown command '" + command + "'");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number in arguments\n";
    return kInputError;
  } catch (const std::out_of_range&) {
    std::cerr << "error: number out of range\n";
    return kInputError;
  } catch (const roots::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
