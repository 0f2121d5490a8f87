// domdelay: command-line front end for the enumeration library.
//
// Exit codes: 0 success, 1 usage or input error, 2 class-certificate
// failure, 3 size or budget limit exceeded.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domenum.hpp"

using namespace domenum;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitClass = 2;
constexpr int kExitLimit = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string format_set(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

std::string format_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

// 1-indexed vertex list separated by spaces or commas; "auto-rn" selects RN(G).
VertexSet parse_set(const std::string& text, const Graph& g) {
  if (text == "auto-rn") return classify(g).rn;
  std::string norm = text;
  for (char& ch : norm)
    if (ch == ',' || ch == '{' || ch == '}') ch = ' ';
  std::istringstream in(norm);
  std::vector<Vertex> out;
  std::string tok;
  while (in >> tok) {
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("invalid vertex '" + tok + "' in --set");
    }
    if (v < 1 || v > g.n()) throw UsageError("vertex " + tok + " in --set is out of range 1.." + std::to_string(g.n()));
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return VertexSet(std::move(out));
}

Mode parse_mode(const std::string& m) { return m == "p7" ? Mode::kP7 : Mode::kP8; }

// Recognition for the requested class; throws ClassError with a certificate.
void verify_class(const Graph& g, Mode mode, std::uint64_t budget) {
  auto chordal = is_chordal(g);
  if (!chordal) throw ClassError("the graph is not chordal; induced cycle: " + format_list(chordal.hole));
  const int k = mode == Mode::kP7 ? 7 : 8;
  auto free = is_pk_free(g, k, budget);
  if (!free.free) throw ClassError("the graph contains an induced P" + std::to_string(k) + ": " + format_list(free.path));
}

struct Session {
  std::string graph_path;
  std::string mode = "p8";
  bool verify = false;
  std::uint64_t path_budget = kDefaultPathBudget;
  std::size_t limit = 0;
  bool count_only = false;

  Graph load() const {
    Graph g = parse_graph(read_input(graph_path));
    if (verify) verify_class(g, parse_mode(mode), path_budget);
    return g;
  }
};

void emit(SolutionStream& stream, const Session& s) {
  std::size_t count = 0;
  std::string buffer;
  while (s.limit == 0 || count < s.limit) {
    auto sol = stream.next();
    if (!sol) break;
    ++count;
    if (!s.count_only) {
      buffer += format_set(*sol);
      buffer += '\n';
      if (buffer.size() > (1U << 16)) {
        std::cout << buffer;
        buffer.clear();
      }
    }
  }
  std::cout << buffer;
  if (s.count_only) std::cout << count << '\n';
}

void emit_family(const std::vector<VertexSet>& family, const Session& s) {
  std::size_t count = 0;
  for (const auto& d : family) {
    if (s.limit != 0 && count >= s.limit) break;
    ++count;
    if (!s.count_only) std::cout << format_set(d) << '\n';
  }
  if (s.count_only) std::cout << count << '\n';
}

void add_graph_options(CLI::App* cmd, Session& s, bool with_mode) {
  cmd->add_option("graph", s.graph_path, "Graph file (DIMACS or plain), '-' for stdin")->required();
  if (with_mode) {
    cmd->add_option("--mode", s.mode, "Graph class: p7 or p8")->check(CLI::IsMember({"p7", "p8"}));
    cmd->add_flag("--verify-class", s.verify, "Run chordality and P_k-freeness recognition first");
  }
  cmd->add_option("--path-budget", s.path_budget, "Node budget for induced-path search");
}

void add_output_options(CLI::App* cmd, Session& s) {
  cmd->add_option("--limit", s.limit, "Stop after N solutions (0: all)");
  cmd->add_flag("--count-only", s.count_only, "Print only the number of solutions");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DOMDELAY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("DOMDELAY_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

int run(int argc, char** argv) {
  CLI::App app{"Minimal dominating set enumeration for P7- and P8-free chordal graphs"};
  app.require_subcommand(1);
  Session s;

  auto* classify_cmd = app.add_subcommand("classify", "Print irredundant and redundant vertices, witnesses, components");
  add_graph_options(classify_cmd, s, false);

  auto* rn_cmd = app.add_subcommand("enum-rn", "Enumerate the redundant parts D_RN(G)");
  add_graph_options(rn_cmd, s, true);
  add_output_options(rn_cmd, s);

  std::string set_text;
  auto* dir_cmd = app.add_subcommand("enum-dir", "Enumerate the irredundant extensions of a redundant part");
  add_graph_options(dir_cmd, s, true);
  add_output_options(dir_cmd, s);
  dir_cmd->add_option("--set", set_text, "Redundant part A, 1-indexed (e.g. \"2,5\"), or auto-rn")->required();

  auto* dom_cmd = app.add_subcommand("enum-dom", "Enumerate all minimal dominating sets");
  add_graph_options(dom_cmd, s, true);
  add_output_options(dom_cmd, s);

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference answers for small graphs");
  oracle_cmd->require_subcommand(1);
  auto* o_dom = oracle_cmd->add_subcommand("dom", "All minimal dominating sets");
  auto* o_drn = oracle_cmd->add_subcommand("drn", "All redundant parts");
  auto* o_dir = oracle_cmd->add_subcommand("dir", "All irredundant extensions of --set");
  auto* o_iep = oracle_cmd->add_subcommand("iep", "Extension problem of --set on one irredundant component");
  auto* o_member = oracle_cmd->add_subcommand("drn-member", "Does --set admit an irredundant extension");
  int component = 1;
  for (auto* c : {o_dom, o_drn, o_dir, o_iep, o_member}) {
    add_graph_options(c, s, false);
    if (c == o_dom || c == o_drn || c == o_dir) add_output_options(c, s);
  }
  for (auto* c : {o_dir, o_iep, o_member})
    c->add_option("--set", set_text, "Set of redundant vertices, 1-indexed, or auto-rn")->required();
  o_iep->add_option("--component", component, "Irredundant component, 1-indexed by minimum vertex")->required();

  std::string gen_class = "pk-free", out_path, out_dir;
  Vertex gen_n = 10;
  int gen_k = 8, gen_count = 1;
  double density = 0.5;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate connected chordal graphs");
  gen_cmd->add_option("--class", gen_class, "chordal or pk-free")->check(CLI::IsMember({"chordal", "pk-free"}));
  gen_cmd->add_option("-n,--vertices", gen_n, "Number of vertices")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-k", gen_k, "Forbidden path length for pk-free (6..9)")->check(CLI::Range(6, 9));
  gen_cmd->add_option("--density", density, "Attachment density for chordal")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--count", gen_count, "Number of graphs")->check(CLI::PositiveNumber);
  auto* seed_opt = gen_cmd->add_option("--seed", seed, "Seed (default: DOMDELAY_SEED or built-in)");
  gen_cmd->add_option("-o,--output", out_path, "Write concatenated DIMACS blocks to a file");
  gen_cmd->add_option("--dir", out_dir, "Write one file per graph into a directory");

  std::string cnf_path, roles_path;
  auto* reduce_cmd = app.add_subcommand("reduce-3sat", "Build the hardness gadget of a 3-CNF formula");
  reduce_cmd->add_option("formula", cnf_path, "DIMACS CNF file, '-' for stdin")->required();
  reduce_cmd->add_option("-o,--output", out_path, "Graph output file (default stdout)");
  reduce_cmd->add_option("--roles", roles_path, "Write vertex roles as JSON lines to this file");

  auto* bench_cmd = app.add_subcommand("bench", "Per-solution delay profile as CSV");
  add_graph_options(bench_cmd, s, true);
  bench_cmd->add_option("--limit", s.limit, "Stop after N solutions (0: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*classify_cmd) {
    Graph g = s.load();
    auto cls = classify(g);
    std::cout << "IR: " << format_set(cls.ir) << '\n';
    std::cout << "RN: " << format_set(cls.rn) << '\n';
    std::cout << "witnesses:";
    for (Vertex y : cls.rn) std::cout << ' ' << y + 1 << ':' << cls.witness[y] + 1;
    std::cout << '\n';
    for (int i = 0; i < cls.component_count(); ++i)
      std::cout << "component " << i + 1 << ": " << format_set(cls.components[i]) << '\n';
    if (!cls.multi_partial.empty())
      std::cout << "partially adjacent to several components: " << format_set(cls.multi_partial) << '\n';
    return 0;
  }
  if (*rn_cmd) {
    Graph g = s.load();
    auto cls = classify(g);
    auto stream = enumerate_rn(g, cls, parse_mode(s.mode));
    emit(*stream, s);
    return 0;
  }
  if (*dir_cmd) {
    Graph g = s.load();
    auto cls = classify(g);
    VertexSet a = parse_set(set_text, g);
    if (!a.is_subset_of(cls.rn)) throw UsageError("--set must contain redundant vertices only");
    require_connected(g);
    auto stream = enumerate_dir(g, cls, a, parse_mode(s.mode));
    emit(*stream, s);
    return 0;
  }
  if (*dom_cmd) {
    Graph g = s.load();
    auto stream = enumerate_dom(g, parse_mode(s.mode));
    emit(*stream, s);
    return 0;
  }
  if (*oracle_cmd) {
    Graph g = s.load();
    auto cls = classify(g);
    if (*o_dom) emit_family(oracle::brute_dom(g), s);
    if (*o_drn) emit_family(oracle::brute_drn(g, cls), s);
    if (*o_dir) emit_family(oracle::brute_dir(g, cls, parse_set(set_text, g)), s);
    if (*o_member) {
      VertexSet a = parse_set(set_text, g);
      if (!a.is_subset_of(cls.rn)) throw UsageError("--set must contain redundant vertices only");
      std::cout << (oracle::brute_drn_member(g, cls, a) ? "YES" : "NO") << '\n';
    }
    if (*o_iep) {
      VertexSet a = parse_set(set_text, g);
      if (component < 1 || component > cls.component_count())
        throw UsageError("--component must lie in 1.." + std::to_string(cls.component_count()));
      ComponentPosets posets(g, cls);
      auto view = view_of(g, cls, a);
      if (!view.every_member_has_private) {
        std::cout << "NO\n";
        return 0;
      }
      std::cout << (oracle::brute_iep(component_instance(posets, view, component - 1)) ? "YES" : "NO") << '\n';
    }
    return 0;
  }
  if (*gen_cmd) {
    if (!*seed_opt) seed = default_seed();
    SplitMix64 master(seed);
    std::string all;
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    for (int i = 0; i < gen_count; ++i) {
      const std::uint64_t sub = master.split(static_cast<std::uint64_t>(i)).next();
      Graph g = gen_class == "chordal" ? gen_chordal(gen_n, density, sub) : gen_pk_free_chordal(gen_n, gen_k, sub);
      std::string text = "c " + gen_class + " n=" + std::to_string(gen_n) +
                         (gen_class == "pk-free" ? " k=" + std::to_string(gen_k) : "") + " seed=" + std::to_string(seed) +
                         " index=" + std::to_string(i) + "\n" + serialize_graph(g);
      if (!out_dir.empty()) {
        char name[32];
        std::snprintf(name, sizeof name, "graph_%04d.graph", i + 1);
        write_output((std::filesystem::path(out_dir) / name).string(), text);
      } else {
        all += text;
      }
    }
    if (out_dir.empty()) write_output(out_path, all);
    return 0;
  }
  if (*reduce_cmd) {
    Cnf3 phi = parse_cnf(read_input(cnf_path));
    auto r = build_reduction(phi);
    write_output(out_path, serialize_graph(r.graph));
    if (!roles_path.empty()) write_output(roles_path, r.map.to_json_lines());
    if (!out_path.empty() && out_path != "-")
      std::cerr << "gadget: " << r.graph.n() << " vertices, " << r.graph.m() << " edges, |RN| = " << r.a_set.size()
                << '\n';
    return 0;
  }
  if (*bench_cmd) {
    using Clock = std::chrono::steady_clock;
    Graph g = s.load();
    auto t0 = Clock::now();
    auto stream = enumerate_dom(g, parse_mode(s.mode));
    auto t1 = Clock::now();
    std::ostringstream rows;
    rows << "solution_index,size,delay_ns\n";
    std::size_t count = 0;
    long long max_delay = 0, total = 0;
    auto last = t1;
    while (s.limit == 0 || count < s.limit) {
      auto sol = stream->next();
      auto now = Clock::now();
      if (!sol) break;
      const long long delay = std::chrono::duration_cast<std::chrono::nanoseconds>(now - last).count();
      last = now;
      ++count;
      max_delay = std::max(max_delay, delay);
      total += delay;
      rows << count << ',' << sol->size() << ',' << delay << '\n';
    }
    std::cout << rows.str();
    std::cout << "# preprocessing_ns," << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() << '\n';
    std::cout << "# solutions," << count << '\n';
    std::cout << "# max_delay_ns," << max_delay << '\n';
    std::cout << "# mean_delay_ns," << (count ? total / static_cast<long long>(count) : 0) << '\n';
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ClassError& e) {
    std::cerr << "class error: " << e.what() << '\n';
    return kExitClass;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
